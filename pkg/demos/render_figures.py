"""Draw every reference scene as SVG.

Run: ``python demos/render_figures.py [--out DIR]``
"""
from __future__ import annotations

import argparse
from pathlib import Path

from hnerve.figures import ALL_SCENES
from hnerve.render import render_svg


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("figures"))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name, make in ALL_SCENES.items():
        path = args.out / f"{name}.svg"
        path.write_text(render_svg(make()))
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
