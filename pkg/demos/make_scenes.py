"""Write the reference scene corpus into ``scenes/``.

Run from the repository root: ``python demos/make_scenes.py``. The JSON
files it writes are checked in; the round-trip suite reads them back.
"""
from __future__ import annotations

import json
from pathlib import Path

from hnerve.figures import ALL_SCENES, decagon_scene
from hnerve.persistence import FrameRecord, frames_to_dict

OUT = Path(__file__).resolve().parent.parent / "scenes"

BODIES = {
    "rects_overlap_pair": {"rectangles": [[0, 0, 2, 2], [1, 1, 3, 3]]},
    "rects_ring_of_four": {"rectangles": [[0, 0, 4, 1], [3, 0, 4, 4], [0, 3, 4, 4], [0, 0, 1, 4]]},
    "rects_disjoint_pair": {"rectangles": [[0, 0, 1, 1], [2, 2, 3, 3]]},
    "polygons_hollow_triangle": {
        "polygons": [
            [["0", "0"], ["4", "0"], ["2", "1"]],
            [["4", "0"], ["3", "4"], ["5/2", "3/2"]],
            [["0", "0"], ["3", "4"], ["3/2", "3/2"]],
        ]
    },
}


def reappearing_frames() -> dict:
    """A decagon in frames 0-4 and 8-9, absent from the listed frames 5-7."""
    d = decagon_scene()
    return frames_to_dict([FrameRecord(i, (d,) if i < 5 or i >= 8 else ()) for i in range(10)])


def main() -> None:
    OUT.mkdir(exist_ok=True)
    for name, make in ALL_SCENES.items():
        (OUT / f"{name}.json").write_text(make().to_json())
    for name, data in BODIES.items():
        (OUT / f"{name}.json").write_text(json.dumps(data, indent=2) + "\n")
    (OUT / "frames_reappearing.json").write_text(json.dumps(reappearing_frames(), indent=2) + "\n")
    print(f"wrote {len(ALL_SCENES) + len(BODIES) + 1} files to {OUT}")


if __name__ == "__main__":
    main()
