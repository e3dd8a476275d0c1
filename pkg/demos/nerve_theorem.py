"""Compare the Čech nerve of rectangles with their union, hand cases and random ones.

Run: ``python demos/nerve_theorem.py [--count N] [--seed S]``
"""
from __future__ import annotations

import argparse
import random

from hnerve.generators import random_rectangles
from hnerve.nerve_theorem import ConvexPolygon, Rect, cech_nerve, check_nerve_theorem, invariants_of_complex


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    hand = {
        "overlap pair": [Rect(0, 0, 2, 2), Rect(1, 1, 3, 3)],
        "ring of four": [Rect(0, 0, 4, 1), Rect(3, 0, 4, 4), Rect(0, 3, 4, 4), Rect(0, 0, 1, 4)],
        "disjoint pair": [Rect(0, 0, 1, 1), Rect(2, 2, 3, 3)],
    }
    for name, rects in hand.items():
        r = check_nerve_theorem(rects)
        print(f"{name}: nerve {r.nerve_invariants.pair}, union {r.union_invariants.pair}")

    # three rectangles cannot leave a hole, but three triangles can
    tris = [
        ConvexPolygon([(0, 0), (4, 0), (2, 1)]),
        ConvexPolygon([(4, 0), (3, 4), ("5/2", "3/2")]),
        ConvexPolygon([(0, 0), (3, 4), ("3/2", "3/2")]),
    ]
    print(f"hollow triangle of polygons: nerve {invariants_of_complex(cech_nerve(tris)).pair}")

    rng = random.Random(args.seed)
    agree = sum(check_nerve_theorem(random_rectangles(rng, rng.randint(2, 8))).agree for _ in range(args.count))
    print(f"random collections: {agree}/{args.count} agree")


if __name__ == "__main__":
    main()
