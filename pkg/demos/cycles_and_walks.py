"""Cycles on the decagon: orientation, point classes and the move group.

Run: ``python demos/cycles_and_walks.py``
"""
from __future__ import annotations

from fractions import Fraction

from hnerve.cycles import MoveElement, classify_point, lift_cycle, walk
from hnerve.figures import decagon_scene
from hnerve.geometry import Point2


def main() -> None:
    c = decagon_scene().one_cycles[0]
    print(f"decagon: {c.n} vertices, {c.orientation}, area {c.area}")
    for p in (Point2(Fraction(1, 2), Fraction(3, 2)), c.points[0], Point2(10, 10)):
        print(f"  {p} is {classify_point(c, p).value}")

    h = lift_cycle(c)
    g = MoveElement(h, 1)
    print("walking k steps from v0:")
    for k in (0, 3, 10, -1, 23):
        print(f"  k={k:>3} -> v{walk(h, k)}")
    print(f"  g + g + g lands on v{(g + g + g).vertex}")
    print(f"  (g + g) - g lands on v{((g + g) - g).vertex}")


if __name__ == "__main__":
    main()
