"""Exact planar predicates over rational coordinates.

Every predicate here works on :class:`fractions.Fraction` values, so the
answers are exact: no epsilon appears anywhere in the package.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from numbers import Rational
from typing import Iterable, Sequence, Union

RationalLike = Union[int, Fraction, str, float]


def to_fraction(value: RationalLike) -> Fraction:
    """Coerce ``value`` to an exact rational.

    Strings accept ``"p/q"``, integers and decimal notation. Floats are read
    through their shortest repr, so ``0.85`` becomes ``17/20`` rather than
    the binary expansion.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational")


def format_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True, order=True)
class Point2:
    """A point of the plane with exact rational coordinates.

    Ordering is lexicographic on ``(x, y)``; several tie-break rules rely on it.
    """

    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", to_fraction(self.x))
        object.__setattr__(self, "y", to_fraction(self.y))

    def __add__(self, other: Point2) -> Point2:
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point2) -> Point2:
        return Point2(self.x - other.x, self.y - other.y)

    def scale(self, s: RationalLike) -> Point2:
        s = to_fraction(s)
        return Point2(self.x * s, self.y * s)

    def __iter__(self):
        yield self.x
        yield self.y

    def __repr__(self):
        return f"Point2({self.x}, {self.y})"


def orient(a: Point2, b: Point2, c: Point2) -> Fraction:
    """Twice the signed area of triangle abc (positive when counterclockwise)."""
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


def sign(q) -> int:
    return (q > 0) - (q < 0)


def on_segment(p: Point2, a: Point2, b: Point2) -> bool:
    """True iff ``p`` lies on the closed segment ``[a, b]``."""
    if orient(a, b, p) != 0:
        return False
    return min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y)


def segments_intersect(a: Point2, b: Point2, c: Point2, d: Point2) -> bool:
    """Closed segments ``[a,b]`` and ``[c,d]`` share at least one point."""
    d1 = sign(orient(c, d, a))
    d2 = sign(orient(c, d, b))
    d3 = sign(orient(a, b, c))
    d4 = sign(orient(a, b, d))
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    return (
        (d1 == 0 and on_segment(a, c, d))
        or (d2 == 0 and on_segment(b, c, d))
        or (d3 == 0 and on_segment(c, a, b))
        or (d4 == 0 and on_segment(d, a, b))
    )


def segments_cross(a: Point2, b: Point2, c: Point2, d: Point2) -> bool:
    """Transversal crossing: the segments meet at a single point interior to both."""
    d1 = sign(orient(c, d, a))
    d2 = sign(orient(c, d, b))
    d3 = sign(orient(a, b, c))
    d4 = sign(orient(a, b, d))
    return d1 * d2 < 0 and d3 * d4 < 0


def shoelace(points: Sequence[Point2]) -> Fraction:
    """Signed area of the closed polygon through ``points``."""
    n = len(points)
    total = Fraction(0)
    for i in range(n):
        p, q = points[i], points[(i + 1) % n]
        total += p.x * q.y - q.x * p.y
    return total / 2


def mean_point(points: Iterable[Point2]) -> Point2:
    pts = list(points)
    n = len(pts)
    return Point2(sum((p.x for p in pts), Fraction(0)) / n, sum((p.y for p in pts), Fraction(0)) / n)


def all_collinear(points: Sequence[Point2]) -> bool:
    if len(points) < 3:
        return True
    a = points[0]
    b = next((p for p in points[1:] if p != a), None)
    if b is None:
        return True
    return all(orient(a, b, p) == 0 for p in points)


class IntegerPolygon:
    """A polygon rescaled to integer coordinates for fast exact queries.

    The ray-crossing loop in :func:`classify` runs millions of times in the
    property suites; doing it on Python ints instead of Fractions keeps
    those suites inside their time budget without giving up exactness.
    """

    __slots__ = ("den", "xs", "ys")

    def __init__(self, points: Sequence[Point2]):
        den = 1
        for p in points:
            den = lcm(den, p.x.denominator, p.y.denominator)
        self.den = den
        self.xs = [int(p.x * den) for p in points]
        self.ys = [int(p.y * den) for p in points]

    def classify(self, p: Point2) -> int:
        """Return 1 for interior, 0 for boundary, -1 for exterior."""
        extra = lcm(p.x.denominator, p.y.denominator)
        # common denominator D = lcm(den, extra) = den * scale
        scale = extra // gcd(extra, self.den)
        D = self.den * scale
        px = p.x.numerator * (D // p.x.denominator)
        py = p.y.numerator * (D // p.y.denominator)
        xs = self.xs
        ys = self.ys
        n = len(xs)
        inside = False
        for i in range(n):
            ax, ay = xs[i] * scale, ys[i] * scale
            j = i + 1 if i + 1 < n else 0
            bx, by = xs[j] * scale, ys[j] * scale
            cross = (bx - ax) * (py - ay) - (by - ay) * (px - ax)
            if cross == 0 and min(ax, bx) <= px <= max(ax, bx) and min(ay, by) <= py <= max(ay, by):
                return 0
            if (ay > py) != (by > py):
                # x-coordinate of the crossing compared with px, sign-corrected
                if (cross > 0) == (by > ay):
                    inside = not inside
        return 1 if inside else -1

