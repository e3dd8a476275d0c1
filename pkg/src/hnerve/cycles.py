"""1-cycles, their piecewise-linear homotopic lifts, and the mod-n walk group.

A :class:`OneCycle` is a simple closed polygon along edges of a complex,
with positive area. Lifting it attaches one :class:`PathMap` per edge;
walking ``k`` steps from ``v_0`` realizes ``v_{k mod n}``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from . import errors
from .cw import Cell, CWComplex, SubComplex, build_complex
from .geometry import (
    IntegerPolygon,
    Point2,
    RationalLike,
    all_collinear,
    on_segment,
    orient,
    segments_cross,
    segments_intersect,
    shoelace,
    to_fraction,
)


class PointClass(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    EXTERIOR = "exterior"


@dataclass(frozen=True, eq=False)
class OneCycle:
    complex: CWComplex
    vertex_seq: tuple[int, ...]
    _poly: IntegerPolygon = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_poly", IntegerPolygon(self.points))

    def __eq__(self, other):
        if not isinstance(other, OneCycle):
            return NotImplemented
        return self.vertex_seq == other.vertex_seq and self.complex == other.complex

    def __hash__(self):
        return hash(self.vertex_seq)

    def __len__(self):
        return len(self.vertex_seq)

    def __iter__(self):
        return iter(self.vertex_seq)

    def __repr__(self):
        return f"OneCycle({list(self.vertex_seq)})"

    @property
    def n(self) -> int:
        return len(self.vertex_seq)

    @property
    def points(self) -> list[Point2]:
        return [self.complex.point(v) for v in self.vertex_seq]

    @property
    def signed_area(self) -> Fraction:
        return shoelace(self.points)

    @property
    def area(self) -> Fraction:
        return abs(self.signed_area)

    @property
    def orientation(self) -> str:
        return "ccw" if self.signed_area > 0 else "cw"

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertex_seq)

    def edge_pairs(self) -> list[tuple[int, int]]:
        seq = self.vertex_seq
        return [(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq))]

    def segments(self) -> list[tuple[Point2, Point2]]:
        pts = self.points
        return [(pts[i], pts[(i + 1) % len(pts)]) for i in range(len(pts))]

    @property
    def cells(self) -> frozenset[Cell]:
        """The 0- and 1-cells traversed by the cycle."""
        k = self.complex
        return frozenset(k.vertex(v) for v in self.vertex_seq) | frozenset(k.edge(a, b) for a, b in self.edge_pairs())

    def as_subcomplex(self) -> SubComplex:
        return SubComplex(self.complex, self.cells)

    def position(self, vid: int) -> int:
        return self.vertex_seq.index(vid)

    def reversed(self) -> OneCycle:
        """Same polygon, opposite traversal, ``v_0`` kept in place."""
        seq = self.vertex_seq
        return OneCycle(self.complex, (seq[0],) + tuple(reversed(seq[1:])))

    def rotated(self, shift: int) -> OneCycle:
        seq = self.vertex_seq
        shift %= len(seq)
        return OneCycle(self.complex, seq[shift:] + seq[:shift])

    def in_complex(self, other: CWComplex) -> OneCycle:
        """Re-anchor the same vertex sequence in a complex extending this one."""
        return construct_cycle(other, self.vertex_seq, normalize=False)


def construct_cycle(
    k: CWComplex,
    seq: Sequence[int],
    *,
    normalize: bool = True,
    canonical: bool = False,
) -> OneCycle:
    """Validate ``seq`` as a 1-cycle of ``k``.

    With ``normalize`` (the default) a clockwise sequence is reversed so the
    stored traversal is counterclockwise; ``v_0`` stays first. ``canonical``
    additionally rotates the sequence so the lexicographically least point is
    ``v_0``. With ``normalize=False`` the caller's traversal is kept, which is
    what reproduces index-based labels read off a figure.
    """
    seq = tuple(int(v) for v in seq)
    if len(seq) < 3:
        raise errors.DegenerateArea(f"a 1-cycle needs at least 3 vertices, got {len(seq)}")
    for v in seq:
        if not k.has_vertex(v):
            raise errors.DanglingReference(f"cycle names missing vertex {v}")
    if len(set(seq)) != len(seq):
        dup = next(v for v in seq if seq.count(v) > 1)
        raise errors.RepeatedVertex(f"vertex {dup} repeats in the cycle")
    n = len(seq)
    for i in range(n):
        a, b = seq[i], seq[(i + 1) % n]
        if k.edge(a, b) is None:
            raise errors.MissingEdge(f"no 1-cell joins {a} and {b}")
    pts = [k.point(v) for v in seq]
    if all_collinear(pts):
        raise errors.DegenerateArea("cycle vertices are collinear; the interior is empty")
    _check_simple(seq, pts)
    area = shoelace(pts)
    if area == 0:
        raise errors.DegenerateArea("cycle encloses zero area")
    if normalize and area < 0:
        seq = (seq[0],) + tuple(reversed(seq[1:]))
    if canonical:
        pts = [k.point(v) for v in seq]
        start = min(range(n), key=lambda i: pts[i])
        seq = seq[start:] + seq[:start]
    return OneCycle(k, seq)


def _check_simple(seq: Sequence[int], pts: Sequence[Point2]) -> None:
    n = len(pts)
    segs = [(pts[i], pts[(i + 1) % n]) for i in range(n)]

    def fail(i, j, how):
        raise errors.SelfIntersecting(
            f"edges {seq[i]}-{seq[(i + 1) % n]} and {seq[j]}-{seq[(j + 1) % n]} {how}"
        )

    for i in range(n):
        for j in range(i + 1, n):
            if j == i + 1 or (i == 0 and j == n - 1):
                # consecutive segments p-s, s-q may share only s
                if j == i + 1:
                    p, s, q = pts[i], pts[j], pts[(j + 1) % n]
                else:
                    p, s, q = pts[1], pts[0], pts[n - 1]
                if orient(p, s, q) == 0 and (on_segment(q, s, p) or on_segment(p, s, q)):
                    fail(i, j, "overlap")
            elif segments_intersect(*segs[i], *segs[j]):
                fail(i, j, "meet")


def classify_point(c: OneCycle, p: Point2) -> PointClass:
    """Exact Jordan classification: on an edge, strictly inside, or outside."""
    if not isinstance(p, Point2):
        p = Point2(*p)
    code = c._poly.classify(p)
    if code > 0:
        return PointClass.INTERIOR
    if code == 0:
        return PointClass.BOUNDARY
    return PointClass.EXTERIOR


def is_nested(inner: OneCycle, outer: OneCycle) -> bool:
    """``inner`` lies in the closed region of ``outer`` and reaches its interior.

    Shared vertices are allowed; a transversal crossing of any two edges
    is not.
    """
    classes = [classify_point(outer, p) for p in inner.points]
    if any(cl is PointClass.EXTERIOR for cl in classes):
        return False
    if not any(cl is PointClass.INTERIOR for cl in classes):
        return False
    outer_segs = outer.segments()
    for a, b in inner.segments():
        for c, d in outer_segs:
            if segments_cross(a, b, c, d):
                return False
    return True


@dataclass(frozen=True)
class PathMap:
    """Piecewise-linear path ``h(t) = (1-t) start + t end`` on ``[0, 1]``."""

    index: int
    start: Point2
    end: Point2

    def __call__(self, t: RationalLike) -> Point2:
        t = to_fraction(t)
        if not 0 <= t <= 1:
            raise ValueError(f"path parameter {t} outside [0, 1]")
        return Point2(
            (1 - t) * self.start.x + t * self.end.x,
            (1 - t) * self.start.y + t * self.end.y,
        )


@dataclass(frozen=True)
class HomotopicCycle:
    base: OneCycle
    maps: tuple[PathMap, ...]

    @property
    def n(self) -> int:
        return len(self.maps)

    @property
    def vertex_seq(self) -> tuple[int, ...]:
        return self.base.vertex_seq

    @property
    def complex(self) -> CWComplex:
        return self.base.complex

    def chained(self) -> bool:
        n = self.n
        return all(self.maps[(i + 1) % n](0) == self.maps[i](1) for i in range(n))

    def unit(self) -> MoveElement:
        """The generator ``g = h_0(0)`` as a move element."""
        return MoveElement(self, 1)


def lift_cycle(c: OneCycle) -> HomotopicCycle:
    pts = c.points
    n = len(pts)
    maps = tuple(PathMap(i, pts[i], pts[(i + 1) % n]) for i in range(n))
    return HomotopicCycle(c, maps)


CycleLike = Union[OneCycle, HomotopicCycle]


def walk(c: CycleLike, k: int) -> int:
    """Vertex id reached by walking ``k`` steps from ``v_0``.

    Negative ``k`` walks backwards; counts are reduced by true modulus, so
    the result always lies on the cycle.
    """
    seq = c.vertex_seq
    return seq[k % len(seq)]


def walk_from(c: CycleLike, start: int, k: int) -> int:
    seq = c.vertex_seq
    return seq[(seq.index(start) + k) % len(seq)]


@dataclass(frozen=True)
class MoveElement:
    """``k`` times the generator of a homotopic cycle."""

    cycle: HomotopicCycle
    k: int

    @property
    def vertex(self) -> int:
        return walk(self.cycle, self.k)

    @property
    def residue(self) -> int:
        return self.k % self.cycle.n

    def __add__(self, other: MoveElement) -> MoveElement:
        return move_add(self, other)

    def __neg__(self) -> MoveElement:
        return MoveElement(self.cycle, -self.k)

    def __sub__(self, other: MoveElement) -> MoveElement:
        return move_add(self, -other)


def move_add(a: MoveElement, b: MoveElement) -> MoveElement:
    if a.cycle is not b.cycle and a.cycle != b.cycle:
        raise errors.CycleMismatch("move elements live on different cycles")
    return MoveElement(a.cycle, a.k + b.k)


def homotopic_triangle(a: Point2, b: Point2, c: Point2) -> HomotopicCycle:
    pts = [p if isinstance(p, Point2) else Point2(*p) for p in (a, b, c)]
    if orient(*pts) == 0:
        raise errors.CollinearVertices(f"{pts} are collinear")
    k = build_complex(enumerate(pts), [(0, 1), (1, 2), (2, 0)])
    return lift_cycle(construct_cycle(k, [0, 1, 2], normalize=False))
