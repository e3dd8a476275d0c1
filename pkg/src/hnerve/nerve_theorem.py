"""Executable check of the nerve theorem for closed convex bodies in the plane.

The Čech nerve of a collection records which subcollections have a common
point. For closed convex sets it has the homotopy type of their union, so
the component and hole counts ``(b0, b1)`` of the two must agree. Nerve
ranks are computed over GF(2); the union of integer rectangles is
rasterized exactly into a cubical complex.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

import numpy as np
from scipy import ndimage

from . import errors
from .geometry import Point2, format_fraction, orient, sign, to_fraction

__all__ = [
    "AbstractSimplicialComplex",
    "AgreementReport",
    "ConvexPolygon",
    "InvariantVector",
    "Rect",
    "bodies_from_dict",
    "cech_nerve",
    "check_nerve_theorem",
    "common_intersection",
    "invariants_of_complex",
    "invariants_of_union",
]

LIMITATION = (
    "agreement of (b0, b1) is a necessary condition for equal homotopy type, "
    "not a proof of it; no explicit homotopy equivalence is constructed"
)

# above this many bodies only sub-families whose triples all meet are kept
HELLY_THRESHOLD = 20


@dataclass(frozen=True)
class Rect:
    """Closed axis-aligned rectangle ``[x0, x1] x [y0, y1]``."""

    x0: Fraction
    y0: Fraction
    x1: Fraction
    y1: Fraction

    def __post_init__(self):
        for name in ("x0", "y0", "x1", "y1"):
            object.__setattr__(self, name, to_fraction(getattr(self, name)))
        if self.x1 <= self.x0 or self.y1 <= self.y0:
            raise errors.NotRectangle(f"rectangle {self.as_list()} needs positive width and height")

    @property
    def integral(self) -> bool:
        return all(v.denominator == 1 for v in (self.x0, self.y0, self.x1, self.y1))

    def corners(self) -> list[Point2]:
        return [Point2(self.x0, self.y0), Point2(self.x1, self.y0), Point2(self.x1, self.y1), Point2(self.x0, self.y1)]

    def as_list(self) -> list:
        return [_num(v) for v in (self.x0, self.y0, self.x1, self.y1)]


@dataclass(frozen=True)
class ConvexPolygon:
    """Closed convex polygon given by its vertices, either orientation."""

    vertices: tuple[Point2, ...]

    def __post_init__(self):
        pts = tuple(p if isinstance(p, Point2) else Point2(*p) for p in self.vertices)
        n = len(pts)
        if n < 3:
            raise errors.NotConvex("a convex polygon needs at least 3 vertices")
        turns = {sign(orient(pts[i], pts[(i + 1) % n], pts[(i + 2) % n])) for i in range(n)}
        if 0 in turns or len(turns) != 1:
            raise errors.NotConvex("polygon turns are not all strictly one way")
        # a pentagram turns one way too; every vertex must see every edge from the same side
        t = turns.pop()
        for i in range(n):
            a, b = pts[i], pts[(i + 1) % n]
            if any(t * orient(a, b, p) < 0 for p in pts):
                raise errors.NotConvex("polygon winds more than once")
        if t < 0:
            pts = (pts[0],) + tuple(reversed(pts[1:]))
        object.__setattr__(self, "vertices", pts)

    def corners(self) -> list[Point2]:
        return list(self.vertices)


Body = Union[Rect, ConvexPolygon]


def _num(v: Fraction):
    return v.numerator if v.denominator == 1 else format_fraction(v)


def _clip(subject: list[Point2], a: Point2, b: Point2) -> list[Point2]:
    """Keep the part of ``subject`` on the closed left side of ``a -> b``."""
    out: list[Point2] = []
    n = len(subject)
    for i in range(n):
        p, q = subject[i], subject[(i + 1) % n]
        sp, sq = orient(a, b, p), orient(a, b, q)
        if sp >= 0:
            out.append(p)
        if (sp > 0 and sq < 0) or (sp < 0 and sq > 0):
            t = sp / (sp - sq)
            out.append(Point2(p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)))
    deduped = [p for i, p in enumerate(out) if p != out[i - 1]] if len(out) > 1 else out
    return deduped or out[:1]


def _meet(region: list[Point2], body: Body) -> list[Point2]:
    clip = body.corners()
    n = len(clip)
    for i in range(n):
        if not region:
            break
        region = _clip(region, clip[i], clip[(i + 1) % n])
    return region


def _box_meet(box, r: Rect):
    x0, y0, x1, y1 = box
    nb = (max(x0, r.x0), max(y0, r.y0), min(x1, r.x1), min(y1, r.y1))
    return nb if nb[0] <= nb[2] and nb[1] <= nb[3] else None


def common_intersection(bodies: Sequence[Body]) -> list[Point2]:
    """Vertices of the (possibly degenerate) common intersection, empty if none."""
    if not bodies:
        raise errors.EmptyMemberList("no bodies to intersect")
    region = bodies[0].corners()
    for b in bodies[1:]:
        region = _meet(region, b)
    return region


@dataclass(frozen=True)
class AbstractSimplicialComplex:
    """Downward-closed family of nonempty index tuples over ``n_vertices`` bodies."""

    n_vertices: int
    simplices: frozenset[tuple[int, ...]]

    @property
    def dimension(self) -> int:
        return max((len(s) - 1 for s in self.simplices), default=-1)

    def of_dim(self, d: int) -> list[tuple[int, ...]]:
        return sorted(s for s in self.simplices if len(s) == d + 1)

    def f_vector(self) -> list[int]:
        return [len(self.of_dim(d)) for d in range(self.dimension + 1)]

    def is_downward_closed(self) -> bool:
        return all(
            f in self.simplices for s in self.simplices if len(s) > 1 for f in itertools.combinations(s, len(s) - 1)
        )

    def to_dict(self) -> dict:
        return {"vertices": self.n_vertices, "simplices": [list(s) for d in range(self.dimension + 1) for s in self.of_dim(d)]}


def complex_from_simplices(maximal: Iterable[Iterable[int]]) -> AbstractSimplicialComplex:
    """Downward closure of the given simplices."""
    faces = set()
    n = 0
    for s in maximal:
        s = tuple(sorted(set(s)))
        n = max(n, max(s) + 1)
        for r in range(1, len(s) + 1):
            faces.update(itertools.combinations(s, r))
    return AbstractSimplicialComplex(n, frozenset(faces))


def cech_nerve(bodies: Sequence[Body], *, helly: bool | None = None) -> AbstractSimplicialComplex:
    """All index sets whose bodies share a point, found by depth-first extension.

    Each branch carries the running intersection, so emptiness prunes the
    whole subtree. With ``helly`` (the default for more than twenty bodies)
    families of four or more are admitted as soon as all their triples meet,
    which is exact for convex sets in the plane.
    """
    bodies = list(bodies)
    if not bodies:
        raise errors.EmptyMemberList("a nerve needs at least one body")
    n = len(bodies)
    if helly is None:
        helly = n > HELLY_THRESHOLD
    all_rects = all(isinstance(b, Rect) for b in bodies)

    def start(b):
        return (b.x0, b.y0, b.x1, b.y1) if all_rects else b.corners()

    def meet(region, b):
        return _box_meet(region, b) if all_rects else (_meet(region, b) or None)

    found: set[tuple[int, ...]] = set()
    if helly:
        level = {}
        for i, b in enumerate(bodies):
            level[(i,)] = start(b)
        while level:
            found.update(level)
            nxt = {}
            for s, region in level.items():
                for j in range(s[-1] + 1, n):
                    cand = s + (j,)
                    if not all(f in found for f in itertools.combinations(cand, len(cand) - 1)):
                        continue
                    if len(cand) <= 3:
                        r = meet(region, bodies[j])
                        if r is not None:
                            nxt[cand] = r
                    else:
                        nxt[cand] = None
            level = nxt
    else:

        def extend(simplex, region):
            found.add(simplex)
            for j in range(simplex[-1] + 1, n):
                r = meet(region, bodies[j])
                if r is not None:
                    extend(simplex + (j,), r)

        for i, b in enumerate(bodies):
            extend((i,), start(b))
    return AbstractSimplicialComplex(n, frozenset(found))


@dataclass(frozen=True)
class InvariantVector:
    b0: int
    b1: int
    b2: int
    euler: int

    @property
    def pair(self) -> tuple[int, int]:
        return (self.b0, self.b1)

    def to_dict(self) -> dict:
        return {"b0": self.b0, "b1": self.b1, "b2": self.b2, "euler": self.euler}


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank over GF(2) of row vectors packed into integer bitmasks."""
    pivots: dict[int, int] = {}
    rank = 0
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top not in pivots:
                pivots[top] = r
                rank += 1
                break
            r ^= pivots[top]
    return rank


def _boundary_rank(c: AbstractSimplicialComplex, d: int) -> int:
    """Rank of the boundary map from d-simplices to (d-1)-simplices."""
    if d <= 0:
        return 0
    lower = {s: i for i, s in enumerate(c.of_dim(d - 1))}
    rows = []
    for s in c.of_dim(d):
        mask = 0
        for face in itertools.combinations(s, d):
            mask |= 1 << lower[face]
        rows.append(mask)
    return gf2_rank(rows)


def _components(n: int, edges: Iterable[tuple[int, int]], present: Iterable[int]) -> int:
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(v) for v in present})


def invariants_of_complex(c: AbstractSimplicialComplex) -> InvariantVector:
    """Betti numbers over GF(2); ``b0`` comes from the 1-skeleton directly."""
    counts = c.f_vector()
    top = len(counts) - 1
    ranks = [_boundary_rank(c, d) for d in range(top + 2)]
    betti = [counts[d] - ranks[d] - ranks[d + 1] for d in range(top + 1)] + [0, 0, 0]
    b0 = _components(c.n_vertices, c.of_dim(1), (s[0] for s in c.of_dim(0)))
    assert b0 == betti[0], "component count disagrees with rank computation"
    euler = sum((-1) ** d * k for d, k in enumerate(counts))
    return InvariantVector(b0, betti[1], betti[2], euler)


def occupancy_grid(rects: Sequence[Rect]) -> tuple[np.ndarray, tuple[int, int]]:
    """Boolean grid of unit cells covered by the rectangles, plus its origin."""
    for r in rects:
        if not isinstance(r, Rect):
            raise errors.NotRectangle(f"union invariants need axis-aligned rectangles, got {type(r).__name__}")
        if not r.integral:
            raise errors.NotRectangle(f"rectangle {r.as_list()} has non-integer corners")
    if not rects:
        return np.zeros((0, 0), dtype=bool), (0, 0)
    ox = int(min(r.x0 for r in rects))
    oy = int(min(r.y0 for r in rects))
    w = int(max(r.x1 for r in rects)) - ox
    h = int(max(r.y1 for r in rects)) - oy
    grid = np.zeros((w, h), dtype=bool)
    for r in rects:
        grid[int(r.x0) - ox : int(r.x1) - ox, int(r.y0) - oy : int(r.y1) - oy] = True
    return grid, (ox, oy)


def invariants_of_union(rects: Sequence[Rect]) -> InvariantVector:
    """Invariants of the union as a cubical complex of closed unit squares.

    Squares meeting only at a corner are connected, as closed sets must be.
    """
    grid, _ = occupancy_grid(list(rects))
    if grid.size == 0:
        return InvariantVector(0, 0, 0, 0)
    g = np.pad(grid, 1)
    faces = int(g.sum())
    # an edge exists if either square on its two sides is occupied
    vert_edges = int((g[1:, :] | g[:-1, :]).sum())
    horiz_edges = int((g[:, 1:] | g[:, :-1]).sum())
    corners = int((g[1:, 1:] | g[:-1, 1:] | g[1:, :-1] | g[:-1, :-1]).sum())
    euler = corners - (vert_edges + horiz_edges) + faces
    _, b0 = ndimage.label(grid, structure=np.ones((3, 3), dtype=int))
    return InvariantVector(int(b0), int(b0) - euler, 0, euler)


@dataclass(frozen=True)
class AgreementReport:
    bodies: tuple[Rect, ...]
    nerve: AbstractSimplicialComplex
    nerve_invariants: InvariantVector
    union_invariants: InvariantVector
    note: str = field(default=LIMITATION)

    @property
    def agree(self) -> bool:
        return self.nerve_invariants.pair == self.union_invariants.pair

    def to_dict(self) -> dict:
        return {
            "agree": self.agree,
            "nerve": self.nerve_invariants.to_dict(),
            "union": self.union_invariants.to_dict(),
            "simplices": self.nerve.to_dict()["simplices"],
            "rectangles": [r.as_list() for r in self.bodies],
            "note": self.note,
        }


def check_nerve_theorem(rects: Sequence[Rect]) -> AgreementReport:
    rects = tuple(rects)
    union = invariants_of_union(rects)
    nerve = cech_nerve(rects)
    return AgreementReport(rects, nerve, invariants_of_complex(nerve), union)


def bodies_from_dict(data: Mapping) -> list[Body]:
    """Parse ``{"rectangles": [[x0, y0, x1, y1], ...], "polygons": [[[x, y], ...], ...]}``."""
    if not isinstance(data, Mapping):
        raise errors.SceneParseError("bodies file must be a JSON object")
    out: list[Body] = []
    try:
        for r in data.get("rectangles", []):
            if len(r) != 4:
                raise errors.SceneParseError(f"a rectangle is [x0, y0, x1, y1], got {r!r}")
            out.append(Rect(*(to_fraction(v) for v in r)))
        for poly in data.get("polygons", []):
            out.append(ConvexPolygon(tuple(Point2(to_fraction(x), to_fraction(y)) for x, y in poly)))
    except (TypeError, ValueError) as exc:
        if isinstance(exc, errors.TopologyError) or isinstance(exc, errors.SceneParseError):
            raise
        raise errors.SceneParseError(f"malformed bodies: {exc}") from exc
    return out
