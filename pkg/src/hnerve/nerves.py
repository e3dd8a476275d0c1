"""Nerve detection, fan triangulations, barycentric cycles and vortexes.

Intersections are taken cell-by-cell over a shared complex, so a witness is
always a concrete set of cells (in practice the shared vertices).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from . import errors
from .cw import Cell, CWComplex, SubComplex, closure
from .cycles import (
    HomotopicCycle,
    OneCycle,
    PathMap,
    PointClass,
    classify_point,
    construct_cycle,
    is_nested,
    lift_cycle,
)
from .geometry import Point2, mean_point, orient, sign

__all__ = [
    "BarycentricCycle",
    "BridgeEdge",
    "FanTriangulation",
    "HomotopicBridge",
    "HomotopicVortex",
    "NerveComplex",
    "Nucleus",
    "Vortex",
    "VortexNerve",
    "barycentric_cycle",
    "build_vortex",
    "cells_of",
    "detect_nerve",
    "detect_vortex_nerve",
    "fan_triangulate",
    "nucleus_nerves",
]


@dataclass(frozen=True)
class NerveComplex:
    members: tuple
    witness: frozenset[Cell]

    @property
    def witness_vertices(self) -> frozenset[int]:
        return frozenset(c.id for c in self.witness if c.dim == 0)


def cells_of(member) -> frozenset[Cell]:
    """The cell set a nerve member stands for."""
    if isinstance(member, SubComplex):
        return member.cells
    if isinstance(member, (OneCycle, HomotopicCycle)):
        base = member.base if isinstance(member, HomotopicCycle) else member
        return base.cells
    if isinstance(member, (Vortex, HomotopicVortex)):
        return member.cells
    if isinstance(member, Cell):
        return frozenset([member])
    return frozenset(member)


def detect_nerve(members: Sequence) -> NerveComplex | None:
    """Return the nerve with its witness, or ``None`` when no cell is common.

    The witness is exactly the intersection of the members' cell sets.
    """
    members = tuple(members)
    if not members:
        raise errors.EmptyMemberList("a nerve needs at least one member")
    sets = [cells_of(m) for m in members]
    if any(not s for s in sets):
        raise errors.EmptyMemberList("nerve members must be nonempty")
    witness = frozenset.intersection(*sets)
    if not witness:
        return None
    return NerveComplex(members, witness)


@dataclass(frozen=True)
class Nucleus:
    vertex: int
    star: frozenset[Cell]


def nucleus_nerves(k: CWComplex) -> list[Nucleus]:
    """One nucleus per vertex carrying at least one filled triangle."""
    out = []
    for vid in k.vertex_ids:
        v = k.vertex(vid)
        star = frozenset(t for e in k.cofaces(v) for t in k.cofaces(e))
        if star:
            out.append(Nucleus(vid, star))
    return out


@dataclass(frozen=True)
class FanTriangulation:
    cycle: OneCycle
    centroid: Point2
    centroid_id: int
    triangles: tuple[Cell, ...]

    @property
    def complex(self) -> CWComplex:
        return self.cycle.complex

    def triangle_members(self) -> list[SubComplex]:
        """Each fan triangle as a closed subcomplex (triangle, edges, vertices)."""
        return [closure(SubComplex(self.complex, [t])) for t in self.triangles]


def fan_triangulate(c: OneCycle) -> FanTriangulation:
    """Cone the cycle off its vertex mean.

    The centroid must see every edge from the inside: for a counterclockwise
    cycle it lies strictly left of each directed edge. That is exactly the
    condition for the ``n`` spoke triangles to tile the polygon without
    folding; when it fails some spoke leaves the polygon or a triangle
    inverts, and :class:`~hnerve.errors.NotStarShapedFromCentroid` is raised.
    """
    pts = c.points
    n = len(pts)
    cen = mean_point(pts)
    turn = sign(c.signed_area)
    for i in range(n):
        if sign(orient(pts[i], pts[(i + 1) % n], cen)) != turn:
            raise errors.NotStarShapedFromCentroid(
                f"centroid {cen} does not see edge {c.vertex_seq[i]}-{c.vertex_seq[(i + 1) % n]} from inside"
            )
    k = c.complex
    cid = k.vertex_at(cen)
    new_vertices = []
    if cid is None:
        cid = k.next_vertex_id()
        new_vertices.append((cid, cen))
    seq = c.vertex_seq
    spokes = [(v, cid) for v in seq]
    tris = [(seq[i], seq[(i + 1) % n], cid) for i in range(n)]
    fk = k.extended(new_vertices, spokes, tris)
    cells = tuple(fk.triangle(*t) for t in tris)
    return FanTriangulation(c.in_complex(fk), cen, cid, cells)


@dataclass(frozen=True)
class BarycentricCycle:
    parent: FanTriangulation
    barycenters: tuple[Point2, ...]
    cycle: OneCycle

    @property
    def outer(self) -> OneCycle:
        """The parent cycle re-anchored in the barycentric complex."""
        return self.parent.cycle.in_complex(self.cycle.complex)


def barycentric_cycle(f: FanTriangulation) -> BarycentricCycle:
    k = f.complex
    bary = []
    for t in f.triangles:
        a, b, c = (k.point(v) for v in t.vertex_ids)
        bary.append(mean_point((a, b, c)))
    ids = []
    new_vertices = []
    nxt = k.next_vertex_id()
    for p in bary:
        vid = k.vertex_at(p)
        if vid is None:
            vid = nxt
            nxt += 1
            new_vertices.append((vid, p))
        ids.append(vid)
    n = len(ids)
    bk = k.extended(new_vertices, [(ids[i], ids[(i + 1) % n]) for i in range(n)])
    # fan order, so the barycentric cycle turns the same way as its parent
    cyc = construct_cycle(bk, ids, normalize=False)
    return BarycentricCycle(f, tuple(bary), cyc)


@dataclass(frozen=True)
class BridgeEdge:
    """Joins ``from_vertex`` on cycle ``from_cycle`` to ``to_vertex`` on ``to_cycle``.

    Cycle indices refer to the owning vortex's nesting order.
    """

    from_cycle: int
    from_vertex: int
    to_cycle: int
    to_vertex: int

    def touches(self, i: int, j: int) -> bool:
        return {self.from_cycle, self.to_cycle} == {i, j}

    def endpoint_on(self, i: int) -> int | None:
        if self.from_cycle == i:
            return self.from_vertex
        if self.to_cycle == i:
            return self.to_vertex
        return None

    def as_list(self) -> list[int]:
        return [self.from_cycle, self.from_vertex, self.to_cycle, self.to_vertex]


@dataclass(frozen=True)
class HomotopicBridge:
    bridge: BridgeEdge
    path: PathMap


@dataclass(frozen=True)
class Vortex:
    """Cycles ordered outermost first, plus the bridges between them."""

    cycles: tuple[OneCycle, ...]
    bridges: tuple[BridgeEdge, ...] = ()

    @property
    def complex(self) -> CWComplex:
        return self.cycles[0].complex

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset().union(*(c.vertex_set for c in self.cycles))

    @property
    def cells(self) -> frozenset[Cell]:
        return frozenset().union(*(c.cells for c in self.cycles))

    def shared_vertices(self, i: int, j: int) -> frozenset[int]:
        return self.cycles[i].vertex_set & self.cycles[j].vertex_set

    def lift(self) -> HomotopicVortex:
        k = self.complex
        hb = tuple(
            HomotopicBridge(b, PathMap(i, k.point(b.from_vertex), k.point(b.to_vertex)))
            for i, b in enumerate(self.bridges)
        )
        return HomotopicVortex(self, tuple(lift_cycle(c) for c in self.cycles), hb)


@dataclass(frozen=True)
class HomotopicVortex:
    base: Vortex
    cycles: tuple[HomotopicCycle, ...]
    bridges: tuple[HomotopicBridge, ...]

    @property
    def vertex_set(self) -> frozenset[int]:
        return self.base.vertex_set

    @property
    def cells(self) -> frozenset[Cell]:
        return self.base.cells


BridgeLike = Union[BridgeEdge, Sequence[int]]


def _same_complex(cycles: Iterable[OneCycle]) -> CWComplex:
    cycles = list(cycles)
    k = cycles[0].complex
    for c in cycles[1:]:
        if c.complex is not k and c.complex != k:
            raise errors.ComplexMismatch("all cycles must live in one complex")
    return k


def build_vortex(
    cycles: Sequence[OneCycle],
    bridges: Iterable[BridgeLike] = (),
    *,
    allow_single: bool = False,
) -> Vortex:
    """Order ``cycles`` by nesting and check each adjacent pair is joined.

    ``bridges`` refer to cycles by their position in the input list; the
    returned vortex re-indexes them to the nesting order. Adjacent cycles
    must share a vertex or carry at least one bridge.
    """
    cycles = [c.base if isinstance(c, HomotopicCycle) else c for c in cycles]
    bridges = [b if isinstance(b, BridgeEdge) else BridgeEdge(*map(int, b)) for b in bridges]
    if not cycles:
        raise errors.EmptyMemberList("a vortex needs at least one cycle")
    if len(cycles) == 1 and not allow_single:
        raise errors.NotNested("a vortex needs two or more nested cycles (allow_single for the degenerate case)")
    _same_complex(cycles)
    for b in bridges:
        for ci, v in ((b.from_cycle, b.from_vertex), (b.to_cycle, b.to_vertex)):
            if not 0 <= ci < len(cycles):
                raise errors.InvalidBridge(f"bridge names cycle {ci}; only {len(cycles)} given")
            if v not in cycles[ci].vertex_set:
                raise errors.InvalidBridge(f"bridge endpoint {v} is not on cycle {ci}")
        if b.from_cycle == b.to_cycle:
            raise errors.InvalidBridge("a bridge must join two distinct cycles")

    m = len(cycles)
    inside = [[i != j and is_nested(cycles[i], cycles[j]) for j in range(m)] for i in range(m)]
    depth = [sum(row) for row in inside]
    order = sorted(range(m), key=lambda i: (depth[i], i))
    for a in range(m):
        for b in range(a + 1, m):
            if not inside[order[b]][order[a]]:
                raise errors.NotNested(f"cycles {order[a]} and {order[b]} are not nested one inside the other")
    rank = {old: new for new, old in enumerate(order)}
    ordered = tuple(cycles[i] for i in order)
    remapped = tuple(
        BridgeEdge(rank[b.from_cycle], b.from_vertex, rank[b.to_cycle], b.to_vertex) for b in bridges
    )
    vortex = Vortex(ordered, remapped)
    for i in range(m - 1):
        if not vortex.shared_vertices(i, i + 1) and not any(b.touches(i, i + 1) for b in remapped):
            raise errors.UnconnectedPair(f"nested cycles {i} and {i + 1} share no vertex and have no bridge")
    return vortex


@dataclass(frozen=True)
class VortexNerve:
    vortexes: tuple[Vortex, ...]
    witness: frozenset[int]


def detect_vortex_nerve(vortexes: Sequence[Vortex]) -> VortexNerve | None:
    """Common vertices of a family of vortexes.

    For several vortexes the witness intersects their full vertex sets. A
    single vortex is a nerve through its own nested cycles, so its witness
    is the intersection of those cycles.
    """
    vortexes = tuple(v.base if isinstance(v, HomotopicVortex) else v for v in vortexes)
    if not vortexes:
        raise errors.EmptyMemberList("a vortex nerve needs at least one vortex")
    _same_complex(c for v in vortexes for c in v.cycles)
    if len(vortexes) == 1:
        witness = frozenset.intersection(*(c.vertex_set for c in vortexes[0].cycles))
    else:
        witness = frozenset.intersection(*(v.vertex_set for v in vortexes))
    if not witness:
        return None
    return VortexNerve(vortexes, witness)


def barycenters_interior(b: BarycentricCycle) -> bool:
    outer = b.parent.cycle
    return all(classify_point(outer, p) is PointClass.INTERIOR for p in b.barycenters)
