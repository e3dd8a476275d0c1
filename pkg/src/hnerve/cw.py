"""Finite planar CW complexes: vertices, edges and filled triangles.

A complex is built once and never mutated. Cells are small frozen records,
so sets of cells (subcomplexes, witnesses, closures) are plain frozensets
and compare exactly.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from . import errors
from .geometry import Point2, RationalLike, format_fraction, to_fraction

__all__ = [
    "Cell",
    "CWComplex",
    "Issue",
    "RegionDecomposition",
    "SubComplex",
    "ValidationReport",
    "boundary",
    "build_complex",
    "closure",
    "complex_from_dict",
    "complex_to_dict",
    "decompose",
    "interior",
    "validate",
]


@dataclass(frozen=True, order=True)
class Cell:
    """One cell ``e^dim``; ``vertex_ids`` lists the 0-cells spanning it."""

    dim: int
    id: int
    vertex_ids: tuple[int, ...]

    @property
    def key(self) -> frozenset[int]:
        return frozenset(self.vertex_ids)

    def __repr__(self):
        name = ("v", "e", "t")[self.dim]
        return f"{name}{self.id}{list(self.vertex_ids)}"


@dataclass(frozen=True)
class Issue:
    kind: str
    detail: str

    def to_dict(self) -> dict:
        return {"kind": self.kind, "detail": self.detail}


@dataclass(frozen=True)
class ValidationReport:
    issues: tuple[Issue, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.issues

    def kinds(self) -> set[str]:
        return {i.kind for i in self.issues}

    def to_dict(self) -> dict:
        return {"valid": self.ok, "issues": [i.to_dict() for i in self.issues]}


@dataclass(frozen=True, eq=False)
class CWComplex:
    """A finite planar cell complex.

    The constructor only indexes what it is given; use :func:`build_complex`
    to get a validated complex. Equality compares the defining cells, so two
    complexes built from identical input lists are equal.
    """

    vertices: tuple[tuple[int, Point2], ...]
    edges: tuple[Cell, ...]
    triangles: tuple[Cell, ...]
    _points: dict = field(init=False, repr=False)
    _by_point: dict = field(init=False, repr=False)
    _vertex_cells: dict = field(init=False, repr=False)
    _edges_by_key: dict = field(init=False, repr=False)
    _tri_by_key: dict = field(init=False, repr=False)
    _face_index: dict = field(init=False, repr=False)

    def __post_init__(self):
        points = dict(self.vertices)
        by_point: dict = {}
        for vid, p in self.vertices:
            by_point.setdefault(p, vid)
        vcells = {vid: Cell(0, vid, (vid,)) for vid, _ in self.vertices}
        edges_by_key = {}
        for e in self.edges:
            edges_by_key.setdefault(e.key, e)
        tri_by_key = {}
        for t in self.triangles:
            tri_by_key.setdefault(t.key, t)
        cofaces: dict = defaultdict(set)
        for e in self.edges:
            for v in e.vertex_ids:
                if v in vcells:
                    cofaces[vcells[v]].add(e)
        for t in self.triangles:
            if len(t.vertex_ids) != 3:
                continue
            a, b, c = t.vertex_ids
            for pair in ((a, b), (b, c), (a, c)):
                e = edges_by_key.get(frozenset(pair))
                if e is not None:
                    cofaces[e].add(t)
        set_ = object.__setattr__
        set_(self, "_points", points)
        set_(self, "_by_point", by_point)
        set_(self, "_vertex_cells", vcells)
        set_(self, "_edges_by_key", edges_by_key)
        set_(self, "_tri_by_key", tri_by_key)
        set_(self, "_face_index", {c: frozenset(s) for c, s in cofaces.items()})

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, CWComplex):
            return NotImplemented
        return (self.vertices, self.edges, self.triangles) == (other.vertices, other.edges, other.triangles)

    def __hash__(self):
        return hash((self.vertices, self.edges, self.triangles))

    # lookups
    def point(self, vid: int) -> Point2:
        return self._points[vid]

    def has_vertex(self, vid: int) -> bool:
        return vid in self._points

    def vertex_at(self, p: Point2) -> int | None:
        return self._by_point.get(p)

    def vertex(self, vid: int) -> Cell:
        return self._vertex_cells[vid]

    def edge(self, a: int, b: int) -> Cell | None:
        return self._edges_by_key.get(frozenset((a, b)))

    def triangle(self, a: int, b: int, c: int) -> Cell | None:
        return self._tri_by_key.get(frozenset((a, b, c)))

    @property
    def vertex_ids(self) -> list[int]:
        return [vid for vid, _ in self.vertices]

    @property
    def cells(self) -> frozenset[Cell]:
        return frozenset(self._vertex_cells.values()) | frozenset(self.edges) | frozenset(self.triangles)

    @property
    def face_index(self) -> Mapping[Cell, frozenset[Cell]]:
        """Map each cell to the cells it is an immediate face of."""
        return self._face_index

    def cofaces(self, cell: Cell) -> frozenset[Cell]:
        return self._face_index.get(cell, frozenset())

    def faces(self, cell: Cell) -> frozenset[Cell]:
        """Immediate faces of ``cell`` that are present in the complex."""
        if cell.dim == 0:
            return frozenset()
        if cell.dim == 1:
            return frozenset(self._vertex_cells[v] for v in cell.vertex_ids if v in self._vertex_cells)
        a, b, c = cell.vertex_ids
        found = (self.edge(a, b), self.edge(b, c), self.edge(a, c))
        return frozenset(e for e in found if e is not None)

    def __len__(self):
        return len(self.vertices) + len(self.edges) + len(self.triangles)

    def __repr__(self):
        return f"CWComplex({len(self.vertices)} vertices, {len(self.edges)} edges, {len(self.triangles)} triangles)"

    def subcomplex(self, cells: Iterable[Cell]) -> SubComplex:
        return SubComplex(self, frozenset(cells))

    def extended(
        self,
        vertices: Iterable[tuple[int, Point2]] = (),
        edges: Iterable[tuple[int, int]] = (),
        triangles: Iterable[tuple[int, int, int]] = (),
    ) -> CWComplex:
        """A new validated complex with extra cells; cells already present are skipped."""
        vs = list(self.vertices)
        es = [c.vertex_ids for c in self.edges]
        ts = [c.vertex_ids for c in self.triangles]
        seen_e = {frozenset(e) for e in es}
        seen_t = {frozenset(t) for t in ts}
        vs.extend(vertices)
        for e in edges:
            if frozenset(e) not in seen_e:
                seen_e.add(frozenset(e))
                es.append(tuple(e))
        for t in triangles:
            if frozenset(t) not in seen_t:
                seen_t.add(frozenset(t))
                ts.append(tuple(t))
        return build_complex(vs, es, ts)

    def next_vertex_id(self) -> int:
        return max(self._points, default=-1) + 1


def _raw_complex(vertices, edges, triangles) -> CWComplex:
    vs = tuple((int(vid), p if isinstance(p, Point2) else Point2(*p)) for vid, p in vertices)
    es = tuple(Cell(1, i, tuple(int(v) for v in e)) for i, e in enumerate(edges))
    ts = tuple(Cell(2, i, tuple(int(v) for v in t)) for i, t in enumerate(triangles))
    return CWComplex(vs, es, ts)


_ERRORS = {
    "DanglingReference": errors.DanglingReference,
    "DuplicatePoint": errors.DuplicatePoint,
    "DuplicateCell": errors.DuplicateCell,
    "DegenerateCell": errors.DegenerateCell,
    "MissingFace": errors.MissingFace,
}


def build_complex(
    vertices: Iterable[tuple[int, Point2 | tuple[RationalLike, RationalLike]]],
    edges: Iterable[Sequence[int]] = (),
    triangles: Iterable[Sequence[int]] = (),
    *,
    add_missing_faces: bool = False,
) -> CWComplex:
    """Build and validate a complex.

    ``vertices`` is a list of ``(id, point)`` pairs; edges and triangles name
    vertex ids. Edge and triangle ids are their positions in the input lists.
    With ``add_missing_faces`` the boundary edges of every triangle are
    appended when absent instead of raising :class:`~hnerve.errors.MissingFace`.

    Raises the first violated invariant as its exception class.
    """
    vertices = list(vertices)
    edges = [tuple(e) for e in edges]
    triangles = [tuple(t) for t in triangles]
    if add_missing_faces:
        have = {frozenset(e) for e in edges}
        for t in triangles:
            if len(t) != 3:
                continue
            a, b, c = t
            for pair in ((a, b), (b, c), (a, c)):
                if frozenset(pair) not in have and pair[0] != pair[1]:
                    have.add(frozenset(pair))
                    edges.append(pair)
    k = _raw_complex(vertices, edges, triangles)
    report = validate(k)
    if not report.ok:
        issue = report.issues[0]
        raise _ERRORS[issue.kind](issue.detail)
    return k


def validate(k: CWComplex) -> ValidationReport:
    """List every violated structural invariant of ``k``.

    Checks: unique vertex ids, pairwise distinct vertex points (the finitely
    checkable part of Hausdorff separation), well-formed edges and triangles,
    every referenced vertex present, no duplicate cells, and containment of
    every triangle's three boundary edges.
    """
    issues: list[Issue] = []
    seen_ids: set[int] = set()
    seen_points: dict[Point2, int] = {}
    for vid, p in k.vertices:
        if vid in seen_ids:
            issues.append(Issue("DuplicateCell", f"vertex id {vid} appears twice"))
        seen_ids.add(vid)
        if p in seen_points:
            issues.append(Issue("DuplicatePoint", f"vertices {seen_points[p]} and {vid} both sit at {p}"))
        else:
            seen_points[p] = vid

    seen_e: set[frozenset[int]] = set()
    for e in k.edges:
        if len(e.vertex_ids) != 2:
            issues.append(Issue("DegenerateCell", f"edge {e.id} has {len(e.vertex_ids)} vertices"))
            continue
        missing = [v for v in e.vertex_ids if v not in seen_ids]
        if missing:
            issues.append(Issue("DanglingReference", f"edge {e.id} names missing vertex {missing[0]}"))
        if e.vertex_ids[0] == e.vertex_ids[1]:
            issues.append(Issue("DegenerateCell", f"edge {e.id} is a loop at vertex {e.vertex_ids[0]}"))
        if e.key in seen_e:
            issues.append(Issue("DuplicateCell", f"edge {list(e.vertex_ids)} appears twice"))
        seen_e.add(e.key)

    seen_t: set[frozenset[int]] = set()
    for t in k.triangles:
        if len(t.vertex_ids) != 3:
            issues.append(Issue("DegenerateCell", f"triangle {t.id} has {len(t.vertex_ids)} vertices"))
            continue
        missing = [v for v in t.vertex_ids if v not in seen_ids]
        if missing:
            issues.append(Issue("DanglingReference", f"triangle {t.id} names missing vertex {missing[0]}"))
            continue
        if len(t.key) != 3:
            issues.append(Issue("DegenerateCell", f"triangle {t.id} repeats a vertex"))
            continue
        if t.key in seen_t:
            issues.append(Issue("DuplicateCell", f"triangle {list(t.vertex_ids)} appears twice"))
        seen_t.add(t.key)
        a, b, c = t.vertex_ids
        for pair in ((a, b), (b, c), (a, c)):
            if frozenset(pair) not in seen_e:
                issues.append(Issue("MissingFace", f"triangle {t.id} lacks boundary edge {list(pair)}"))
    # dangling references outrank the rest: they make other checks meaningless
    order = {"DanglingReference": 0}
    issues.sort(key=lambda i: order.get(i.kind, 1))
    return ValidationReport(tuple(issues))


@dataclass(frozen=True)
class SubComplex:
    parent: CWComplex
    cells: frozenset[Cell]

    def __post_init__(self):
        object.__setattr__(self, "cells", frozenset(self.cells))
        known = self.parent.cells
        stray = [c for c in self.cells if c not in known]
        if stray:
            raise errors.DanglingReference(f"cells {stray[:3]} are not in the parent complex")

    @property
    def closed(self) -> bool:
        return all(self.parent.faces(c) <= self.cells for c in self.cells)

    def of_dim(self, dim: int) -> frozenset[Cell]:
        return frozenset(c for c in self.cells if c.dim == dim)

    @property
    def vertex_ids(self) -> frozenset[int]:
        return frozenset(v for c in self.cells for v in c.vertex_ids)

    def __len__(self):
        return len(self.cells)

    def __or__(self, other: SubComplex) -> SubComplex:
        return SubComplex(self.parent, self.cells | other.cells)

    def __and__(self, other: SubComplex) -> SubComplex:
        return SubComplex(self.parent, self.cells & other.cells)


@dataclass(frozen=True)
class RegionDecomposition:
    closure_cells: frozenset[Cell]
    boundary_cells: frozenset[Cell]
    interior_cells: frozenset[Cell]
    # everything of the parent complex outside the closure
    exterior_cells: frozenset[Cell]


def closure(s: SubComplex) -> SubComplex:
    """Smallest closed subcomplex containing ``s`` (faces adjoined downward)."""
    k = s.parent
    out = set(s.cells)
    frontier = list(s.cells)
    while frontier:
        c = frontier.pop()
        for f in k.faces(c):
            if f not in out:
                out.add(f)
                frontier.append(f)
    return SubComplex(k, frozenset(out))


def _interior_cells(s: SubComplex) -> frozenset[Cell]:
    k = s.parent
    tris = s.of_dim(2)
    if not tris:
        return frozenset()
    edge_count: dict[Cell, int] = defaultdict(int)
    for t in tris:
        for e in k.faces(t):
            edge_count[e] += 1
    inner_edges = {e for e in s.of_dim(1) if edge_count.get(e, 0) >= 2}
    inner_vertices = set()
    for v in s.of_dim(0):
        incident = [e for e in k.cofaces(v) if e in s.cells]
        if not incident or not any(edge_count.get(e, 0) for e in incident):
            continue
        if all(e in inner_edges for e in incident):
            inner_vertices.add(v)
    return frozenset(tris) | frozenset(inner_edges) | frozenset(inner_vertices)


def _require_closed(s: SubComplex, auto_close: bool) -> SubComplex:
    if not s.cells:
        raise errors.EmptySubComplex("subcomplex has no cells")
    if s.closed:
        return s
    if auto_close:
        return closure(s)
    raise errors.NotClosed("subcomplex is not closed; pass auto_close=True to close it first")


def interior(s: SubComplex, *, auto_close: bool = False) -> SubComplex:
    """Cells of the closed subcomplex not touching its contour.

    Triangles are always interior. An edge is interior when two triangles
    of ``s`` share it; a vertex is interior when every edge of ``s`` at it is
    interior. A subcomplex without triangles has empty interior.
    """
    s = _require_closed(s, auto_close)
    return SubComplex(s.parent, _interior_cells(s))


def boundary(s: SubComplex, *, auto_close: bool = False) -> SubComplex:
    """The contour: closure minus interior."""
    s = _require_closed(s, auto_close)
    return SubComplex(s.parent, s.cells - _interior_cells(s))


def decompose(s: SubComplex, *, auto_close: bool = True) -> RegionDecomposition:
    cl = closure(s) if auto_close else _require_closed(s, False)
    if not cl.cells:
        raise errors.EmptySubComplex("subcomplex has no cells")
    inner = _interior_cells(cl)
    return RegionDecomposition(
        closure_cells=cl.cells,
        boundary_cells=cl.cells - inner,
        interior_cells=inner,
        exterior_cells=s.parent.cells - cl.cells,
    )


# JSON interchange -------------------------------------------------------

def complex_to_dict(k: CWComplex) -> dict:
    return {
        "vertices": [{"id": vid, "x": format_fraction(p.x), "y": format_fraction(p.y)} for vid, p in k.vertices],
        "edges": [list(e.vertex_ids) for e in k.edges],
        "triangles": [list(t.vertex_ids) for t in k.triangles],
    }


def complex_from_dict(data: Mapping, *, check: bool = True) -> CWComplex:
    try:
        vertices = [(int(v["id"]), Point2(to_fraction(v["x"]), to_fraction(v["y"]))) for v in data["vertices"]]
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise errors.SceneParseError(f"malformed vertex list: {exc}") from exc
    edges = [tuple(e) for e in data.get("edges", [])]
    triangles = [tuple(t) for t in data.get("triangles", [])]
    if check:
        return build_complex(vertices, edges, triangles)
    return _raw_complex(vertices, edges, triangles)
