"""Free group presentations of cycles, nerves, vortexes and vortex nerves.

Every presentation stores the vertex sequences it was built over, so it can
be verified on its own: a relation ``(target, k, g, cycle)`` claims that
walking ``k`` steps from generator ``g`` along that cycle lands on
``target``. The Betti number is the size of the basis.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from . import errors
from .cycles import HomotopicCycle, OneCycle
from .geometry import Point2, format_fraction, to_fraction
from .nerves import HomotopicVortex, NerveComplex, Vortex, VortexNerve

__all__ = [
    "Basis",
    "FreeGroupPresentation",
    "Generator",
    "Relation",
    "VerificationReport",
    "present_cycle",
    "present_nerve",
    "present_vortex",
    "present_vortex_nerve",
    "presentation_from_dict",
    "verify_presentation",
]


@dataclass(frozen=True)
class Generator:
    vertex: int
    cycles: tuple[int, ...]  # indices of the cycles anchored at this vertex
    point: Point2 | None = None


@dataclass(frozen=True)
class Basis:
    generators: tuple[Generator, ...]

    @property
    def vertices(self) -> list[int]:
        return [g.vertex for g in self.generators]

    def __len__(self):
        return len(self.generators)


@dataclass(frozen=True)
class Relation:
    target: int
    k: int
    generator: int  # index into the basis
    cycle: int  # index into FreeGroupPresentation.cycles


@dataclass(frozen=True)
class FreeGroupPresentation:
    cycles: tuple[tuple[int, ...], ...]
    basis: Basis
    relations: tuple[Relation, ...]
    betti: int

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for c in self.cycles for v in c)

    def relation_for(self, vertex: int) -> Relation | None:
        return next((r for r in self.relations if r.target == vertex), None)

    def to_dict(self) -> dict:
        return {
            "basis": [g.vertex for g in self.basis.generators],
            "generators": [
                {
                    "vertex": g.vertex,
                    "cycles": list(g.cycles),
                    **({"x": format_fraction(g.point.x), "y": format_fraction(g.point.y)} if g.point else {}),
                }
                for g in self.basis.generators
            ],
            "relations": [[r.target, r.k, r.generator, r.cycle] for r in self.relations],
            "cycles": [list(c) for c in self.cycles],
            "betti": self.betti,
            "tie_break": "lexicographically least (x, y) among qualifying vertices",
        }


def presentation_from_dict(data: Mapping) -> FreeGroupPresentation:
    try:
        cycles = tuple(tuple(int(v) for v in c) for c in data["cycles"])
        gens_raw = data.get("generators")
        if gens_raw is None:
            gens = tuple(Generator(int(v), ()) for v in data["basis"])
        else:
            gens = tuple(
                Generator(
                    int(g["vertex"]),
                    tuple(int(c) for c in g.get("cycles", ())),
                    Point2(to_fraction(g["x"]), to_fraction(g["y"])) if "x" in g else None,
                )
                for g in gens_raw
            )
        relations = []
        for r in data["relations"]:
            if len(r) == 3:
                raise errors.SceneParseError("relations need a cycle index: [target, k, generator, cycle]")
            t, k, g, c = (int(x) for x in r)
            relations.append(Relation(t, k, g, c))
        betti = int(data["betti"])
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, errors.SceneParseError):
            raise
        raise errors.SceneParseError(f"malformed presentation: {exc}") from exc
    return FreeGroupPresentation(cycles, Basis(gens), tuple(relations), betti)


def _as_cycle(c) -> OneCycle:
    return c.base if isinstance(c, HomotopicCycle) else c


def _assemble(cycles: Sequence[OneCycle], anchors: Sequence[int]) -> FreeGroupPresentation:
    """Relations walking inside each cycle from that cycle's anchor."""
    k = cycles[0].complex
    anchor_set = sorted(set(anchors), key=lambda v: (k.point(v), v))
    index = {v: i for i, v in enumerate(anchor_set)}
    gens = tuple(
        Generator(v, tuple(i for i, a in enumerate(anchors) if a == v), k.point(v)) for v in anchor_set
    )
    relations = []
    covered = set(anchor_set)
    for ci, (cyc, anchor) in enumerate(zip(cycles, anchors)):
        seq = cyc.vertex_seq
        if anchor not in seq:
            raise errors.WitnessNotOnCycle(f"anchor {anchor} is not on cycle {ci}")
        start = seq.index(anchor)
        n = len(seq)
        for step in range(1, n):
            v = seq[(start + step) % n]
            if v in covered:
                continue
            covered.add(v)
            relations.append(Relation(v, step, index[anchor], ci))
    return FreeGroupPresentation(
        tuple(c.vertex_seq for c in cycles), Basis(gens), tuple(relations), len(gens)
    )


def _least(k, vertices: Iterable[int]) -> int:
    return min(vertices, key=lambda v: (k.point(v), v))


def present_cycle(c: OneCycle | HomotopicCycle) -> FreeGroupPresentation:
    """One generator ``g = v_0``; every other ``v_i`` is ``i g``."""
    c = _as_cycle(c)
    return _assemble([c], [c.vertex_seq[0]])


def present_nerve(nv: NerveComplex) -> FreeGroupPresentation:
    """Anchor every member cycle at the least witness vertex, so all share it."""
    cycles = [_as_cycle(m) for m in nv.members]
    if not all(isinstance(c, OneCycle) for c in cycles):
        raise TypeError("present_nerve expects a nerve whose members are cycles")
    if len(cycles) == 1:
        return present_cycle(cycles[0])
    witness = nv.witness_vertices
    if not witness:
        raise errors.WitnessNotOnCycle("nerve witness holds no vertex")
    anchor = _least(cycles[0].complex, witness)
    return _assemble(cycles, [anchor] * len(cycles))


def _vortex_anchors(v: Vortex, preferred: frozenset[int], chosen: set[int]) -> list[int]:
    k = v.complex
    anchors = []
    m = len(v.cycles)
    for i, cyc in enumerate(v.cycles):
        verts = cyc.vertex_set
        shared = frozenset().union(*(v.shared_vertices(i, j) for j in range(m) if j != i)) if m > 1 else frozenset()
        ends = frozenset(e for b in v.bridges if (e := b.endpoint_on(i)) is not None)
        for pool in (verts & preferred, verts & chosen, shared, ends):
            if pool:
                a = _least(k, pool)
                break
        else:
            a = cyc.vertex_seq[0]
        anchors.append(a)
        chosen.add(a)
    return anchors


def _as_vortex(v) -> Vortex:
    return v.base if isinstance(v, HomotopicVortex) else v


def present_vortex(v: Vortex | HomotopicVortex) -> FreeGroupPresentation:
    """Anchors sit on shared vertices where cycles meet, else on bridge ends.

    Cycles are visited outermost first; a cycle passing through an anchor
    already chosen reuses it, which keeps the basis small.
    """
    v = _as_vortex(v)
    if len(v.cycles) == 1:
        return present_cycle(v.cycles[0])
    return _assemble(list(v.cycles), _vortex_anchors(v, frozenset(), set()))


def present_vortex_nerve(nv: VortexNerve) -> FreeGroupPresentation:
    """Witness vertices take priority as anchors, unifying the member vortexes."""
    if len(nv.vortexes) == 1:
        v = nv.vortexes[0]
        cycles = list(v.cycles)
        return _assemble(cycles, _vortex_anchors(v, nv.witness, set()))
    chosen: set[int] = set()
    cycles, anchors = [], []
    for v in nv.vortexes:
        cycles.extend(v.cycles)
        anchors.extend(_vortex_anchors(v, nv.witness, chosen))
    return _assemble(cycles, anchors)


@dataclass(frozen=True)
class VerificationReport:
    issues: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.issues

    def to_dict(self) -> dict:
        return {"ok": self.ok, "issues": list(self.issues)}


def _step(seq: Sequence[int], start: int, k: int) -> int:
    # one vertex at a time, independent of the modular shortcut
    i = seq.index(start)
    n = len(seq)
    direction = 1 if k >= 0 else -1
    for _ in range(abs(k)):
        i = (i + direction) % n
    return seq[i]


def verify_presentation(p: FreeGroupPresentation) -> VerificationReport:
    """Re-walk every relation and check coverage and the Betti count."""
    issues = []
    gens = p.basis.vertices
    if not gens:
        issues.append("basis is empty")
    if len(set(gens)) != len(gens):
        issues.append("basis repeats a generator")
    if p.betti != len(gens):
        issues.append(f"betti {p.betti} differs from basis size {len(gens)}")
    targets: dict[int, int] = {}
    for idx, r in enumerate(p.relations):
        label = f"relation {idx} ({r.target} = {r.k} g{r.generator} on cycle {r.cycle})"
        if not 0 <= r.cycle < len(p.cycles):
            issues.append(f"{label}: no such cycle")
            continue
        if not 0 <= r.generator < len(gens):
            issues.append(f"{label}: no such generator")
            continue
        seq = p.cycles[r.cycle]
        g = gens[r.generator]
        if g not in seq:
            issues.append(f"{label}: generator {g} is not on the cycle")
            continue
        reached = _step(seq, g, r.k)
        if reached != r.target:
            issues.append(f"{label}: walking reaches {reached}")
        targets[r.target] = targets.get(r.target, 0) + 1
    for v, count in targets.items():
        if count > 1:
            issues.append(f"vertex {v} is the target of {count} relations")
        if v in gens:
            issues.append(f"vertex {v} is both a generator and a relation target")
    for v in sorted(p.vertices):
        if v not in gens and v not in targets:
            issues.append(f"vertex {v} is neither a generator nor a relation target")
    return VerificationReport(tuple(issues))
