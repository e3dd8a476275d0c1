from __future__ import annotations

import dataclasses
import random

import pytest

from hnerve import errors
from hnerve.cw import build_complex
from hnerve.cycles import construct_cycle, lift_cycle
from hnerve.figures import (
    bridged_vortex_scene,
    decagon_scene,
    hawaiian_scene,
    intersecting_vortex_scene,
    nerve_scene,
)
from hnerve.generators import random_cycle, random_nerve_scene
from hnerve.nerves import NerveComplex, build_vortex, detect_nerve, detect_vortex_nerve
from hnerve.presentation import (
    Relation,
    present_cycle,
    present_nerve,
    present_vortex,
    present_vortex_nerve,
    presentation_from_dict,
    verify_presentation,
)


def ring(ids):
    return [(ids[i], ids[(i + 1) % len(ids)]) for i in range(len(ids))]


def walk_table(seq, start):
    """Vertex reached after k forward steps from ``start``, k in [0, n)."""
    i = seq.index(start)
    return {seq[(i + k) % len(seq)]: k for k in range(len(seq))}


def test_decagon_presentation():
    p = present_cycle(lift_cycle(decagon_scene().one_cycles[0]))
    assert p.basis.vertices == [0]
    assert p.relation_for(3) == Relation(3, 3, 0, 0)
    assert p.betti == 1 and len(p.relations) == 9
    assert verify_presentation(p).ok


def test_triangle_and_general_cycle_counts():
    rng = random.Random(0)
    for n in range(3, 13):
        p = present_cycle(random_cycle(rng, n))
        assert p.betti == 1 and len(p.relations) == n - 1
        assert all(0 <= r.k < n for r in p.relations)


def test_shared_vertex_nerve_unifies_to_one_generator():
    cycles = nerve_scene().one_cycles
    p = present_nerve(detect_nerve(cycles))
    assert p.basis.vertices == [5] and p.betti == 1
    for ci, c in enumerate(cycles):
        table = walk_table(c.vertex_seq, 5)
        for r in p.relations:
            if r.cycle == ci:
                assert table[r.target] == r.k


def test_single_member_nerve_is_the_cycle_presentation():
    c = decagon_scene().one_cycles[0]
    assert present_nerve(detect_nerve([c])) == present_cycle(c)


def test_two_shared_vertices_pick_the_least():
    pts = [(0, 0), (4, 0), (4, 4), (0, 4), (2, 2)]
    k = build_complex(enumerate(pts), ring([0, 1, 2, 3]) + [(0, 4), (4, 2)])
    a = construct_cycle(k, [0, 1, 2, 4])
    b = construct_cycle(k, [0, 4, 2, 3])
    nv = detect_nerve([a, b])
    assert nv.witness_vertices == {0, 2, 4}
    p = present_nerve(nv)
    assert p.basis.vertices == [0] and verify_presentation(p).ok


def test_witness_must_hold_a_vertex():
    c = decagon_scene().one_cycles[0]
    with pytest.raises(errors.WitnessNotOnCycle):
        present_nerve(NerveComplex((c, c), frozenset()))


def test_bridged_vortex_has_two_generators():
    s = bridged_vortex_scene()
    p = present_vortex(s.vortex().lift())
    assert sorted(p.basis.vertices) == [4, 15]
    assert p.betti == 2 and verify_presentation(p).ok


def test_intersecting_vortex_minimal_basis():
    p = present_vortex(intersecting_vortex_scene().vortex())
    assert p.basis.vertices == [4] and p.betti == 1


def test_degenerate_vortex():
    v = decagon_scene().vortex()
    assert present_vortex(v).betti == 1


def test_hawaiian_vortex_nerve():
    h = hawaiian_scene()
    p = present_vortex_nerve(detect_vortex_nerve(h.vortex_list()))
    assert p.basis.vertices == [0] and p.betti == 1
    assert p.vertices == {v for c in p.cycles for v in c} == set(range(15))
    assert verify_presentation(p).ok


def test_single_vortex_nerve_matches_vortex():
    v = intersecting_vortex_scene().vortex()
    assert present_vortex_nerve(detect_vortex_nerve([v])) == present_vortex(v)


def test_single_cycle_vortexes_meeting_at_v0():
    h = hawaiian_scene()
    vortexes = [entry.build() for entry in h.vortexes]
    singles = [build_vortex([v.cycles[0]], allow_single=True) for v in vortexes]
    p = present_vortex_nerve(detect_vortex_nerve(singles))
    assert p.basis.vertices == [0] and p.betti == 1


def test_verification_catches_corruption():
    p = present_cycle(decagon_scene().one_cycles[0])
    bad = dataclasses.replace(p, relations=(dataclasses.replace(p.relations[2], k=5),) + p.relations[1:])
    report = verify_presentation(bad)
    assert not report.ok and any("relation 0" in i for i in report.issues)
    missing = dataclasses.replace(p, relations=p.relations[1:])
    assert any("neither a generator" in i for i in verify_presentation(missing).issues)
    wrong_betti = dataclasses.replace(p, betti=2)
    assert any("betti" in i for i in verify_presentation(wrong_betti).issues)


def test_rotation_changes_coefficients_only():
    rng = random.Random(6)
    for _ in range(20):
        c = random_cycle(rng, rng.randint(3, 12))
        p = present_cycle(c)
        for shift in range(1, c.n):
            q = present_cycle(c.rotated(shift))
            assert q.betti == p.betti and verify_presentation(q).ok


def test_presentations_are_deterministic_and_round_trip():
    rng = random.Random(1)
    s = random_nerve_scene(rng)
    p = present_nerve(detect_nerve(s.one_cycles))
    again = present_nerve(detect_nerve(s.one_cycles))
    assert p == again
    assert presentation_from_dict(p.to_dict()) == p
