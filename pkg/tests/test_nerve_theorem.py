from __future__ import annotations

import itertools
import random

import numpy as np
import pytest
from scipy import ndimage

from hnerve import errors
from hnerve.generators import random_rectangles, random_ring
from hnerve.nerve_theorem import (
    AbstractSimplicialComplex,
    ConvexPolygon,
    Rect,
    bodies_from_dict,
    cech_nerve,
    check_nerve_theorem,
    common_intersection,
    complex_from_simplices,
    gf2_rank,
    invariants_of_complex,
    invariants_of_union,
    occupancy_grid,
)

from oracles import brute_rect_nerve, flood_fill_union

OVERLAP = [Rect(0, 0, 2, 2), Rect(1, 1, 3, 3)]
RING = [Rect(0, 0, 4, 1), Rect(3, 0, 4, 4), Rect(0, 3, 4, 4), Rect(0, 0, 1, 4)]
DISJOINT = [Rect(0, 0, 1, 1), Rect(2, 2, 3, 3)]
# three convex bodies around a triangular hole, pairwise touching at corners
HOLLOW = [
    ConvexPolygon([(0, 0), (4, 0), (2, 1)]),
    ConvexPolygon([(4, 0), (3, 4), ("5/2", "3/2")]),
    ConvexPolygon([(0, 0), (3, 4), ("3/2", "3/2")]),
]


def test_body_validation():
    with pytest.raises(errors.NotRectangle):
        Rect(0, 0, 0, 1)
    with pytest.raises(errors.NotConvex):
        ConvexPolygon([(0, 0), (2, 0), (1, 1), (2, 2), (0, 2)])
    with pytest.raises(errors.NotConvex):
        # pentagram: every turn has the same sign, but it winds twice
        ConvexPolygon([(0, 3), (2, -3), (-3, 1), (3, 1), (-2, -3)])


def test_overlap_pair_is_an_edge():
    assert cech_nerve(OVERLAP).simplices == {(0,), (1,), (0, 1)}


def test_triple_overlap_is_a_filled_triangle():
    rects = [Rect(0, 0, 3, 3), Rect(1, 1, 4, 4), Rect(2, 0, 5, 3)]
    assert cech_nerve(rects).simplices == brute_rect_nerve(rects)
    assert (0, 1, 2) in cech_nerve(rects).simplices


def test_convex_polygons_realize_the_hollow_triangle():
    nerve = cech_nerve(HOLLOW)
    assert nerve.simplices == {(0,), (1,), (2,), (0, 1), (0, 2), (1, 2)}
    assert common_intersection(HOLLOW) == []
    assert invariants_of_complex(nerve).pair == (1, 1)


def test_rectangles_cannot_form_a_ring_of_three():
    # axis-aligned boxes have the Helly number 2: pairwise meeting forces a common point
    rng = random.Random(0)
    for _ in range(2000):
        rects = random_rectangles(rng, 3, box=12, max_side=6)
        nerve = brute_rect_nerve(rects)
        if all(pair in nerve for pair in itertools.combinations(range(3), 2)):
            assert (0, 1, 2) in nerve
        assert flood_fill_union(rects)[1] == 0


def test_simplicial_invariants_by_hand():
    edge = complex_from_simplices([(0, 1)])
    hollow = complex_from_simplices([(0, 1), (1, 2), (0, 2)])
    filled = complex_from_simplices([(0, 1, 2)])
    assert invariants_of_complex(edge).to_dict() == {"b0": 1, "b1": 0, "b2": 0, "euler": 1}
    assert invariants_of_complex(hollow).to_dict() == {"b0": 1, "b1": 1, "b2": 0, "euler": 0}
    assert invariants_of_complex(filled).to_dict() == {"b0": 1, "b1": 0, "b2": 0, "euler": 1}
    sphere = complex_from_simplices(itertools.combinations(range(4), 3))
    assert invariants_of_complex(sphere).b2 == 1


def test_gf2_rank_matches_hand_elimination():
    # boundary of the hollow triangle: each edge hits two of three vertices
    assert gf2_rank([0b011, 0b110, 0b101]) == 2
    assert gf2_rank([0b1, 0b1]) == 1
    assert gf2_rank([]) == 0


def test_union_hand_cases():
    assert invariants_of_union(OVERLAP).pair == (1, 0)
    assert invariants_of_union(RING).pair == (1, 1)
    assert invariants_of_union(DISJOINT).pair == (2, 0)
    assert invariants_of_union([Rect(0, 0, 1, 1), Rect(1, 1, 2, 2)]).pair == (1, 0)
    with pytest.raises(errors.NotRectangle):
        invariants_of_union(HOLLOW)
    with pytest.raises(errors.NotRectangle):
        invariants_of_union([Rect(0, 0, "1/2", 1)])


def test_hand_cases_agree():
    for rects, pair in ((OVERLAP, (1, 0)), (RING, (1, 1)), (DISJOINT, (2, 0))):
        r = check_nerve_theorem(rects)
        assert r.agree and r.nerve_invariants.pair == r.union_invariants.pair == pair
        assert "necessary condition" in r.to_dict()["note"]


def test_nerve_matches_brute_force_subsets():
    rng = random.Random(12)
    for _ in range(200):
        rects = random_rectangles(rng, rng.randint(1, 7))
        nerve = cech_nerve(rects)
        assert nerve.simplices == brute_rect_nerve(rects)
        assert nerve.is_downward_closed()
        assert cech_nerve(rects, helly=True) == nerve


def test_union_matches_flood_fill_and_scipy_labels():
    rng = random.Random(13)
    for _ in range(150):
        rects = random_rectangles(rng, rng.randint(1, 8), max_side=rng.choice((3, 6)))
        if rng.random() < 0.3:
            rects += random_ring(rng)
        inv = invariants_of_union(rects)
        assert inv.pair == flood_fill_union(rects)
        grid, _ = occupancy_grid(rects)
        holes = ndimage.label(~np.pad(grid, 1))[1] - 1
        assert inv.b1 == holes


def test_removing_a_body_never_adds_simplices():
    rng = random.Random(14)
    for _ in range(60):
        rects = random_rectangles(rng, rng.randint(2, 7))
        full = cech_nerve(rects)
        drop = rng.randrange(len(rects))
        rest = [r for i, r in enumerate(rects) if i != drop]
        relabel = [i for i in range(len(rects)) if i != drop]
        smaller = {tuple(relabel[i] for i in s) for s in cech_nerve(rest).simplices}
        assert smaller <= full.simplices


def test_euler_consistency():
    rng = random.Random(15)
    for _ in range(100):
        inv = invariants_of_complex(cech_nerve(random_rectangles(rng, rng.randint(1, 8))))
        assert inv.euler == inv.b0 - inv.b1 + inv.b2


def test_polygon_nerves_against_subset_intersection():
    rng = random.Random(16)
    for _ in range(40):
        polys = []
        for _ in range(rng.randint(2, 5)):
            cx, cy, r = rng.randint(0, 10), rng.randint(0, 10), rng.randint(2, 5)
            polys.append(ConvexPolygon([(cx - r, cy), (cx, cy - r), (cx + r, cy), (cx, cy + r)]))
        nerve = cech_nerve(polys)
        for size in range(1, len(polys) + 1):
            for combo in itertools.combinations(range(len(polys)), size):
                meets = bool(common_intersection([polys[i] for i in combo]))
                assert (combo in nerve.simplices) == meets


def test_bodies_parse():
    bodies = bodies_from_dict({"rectangles": [[0, 0, 1, 1]], "polygons": [[[0, 0], [1, 0], ["1/2", 1]]]})
    assert isinstance(bodies[0], Rect) and isinstance(bodies[1], ConvexPolygon)
    with pytest.raises(errors.SceneParseError):
        bodies_from_dict({"rectangles": [[0, 0, 1]]})
    with pytest.raises(errors.SceneParseError):
        bodies_from_dict([])


def test_downward_closure_check():
    assert not AbstractSimplicialComplex(2, frozenset({(0, 1), (0,)})).is_downward_closed()
