"""Reference scenes with coordinates read off the grid of the classic figures.

The decagon ``v_0 .. v_9`` is traversed exactly as labelled (clockwise in
the plane), so index-based statements such as ``3 v_0 = v_3`` hold on it
verbatim. Its vertex mean is ``c = (1/2, 3/2)``, the spoke hub of the fan.
"""
from __future__ import annotations

from fractions import Fraction as F

from .cw import build_complex
from .cycles import construct_cycle
from .geometry import Point2, mean_point
from .nerves import BridgeEdge
from .scene import CycleEntry, Scene, VortexEntry

DECAGON = [
    Point2(-1, 1),
    Point2(-1, 2),
    Point2(F(-1, 2), 3),
    Point2(F(1, 2), F(7, 2)),
    Point2(F(3, 2), 3),
    Point2(2, 2),
    Point2(2, 1),
    Point2(F(3, 2), 0),
    Point2(F(1, 2), F(-1, 2)),
    Point2(F(-1, 2), 0),
]

# second cycle of the two-cycle nerve, starting after the shared vertex v_5
NERVE_PARTNER = [
    Point2(F(5, 2), 3),
    Point2(F(7, 2), F(7, 2)),
    Point2(F(9, 2), F(7, 2)),
    Point2(F(11, 2), 3),
    Point2(6, 2),
    Point2(5, F(3, 2)),
    Point2(4, F(3, 2)),
    Point2(3, F(3, 2)),
]


def _ring(ids):
    return [(ids[i], ids[(i + 1) % len(ids)]) for i in range(len(ids))]


def unit_square_scene() -> Scene:
    k = build_complex(enumerate([(0, 0), (1, 0), (1, 1), (0, 1)]), _ring([0, 1, 2, 3]))
    return Scene(k, (CycleEntry(construct_cycle(k, [0, 1, 2, 3])),), meta={"name": "unit square"})


def decagon_scene() -> Scene:
    ids = list(range(10))
    k = build_complex(enumerate(DECAGON), _ring(ids))
    cyc = construct_cycle(k, ids, normalize=False)
    return Scene(k, (CycleEntry(cyc, preserve=True),), meta={"name": "decagon 1-cycle"})


def nerve_scene() -> Scene:
    """Decagon and a second cycle meeting it only at ``v_5``."""
    partner_ids = list(range(10, 18))
    verts = list(enumerate(DECAGON)) + list(zip(partner_ids, NERVE_PARTNER))
    second = [5] + partner_ids
    k = build_complex(verts, _ring(list(range(10))) + _ring(second))
    cycles = (
        CycleEntry(construct_cycle(k, range(10), normalize=False), preserve=True),
        CycleEntry(construct_cycle(k, second)),
    )
    return Scene(k, cycles, meta={"name": "two-cycle nerve sharing v5"})


def _fan_and_barycenters():
    c = mean_point(DECAGON)
    n = len(DECAGON)
    bary = [mean_point((DECAGON[i], DECAGON[(i + 1) % n], c)) for i in range(n)]
    return c, bary


def _fan_complex_lists(extra_edges):
    c, bary = _fan_and_barycenters()
    n = len(DECAGON)
    cid = n
    bids = list(range(n + 1, 2 * n + 1))
    verts = list(enumerate(DECAGON)) + [(cid, c)] + list(zip(bids, bary))
    edges = _ring(list(range(n))) + [(i, cid) for i in range(n)]
    tris = [(i, (i + 1) % n, cid) for i in range(n)]
    return verts, edges + extra_edges(bids), tris, bids


def bridged_vortex_scene() -> Scene:
    """Decagon fan with its barycentric cycle, joined by one bridge at ``h_4(0)``."""
    bridge_to = [None]

    def extra(bids):
        bridge_to[0] = bids[4]
        return _ring(bids) + [(4, bids[4])]

    verts, edges, tris, bids = _fan_complex_lists(extra)
    k = build_complex(verts, edges, tris)
    outer = CycleEntry(construct_cycle(k, range(10), normalize=False), preserve=True)
    inner = CycleEntry(construct_cycle(k, bids, normalize=False), kind="barycentric", preserve=True)
    return Scene(
        k,
        (outer, inner),
        (BridgeEdge(0, 4, 1, bridge_to[0]),),
        meta={"name": "homotopic vortex with one bridge"},
    )


def intersecting_vortex_scene() -> Scene:
    """Decagon fan with a barycentric cycle routed through ``h_4(0)``."""

    def extra(bids):
        ring = _ring(bids)
        ring.remove((bids[3], bids[4]))
        return ring + [(bids[3], 4), (4, bids[4])]

    verts, edges, tris, bids = _fan_complex_lists(extra)
    k = build_complex(verts, edges, tris)
    inner_seq = bids[:4] + [4] + bids[4:]
    outer = CycleEntry(construct_cycle(k, range(10), normalize=False), preserve=True)
    inner = CycleEntry(construct_cycle(k, inner_seq, normalize=False), kind="barycentric", preserve=True)
    return Scene(k, (outer, inner), meta={"name": "intersecting nested cycles meeting at h4(0)"})


HAWAIIAN = {
    0: (1, 1),
    1: (0, 2), 2: (-1, F(3, 2)), 3: (-1, F(1, 2)), 4: (0, 0),
    5: (F(-11, 20), F(5, 4)), 6: (F(-11, 20), F(3, 4)), 7: (0, F(1, 2)),
    8: (2, 2), 9: (3, F(3, 2)), 10: (3, F(1, 2)), 11: (2, 0),
    12: (F(51, 20), F(5, 4)), 13: (F(51, 20), F(3, 4)), 14: (2, F(1, 2)),
}
HAWAIIAN_CYCLES = ([0, 1, 2, 3, 4], [0, 5, 6, 7], [0, 8, 9, 10, 11], [0, 12, 13, 14])


def hawaiian_scene() -> Scene:
    """Two earring vortexes, each a pair of nested cycles, all meeting at ``v_0``."""
    edges = [e for cyc in HAWAIIAN_CYCLES for e in _ring(cyc)]
    k = build_complex(HAWAIIAN.items(), edges)
    a, b, a2, b2 = (CycleEntry(construct_cycle(k, c)) for c in HAWAIIAN_CYCLES)
    return Scene(
        k,
        vortexes=(VortexEntry((a, b)), VortexEntry((a2, b2))),
        meta={"name": "Hawaiian earring pair"},
    )


ALL_SCENES = {
    "unit_square": unit_square_scene,
    "decagon": decagon_scene,
    "nerve_v5": nerve_scene,
    "vortex_bridged": bridged_vortex_scene,
    "vortex_intersecting": intersecting_vortex_scene,
    "hawaiian_earrings": hawaiian_scene,
}
