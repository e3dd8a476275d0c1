"""Seeded random inputs for the property suites and the CLI ``--seed`` flag.

Every generator takes a :class:`random.Random` and returns exact objects;
rejection sampling is used wherever rounding to the integer grid might
break a required property, so callers can rely on the outputs being valid.
"""
from __future__ import annotations

import math
import random
from typing import Callable, TypeVar

import numpy as np
from scipy.spatial import Delaunay

from . import errors
from .cw import CWComplex, SubComplex, build_complex
from .cycles import OneCycle, construct_cycle
from .geometry import Point2, orient
from .nerve_theorem import Rect
from .nerves import BridgeEdge, Vortex, build_vortex, fan_triangulate
from .scene import CycleEntry, Scene, VortexEntry

T = TypeVar("T")


def _retry(make: Callable[[], T], tries: int = 200) -> T:
    last = None
    for _ in range(tries):
        try:
            return make()
        except errors.TopologyError as exc:
            last = exc
    raise RuntimeError(f"generator gave up after {tries} attempts: {last}")


def _ring(ids):
    return [(ids[i], ids[(i + 1) % len(ids)]) for i in range(len(ids))]


def _polar(rng: random.Random, n: int, rmin: float, rmax: float, scale: int) -> list[Point2]:
    # one jittered angle per sector keeps every gap under pi, so the polygon winds once
    angles = [(i + rng.uniform(0.15, 0.85)) * 2 * math.pi / n for i in range(n)]
    pts = []
    for a in angles:
        r = rng.uniform(rmin, rmax)
        pts.append(Point2(round(scale * r * math.cos(a)), round(scale * r * math.sin(a))))
    return pts


def random_cycle(rng: random.Random, n: int, *, scale: int = 40, star: bool = False) -> OneCycle:
    """A simple n-gon on integer points, star-shaped about its origin.

    With ``star`` the vertex mean itself must see every edge, which is what
    the fan triangulation requires.
    """

    def make():
        pts = _polar(rng, n, 0.35 if not star else 0.6, 1.0, scale)
        k = build_complex(enumerate(pts), _ring(list(range(n))))
        c = construct_cycle(k, range(n), normalize=rng.random() < 0.5)
        if star:
            fan_triangulate(c)
        return c

    return _retry(make)


def random_complex(rng: random.Random, n_points: int = 12, box: int = 30) -> CWComplex:
    """Delaunay triangulation of random integer points, all cells kept."""

    def make():
        raw = {(rng.randint(0, box), rng.randint(0, box)) for _ in range(n_points)}
        pts = sorted(raw)
        if len(pts) < 3:
            raise errors.DegenerateArea("too few points")
        tri = Delaunay(np.array(pts, dtype=float))
        p2 = [Point2(*p) for p in pts]
        tris = [tuple(int(v) for v in s) for s in tri.simplices if orient(*(p2[int(v)] for v in s)) != 0]
        return build_complex(enumerate(pts), (), tris, add_missing_faces=True)

    return _retry(make)


def random_subcomplex(rng: random.Random, k: CWComplex) -> SubComplex:
    cells = [c for c in sorted(k.cells) if rng.random() < 0.3]
    if not cells:
        cells = [rng.choice(sorted(k.cells))]
    return SubComplex(k, cells)


def random_rectangles(rng: random.Random, count: int, box: int = 20, max_side: int = 8) -> list[Rect]:
    out = []
    for _ in range(count):
        w, h = rng.randint(1, max_side), rng.randint(1, max_side)
        x0, y0 = rng.randint(0, box - w), rng.randint(0, box - h)
        out.append(Rect(x0, y0, x0 + w, y0 + h))
    return out


def random_ring(rng: random.Random, box: int = 20) -> list[Rect]:
    """Four bars around a hole, with random thickness and placement."""
    x0, y0 = rng.randint(0, 6), rng.randint(0, 6)
    x1, y1 = rng.randint(x0 + 5, box), rng.randint(y0 + 5, box)
    t = rng.randint(1, 2)
    return [
        Rect(x0, y0, x1, y0 + t),
        Rect(x1 - t, y0, x1, y1),
        Rect(x0, y1 - t, x1, y1),
        Rect(x0, y0, x0 + t, y1),
    ]


def _petal(rng, hub: Point2, span, rmin, rmax, m, scale):
    lo, hi = span
    pts = []
    for i in range(m):
        a = lo + (i + rng.uniform(0.2, 0.8)) * (hi - lo) / m
        r = rng.uniform(rmin, rmax)
        pts.append(Point2(round(hub.x + scale * r * math.cos(a)), round(hub.y + scale * r * math.sin(a))))
    return pts


def random_nerve_scene(rng: random.Random, petals: int | None = None, *, scale: int = 60) -> Scene:
    """Convex petals fanned around a shared hub vertex ``0``."""

    def make():
        p = petals or rng.randint(2, 5)
        hub = Point2(0, 0)
        width = 2 * math.pi / p
        verts = [(0, hub)]
        cycles = []
        for i in range(p):
            span = (i * width + 0.1, i * width + min(width, math.pi / 2) - 0.1)
            pts = _petal(rng, hub, span, 0.7, 1.0, rng.randint(2, 4), scale)
            ids = list(range(len(verts), len(verts) + len(pts)))
            verts += list(zip(ids, pts))
            cycles.append([0] + ids)
        k = build_complex(verts, [e for c in cycles for e in _ring(c)])
        return Scene(k, tuple(CycleEntry(construct_cycle(k, c)) for c in cycles))

    return _retry(make)


def _vortex_lists(rng, hub_id, hub, span, scale, start_id, depth):
    """Nested petals sharing ``hub``; returns (vertices, cycles)."""
    verts, cycles = [], []
    nid = start_id
    lo, hi = span
    for level in range(depth):
        shrink = (level * (hi - lo)) / (4 * depth)
        r = 1.0 - level * 0.6 / depth
        pts = _petal(rng, hub, (lo + shrink, hi - shrink), r * 0.85, r, rng.randint(2, 4), scale)
        ids = list(range(nid, nid + len(pts)))
        nid += len(pts)
        verts += list(zip(ids, pts))
        cycles.append([hub_id] + ids)
    return verts, cycles


def random_vortex_nerve_scene(rng: random.Random, count: int | None = None, *, scale: int = 80) -> Scene:
    """Several vortexes of nested petals, all passing through vertex ``0``."""

    def make():
        m = count or rng.randint(1, 3)
        width = 2 * math.pi / max(m, 1)
        verts = [(0, Point2(0, 0))]
        groups = []
        for i in range(m):
            span = (i * width + 0.1, i * width + min(width, math.pi / 2) - 0.1)
            vs, cs = _vortex_lists(rng, 0, Point2(0, 0), span, scale, len(verts), rng.randint(2, 3))
            verts += vs
            groups.append(cs)
        k = build_complex(verts, [e for cs in groups for c in cs for e in _ring(c)])
        vortexes = tuple(VortexEntry(tuple(CycleEntry(construct_cycle(k, c)) for c in cs)) for cs in groups)
        for v in vortexes:
            v.build()
        return Scene(k, vortexes=vortexes)

    return _retry(make)


def random_bridged_vortex_scene(rng: random.Random, depth: int | None = None, *, scale: int = 30) -> Scene:
    """Concentric polygons with no shared vertices, one bridge per adjacent pair."""

    def make():
        d = depth or rng.randint(2, 3)
        verts, cycles = [], []
        for level in range(d):
            r = 1.0 - level * 0.7 / d
            # inner rings are inscribed in the circle the next ring out is guaranteed to contain
            pts = _polar(rng, rng.randint(3, 6) if level == 0 else rng.randint(3, 5), r * 0.95, r, scale)
            ids = list(range(len(verts), len(verts) + len(pts)))
            verts += list(zip(ids, pts))
            cycles.append(ids)
        bridges, extra = [], []
        for i in range(d - 1):
            a, b = rng.choice(cycles[i]), rng.choice(cycles[i + 1])
            bridges.append(BridgeEdge(i, a, i + 1, b))
            extra.append((a, b))
        k = build_complex(verts, [e for c in cycles for e in _ring(c)] + extra)
        entries = tuple(CycleEntry(construct_cycle(k, c)) for c in cycles)
        build_vortex([e.cycle for e in entries], bridges)
        return Scene(k, entries, tuple(bridges))

    return _retry(make)


def random_shared_vortex(rng: random.Random) -> Vortex:
    """Two or three nested petals through one hub: an intersecting vortex."""

    def make():
        vs, cs = _vortex_lists(rng, 0, Point2(0, 0), (0.2, 1.6), 80, 1, rng.randint(2, 3))
        k = build_complex([(0, Point2(0, 0))] + vs, [e for c in cs for e in _ring(c)])
        return build_vortex([construct_cycle(k, c) for c in cs])

    return _retry(make)


def random_frames(rng: random.Random, pool: list[Scene], n_frames: int | None = None, max_shapes: int = 4):
    """Frame records drawing shapes from ``pool``, with occasional index gaps."""
    from .persistence import FrameRecord

    n = n_frames or rng.randint(1, 12)
    frames = []
    idx = 0
    for _ in range(n):
        shapes = tuple(rng.choice(pool) for _ in range(rng.randint(0, max_shapes)))
        frames.append(FrameRecord(idx, shapes))
        idx += rng.choice((1, 1, 1, 2))
    return frames
