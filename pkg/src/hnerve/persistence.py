"""Betti signatures of frame shapes and their persistence across frames.

Each shape in a frame is reduced to a :class:`ShapeSignature`. Tracks are
grown frame by frame with a greedy matcher: open tracks claim the closest
matching shapes first, then closed tracks may reopen (a reappearance),
and whatever is left starts a new track. Intervals are half-open
``[birth, death)`` in frame-index units.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Mapping, Sequence

from . import errors
from .nerves import build_vortex, detect_nerve, detect_vortex_nerve
from .presentation import present_cycle, present_nerve, present_vortex, present_vortex_nerve
from .scene import Scene, scene_from_dict

__all__ = [
    "FrameRecord",
    "PersistenceTrack",
    "ShapeSignature",
    "TrackingResult",
    "frames_from_dict",
    "match_signatures",
    "signature",
    "track_persistence",
]


@dataclass(frozen=True, order=True)
class ShapeSignature:
    betti: int
    cycle_count: int
    witness_size: int = 0

    def to_dict(self) -> dict:
        return {"betti": self.betti, "cycle_count": self.cycle_count, "witness_size": self.witness_size}


@dataclass(frozen=True)
class FrameRecord:
    frame_index: int
    shapes: tuple[Scene, ...]


def signature(shape: Scene | Mapping) -> ShapeSignature:
    """Reduce a shape to its Betti count and structural sizes.

    A lone cycle is presented directly. Several top-level cycles form a
    vortex when nested; if they are not nested but share a vertex they are
    presented as a cycle nerve. Explicit ``vortexes`` go through the
    vortex-nerve presentation when they share a witness, and otherwise
    contribute the sum of their separate Betti counts.
    """
    if isinstance(shape, Mapping):
        shape = scene_from_dict(shape)
    if shape.vortexes:
        vortexes = shape.vortex_list()
        count = sum(len(v.cycles) for v in vortexes)
        vn = detect_vortex_nerve(vortexes)
        if vn is not None:
            return ShapeSignature(present_vortex_nerve(vn).betti, count, len(vn.witness))
        return ShapeSignature(sum(present_vortex(v).betti for v in vortexes), count, 0)
    cycles = shape.one_cycles
    if not cycles:
        raise errors.EmptyMemberList("shape has no cycles")
    if len(cycles) == 1:
        return ShapeSignature(present_cycle(cycles[0]).betti, 1, 0)
    try:
        v = build_vortex(cycles, shape.bridges)
    except errors.NotNested:
        nv = detect_nerve(cycles)
        if nv is None:
            raise
        return ShapeSignature(present_nerve(nv).betti, len(cycles), len(nv.witness_vertices))
    vn = detect_vortex_nerve([v])
    return ShapeSignature(present_vortex(v).betti, len(cycles), len(vn.witness) if vn else 0)


def match_signatures(a: ShapeSignature, b: ShapeSignature, tolerance: int = 0) -> bool:
    return abs(a.betti - b.betti) <= tolerance and a.cycle_count == b.cycle_count


@dataclass
class PersistenceTrack:
    signature: ShapeSignature
    intervals: list[list[int | None]]

    @property
    def is_open(self) -> bool:
        return bool(self.intervals) and self.intervals[-1][1] is None

    def contains(self, frame: int) -> bool:
        return any(b <= frame < d for b, d in self.intervals)

    def to_dict(self) -> dict:
        return {
            "signature": self.signature.to_dict(),
            "intervals": [list(iv) for iv in self.intervals],
            "reappearances": len(self.intervals) - 1,
        }


@dataclass(frozen=True)
class TrackingResult:
    tracks: tuple[PersistenceTrack, ...]
    tolerance: int
    # per frame: (index, signatures in input order, track id of each shape)
    assignments: tuple[tuple[int, tuple[ShapeSignature, ...], tuple[int, ...]], ...]

    def to_dict(self) -> dict:
        return {
            "tolerance": self.tolerance,
            "tracks": [t.to_dict() for t in self.tracks],
            "frames": [
                {"index": idx, "signatures": [s.to_dict() for s in sigs], "tracks": list(ids)}
                for idx, sigs, ids in self.assignments
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def _greedy(shapes, pending, tracks, candidates, tolerance, assigned):
    pairs = sorted(
        (abs(tracks[t].signature.betti - shapes[s].betti), s, t)
        for s in pending
        for t in candidates
        if match_signatures(tracks[t].signature, shapes[s], tolerance)
    )
    used = set()
    for _, s, t in pairs:
        if s in assigned or t in used:
            continue
        assigned[s] = t
        used.add(t)
    return used


def track_persistence(frames: Sequence[FrameRecord], tolerance: int = 0) -> TrackingResult:
    """Greedy signature tracking; see the module docstring for the order of claims.

    Missing frame indices are not treated as absences: only a frame that is
    listed without the shape closes its track.
    """
    if tolerance < 0:
        raise ValueError("tolerance must be non-negative")
    cache: dict[Scene, ShapeSignature] = {}
    tracks: list[PersistenceTrack] = []
    assignments = []
    last = None
    for fi, frame in enumerate(frames):
        if last is not None and frame.frame_index <= last:
            raise errors.InvalidFrames(f"frame index {frame.frame_index} does not increase past {last}")
        last = frame.frame_index
        sigs = []
        for si, shape in enumerate(frame.shapes):
            if shape not in cache:
                try:
                    cache[shape] = signature(shape)
                except errors.TopologyError as exc:
                    raise type(exc)(f"frame {frame.frame_index}, shape {si}: {exc}") from exc
            sigs.append(cache[shape])
        assigned: dict[int, int] = {}
        order = sorted(range(len(sigs)), key=lambda s: (sigs[s], s))
        open_ids = [t for t, tr in enumerate(tracks) if tr.is_open]
        kept = _greedy(sigs, order, tracks, open_ids, tolerance, assigned)
        closed_ids = [t for t, tr in enumerate(tracks) if not tr.is_open]
        pending = [s for s in order if s not in assigned]
        for t in _greedy(sigs, pending, tracks, closed_ids, tolerance, assigned):
            tracks[t].intervals.append([frame.frame_index, None])
        for s in order:
            if s not in assigned:
                assigned[s] = len(tracks)
                tracks.append(PersistenceTrack(sigs[s], [[frame.frame_index, None]]))
        for t in open_ids:
            if t not in kept:
                tracks[t].intervals[-1][1] = frame.frame_index
        assignments.append((frame.frame_index, tuple(sigs), tuple(assigned[s] for s in range(len(sigs)))))
    for tr in tracks:
        if tr.is_open:
            tr.intervals[-1][1] = last + 1
    return TrackingResult(tuple(tracks), tolerance, tuple(assignments))


def frames_from_dict(data: Any) -> list[FrameRecord]:
    """Parse ``{"frames": [{"index": 0, "shapes": [scene, ...]}, ...]}``."""
    if not isinstance(data, Mapping) or not isinstance(data.get("frames"), list):
        raise errors.SceneParseError("frame file must be an object with a 'frames' list")
    out = []
    for f in data["frames"]:
        if not isinstance(f, Mapping) or "index" not in f:
            raise errors.SceneParseError("each frame needs an 'index'")
        idx = f["index"]
        if not isinstance(idx, int) or isinstance(idx, bool) or idx < 0:
            raise errors.SceneParseError(f"frame index must be a non-negative integer, got {idx!r}")
        shapes = f.get("shapes", [])
        if not isinstance(shapes, list):
            raise errors.SceneParseError(f"frame {idx}: 'shapes' must be a list")
        out.append(FrameRecord(idx, tuple(scene_from_dict(s) for s in shapes)))
    for a, b in zip(out, out[1:]):
        if b.frame_index <= a.frame_index:
            raise errors.InvalidFrames(f"frame index {b.frame_index} does not increase past {a.frame_index}")
    return out


def frames_to_dict(frames: Sequence[FrameRecord]) -> dict:
    return {"frames": [{"index": f.frame_index, "shapes": [s.to_dict() for s in f.shapes]} for f in frames]}
