from __future__ import annotations

import json
import random
from pathlib import Path

import pytest

from hnerve import errors
from hnerve.figures import (
    bridged_vortex_scene,
    decagon_scene,
    hawaiian_scene,
    intersecting_vortex_scene,
    nerve_scene,
    unit_square_scene,
)
from hnerve.generators import random_frames
from hnerve.persistence import (
    FrameRecord,
    ShapeSignature,
    frames_from_dict,
    frames_to_dict,
    match_signatures,
    signature,
    track_persistence,
)

SCENES = Path(__file__).resolve().parents[1] / "scenes"
POOL = [decagon_scene(), unit_square_scene(), nerve_scene(), bridged_vortex_scene(), intersecting_vortex_scene(), hawaiian_scene()]


def reappearing():
    d = decagon_scene()
    return [FrameRecord(i, (d,) if i < 5 or i >= 8 else ()) for i in range(10)]


def test_figure_signatures():
    assert signature(decagon_scene()) == ShapeSignature(1, 1, 0)
    assert signature(nerve_scene()) == ShapeSignature(1, 2, 1)
    assert signature(bridged_vortex_scene()) == ShapeSignature(2, 2, 0)
    assert signature(intersecting_vortex_scene()) == ShapeSignature(1, 2, 1)
    assert signature(hawaiian_scene()) == ShapeSignature(1, 4, 1)
    assert signature(decagon_scene().to_dict()) == signature(decagon_scene())


def test_matching_uses_betti_within_tolerance_and_exact_cycle_count():
    a, b = ShapeSignature(1, 2), ShapeSignature(2, 2)
    assert not match_signatures(a, b) and match_signatures(a, b, 1)
    assert not match_signatures(a, ShapeSignature(1, 3), 5)


def test_appear_disappear_reappear():
    result = track_persistence(reappearing())
    assert len(result.tracks) == 1
    assert result.tracks[0].intervals == [[0, 5], [8, 10]]
    assert result.to_dict()["tracks"][0]["reappearances"] == 1


def test_corpus_frame_file_matches_the_construction():
    frames = frames_from_dict(json.loads((SCENES / "frames_reappearing.json").read_text()))
    assert [t.intervals for t in track_persistence(frames).tracks] == [[[0, 5], [8, 10]]]


def test_empty_sequence():
    assert track_persistence([]).tracks == ()


def test_two_distinct_shapes_get_two_tracks():
    frames = [FrameRecord(i, (decagon_scene(), bridged_vortex_scene())) for i in range(4)]
    tracks = track_persistence(frames).tracks
    assert sorted(t.signature.betti for t in tracks) == [1, 2]
    assert all(t.intervals == [[0, 4]] for t in tracks)


def test_gaps_in_frame_indices_are_not_absences():
    d = decagon_scene()
    result = track_persistence([FrameRecord(0, (d,)), FrameRecord(3, (d,)), FrameRecord(4, ())])
    assert result.tracks[0].intervals == [[0, 4]]


def test_frame_indices_must_increase():
    with pytest.raises(errors.InvalidFrames):
        track_persistence([FrameRecord(2, ()), FrameRecord(2, ())])
    with pytest.raises(errors.InvalidFrames):
        frames_from_dict({"frames": [{"index": 3, "shapes": []}, {"index": 1, "shapes": []}]})
    with pytest.raises(errors.SceneParseError):
        frames_from_dict({"frames": [{"shapes": []}]})
    with pytest.raises(ValueError):
        track_persistence([], tolerance=-1)


def random_sequences(seed, count):
    rng = random.Random(seed)
    return [random_frames(rng, POOL) for _ in range(count)]


def test_intervals_partition_and_shapes_are_conserved():
    for frames in random_sequences(21, 100):
        result = track_persistence(frames)
        for t in result.tracks:
            flat = [x for iv in t.intervals for x in iv]
            assert flat == sorted(flat)
            assert all(b < d for b, d in t.intervals)
        for f in frames:
            assert len(f.shapes) == sum(t.contains(f.frame_index) for t in result.tracks)
        for (idx, sigs, ids), f in zip(result.assignments, frames):
            assert len(set(ids)) == len(ids) == len(f.shapes)
            assert all(result.tracks[t].signature.cycle_count == s.cycle_count for s, t in zip(sigs, ids))


def test_report_is_deterministic_and_frames_round_trip():
    for frames in random_sequences(22, 10):
        assert track_persistence(frames).to_json() == track_persistence(frames).to_json()
        assert frames_from_dict(json.loads(json.dumps(frames_to_dict(frames)))) == frames


def test_raising_tolerance_never_adds_tracks():
    for frames in random_sequences(23, 100):
        counts = [len(track_persistence(frames, tol).tracks) for tol in range(4)]
        assert counts == sorted(counts, reverse=True)
