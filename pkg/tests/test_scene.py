from __future__ import annotations

import json
from pathlib import Path

import pytest

from hnerve import errors
from hnerve.cw import validate
from hnerve.figures import ALL_SCENES
from hnerve.persistence import frames_from_dict
from hnerve.scene import load, loads, scene_from_dict

SCENES = Path(__file__).resolve().parents[1] / "scenes"


def test_corpus_round_trips():
    files = sorted(SCENES.glob("*.json"))
    shaped = [p for p in files if "vertices" in json.loads(p.read_text())]
    assert len(shaped) == len(ALL_SCENES)
    for path in shaped:
        s = load(path)
        assert validate(s.complex).ok
        again = loads(s.to_json())
        assert again == s and again.to_json() == s.to_json()


def test_corpus_matches_the_figure_builders():
    for name, make in ALL_SCENES.items():
        assert load(SCENES / f"{name}.json") == make()


def test_frame_file_parses():
    frames = frames_from_dict(json.loads((SCENES / "frames_reappearing.json").read_text()))
    assert [f.frame_index for f in frames] == list(range(10))


@pytest.mark.parametrize(
    "text",
    [
        "{not json",
        "[]",
        '{"cycles": []}',
        '{"vertices": [{"id": 0, "x": 0, "y": 0}], "cycles": [{"kind": "cycle"}]}',
        '{"vertices": [{"id": 0, "x": 0, "y": 0}], "cycles": [["a"]]}',
        '{"vertices": [{"id": 0, "x": 0, "y": 0}], "cycles": [{"cycle": [0], "kind": "spiral"}]}',
        '{"vertices": [{"id": 0, "x": 0, "y": 0}], "bridges": [[0, 1, 2]]}',
    ],
)
def test_malformed_scenes_raise_parse_errors(text):
    with pytest.raises(errors.SceneParseError):
        loads(text)


def test_topology_errors_are_not_parse_errors():
    data = {"vertices": [{"id": 0, "x": 0, "y": 0}, {"id": 1, "x": 1, "y": 0}], "edges": [[0, 7]]}
    with pytest.raises(errors.DanglingReference):
        scene_from_dict(data)
