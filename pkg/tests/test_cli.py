from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from hnerve.cli import main
from hnerve.figures import bridged_vortex_scene, decagon_scene
from hnerve.presentation import present_cycle

SCENES = Path(__file__).resolve().parents[1] / "scenes"
DECAGON = str(SCENES / "decagon.json")


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out = capsys.readouterr().out
    return code, out


def load_out(out):
    return json.loads(out)


@pytest.fixture
def write(tmp_path):
    def _write(name, data):
        p = tmp_path / name
        p.write_text(data if isinstance(data, str) else json.dumps(data))
        return str(p)

    return _write


def test_validate(capsys, write):
    code, out = run(capsys, "validate", DECAGON)
    assert code == 0 and load_out(out)["counts"]["vertices"] == 10
    dup = write("dup.json", {"vertices": [{"id": 0, "x": 0, "y": 0}, {"id": 1, "x": 0, "y": 0}]})
    code, out = run(capsys, "validate", "--input", dup)
    assert code == 1 and "DuplicatePoint" in out
    assert run(capsys, "validate", write("bad.json", "{oops"))[0] == 2


def test_cycle_commands(capsys, write):
    code, out = run(capsys, "cycle", "validate", DECAGON)
    assert code == 0 and load_out(out)["cycles"][0]["orientation"] == "cw"
    bowtie = write(
        "bowtie.json",
        {
            "vertices": [{"id": i, "x": x, "y": y} for i, (x, y) in enumerate([(0, 0), (1, 1), (1, 0), (0, 1)])],
            "edges": [[0, 1], [1, 2], [2, 3], [3, 0]],
            "cycles": [[0, 1, 2, 3]],
        },
    )
    code, out = run(capsys, "cycle", "validate", bowtie)
    assert code == 1 and load_out(out)["error"] == "SelfIntersecting"
    code, out = run(capsys, "cycle", "barycentric", str(SCENES / "unit_square.json"))
    assert code == 0 and load_out(out)["barycenters"][0] == ["1/2", "1/6"]
    code, out = run(capsys, "cycle", "barycentric", DECAGON, "--format", "svg")
    assert code == 0 and out.startswith("<svg")


def test_triangulate_fan(capsys):
    code, out = run(capsys, "triangulate", "fan", DECAGON)
    data = load_out(out)
    assert code == 0 and len(data["fan"]) == 10 and data["centroid"] == ["1/2", "3/2"]


def test_nerve_detect(capsys):
    code, out = run(capsys, "nerve", "detect", str(SCENES / "nerve_v5.json"))
    assert code == 0 and load_out(out)["witness"] == [5]
    code, out = run(capsys, "nerve", "detect", str(SCENES / "hawaiian_earrings.json"))
    assert code == 0 and load_out(out)["witness"] == [0]
    code, out = run(capsys, "nerve", "detect", str(SCENES / "vortex_bridged.json"))
    assert code == 1 and load_out(out) == {"nerve": False, "reason": "NoCommonCell"}


def test_vortex_build(capsys):
    code, out = run(capsys, "vortex", "build", str(SCENES / "vortex_bridged.json"))
    assert code == 0 and load_out(out)["bridges"] == [[0, 4, 1, 15]]
    code, out = run(capsys, "vortex", "build", str(SCENES / "nerve_v5.json"))
    assert code == 1 and load_out(out)["error"] == "NotNested"


def test_present_and_verify(capsys, write):
    code, out = run(capsys, "present", DECAGON)
    data = load_out(out)
    assert code == 0 and data["basis"] == [0] and data["betti"] == 1
    assert run(capsys, "verify", write("p.json", data))[0] == 0
    data["relations"][0][1] = (data["relations"][0][1] + 1) % 10
    code, out = run(capsys, "verify", write("bad.json", data))
    assert code == 1 and load_out(out)["ok"] is False
    code, out = run(capsys, "present", str(SCENES / "vortex_intersecting.json"), "--object", "vortex")
    assert code == 0 and load_out(out)["basis"] == [4]
    code, out = run(capsys, "present", str(SCENES / "hawaiian_earrings.json"), "--object", "vortex-nerve")
    assert code == 0 and load_out(out)["basis"] == [0]
    assert run(capsys, "verify", str(SCENES / "nerve_v5.json"), "--object", "nerve")[0] == 0
    broken = present_cycle(decagon_scene().one_cycles[0]).to_dict()
    broken["relations"] = [r[:3] for r in broken["relations"]]
    assert run(capsys, "verify", write("short.json", broken))[0] == 2


def test_nerve_theorem(capsys, write):
    code, out = run(capsys, "nerve-theorem", "check", str(SCENES / "rects_ring_of_four.json"))
    data = load_out(out)
    assert code == 0 and data["agree"] and data["nerve"]["b1"] == 1 == data["union"]["b1"]
    code, out = run(capsys, "nerve-theorem", "check", str(SCENES / "polygons_hollow_triangle.json"))
    assert code == 0 and load_out(out)["nerve"]["b1"] == 1 and load_out(out)["agree"] is None
    a = run(capsys, "nerve-theorem", "check", "--seed", "7")
    assert a[0] == 0 and a == run(capsys, "nerve-theorem", "check", "--seed", "7")
    assert run(capsys, "nerve-theorem", "check", write("flat.json", {"rectangles": [[0, 0, 0, 1]]}))[0] == 1
    assert run(capsys, "nerve-theorem", "check", write("short.json", {"rectangles": [[0, 0, 1]]}))[0] == 2


def test_persist(capsys, write, tmp_path):
    frames = str(SCENES / "frames_reappearing.json")
    code, out = run(capsys, "persist", frames)
    assert code == 0 and load_out(out)["tracks"][0]["intervals"] == [[0, 5], [8, 10]]
    target = tmp_path / "report.json"
    assert run(capsys, "persist", frames, "--tolerance", "1", "--output", str(target))[0] == 0
    assert json.loads(target.read_text())["tolerance"] == 1
    assert run(capsys, "persist", frames, "--tolerance", "-1")[0] == 2
    backwards = write("back.json", {"frames": [{"index": 2, "shapes": []}, {"index": 1, "shapes": []}]})
    assert run(capsys, "persist", backwards)[0] == 1
    assert run(capsys, "persist", write("nolist.json", {"frames": 3}))[0] == 2


def test_render(capsys, write):
    code, out = run(capsys, "render", DECAGON)
    assert code == 0 and out.count("<polyline") == 10
    code, out = run(capsys, "render", DECAGON, "--format", "json")
    assert code == 0 and len(load_out(out)["vertices"]) == 10
    assert run(capsys, "render", write("missing_vertices.json", {"cycles": []}))[0] == 2


def test_usage_errors_exit_two(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "render", "/nonexistent/scene.json")[0] == 2


def test_module_entry_point_reads_stdin():
    proc = subprocess.run(
        [sys.executable, "-m", "hnerve", "nerve", "detect"],
        input=bridged_vortex_scene().to_json(),
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["reason"] == "NoCommonCell"
