from __future__ import annotations

import re
import xml.etree.ElementTree as ET

from hnerve.figures import ALL_SCENES, decagon_scene, intersecting_vortex_scene, nerve_scene
from hnerve.render import render_svg, scene_witness
from hnerve.scene import scene_from_dict

NS = "{http://www.w3.org/2000/svg}"


def test_decagon_drawing():
    svg = render_svg(decagon_scene())
    root = ET.fromstring(svg)
    lines = root.findall(f".//{NS}polyline")
    assert len(lines) == 10 and all(p.get("marker-end") for p in lines)
    labels = [t.text for t in root.findall(f".//{NS}text")]
    assert sorted(labels) == sorted(f"v{i}" for i in range(10))
    assert len(root.findall(f".//{NS}circle")) == 10


def test_nerve_witness_is_highlighted():
    root = ET.fromstring(render_svg(nerve_scene()))
    marked = [c.get("data-vertex") for c in root.findall(f".//{NS}circle") if "witness" in c.get("class")]
    assert marked == ["5"]
    assert scene_witness(decagon_scene()) == frozenset()


def test_barycentric_vertices_get_h_labels():
    svg = render_svg(intersecting_vortex_scene())
    assert 'class="barycentric"' in svg
    assert "h4(0)" in svg


def test_empty_scene_is_a_minimal_document():
    svg = render_svg(scene_from_dict({"vertices": []}))
    root = ET.fromstring(svg)
    assert root.tag == f"{NS}svg" and len(root) == 0


def test_rendering_is_byte_stable():
    for make in ALL_SCENES.values():
        a, b = render_svg(make()), render_svg(make())
        assert a == b
        assert not re.search(r"\d\.\d{4,}", a)
