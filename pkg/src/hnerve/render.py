"""Deterministic SVG drawings of scenes.

Cycles are drawn one polyline per edge with an arrowhead in the direction
of travel, blue for ordinary cycles and magenta for barycentric ones.
Witness vertices of a nerve get the ``witness`` class. Coordinates are
printed with fixed precision, so identical scenes give identical bytes.
"""
from __future__ import annotations

from typing import Iterable
from xml.sax.saxutils import escape

from .nerves import detect_nerve, detect_vortex_nerve
from .scene import Scene

__all__ = ["render_svg", "scene_witness"]

SCALE = 60
PAD = 1
EMPTY_SIZE = 120

STYLE = """\
.triangle { fill: #d9d9d9; stroke: none; }
.edge { stroke: #7f7f7f; stroke-width: 1; }
.bridge { stroke: #2ca02c; stroke-width: 2; stroke-dasharray: 3 3; }
.cycle { stroke: #1f77b4; stroke-width: 2; fill: none; }
.barycentric { stroke: #d62ad6; stroke-width: 2; fill: none; }
.vertex { fill: #000000; }
.witness { fill: #ff7f0e; stroke: #000000; stroke-width: 1.5; }
.label { font-family: sans-serif; font-size: 11px; }"""


def scene_witness(scene: Scene) -> frozenset[int]:
    """Vertices common to every member, or empty when the scene is no nerve."""
    if scene.vortexes:
        vn = detect_vortex_nerve(scene.vortex_list())
        return vn.witness if vn else frozenset()
    if len(scene.cycles) >= 2:
        nv = detect_nerve(scene.one_cycles)
        return nv.witness_vertices if nv else frozenset()
    return frozenset()


def _fmt(v: float) -> str:
    return f"{v:.3f}"


def _all_cycles(scene: Scene):
    yield from scene.cycles
    for v in scene.vortexes:
        yield from v.cycles


def render_svg(scene: Scene, *, witness: Iterable[int] | None = None) -> str:
    k = scene.complex
    if not k.vertex_ids:
        return (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{EMPTY_SIZE}" height="{EMPTY_SIZE}" '
            f'viewBox="0 0 {EMPTY_SIZE} {EMPTY_SIZE}"></svg>\n'
        )
    pts = {vid: k.point(vid) for vid in k.vertex_ids}
    xmin = min(p.x for p in pts.values())
    ymax = max(p.y for p in pts.values())
    w = (max(p.x for p in pts.values()) - xmin + 2 * PAD) * SCALE
    h = (ymax - min(p.y for p in pts.values()) + 2 * PAD) * SCALE

    def xy(vid) -> tuple[str, str]:
        p = pts[vid]
        return _fmt(float((p.x - xmin + PAD) * SCALE)), _fmt(float((ymax - p.y + PAD) * SCALE))

    witness = frozenset(scene_witness(scene) if witness is None else witness)
    entries = list(_all_cycles(scene))
    cycle_edges = {frozenset(e) for c in entries for e in c.cycle.edge_pairs()}
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(float(w))}" height="{_fmt(float(h))}" '
        f'viewBox="0 0 {_fmt(float(w))} {_fmt(float(h))}">',
        "<defs>",
    ]
    for name, colour in (("cycle", "#1f77b4"), ("barycentric", "#d62ad6")):
        lines.append(
            f'<marker id="arrow-{name}" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="6" '
            f'markerHeight="6" orient="auto"><path d="M 0 0 L 10 5 L 0 10 z" fill="{colour}"/></marker>'
        )
    lines += ["</defs>", f"<style>\n{STYLE}\n</style>"]

    for t in k.triangles:
        coords = " ".join(",".join(xy(v)) for v in t.vertex_ids)
        lines.append(f'<polygon class="triangle" points="{coords}"/>')
    for e in k.edges:
        if e.key in cycle_edges:
            continue
        (x1, y1), (x2, y2) = xy(e.vertex_ids[0]), xy(e.vertex_ids[1])
        lines.append(f'<line class="edge" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    bridges = list(scene.bridges)
    for v in scene.vortexes:
        bridges.extend(v.bridges)
    for b in bridges:
        (x1, y1), (x2, y2) = xy(b.from_vertex), xy(b.to_vertex)
        lines.append(f'<line class="bridge" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    labels: dict[int, str] = {}
    for ci, entry in enumerate(entries):
        cls = "barycentric" if entry.kind == "barycentric" else "cycle"
        for a, b in entry.cycle.edge_pairs():
            pa, pb = ",".join(xy(a)), ",".join(xy(b))
            lines.append(
                f'<polyline class="{cls}" data-cycle="{ci}" points="{pa} {pb}" marker-end="url(#arrow-{cls})"/>'
            )
        for i, vid in enumerate(entry.cycle.vertex_seq):
            if cls == "barycentric":
                labels.setdefault(vid, f"h{i}(0)")
    for vid in k.vertex_ids:
        x, y = xy(vid)
        cls = "vertex witness" if vid in witness else "vertex"
        r = "5" if vid in witness else "3"
        lines.append(f'<circle class="{cls}" data-vertex="{vid}" cx="{x}" cy="{y}" r="{r}"/>')
        label = labels.get(vid, f"v{vid}")
        lx, ly = _fmt(float(x) + 5), _fmt(float(y) - 5)
        lines.append(f'<text class="label" x="{lx}" y="{ly}">{escape(label)}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
