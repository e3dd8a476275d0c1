"""JSON scenes: a complex plus the cycles, bridges and vortexes drawn on it.

Layout::

    {
      "vertices": [{"id": 0, "x": "0/1", "y": "0/1"}, ...],
      "edges": [[0, 1], ...],
      "triangles": [[0, 1, 2], ...],
      "cycles": [[0, 1, 2, 3], {"cycle": [...], "kind": "barycentric",
                                "orientation": "preserve"}],
      "bridges": [[0, 4, 1, 17]],
      "vortexes": [{"cycles": [[...], [...]], "bridges": [[0, 5, 1, 9]]}]
    }

Top-level ``bridges`` index into top-level ``cycles``; inside a vortex entry
they index that entry's own ``cycles``. A cycle given as an object may set
``"orientation": "preserve"`` to keep its traversal instead of normalizing
it counterclockwise.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping

from . import errors
from .cw import CWComplex, complex_from_dict, complex_to_dict
from .cycles import OneCycle, construct_cycle
from .nerves import BridgeEdge, Vortex, build_vortex

CYCLE_KINDS = ("cycle", "barycentric")


@dataclass(frozen=True)
class CycleEntry:
    cycle: OneCycle
    kind: str = "cycle"
    preserve: bool = False

    def to_json(self):
        seq = list(self.cycle.vertex_seq)
        if self.kind == "cycle" and not self.preserve:
            return seq
        out: dict[str, Any] = {"cycle": seq}
        if self.kind != "cycle":
            out["kind"] = self.kind
        if self.preserve:
            out["orientation"] = "preserve"
        return out


@dataclass(frozen=True)
class VortexEntry:
    cycles: tuple[CycleEntry, ...]
    bridges: tuple[BridgeEdge, ...] = ()

    def build(self) -> Vortex:
        return build_vortex([c.cycle for c in self.cycles], self.bridges, allow_single=True)

    def to_json(self) -> dict:
        return {"cycles": [c.to_json() for c in self.cycles], "bridges": [b.as_list() for b in self.bridges]}


@dataclass(frozen=True)
class Scene:
    complex: CWComplex
    cycles: tuple[CycleEntry, ...] = ()
    bridges: tuple[BridgeEdge, ...] = ()
    vortexes: tuple[VortexEntry, ...] = ()
    meta: Mapping[str, Any] = field(default_factory=dict, compare=False)

    @property
    def one_cycles(self) -> list[OneCycle]:
        return [c.cycle for c in self.cycles]

    def vortex(self) -> Vortex:
        """The top-level cycles and bridges as one vortex (a lone cycle is allowed)."""
        if not self.cycles:
            raise errors.EmptyMemberList("scene has no cycles")
        return build_vortex(self.one_cycles, self.bridges, allow_single=True)

    def vortex_list(self) -> list[Vortex]:
        if self.vortexes:
            return [v.build() for v in self.vortexes]
        return [self.vortex()]

    def to_dict(self) -> dict:
        out = complex_to_dict(self.complex)
        if self.cycles:
            out["cycles"] = [c.to_json() for c in self.cycles]
        if self.bridges:
            out["bridges"] = [b.as_list() for b in self.bridges]
        if self.vortexes:
            out["vortexes"] = [v.to_json() for v in self.vortexes]
        if self.meta:
            out["meta"] = dict(self.meta)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _parse_cycle(k: CWComplex, raw) -> CycleEntry:
    if isinstance(raw, Mapping):
        if "cycle" not in raw:
            raise errors.SceneParseError(f"cycle object without a 'cycle' key: {raw!r}")
        seq = raw["cycle"]
        kind = raw.get("kind", "cycle")
        if kind not in CYCLE_KINDS:
            raise errors.SceneParseError(f"unknown cycle kind {kind!r}")
        orientation = raw.get("orientation", "normalize")
        if orientation not in ("normalize", "preserve"):
            raise errors.SceneParseError(f"unknown orientation {orientation!r}")
        preserve = orientation == "preserve"
    else:
        seq, kind, preserve = raw, "cycle", False
    if not isinstance(seq, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in seq):
        raise errors.SceneParseError(f"a cycle must be a list of vertex ids, got {seq!r}")
    return CycleEntry(construct_cycle(k, seq, normalize=not preserve), kind, preserve)


def _parse_bridges(raw) -> tuple[BridgeEdge, ...]:
    out = []
    for b in raw or ():
        if not isinstance(b, list) or len(b) != 4 or not all(isinstance(x, int) for x in b):
            raise errors.SceneParseError(f"a bridge is [cycle, vertex, cycle, vertex], got {b!r}")
        out.append(BridgeEdge(*b))
    return tuple(out)


def scene_from_dict(data: Mapping) -> Scene:
    if not isinstance(data, Mapping) or "vertices" not in data:
        raise errors.SceneParseError("scene must be an object with a 'vertices' list")
    try:
        k = complex_from_dict(data)
    except (TypeError, AttributeError) as exc:
        raise errors.SceneParseError(str(exc)) from exc
    if "cycle" in data and "cycles" not in data:
        cycles = (_parse_cycle(k, data["cycle"]),)
    else:
        cycles = tuple(_parse_cycle(k, c) for c in data.get("cycles", []))
    vortexes = []
    for v in data.get("vortexes", []):
        if not isinstance(v, Mapping) or "cycles" not in v:
            raise errors.SceneParseError("vortex entry must be an object with 'cycles'")
        vortexes.append(VortexEntry(tuple(_parse_cycle(k, c) for c in v["cycles"]), _parse_bridges(v.get("bridges"))))
    return Scene(k, cycles, _parse_bridges(data.get("bridges")), tuple(vortexes), dict(data.get("meta", {})))


def loads(text: str) -> Scene:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise errors.SceneParseError(f"invalid JSON: {exc}") from exc
    return scene_from_dict(data)


def load(path) -> Scene:
    return loads(Path(path).read_text())


def dump(scene: Scene, path) -> None:
    Path(path).write_text(scene.to_json())
