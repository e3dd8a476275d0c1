"""Command line front end: ``hnerve <command> [subcommand] [input] [flags]``.

Exit status is 0 on success, 1 when the input is well formed but fails
validation (or a check disagrees), and 2 when it cannot be parsed.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import errors
from .cw import complex_from_dict, validate
from .generators import random_rectangles
from .geometry import format_fraction
from .nerve_theorem import bodies_from_dict, cech_nerve, check_nerve_theorem, invariants_of_complex, Rect
from .nerves import barycentric_cycle, build_vortex, detect_nerve, detect_vortex_nerve, fan_triangulate
from .persistence import frames_from_dict, track_persistence
from .presentation import (
    present_cycle,
    present_nerve,
    present_vortex,
    present_vortex_nerve,
    presentation_from_dict,
    verify_presentation,
)
from .render import render_svg
from .scene import CycleEntry, Scene, scene_from_dict

OK, INVALID, PARSE_ERROR = 0, 1, 2


class Failure(Exception):
    """Validation failed; ``payload`` is still written as the report."""

    def __init__(self, payload: dict):
        super().__init__(payload)
        self.payload = payload


def _read_json(args):
    path = args.input or args.path
    try:
        text = Path(path).read_text() if path and path != "-" else sys.stdin.read()
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise errors.SceneParseError(f"invalid JSON: {exc}") from exc
    except OSError as exc:
        raise errors.SceneParseError(str(exc)) from exc


def _scene(args) -> Scene:
    return scene_from_dict(_read_json(args))


def _emit(args, payload) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _scene_out(args, scene: Scene, extra: dict):
    if args.format == "svg":
        return render_svg(scene)
    out = scene.to_dict()
    out.update(extra)
    return out


def _point(p) -> list[str]:
    return [format_fraction(p.x), format_fraction(p.y)]


def cmd_validate(args):
    data = _read_json(args)
    if not isinstance(data, dict) or "vertices" not in data:
        raise errors.SceneParseError("scene must be an object with a 'vertices' list")
    k = complex_from_dict(data, check=False)
    report = validate(k)
    if not report.ok:
        raise Failure(report.to_dict())
    scene = scene_from_dict(data)
    return {
        "valid": True,
        "issues": [],
        "counts": {"vertices": len(k.vertices), "edges": len(k.edges), "triangles": len(k.triangles)},
        "cycles": len(scene.cycles) + sum(len(v.cycles) for v in scene.vortexes),
    }


def cmd_cycle_validate(args):
    scene = _scene(args)
    if not scene.cycles:
        raise errors.EmptyMemberList("scene has no cycles")
    return {
        "valid": True,
        "cycles": [
            {"cycle": list(c.vertex_seq), "orientation": c.orientation, "area": format_fraction(c.area)}
            for c in scene.one_cycles
        ],
    }


def _first_cycle(scene: Scene):
    if not scene.cycles:
        raise errors.EmptyMemberList("scene has no cycles")
    return scene.one_cycles[0]


def cmd_cycle_barycentric(args):
    scene = _scene(args)
    b = barycentric_cycle(fan_triangulate(_first_cycle(scene)))
    out_scene = Scene(
        b.cycle.complex,
        (CycleEntry(b.outer, preserve=True), CycleEntry(b.cycle, "barycentric", preserve=True)),
    )
    return _scene_out(args, out_scene, {"barycenters": [_point(p) for p in b.barycenters]})


def cmd_triangulate_fan(args):
    scene = _scene(args)
    f = fan_triangulate(_first_cycle(scene))
    out_scene = Scene(f.complex, (CycleEntry(f.cycle, preserve=True),))
    return _scene_out(
        args,
        out_scene,
        {"centroid": _point(f.centroid), "centroid_id": f.centroid_id, "fan": [list(t.vertex_ids) for t in f.triangles]},
    )


def cmd_nerve_detect(args):
    scene = _scene(args)
    if scene.vortexes:
        vn = detect_vortex_nerve(scene.vortex_list())
        if vn is None:
            raise Failure({"nerve": False, "reason": "NoCommonCell"})
        return {"nerve": True, "kind": "vortex", "witness": sorted(vn.witness)}
    nv = detect_nerve(scene.one_cycles)
    if nv is None:
        raise Failure({"nerve": False, "reason": "NoCommonCell"})
    return {
        "nerve": True,
        "kind": "cycle",
        "witness": sorted(nv.witness_vertices),
        "witness_cells": sorted(repr(c) for c in nv.witness),
    }


def cmd_vortex_build(args):
    scene = _scene(args)
    v = build_vortex(scene.one_cycles, scene.bridges)
    return {"cycles": [list(c.vertex_seq) for c in v.cycles], "bridges": [b.as_list() for b in v.bridges]}


def _presentation(scene: Scene, obj: str):
    if obj == "cycle":
        return present_cycle(_first_cycle(scene))
    if obj == "nerve":
        nv = detect_nerve(scene.one_cycles)
        if nv is None:
            raise Failure({"nerve": False, "reason": "NoCommonCell"})
        return present_nerve(nv)
    if obj == "vortex":
        return present_vortex(scene.vortex_list()[0])
    vn = detect_vortex_nerve(scene.vortex_list())
    if vn is None:
        raise Failure({"nerve": False, "reason": "NoCommonCell"})
    return present_vortex_nerve(vn)


def cmd_present(args):
    return _presentation(_scene(args), args.object).to_dict()


def cmd_verify(args):
    data = _read_json(args)
    if isinstance(data, dict) and "vertices" in data:
        p = _presentation(scene_from_dict(data), args.object)
    else:
        p = presentation_from_dict(data)
    report = verify_presentation(p)
    if not report.ok:
        raise Failure(report.to_dict())
    return report.to_dict()


def cmd_nerve_theorem(args):
    if args.input or args.path:
        bodies = bodies_from_dict(_read_json(args))
    else:
        rng = random.Random(args.seed)
        bodies = random_rectangles(rng, rng.randint(2, 8))
    if not bodies:
        raise errors.EmptyMemberList("no bodies given")
    if not all(isinstance(b, Rect) for b in bodies):
        # general convex bodies: the nerve alone, no union to compare against
        nerve = cech_nerve(bodies)
        return {"nerve": invariants_of_complex(nerve).to_dict(), "simplices": nerve.to_dict()["simplices"], "agree": None}
    report = check_nerve_theorem(bodies)
    if not report.agree:
        raise Failure(report.to_dict())
    return report.to_dict()


def cmd_persist(args):
    frames = frames_from_dict(_read_json(args))
    return track_persistence(frames, args.tolerance).to_json()


def cmd_render(args):
    scene = _scene(args)
    if args.format == "json":
        return scene.to_dict()
    return render_svg(scene)


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be a non-negative integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("path", nargs="?", help="input file (same as --input; '-' or omitted reads stdin)")
    common.add_argument("--input", help="input JSON file")
    common.add_argument("--output", help="write the result here instead of stdout")
    common.add_argument("--format", choices=("json", "svg"), default=None)
    common.add_argument("--tolerance", type=_non_negative, default=0, help="betti difference allowed when matching")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized inputs")

    parser = argparse.ArgumentParser(prog="hnerve", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def leaf(subparsers, name, func, help_text, **kw):
        p = subparsers.add_parser(name, parents=[common], help=help_text, **kw)
        p.set_defaults(func=func)
        return p

    leaf(sub, "validate", cmd_validate, "check a scene's complex and cycles")
    cyc = sub.add_parser("cycle", help="1-cycle tools").add_subparsers(dest="action", required=True)
    leaf(cyc, "validate", cmd_cycle_validate, "validate every cycle in a scene")
    leaf(cyc, "barycentric", cmd_cycle_barycentric, "barycentric cycle of the first cycle's fan")
    tri = sub.add_parser("triangulate", help="triangulations").add_subparsers(dest="action", required=True)
    leaf(tri, "fan", cmd_triangulate_fan, "fan triangulation from the vertex mean")
    nrv = sub.add_parser("nerve", help="nerve tools").add_subparsers(dest="action", required=True)
    leaf(nrv, "detect", cmd_nerve_detect, "common witness of the scene's cycles or vortexes")
    vor = sub.add_parser("vortex", help="vortex tools").add_subparsers(dest="action", required=True)
    leaf(vor, "build", cmd_vortex_build, "order cycles by nesting and check their joins")
    for name, func, text in (
        ("present", cmd_present, "free group presentation as JSON"),
        ("verify", cmd_verify, "re-check a presentation (or a scene's presentation)"),
    ):
        p = leaf(sub, name, func, text)
        p.add_argument("--object", choices=("cycle", "nerve", "vortex", "vortex-nerve"), default="cycle")
    nt = sub.add_parser("nerve-theorem", help="nerve versus union invariants").add_subparsers(dest="action", required=True)
    leaf(nt, "check", cmd_nerve_theorem, "compare (b0, b1) of the Čech nerve and the union; without input, draws rectangles from --seed")
    leaf(sub, "persist", cmd_persist, "track Betti signatures across frames")
    leaf(sub, "render", cmd_render, "draw a scene as SVG")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.format is None:
        args.format = "svg" if args.func is cmd_render else "json"
    try:
        _emit(args, args.func(args))
    except errors.SceneParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return PARSE_ERROR
    except Failure as f:
        _emit(args, f.payload)
        return INVALID
    except errors.TopologyError as exc:
        _emit(args, {"valid": False, "error": type(exc).__name__, "detail": str(exc)})
        return INVALID
    return OK


if __name__ == "__main__":
    sys.exit(main())
