"""Free group presentations and their Betti counts for the reference scenes.

Run: ``python demos/presentations.py``
"""
from __future__ import annotations

from hnerve.figures import bridged_vortex_scene, decagon_scene, hawaiian_scene, intersecting_vortex_scene, nerve_scene
from hnerve.nerves import detect_nerve, detect_vortex_nerve
from hnerve.presentation import present_cycle, present_nerve, present_vortex, present_vortex_nerve, verify_presentation


def show(name, p) -> None:
    ok = "verified" if verify_presentation(p).ok else "BROKEN"
    print(f"{name}: basis {p.basis.vertices}, betti {p.betti}, {len(p.relations)} relations ({ok})")


def main() -> None:
    decagon = present_cycle(decagon_scene().one_cycles[0])
    show("decagon", decagon)
    r = decagon.relation_for(3)
    print(f"  v{r.target} = {r.k} * g{r.generator}")
    show("nerve", present_nerve(detect_nerve(nerve_scene().one_cycles)))
    show("bridged vortex", present_vortex(bridged_vortex_scene().vortex()))
    show("intersecting vortex", present_vortex(intersecting_vortex_scene().vortex()))
    show("vortex nerve", present_vortex_nerve(detect_vortex_nerve(hawaiian_scene().vortex_list())))


if __name__ == "__main__":
    main()
