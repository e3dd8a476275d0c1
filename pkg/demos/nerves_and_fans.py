"""Shared-vertex nerves, fan triangulations and barycentric cycles.

Run: ``python demos/nerves_and_fans.py``
"""
from __future__ import annotations

from hnerve.figures import hawaiian_scene, intersecting_vortex_scene, nerve_scene, unit_square_scene
from hnerve.nerves import barycentric_cycle, detect_nerve, detect_vortex_nerve, fan_triangulate, nucleus_nerves


def main() -> None:
    nv = detect_nerve(nerve_scene().one_cycles)
    print(f"two cycles sharing a vertex: witness {sorted(nv.witness_vertices)}")

    square = unit_square_scene().one_cycles[0]
    fan = fan_triangulate(square)
    print(f"unit square fan: {len(fan.triangles)} triangles around {fan.centroid}")
    print(f"  nuclei: {len(nucleus_nerves(fan.complex))}")
    print(f"  triangles meet at {sorted(detect_nerve(fan.triangle_members()).witness_vertices)}")
    b = barycentric_cycle(fan)
    print("  barycenters:", ", ".join(str(p) for p in b.barycenters))

    v = intersecting_vortex_scene().vortex()
    print(f"intersecting vortex: {len(v.cycles)} cycles, witness {sorted(detect_vortex_nerve([v]).witness)}")
    vn = detect_vortex_nerve(hawaiian_scene().vortex_list())
    print(f"three vortexes through one point: witness {sorted(vn.witness)}")


if __name__ == "__main__":
    main()
