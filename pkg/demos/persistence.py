"""Track shapes across frames by their Betti signatures.

Run: ``python demos/persistence.py [--tolerance T]``
"""
from __future__ import annotations

import argparse

from hnerve.figures import bridged_vortex_scene, decagon_scene, intersecting_vortex_scene
from hnerve.persistence import FrameRecord, track_persistence


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--tolerance", type=int, default=0)
    args = ap.parse_args()

    d, b, i = decagon_scene(), bridged_vortex_scene(), intersecting_vortex_scene()
    frames = [
        FrameRecord(0, (d,)),
        FrameRecord(1, (d, b)),
        FrameRecord(2, (b,)),
        FrameRecord(3, (i,)),
        FrameRecord(4, (d, i)),
        FrameRecord(6, (d,)),
    ]
    result = track_persistence(frames, args.tolerance)
    for t, track in enumerate(result.tracks):
        spans = " ".join(f"[{a},{z})" for a, z in track.intervals)
        print(f"track {t}: betti {track.signature.betti}, {track.signature.cycle_count} cycles, {spans}")


if __name__ == "__main__":
    main()
