"""Planar CW complexes, homotopic nerves and their free group presentations."""
