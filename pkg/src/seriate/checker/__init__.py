from .enumerators import (
    enumerate_lines,
    enumerate_rings,
    enumerate_partitions,
    enumerate_areas,
    enumerate_chords,
    enumerate_grid_cycles,
)
from .verdict import Verdict, report_json
from .registry import REGISTRY, TheoremSpec, check, theorem_ids, instance_ceiling

__all__ = [
    "enumerate_lines", "enumerate_rings", "enumerate_partitions",
    "enumerate_areas", "enumerate_chords", "enumerate_grid_cycles",
    "Verdict", "report_json", "REGISTRY", "TheoremSpec", "check",
    "theorem_ids", "instance_ceiling",
]
