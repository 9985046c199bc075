"""Finite-model kernel, notation tools, and exhaustive theorem checker
for the calculus of seriate sets."""

from .core import (Line, ModelUniverse, PointId, Ring, SeriateCandidate,
                   ValidationReport, assert_object, between, concat,
                   free_between, interval, ring_from_lines, ring_rechord,
                   split, split3, validate_seriate)

__version__ = "0.1.0"

__all__ = [
    "Line", "ModelUniverse", "PointId", "Ring", "SeriateCandidate",
    "ValidationReport", "assert_object", "between", "concat", "free_between",
    "interval", "ring_from_lines", "ring_rechord", "split", "split3",
    "validate_seriate", "__version__",
]
