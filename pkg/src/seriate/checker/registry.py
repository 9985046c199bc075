"""The theorem registry: statements, semantics modes, bound schemas, and
the single entry point ``check``.

Every registered claim is decided by exhausting its bounded search
space; a run either certifies the full space (with the exact instance
count) or returns the first counterexample in canonical enumeration
order, which is the minimal one.  Runs refuse bound settings whose
estimated work exceeds the instance ceiling.
"""

from __future__ import annotations

import math
import os
import time
from dataclasses import dataclass
from typing import Callable, Optional

from .. import errors
from .verdict import Verdict
from . import checks_dim1 as d1
from . import checks_dim2 as d2
from . import checks_area as ar
from . import checks_map as mp

DEFAULT_CEILING = 10 ** 8
_CEILING_ENV = "SERIATE_INSTANCE_CEILING"


def instance_ceiling() -> int:
    raw = os.environ.get(_CEILING_ENV)
    return int(raw) if raw else DEFAULT_CEILING


@dataclass(frozen=True)
class TheoremSpec:
    tid: str
    semantics: str                         # default semantics mode
    statement: str
    bounds: dict                           # default bound schema
    runner: Callable                       # bounds -> (instances, cex | None)
    estimator: Callable                    # bounds -> estimated instances
    alternates: dict = None                # semantics -> (runner, default bounds)

    def modes(self) -> tuple[str, ...]:
        extra = tuple(self.alternates) if self.alternates else ()
        return (self.semantics,) + extra


def _lines_est(max_points, per_size) -> int:
    return sum(math.factorial(k) // 2 * per_size(k) for k in range(3, max_points + 1))


def _rings_est(max_points, per_size) -> int:
    return sum(math.factorial(k - 1) // 2 * per_size(k)
               for k in range(4, max_points + 1))


def _comb(n, k) -> int:
    return math.comb(n, k) if n >= k else 0


def _grid_count(bounds) -> int:
    rows = bounds["max_rows"] - bounds.get("min_rows", 3) + 1
    cols = bounds["max_cols"] - bounds.get("min_cols", 3) + 1
    return max(rows, 0) * max(cols, 0)


def _states_est(bounds) -> int:
    cells = bounds["rows"] * bounds["cols"]
    return cells * sum(_comb(cells, s) for s in range(1, bounds["max_len"] + 1))


def _rowseq_est(bounds) -> int:
    return bounds["rows"] * 3 ** (bounds["max_len"] - 1)


def _free_paths_est(bounds) -> int:
    cells = bounds["rows"] * bounds["cols"]
    total = 0
    for length in range(2, bounds["max_len"] + 1):
        total += math.perm(cells, length)
    return total


def _areas_est(bounds) -> int:
    return 1 << (bounds["rows"] * bounds["cols"])


def _partitions_est(bounds) -> int:
    cells = bounds["rows"] * bounds["cols"]
    # restricted-growth strings with at most `countries` classes
    return bounds["countries"] ** cells


REGISTRY: dict[str, TheoremSpec] = {}


def _register(spec: TheoremSpec):
    REGISTRY[spec.tid] = spec


_register(TheoremSpec(
    "Th1.1", "interval",
    "Two lines sharing exactly one end point join into one line.",
    {"max_points": 7}, d1.run_th1_1,
    lambda b: _lines_est(b["max_points"], lambda k: k - 2)))
_register(TheoremSpec(
    "Th1.2", "interval",
    "Any non end point splits a line into two lines sharing only it.",
    {"max_points": 7}, d1.run_th1_2,
    lambda b: _lines_est(b["max_points"], lambda k: k - 2)))
_register(TheoremSpec(
    "Th1.3", "interval",
    "Two interior points split a line into three exhausting lines.",
    {"max_points": 7}, d1.run_th1_3,
    lambda b: _lines_est(b["max_points"], lambda k: _comb(k - 2, 2))))
_register(TheoremSpec(
    "Th1.4", "interval",
    "Every non end point is between the end points of its line.",
    {"max_points": 7}, d1.run_th1_4,
    lambda b: _lines_est(b["max_points"], lambda k: k - 2)))
_register(TheoremSpec(
    "Th1.5", "interval",
    "One of any three points of a line is between the other two.",
    {"max_points": 7}, d1.run_th1_5,
    lambda b: _lines_est(b["max_points"], lambda k: _comb(k, 3))))
_register(TheoremSpec(
    "Th1.6", "interval",
    "At most one of any three points of a line is between the other two.",
    {"max_points": 7}, d1.run_th1_6,
    lambda b: _lines_est(b["max_points"], lambda k: _comb(k, 3)),
    alternates={"free": (d1.run_th1_6_free, {"max_points": 7})}))
_register(TheoremSpec(
    "Th1.7", "interval",
    "No end point of a line is between two of its points.",
    {"max_points": 7}, d1.run_th1_7,
    lambda b: _lines_est(b["max_points"], lambda k: 2 * _comb(k, 2)),
    alternates={"free": (d1.run_th1_7_free, {"max_points": 7})}))
_register(TheoremSpec(
    "Th1.8", "interval",
    "Any point pair of a ring re-chords it into two arcs that recompose it.",
    {"max_points": 9}, d1.run_th1_8,
    lambda b: _rings_est(b["max_points"], lambda k: _comb(k, 2))))
_register(TheoremSpec(
    "Th1.9", "interval",
    "Every one of three ring points is between the other two.",
    {"max_points": 9}, d1.run_th1_9,
    lambda b: _rings_est(b["max_points"], lambda k: _comb(k, 3))))
_register(TheoremSpec(
    "Th1.10", "interval",
    "No set of points forming a ring lies within a line.",
    {"max_points": 9}, d1.run_th1_10,
    lambda b: sum(math.factorial(k) // 2 * _comb(k, 3)
                  for k in range(4, b["max_points"] + 1))))

_GRID_BOUNDS = {"min_rows": 3, "max_rows": 5, "min_cols": 3, "max_cols": 5}

_register(TheoremSpec(
    "Th2.1", "interval",
    "Rows of a family of lines never share a point.",
    dict(_GRID_BOUNDS), d2.run_th2_1,
    lambda b: _grid_count(b) * _comb(b["max_rows"], 2)))
_register(TheoremSpec(
    "Th2.2", "interval",
    "Families split and join like lines; row betweenness mirrors points.",
    dict(_GRID_BOUNDS), d2.run_th2_2,
    lambda b: _grid_count(b) * (b["max_rows"] + _comb(b["max_rows"], 3))))
_register(TheoremSpec(
    "Th2.3", "interval",
    "Two points on different rows of an unfixed family end a seriating line.",
    dict(_GRID_BOUNDS), d2.run_th2_3,
    lambda b: _grid_count(b) * _comb(b["max_rows"] * b["max_cols"], 2)))
_register(TheoremSpec(
    "Th2.4", "interval",
    "The end points of a family's rows form its boundary ring.",
    dict(_GRID_BOUNDS), d2.run_th2_4,
    lambda b: _grid_count(b)))
_register(TheoremSpec(
    "Th2.5", "interval",
    "Two points on different rows of a fixed family end a seriating line.",
    dict(_GRID_BOUNDS), d2.run_th2_5,
    lambda b: _grid_count(b) * _comb(b["max_rows"] * b["max_cols"], 2)))
_register(TheoremSpec(
    "Th2.6", "interval",
    "A family re-seriates onto two disjoint boundary lines, keeping its "
    "subsumed set and boundary.",
    dict(_GRID_BOUNDS), d2.run_th2_6,
    lambda b: _grid_count(b)))
_register(TheoremSpec(
    "Th2.7", "interval",
    "Two non-crossing seriating lines bound a sub-family carrying them on "
    "its boundary.",
    dict(_GRID_BOUNDS), d2.run_th2_7,
    lambda b: _grid_count(b) * 2 * _comb(b["max_cols"], 2)))
_register(TheoremSpec(
    "Th2.8", "row-continuous",
    "A path touches every row between the extreme rows it touches.",
    {"rows": 4, "cols": 4, "max_len": 10}, d2.run_th2_8,
    _states_est,
    alternates={"free": (d2.run_th2_8_free,
                         {"rows": 3, "cols": 3, "max_len": 4})}))
_register(TheoremSpec(
    "Th2.9", "row-continuous",
    "A path decomposes into a minimal alternating chain of within-row and "
    "transversal segments.",
    {"rows": 4, "cols": 4, "max_len": 10, "brute_len": 8}, d2.run_th2_9,
    _rowseq_est))
_register(TheoremSpec(
    "Th2.10", "lattice-4",
    "Two areas sharing one border line join into one area; the shared "
    "line's interior leaves the boundary.",
    {"rows": 4, "cols": 4}, ar.run_th2_10, _areas_est))
_register(TheoremSpec(
    "Th2.11", "lattice-4",
    "A chord splits an area into two areas meeting only along it.",
    {"rows": 4, "cols": 4}, ar.run_th2_11, _areas_est))
_register(TheoremSpec(
    "Th2.12", "lattice-4",
    "Every ring inside an area bounds exactly one sub-area.",
    {"rows": 4, "cols": 4}, ar.run_th2_12, _areas_est))
_register(TheoremSpec(
    "Th2.13", "lattice-4",
    "A line through the interiors of two areas sharing a border line "
    "crosses their common boundary.",
    {"rows": 4, "cols": 4}, ar.run_th2_13, _areas_est))
_register(TheoremSpec(
    "Th2.14", "lattice-4",
    "Of three lines joining two points, exactly one pair bounds an area "
    "containing the others.",
    {"rows": 4, "cols": 4}, ar.run_th2_14, _areas_est))
_register(TheoremSpec(
    "Th2.15", "lattice-4",
    "No third area reaches an interior point of a border line shared by "
    "two others.",
    {"rows": 4, "cols": 4}, ar.run_th2_15, _areas_est))
_register(TheoremSpec(
    "FiveMap", "lattice-4",
    "No five countries of a map are pairwise adjacent along border lines.",
    {"rows": 3, "cols": 3, "countries": 5}, mp.run_five_map, _partitions_est))


def theorem_ids() -> list[str]:
    return list(REGISTRY)


def check(tid: str, bounds: Optional[dict] = None,
          semantics: Optional[str] = None,
          ceiling: Optional[int] = None) -> Verdict:
    """Run one registered theorem at the given bounds and semantics."""
    if tid not in REGISTRY:
        raise KeyError(f"unknown theorem id {tid!r}")
    spec = REGISTRY[tid]
    mode = semantics or spec.semantics
    if mode == spec.semantics:
        runner, defaults = spec.runner, spec.bounds
    elif spec.alternates and mode in spec.alternates:
        runner, defaults = spec.alternates[mode]
    else:
        raise errors.ModeMismatch(
            f"{tid} is not registered under semantics {mode!r}; "
            f"available: {', '.join(spec.modes())}")
    run_bounds = dict(defaults)
    if bounds:
        run_bounds.update({k: v for k, v in bounds.items()
                           if v is not None and k in defaults})
    cap = ceiling if ceiling is not None else instance_ceiling()
    est = spec.estimator(run_bounds) if mode == spec.semantics else \
        _free_paths_est(run_bounds) if "max_len" in run_bounds else \
        spec.estimator(run_bounds)
    if est > cap:
        raise errors.BoundsTooLarge(
            f"{tid} at {run_bounds} is estimated at {est} instances, "
            f"over the ceiling {cap}")
    t0 = time.perf_counter()
    instances, cex = runner(run_bounds)
    elapsed = time.perf_counter() - t0
    status = "verified" if cex is None else "refuted"
    verdict = Verdict(tid, mode, run_bounds, status, instances, cex, 0)
    # measured time is attached out of band for diagnostics
    object.__setattr__(verdict, "_wall_ms", int(elapsed * 1000))
    return verdict
