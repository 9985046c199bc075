"""Five-country map check: no five pairwise line-adjacent countries."""

from __future__ import annotations

from ..dim2.fivemap import five_map_check
from .enumerators import enumerate_partitions


def run_five_map(bounds) -> tuple[int, dict | None]:
    """Scan every partition of the grid into the requested number of
    nonempty 4-connected countries; none may contain five countries that
    are pairwise line-adjacent."""
    n_rows, n_cols = bounds["rows"], bounds["cols"]
    countries = bounds["countries"]
    n = 0
    for part in enumerate_partitions(n_rows, n_cols, countries):
        n += 1
        report = five_map_check(part, n_rows, n_cols)
        if report.complete5:
            grid = [[part[(r, c)] for c in range(n_cols)] for r in range(n_rows)]
        if report.complete5:
            return n, {
                "kind": "five-map", "grid": [n_rows, n_cols],
                "partition": grid,
                "witness": list(report.complete5_witness),
                "model": {"points": [], "lines": [], "rings": [],
                          "families": [], "areas": []},
                "env": {},
                "formula": "A!(a)",
                "evaluates_to": False,
            }
    return n, None
