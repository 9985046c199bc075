"""Country adjacency on cell-grid maps.

Two countries are line-adjacent when their shared boundary vertices
contain a lattice path of at least three points (two consecutive
edges): a common border that constitutes a real line, not just a
degenerate two-point contact.  The report also records the weaker
single-edge contacts so both readings stay inspectable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping

from .. import errors

Cell = tuple[int, int]


@dataclass(frozen=True)
class AdjacencyReport:
    n_rows: int
    n_cols: int
    countries: tuple[int, ...]
    line_adjacent: frozenset       # frozenset of (i, j) pairs, i < j
    edge_adjacent: frozenset       # pairs sharing at least one border edge
    complete5: bool
    complete5_witness: tuple = ()

    def is_line_adjacent(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.line_adjacent

    def all_pairs_line_adjacent(self) -> bool:
        ks = self.countries
        return all((a, b) in self.line_adjacent for a, b in combinations(ks, 2))


def _vertex_set(cells) -> frozenset:
    vs = set()
    for (r, c) in cells:
        vs.update(((r, c), (r, c + 1), (r + 1, c), (r + 1, c + 1)))
    return frozenset(vs)


def _connected(cells) -> bool:
    cells = set(cells)
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        r, c = stack.pop()
        for n in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if n in cells and n not in seen:
                seen.add(n)
                stack.append(n)
    return len(seen) == len(cells)


def _shared_edge_count(c1, c2) -> int:
    n = 0
    for (r, c) in c1:
        if (r, c + 1) in c2:
            n += 1
        if (r, c - 1) in c2:
            n += 1
        if (r + 1, c) in c2:
            n += 1
        if (r - 1, c) in c2:
            n += 1
    return n


def line_adjacent(cells1, cells2) -> bool:
    """Shared boundary vertices contain a three-point lattice path."""
    shared = _vertex_set(cells1) & _vertex_set(cells2)
    if len(shared) < 3:
        return False
    for (r, c) in shared:
        k = 0
        for n in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if n in shared:
                k += 1
                if k == 2:
                    return True
    return False


def five_map_check(partition: Mapping[Cell, int], n_rows: int = None,
                   n_cols: int = None) -> AdjacencyReport:
    """Adjacency report for a map of countries on a cell grid.

    ``partition`` maps cells to country numbers 1..k; cells mapped to 0
    are background (the part of the containing area belonging to no
    country).  Every country must be nonempty and 4-connected.
    ``complete5`` flags the existence of five pairwise line-adjacent
    countries.
    """
    cells = {c: k for c, k in partition.items() if k != 0}
    if not cells:
        raise errors.EmptyCountry("no country has any cells")
    ks = sorted(set(cells.values()))
    if n_rows is None:
        n_rows = max(r for r, _ in partition) + 1
    if n_cols is None:
        n_cols = max(c for _, c in partition) + 1
    for k in range(1, max(ks) + 1):
        if k not in ks:
            raise errors.EmptyCountry(f"country {k} has no cells")
    by_country = {k: frozenset(c for c, kk in cells.items() if kk == k) for k in ks}
    for k, cs in by_country.items():
        if not _connected(cs):
            raise errors.DisconnectedCountry(f"country {k} is not 4-connected")

    line_pairs = set()
    edge_pairs = set()
    for a, b in combinations(ks, 2):
        if _shared_edge_count(by_country[a], by_country[b]) >= 1:
            edge_pairs.add((a, b))
        if line_adjacent(by_country[a], by_country[b]):
            line_pairs.add((a, b))

    complete5 = False
    witness = ()
    if len(ks) >= 5:
        for quintet in combinations(ks, 5):
            if all((x, y) in line_pairs for x, y in combinations(quintet, 2)):
                complete5 = True
                witness = quintet
                break
    return AdjacencyReport(n_rows, n_cols, tuple(ks), frozenset(line_pairs),
                           frozenset(edge_pairs), complete5, witness)
