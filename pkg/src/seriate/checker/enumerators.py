"""Exhaustive canonical enumerators for the finite search spaces.

Objects are generated over the canonical point sets {0..k-1}; lines are
deduplicated by reversal, rings by rotation and reflection, partitions
by first-occurrence labeling.  Streams are ordered deterministically so
any verdict derived from them is reproducible.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator

from .. import errors
from ..core import Line, Ring
from ..dim2.areas import LatticeArea, area_from_cells, interior_edges


def enumerate_lines(max_points: int, min_points: int = 3) -> Iterator[Line]:
    """Every canonical line over the point sets {0..k-1}, k in
    [min_points, max_points]; k!/2 lines per size (reversal quotient)."""
    if max_points < 3:
        raise errors.BoundsTooLarge(f"line enumeration needs max_points >= 3")
    for k in range(min_points, max_points + 1):
        for perm in permutations(range(k)):
            if perm[0] < perm[-1]:
                yield Line(perm)


def enumerate_rings(max_points: int, min_points: int = 4) -> Iterator[Ring]:
    """Every canonical ring over the point sets {0..k-1}, k in
    [min_points, max_points]; (k-1)!/2 rings per size."""
    if max_points < 4:
        raise errors.BoundsTooLarge(f"ring enumeration needs max_points >= 4")
    for k in range(min_points, max_points + 1):
        # fix 0 first (rotation quotient), orient by the smaller neighbour
        for rest in permutations(range(1, k)):
            if rest[0] < rest[-1]:
                yield Ring((0,) + rest)


def enumerate_partitions(n_rows: int, n_cols: int, countries: int
                         ) -> Iterator[dict]:
    """Every assignment of the full cell grid to exactly ``countries``
    nonempty 4-connected countries, canonicalized by first-occurrence
    labeling (country numbers 1..k in order of first appearance)."""
    cells = [(r, c) for r in range(n_rows) for c in range(n_cols)]
    n = len(cells)
    if countries > n:
        raise errors.BoundsTooLarge(
            f"{countries} countries cannot fit {n} cells")
    assign = [0] * n

    def connected(part: list) -> bool:
        start = part[0]
        seen = {start}
        stack = [start]
        part_set = set(part)
        while stack:
            r, c = stack.pop()
            for q in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
                if q in part_set and q not in seen:
                    seen.add(q)
                    stack.append(q)
        return len(seen) == len(part)

    def rec(i: int, used: int):
        if used + (n - i) < countries:
            return
        if i == n:
            if used != countries:
                return
            parts = [[] for _ in range(countries)]
            for j, k in enumerate(assign):
                parts[k].append(cells[j])
            if all(connected(p) for p in parts):
                yield {cells[j]: assign[j] + 1 for j in range(n)}
            return
        for k in range(min(used + 1, countries)):
            assign[i] = k
            yield from rec(i + 1, max(used, k + 1))

    yield from rec(0, 0)


@lru_cache(maxsize=8)
def enumerate_areas(n_rows: int, n_cols: int) -> tuple[LatticeArea, ...]:
    """Every valid lattice area within an ``n_rows x n_cols`` cell box,
    ordered by cell set."""
    cells = [(r, c) for r in range(n_rows) for c in range(n_cols)]
    n = len(cells)
    out = []
    for mask in range(1, 1 << n):
        chosen = [cells[i] for i in range(n) if (mask >> i) & 1]
        try:
            out.append(area_from_cells(chosen))
        except (errors.NotConnected, errors.NotSimplyConnected):
            continue
    out.sort(key=lambda a: sorted(a.cells))
    return tuple(out)


@lru_cache(maxsize=8)
def enumerate_chords(n_rows: int, n_cols: int) -> tuple[tuple, ...]:
    """Every (area, chord-vertex-tuple) pair within the box: simple paths
    along interior edges, ends on the area boundary, interior vertices
    strictly inside.  Ordered deterministically."""
    pairs = []
    for area in enumerate_areas(n_rows, n_cols):
        inner = interior_edges(area.cells)
        if not inner:
            continue
        adj = {}
        for (u, v) in inner:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        for vs in adj.values():
            vs.sort()
        bset = area.boundary_vertices
        iset = area.interior_vertices
        chords = []

        def dfs(path: list, seen: set):
            last = path[-1]
            for nxt in adj.get(last, ()):
                if nxt in seen:
                    continue
                if nxt in bset:
                    if len(path) >= 1 and path[0] <= nxt:
                        chords.append(tuple(path) + (nxt,))
                elif nxt in iset:
                    path.append(nxt)
                    seen.add(nxt)
                    dfs(path, seen)
                    path.pop()
                    seen.discard(nxt)

        for start in sorted(bset):
            dfs([start], {start})
        chords.sort()
        pairs.extend((area, ch) for ch in chords)
    return tuple(pairs)


@lru_cache(maxsize=8)
def enumerate_grid_cycles(n_vrows: int, n_vcols: int) -> tuple[tuple, ...]:
    """Every simple cycle in the lattice grid graph on ``n_vrows x n_vcols``
    vertices, each reported once, rooted at its smallest vertex with the
    smaller second vertex first."""
    verts = [(r, c) for r in range(n_vrows) for c in range(n_vcols)]

    def nbrs(v):
        r, c = v
        out = []
        for q in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
            if 0 <= q[0] < n_vrows and 0 <= q[1] < n_vcols:
                out.append(q)
        return sorted(out)

    cycles = []

    def dfs(start, path: list, seen: set):
        last = path[-1]
        for nxt in nbrs(last):
            if nxt == start and len(path) >= 4:
                if path[1] < path[-1]:  # direction quotient
                    cycles.append(tuple(path))
                continue
            if nxt in seen or nxt < start:
                continue
            path.append(nxt)
            seen.add(nxt)
            dfs(start, path, seen)
            path.pop()
            seen.discard(nxt)

    for start in verts:
        dfs(start, [start], {start})
    cycles.sort()
    return tuple(cycles)
