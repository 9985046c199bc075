"""Grid paths: the discrete-continuity surrogate for lines inside families.

A row-continuous step may stay in its row (moving one column) or move to
an adjacent row (any column); a lattice-4 step moves to one of the four
unit neighbours.  Free paths carry no step rule, which is exactly the
reading under which the row-crossing claim fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .. import errors

Cell = tuple[int, int]

MODES = ("free", "row-continuous", "lattice-4")


@dataclass(frozen=True)
class GridPath:
    pts: tuple[Cell, ...]
    mode: str = "row-continuous"

    def __init__(self, pts: Iterable[Cell], mode: str = "row-continuous"):
        pts = tuple((int(r), int(c)) for r, c in pts)
        if mode not in MODES:
            raise errors.InvalidObject(f"unknown path mode {mode!r}")
        if len(pts) < 1:
            raise errors.InvalidObject("path needs at least one point")
        if len(set(pts)) != len(pts):
            raise errors.InvalidObject(f"path repeats a point: {pts}")
        for (r1, c1), (r2, c2) in zip(pts, pts[1:]):
            dr, dc = abs(r2 - r1), abs(c2 - c1)
            if mode == "row-continuous":
                if dr > 1 or (dr == 0 and dc != 1):
                    raise errors.InvalidObject(
                        f"step ({r1},{c1})->({r2},{c2}) breaks row continuity")
            elif mode == "lattice-4":
                if dr + dc != 1:
                    raise errors.InvalidObject(
                        f"step ({r1},{c1})->({r2},{c2}) is not a unit lattice step")
        object.__setattr__(self, "pts", pts)
        object.__setattr__(self, "mode", mode)

    def rows(self) -> tuple[int, ...]:
        return tuple(r for r, _ in self.pts)

    def __len__(self) -> int:
        return len(self.pts)


@dataclass(frozen=True)
class SegmentClass:
    """A maximal run of a path: within one row, or crossing rows monotonically."""

    kind: str  # "within-row" | "transversal"
    run: tuple[Cell, ...]


def crossing_rows(p: GridPath, f=None) -> frozenset:
    """The set of row indices a row-continuous path touches.

    Registered under row-continuous semantics only; the free reading
    admits row-skipping paths and is handled by the checker as a
    recorded refutation, not here.
    """
    if p.mode != "row-continuous":
        raise errors.ModeMismatch(
            f"crossing_rows is defined for row-continuous paths, got {p.mode!r}")
    if f is not None:
        n_rows = len(f.rows)
        for (r, c) in p.pts:
            if not (0 <= r < n_rows and 0 <= c < len(f.rows[r])):
                raise errors.PointNotSubsumed(f"({r},{c}) not subsumed by the family")
    return frozenset(p.rows())


def classify_interior(p: GridPath) -> tuple[str, ...]:
    """Classify each path point: 'n' continues within its row, 's' straddles
    (neighbours on the rows above and below), 'k' otherwise (ends, corners,
    and reversals)."""
    out = []
    rows = p.rows()
    n = len(rows)
    for i in range(n):
        if i == 0 or i == n - 1:
            out.append("k")
            continue
        prev_r, cur_r, next_r = rows[i - 1], rows[i], rows[i + 1]
        if prev_r == cur_r == next_r:
            out.append("n")
        elif {prev_r, next_r} == {cur_r - 1, cur_r + 1}:
            out.append("s")
        else:
            out.append("k")
    return tuple(out)


def catenate(p: GridPath, f=None) -> tuple[SegmentClass, ...]:
    """Decompose a row-continuous path into its minimal chain of segments.

    Junction points are the path points that neither continue within a
    row nor straddle their row; consecutive junctions bound maximal runs
    that are each wholly within one row or cross rows monotonically.
    Adjacent segments share exactly their junction point.
    """
    if p.mode != "row-continuous":
        raise errors.ModeMismatch(
            f"catenate is defined for row-continuous paths, got {p.mode!r}")
    if len(p) < 2:
        raise errors.InvalidObject("catenate needs a path of >= 2 points")
    classes = classify_interior(p)
    cuts = [i for i, c in enumerate(classes) if c == "k"]
    segments = []
    for a, b in zip(cuts, cuts[1:]):
        run = p.pts[a: b + 1]
        kind = "within-row" if run[0][0] == run[1][0] else "transversal"
        segments.append(SegmentClass(kind, run))
    return tuple(segments)


def minimal_segment_count(rows: tuple[int, ...]) -> int:
    """Fewest pieces covering the row sequence, each piece either constant
    in row or strictly monotone with unit row steps.  Dynamic program over
    all cut placements; independent of the junction classification."""
    n = len(rows)
    if n < 2:
        return 0
    INF = n + 1
    best = [INF] * n  # best[i]: minimal segments covering rows[0..i]
    best[0] = 0
    for i in range(1, n):
        # within-row run ending at i
        j = i
        while j > 0 and rows[j - 1] == rows[i]:
            j -= 1
        for s in range(j, i):
            if rows[s] == rows[i] and best[s] + 1 < best[i]:
                best[i] = best[s] + 1
        # monotone transversal run ending at i
        j = i
        while j > 0 and rows[j - 1] - rows[j] == rows[i - 1] - rows[i] \
                and abs(rows[j - 1] - rows[j]) == 1:
            j -= 1
        if abs(rows[i] - rows[i - 1]) == 1:
            for s in range(j, i):
                if best[s] + 1 < best[i]:
                    best[i] = best[s] + 1
    return best[n - 1]
