"""Seriate sets of lines: ordered disjoint rows with transversal semantics.

A LineFamily is the dimension-2 object whose members are lines.  Its
self-similarity (concat/split on the row sequence) mirrors the line
operations one dimension down, and a seriating line is a transversal
hitting each row at most once across a consecutive row range.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Optional

from .. import errors
from ..core import Line, PointId, Ring


@dataclass(frozen=True)
class LineFamily:
    """Ordered sequence of pairwise point-disjoint lines.

    ``fixed`` families carry the extra commitment that their boundary
    ring has been asserted; fixed families must be rectangular so row
    and column coordinates are well defined.
    """

    rows: tuple[Line, ...]
    fixed: bool = False

    def __init__(self, rows: Iterable[Line], fixed: bool = False):
        rows = tuple(rows)
        # two-row families are degenerate, admitted as operation outputs
        # exactly as two-point lines are one dimension down
        if len(rows) < 2:
            raise errors.InvalidObject(f"family needs >= 2 rows, got {len(rows)}")
        for a, b in combinations(rows, 2):
            shared = a.member_set & b.member_set
            if shared:
                raise errors.InvalidObject(
                    f"rows {a} and {b} share point(s) {sorted(shared)}")
        if fixed and len({len(r) for r in rows}) != 1:
            raise errors.InvalidObject("fixed family must be rectangular")
        # a family equals its row-reversal; canonical order puts the smaller
        # end row first
        if rows[-1].seq < rows[0].seq:
            rows = tuple(reversed(rows))
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "fixed", fixed)

    @property
    def degenerate(self) -> bool:
        return len(self.rows) == 2

    @property
    def e_rows(self) -> frozenset:
        return frozenset((self.rows[0], self.rows[-1]))

    def row_of(self, p: PointId) -> int:
        for i, row in enumerate(self.rows):
            if p in row.member_set:
                return i
        raise errors.PointNotSubsumed(f"point {p} not subsumed by the family")

    def coords(self, p: PointId) -> tuple[int, int]:
        i = self.row_of(p)
        return i, self.rows[i].index(p)

    def __len__(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class Transversal:
    """One point per row over a consecutive row range."""

    picks: tuple[tuple[int, PointId], ...]

    def __init__(self, picks):
        picks = tuple(tuple(p) for p in picks)
        if not picks:
            raise errors.InvalidObject("transversal needs at least one pick")
        rows = [r for r, _ in picks]
        step = set(b - a for a, b in zip(rows, rows[1:]))
        if step - {1} and step - {-1}:
            raise errors.InvalidObject(f"row indices not strictly consecutive: {rows}")
        object.__setattr__(self, "picks", picks)

    @property
    def points(self) -> tuple[PointId, ...]:
        return tuple(p for _, p in self.picks)

    @property
    def row_range(self) -> tuple[int, int]:
        rows = [r for r, _ in self.picks]
        return min(rows), max(rows)

    def __len__(self) -> int:
        return len(self.picks)


def grid_family(n_rows: int, n_cols: int, fixed: bool = True,
                base: int = 0) -> LineFamily:
    """Rectangular family over fresh points numbered row-major from ``base``."""
    rows = [Line(range(base + r * n_cols, base + (r + 1) * n_cols))
            for r in range(n_rows)]
    return LineFamily(rows, fixed=fixed)


def subsumed(f: LineFamily) -> frozenset:
    """All points within the family's rows."""
    pts = set()
    for row in f.rows:
        pts |= row.member_set
    return frozenset(pts)


def is_seriating(t, f: LineFamily) -> bool:
    """Whether a point sequence is a seriating line for the family: at most
    one point per row, over a consecutive run of rows ordered with the
    sequence."""
    pts = tuple(t.points if isinstance(t, Transversal) else t)
    rows = [f.row_of(p) for p in pts]
    if len(set(rows)) != len(rows):
        return False
    steps = {b - a for a, b in zip(rows, rows[1:])}
    return steps <= {1} or steps <= {-1}


def build_seriating(f: LineFamily, p: PointId, q: PointId,
                    chooser: Optional[Callable[[LineFamily, int, PointId, PointId], PointId]] = None
                    ) -> Transversal:
    """Construct a seriating line from ``p`` to ``q`` on distinct rows.

    Unfixed families default to the smallest available point per
    intermediate row; fixed families interpolate the column, rounding
    toward the first point's column.
    """
    ri, rj = f.row_of(p), f.row_of(q)
    if ri == rj:
        raise errors.SameRow(f"{p} and {q} lie on the same row {ri}")
    if ri > rj:
        ri, rj, p, q = rj, ri, q, p
    if chooser is None:
        chooser = _fixed_chooser if f.fixed else _unfixed_chooser
    picks = [(ri, p)]
    for m in range(ri + 1, rj):
        picks.append((m, chooser(f, m, p, q)))
    picks.append((rj, q))
    t = Transversal(picks)
    if not is_seriating(t, f):
        raise errors.InvalidObject("chooser produced a non-seriating pick sequence")
    return t


def _unfixed_chooser(f: LineFamily, m: int, p: PointId, q: PointId) -> PointId:
    return min(f.rows[m].member_set)


def _fixed_chooser(f: LineFamily, m: int, p: PointId, q: PointId) -> PointId:
    ri, ci = f.coords(p)
    rj, cj = f.coords(q)
    num = ci * (rj - m) + cj * (m - ri)
    den = rj - ri
    # fractional columns round toward p's column
    col = num // den if ci <= cj else -((-num) // den)
    return f.rows[m].seq[col]


def boundary_ring(f: LineFamily) -> Ring:
    """The ring of both E rows plus the end points of every interior row,
    traversed first row forward, right ends down, last row backward, left
    ends up."""
    first, last = f.rows[0], f.rows[-1]
    cyc = list(first.seq)
    for row in f.rows[1:-1]:
        cyc.append(row.seq[-1])
    cyc.extend(reversed(last.seq))
    for row in reversed(f.rows[1:-1]):
        cyc.append(row.seq[0])
    return Ring(cyc)


def family_between(f: LineFamily, i: int, j: int, k: int) -> bool:
    """Whether row ``j`` lies strictly between rows ``i`` and ``k``."""
    for x in (i, j, k):
        if not 0 <= x < len(f.rows):
            raise errors.IndexOutOfRange(f"row index {x} out of range")
    if len({i, j, k}) != 3:
        raise errors.NotDistinct(f"row indices not distinct: {i}, {j}, {k}")
    return i < j < k or k < j < i


def family_concat(f1: LineFamily, f2: LineFamily) -> LineFamily:
    """Join two families sharing exactly one common end row."""
    r1, r2 = set(f1.rows), set(f2.rows)
    shared = r1 & r2
    interior_shared = shared & (set(f1.rows[1:-1]) | set(f2.rows[1:-1]))
    if interior_shared:
        raise errors.SharedInteriorRow(f"shared non-end row(s): {interior_shared}")
    if not shared:
        raise errors.NoSharedEndRow("families share no row")
    if len(shared) > 1:
        raise errors.SharedInteriorRow(f"families share several rows: {shared}")
    (row,) = shared
    a = f1.rows if f1.rows[-1] == row else tuple(reversed(f1.rows))
    b = f2.rows if f2.rows[0] == row else tuple(reversed(f2.rows))
    return LineFamily(a + b[1:], fixed=f1.fixed and f2.fixed)


def family_split(f: LineFamily, i: int) -> tuple[LineFamily, LineFamily]:
    """Divide a family at an interior row index into two families sharing
    exactly that row."""
    if not 0 < i < len(f.rows) - 1:
        raise errors.NotInteriorRow(f"row index {i} is not interior")
    return (LineFamily(f.rows[: i + 1], fixed=f.fixed),
            LineFamily(f.rows[i:], fixed=f.fixed))


def reseriate(f: LineFamily, b1: Line, b2: Line) -> LineFamily:
    """Re-seriate a family so the two given boundary lines become its E rows,
    preserving the subsumed set and the boundary ring.

    Implemented exactly for rectangular families whose given lines are
    the two end columns (the canonical transposition); other placements
    raise CoverFailure.
    """
    if b1 == b2 or (b1.member_set & b2.member_set):
        raise errors.NotDisjoint(f"{b1} and {b2} are not disjoint")
    ring_pts = boundary_ring(f).member_set
    for b in (b1, b2):
        if not b.member_set <= ring_pts:
            raise errors.NotOnBoundary(f"{b} is not within the boundary ring")
    widths = {len(r) for r in f.rows}
    if len(widths) == 1:
        n_cols = widths.pop()
        col0 = Line(row.seq[0] for row in f.rows)
        colL = Line(row.seq[-1] for row in f.rows)
        if {b1, b2} == {col0, colL}:
            new_rows = [Line(row.seq[c] for row in f.rows) for c in range(n_cols)]
            out = LineFamily(new_rows, fixed=f.fixed)
            if subsumed(out) != subsumed(f) or boundary_ring(out) != boundary_ring(f):
                raise errors.CoverFailure("transposition failed to preserve the family")
            return out
    raise errors.CoverFailure(
        "greedy re-seriation is only implemented for the end columns of a "
        "rectangular family")


def family_from_seriating(f: LineFamily, t1: Transversal, t2: Transversal) -> LineFamily:
    """The sub-family of points lying between two seriating lines.

    Both transversals must span the same row range and be disjoint, or
    share exactly one end point; a shared end point's row is dropped so
    the shared point stays outside the chosen E rows.
    """
    if t1.row_range != t2.row_range:
        raise errors.RangeMismatch(
            f"row ranges differ: {t1.row_range} vs {t2.row_range}")
    p1 = dict(t1.picks)
    p2 = dict(t2.picks)
    lo, hi = t1.row_range
    shared = set(t1.points) & set(t2.points)
    if shared:
        end_points = {p1[lo], p1[hi]} & {p2[lo], p2[hi]}
        if len(shared) > 1 or shared != (shared & end_points):
            raise errors.Entangled(f"seriating lines share non-end point(s) {shared}")
    # orientation must not cross
    sides = set()
    for m in range(lo, hi + 1):
        row = f.rows[m]
        i1, i2 = row.index(p1[m]), row.index(p2[m])
        if i1 != i2:
            sides.add(i1 < i2)
    if len(sides) > 1:
        raise errors.Entangled("seriating lines cross")
    if not sides:
        raise errors.Entangled("seriating lines coincide")
    from ..core import interval
    new_rows = []
    for m in range(lo, hi + 1):
        if p1[m] == p2[m]:
            continue  # shared end point stays outside the E rows
        new_rows.append(interval(f.rows[m], p1[m], p2[m]))
    if len(new_rows) < 3:
        raise errors.RangeMismatch(
            f"only {len(new_rows)} usable rows between the seriating lines")
    return LineFamily(new_rows, fixed=f.fixed)
