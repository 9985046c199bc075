"""Finite combinatorial semantics for dimension-0/1 objects.

Points are opaque small integers.  A Line is an injective point sequence
identified with its reversal; a Ring is an injective cyclic sequence
identified up to rotation and reflection.  ``validate_seriate`` is the
checkable decomposition predicate that admits a candidate as a seriate
set, and ``ModelUniverse`` + ``assert_object`` carry the existence,
identity, and stability rules that keep a universe of asserted objects
consistent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional, Union

from . import errors

PointId = int


def _parts(obj) -> frozenset:
    """Constituent points of a member object (a point is its own part)."""
    if isinstance(obj, int):
        return frozenset((obj,))
    if isinstance(obj, Line):
        return obj.member_set
    raise errors.DimensionMismatch(f"unsupported member type {type(obj).__name__}")


def _dim(obj) -> int:
    if isinstance(obj, int):
        return 0
    if isinstance(obj, Line):
        return 1
    raise errors.DimensionMismatch(f"unsupported member type {type(obj).__name__}")


@dataclass(frozen=True)
class Line:
    """Injective ordered point sequence; equal to its reversal.

    Canonical storage puts the smaller end point first.  Two-point lines
    are admitted as degenerate (operation outputs and decomposition
    pieces); a non-degenerate line has at least three points.
    """

    seq: tuple[PointId, ...]

    def __init__(self, seq: Iterable[PointId]):
        seq = tuple(seq)
        if len(seq) < 2:
            raise errors.InvalidObject(f"line needs >= 2 points, got {len(seq)}")
        if len(set(seq)) != len(seq):
            raise errors.InvalidObject(f"line sequence repeats a point: {seq}")
        if seq[-1] < seq[0]:
            seq = tuple(reversed(seq))
        object.__setattr__(self, "seq", seq)

    @property
    def degenerate(self) -> bool:
        return len(self.seq) == 2

    @property
    def ends(self) -> frozenset:
        """The unordered E pair."""
        return frozenset((self.seq[0], self.seq[-1]))

    @property
    def member_set(self) -> frozenset:
        return frozenset(self.seq)

    def interiors(self) -> tuple[PointId, ...]:
        return self.seq[1:-1]

    def index(self, p: PointId) -> int:
        try:
            return self.seq.index(p)
        except ValueError:
            raise errors.NotMember(f"point {p} not in line {self.seq}") from None

    def __len__(self) -> int:
        return len(self.seq)

    def __repr__(self) -> str:
        return f"Line{self.seq}"


@dataclass(frozen=True)
class Ring:
    """Injective cyclic point sequence of length >= 4.

    Equal under rotation and reflection; canonical storage starts at the
    smallest point and proceeds toward its smaller neighbour.
    """

    cyc: tuple[PointId, ...]

    def __init__(self, cyc: Iterable[PointId]):
        cyc = tuple(cyc)
        if len(cyc) < 4:
            raise errors.InvalidObject(f"ring needs >= 4 points, got {len(cyc)}")
        if len(set(cyc)) != len(cyc):
            raise errors.InvalidObject(f"ring sequence repeats a point: {cyc}")
        object.__setattr__(self, "cyc", _canonical_cycle(cyc))

    @property
    def member_set(self) -> frozenset:
        return frozenset(self.cyc)

    def index(self, p: PointId) -> int:
        try:
            return self.cyc.index(p)
        except ValueError:
            raise errors.NotMember(f"point {p} not in ring {self.cyc}") from None

    def __len__(self) -> int:
        return len(self.cyc)

    def __repr__(self) -> str:
        return f"Ring{self.cyc}"


def _canonical_cycle(cyc: tuple[PointId, ...]) -> tuple[PointId, ...]:
    k = cyc.index(min(cyc))
    rot = cyc[k:] + cyc[:k]
    if rot[-1] < rot[1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    return rot


# --------------------------------------------------------------------------
# Seriate-set validation
# --------------------------------------------------------------------------

Member = Union[PointId, Line]


@dataclass(frozen=True)
class SeriateCandidate:
    """A member sequence with a designated E pair, to be checked for
    seriateness.  ``witness`` optionally supplies an explicit
    decomposition to validate instead of searching for one."""

    members: tuple
    e_pair: frozenset = None
    witness: Optional[tuple] = None  # tuple of SeriateCandidate

    def __init__(self, members, e_pair=None, witness=None):
        members = tuple(members)
        if not members:
            raise errors.InvalidObject("candidate needs at least one member")
        if e_pair is None and len(members) >= 2:
            e_pair = frozenset((members[0], members[-1]))
        object.__setattr__(self, "members", members)
        object.__setattr__(self, "e_pair", frozenset(e_pair) if e_pair else frozenset())
        object.__setattr__(self, "witness", tuple(witness) if witness else None)


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    mode: str
    violations: tuple[str, ...] = ()
    detail: str = ""


def validate_seriate(cand: SeriateCandidate, mode: str = "strict") -> ValidationReport:
    """Decide whether ``cand`` is a seriate set.

    A candidate passes when (a) its members pairwise share no parts and
    (b) every I member admits a decomposition into two overlapping
    sub-candidates satisfying the five decomposition clauses.  The
    witness search tries the ordered two-block split of the member
    sequence at each I member, which suffices for sequence-represented
    candidates.  When an explicit witness is supplied, that witness is
    checked against the clauses instead.
    """
    if mode not in ("strict", "relaxed"):
        raise ValueError(f"unknown mode {mode!r}")
    ms = cand.members
    dims = {_dim(m) for m in ms}
    if len(dims) > 1:
        raise errors.DimensionMismatch(f"members mix dimensions {sorted(dims)}")

    violations = []
    # clause (a): pairwise part-disjointness
    clause_a_ok = True
    for x, y in combinations(range(len(ms)), 2):
        if ms[x] == ms[y] or (_parts(ms[x]) & _parts(ms[y])):
            clause_a_ok = False
            break
    if not clause_a_ok:
        violations.append("a")

    minimum = 3 if mode == "strict" else 2
    if len(ms) < minimum:
        violations.append("size")
        return ValidationReport(False, mode, tuple(violations),
                                f"needs more than two members in {mode} mode"
                                if mode == "strict" else "needs at least two members")

    if cand.witness is not None:
        ws = _check_witness_clauses(cand, cand.witness)
        violations.extend(v for v in ws if v not in violations)
        return ValidationReport(not violations, mode, tuple(violations),
                                "explicit witness checked")

    if not clause_a_ok:
        return ValidationReport(False, mode, tuple(violations), "repeated part")

    if cand.e_pair != frozenset((ms[0], ms[-1])):
        # Two-block splits of the sequence can only realise the sequence ends
        # as the outer E objects (clause iii).
        return ValidationReport(False, mode, ("b.iii",),
                                "E pair does not match the sequence ends")

    return _validate_sequence(ms, mode)


@lru_cache(maxsize=1 << 16)
def _validate_sequence(ms: tuple, mode: str) -> ValidationReport:
    """Witness search for a part-disjoint member sequence with its ends as
    E pair.  Pure in its arguments, so results are shared across the
    recursion and across candidates with common blocks."""
    cand = SeriateCandidate(ms)
    for i in range(1, len(ms) - 1):
        prefix = SeriateCandidate(ms[: i + 1])
        suffix = SeriateCandidate(ms[i:])
        star = (prefix, suffix)
        bad = _check_witness_clauses(cand, star)
        if bad:
            return ValidationReport(False, mode, tuple(bad),
                                    f"no decomposition at I member index {i}")
        for block in star:
            sub = _validate_sequence(block.members, "relaxed")
            if not sub.valid:
                return ValidationReport(False, mode, sub.violations,
                                        f"sub-block invalid at index {i}")
    return ValidationReport(True, mode, (), "")


def _check_witness_clauses(cand: SeriateCandidate, star: tuple) -> list[str]:
    """Check decomposition clauses (i)-(v) of a proposed witness family."""
    bad = []
    all_members = set()
    for s in star:
        all_members.update(s.members)
    # (i) union identity
    if all_members != set(cand.members):
        bad.append("b.i")
    # (ii) sharing only at E objects of the sharing block
    for a, b in combinations(star, 2):
        for m in set(a.members) & set(b.members):
            if m not in a.e_pair or m not in b.e_pair:
                bad.append("b.ii")
                break
        else:
            continue
        break
    # occurrence counts of E objects across blocks
    all_es = set()
    for s in star:
        all_es |= set(s.e_pair)
    e_occurrence = {e: sum(1 for s in star if e in set(s.members)) for e in all_es}
    outer = {e for e, n in e_occurrence.items() if n == 1}
    # (iii) exactly two outer E objects, equal to the candidate's E pair
    if outer != set(cand.e_pair):
        bad.append("b.iii")
    # (iv) every other E object lies in exactly two blocks
    for e, n in e_occurrence.items():
        if e in outer:
            continue
        if n != 2:
            bad.append("b.iv")
            break
    # (v) no sub-family forms a separate loop: some block of every nonempty
    # sub-family has an E object not shared with another block of it
    for r in range(1, len(star) + 1):
        for sub in combinations(star, r):
            loop = True
            for s in sub:
                others = [t for t in sub if t is not s]
                for e in s.e_pair:
                    if not any(e in set(t.members) for t in others):
                        loop = False
                        break
                if not loop:
                    break
            if loop:
                bad.append("b.v")
                break
        if "b.v" in bad:
            break
    return bad


# --------------------------------------------------------------------------
# Line operations
# --------------------------------------------------------------------------

def concat(l1: Line, l2: Line) -> Line:
    """Join two lines sharing exactly one common end point."""
    shared = l1.member_set & l2.member_set
    interior_shared = shared & (set(l1.interiors()) | set(l2.interiors()))
    if interior_shared:
        raise errors.SharedInterior(
            f"lines share non-end point(s) {sorted(interior_shared)}")
    if not shared:
        raise errors.NoSharedEndpoint(f"{l1} and {l2} share no point")
    if len(shared) > 1:
        raise errors.MultipleShared(f"{l1} and {l2} share {sorted(shared)}")
    (p,) = shared
    a = l1.seq if l1.seq[-1] == p else tuple(reversed(l1.seq))
    b = l2.seq if l2.seq[0] == p else tuple(reversed(l2.seq))
    return Line(a + b[1:])


def split(l: Line, p: PointId) -> tuple[Line, Line]:
    """Divide a line at an interior point into two lines sharing only it."""
    i = l.index(p)
    if i == 0 or i == len(l.seq) - 1:
        raise errors.NotInterior(f"{p} is an end point of {l}")
    return Line(l.seq[: i + 1]), Line(l.seq[i:])


def split3(l: Line, p: PointId, q: PointId) -> tuple[Line, Line, Line]:
    """Divide a line at two distinct interior points into three lines."""
    if p == q:
        raise errors.DuplicateCut(f"cut points coincide: {p}")
    i, j = l.index(p), l.index(q)
    for k, name in ((i, p), (j, q)):
        if k == 0 or k == len(l.seq) - 1:
            raise errors.NotInterior(f"{name} is an end point of {l}")
    if i > j:
        i, j = j, i
    return Line(l.seq[: i + 1]), Line(l.seq[i: j + 1]), Line(l.seq[j:])


def interval(l: Line, a: PointId, b: PointId) -> Line:
    """The unique contiguous sub-line of ``l`` with E pair {a, b}."""
    i, j = l.index(a), l.index(b)
    if i == j:
        raise errors.NotDistinct(f"interval ends coincide: {a}")
    if i > j:
        i, j = j, i
    return Line(l.seq[i: j + 1])


def between(ctx: Union[Line, Ring], a: PointId, b: PointId, c: PointId) -> bool:
    """Whether ``b`` separates ``a`` and ``c`` within the context object."""
    if len({a, b, c}) != 3:
        raise errors.NotDistinct(f"points not distinct: {a}, {b}, {c}")
    if isinstance(ctx, Line):
        ia, ib, ic = ctx.index(a), ctx.index(b), ctx.index(c)
        return ia < ib < ic or ic < ib < ia
    if isinstance(ctx, Ring):
        arc1, arc2 = ring_rechord(ctx, a, c)
        if (arc1.member_set & arc2.member_set) != frozenset((a, c)):
            return False
        in1 = b in set(arc1.interiors())
        in2 = b in set(arc2.interiors())
        return in1 != in2
    raise TypeError(f"context must be Line or Ring, not {type(ctx).__name__}")


def free_between(members: frozenset, a: PointId, b: PointId, c: PointId) -> bool:
    """Betweenness under the free reading: any two injective sub-sequences
    of the member set ending at ``b`` count as witness lines.  Holds for
    every distinct triple, which is exactly why the interval reading is
    the default."""
    if len({a, b, c}) != 3:
        raise errors.NotDistinct(f"points not distinct: {a}, {b}, {c}")
    if not {a, b, c} <= set(members):
        raise errors.NotMember(f"{a},{b},{c} not all within the given set")
    return True  # witness pair {a,b} / {b,c} always qualifies


def ring_from_lines(l1: Line, l2: Line) -> Ring:
    """Compose a ring out of two lines sharing exactly their end points."""
    if l1.ends != l2.ends:
        raise errors.EndpointMismatch(f"E pairs differ: {set(l1.ends)} vs {set(l2.ends)}")
    shared = l1.member_set & l2.member_set
    if shared != l1.ends:
        raise errors.SharedInterior(
            f"lines share non-end point(s) {sorted(shared - l1.ends)}")
    a = l1.seq
    b = l2.seq if l2.seq[0] == a[-1] else tuple(reversed(l2.seq))
    return Ring(a + b[1:-1])


def ring_rechord(r: Ring, p: PointId, q: PointId) -> tuple[Line, Line]:
    """The two arcs of a ring between two of its points."""
    if p == q:
        raise errors.NotDistinct(f"arc ends coincide: {p}")
    i, j = r.index(p), r.index(q)
    if i > j:
        i, j = j, i
    arc1 = r.cyc[i: j + 1]
    arc2 = r.cyc[j:] + r.cyc[: i + 1]
    return Line(arc1), Line(arc2)


# --------------------------------------------------------------------------
# Model universe
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ModelUniverse:
    """Immutable collection of asserted objects.

    Direct construction checks the static invariants (point registration,
    stability among sub-lines of a common line, no ring inside a line);
    ``assert_object`` additionally enforces the dynamic assertion rules
    and returns a new universe.
    """

    points: frozenset = frozenset()
    lines: frozenset = frozenset()
    rings: frozenset = frozenset()
    families: frozenset = frozenset()
    areas: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "points", frozenset(self.points))
        object.__setattr__(self, "lines", frozenset(self.lines))
        object.__setattr__(self, "rings", frozenset(self.rings))
        object.__setattr__(self, "families", frozenset(self.families))
        object.__setattr__(self, "areas", frozenset(self.areas))
        problem = self._static_violation()
        if problem:
            raise errors.InvalidObject(problem)

    def _static_violation(self) -> Optional[str]:
        for l in self.lines:
            if not l.member_set <= self.points:
                return f"line {l} uses unregistered points"
        for r in self.rings:
            if not r.member_set <= self.points:
                return f"ring {r} uses unregistered points"
        for f in self.families:
            for row in f.rows:
                if not row.member_set <= self.points:
                    return f"family row {row} uses unregistered points"
        # stability: sub-lines of a common line are determined by their E pair
        for container in self.lines:
            by_epair = {}
            for l in self.lines:
                if l.member_set <= container.member_set:
                    other = by_epair.setdefault(l.ends, l)
                    if other.member_set != l.member_set:
                        return (f"stability: {other} and {l} lie within {container} "
                                f"with the same E pair but different members")
        for r in self.rings:
            for l in self.lines:
                if r.member_set <= l.member_set:
                    return f"ring {r} lies within line {l}"
        return None

    def constituent_points(self, obj) -> frozenset:
        if isinstance(obj, (Line, Ring)):
            return obj.member_set
        pts = set()
        for row in getattr(obj, "rows", ()):
            pts |= row.member_set
        return frozenset(pts)


def assert_object(u: ModelUniverse, obj, strict: bool = True) -> ModelUniverse:
    """Assert an object's existence, returning the extended universe.

    Re-asserting an identical object is a no-op.  A line whose E pair
    lies within an existing line must equal that line's interval with
    the same E pair, or the assertion destabilises the established
    order; a ring inside a line (or the reverse) contradicts the ring's
    two-arc structure.
    """
    from .dim2.families import LineFamily
    from .dim2.areas import LatticeArea

    if isinstance(obj, Line):
        if obj in u.lines:
            return u
        if strict and obj.degenerate:
            raise errors.ConsistencyViolation(
                f"degenerate line {obj} asserted at top level in strict mode")
        for container in u.lines:
            if obj.ends <= container.member_set:
                ref = interval(container, obj.seq[0], obj.seq[-1])
                if ref.member_set != obj.member_set:
                    raise errors.StabilityViolation(
                        f"{obj} has the E pair of {ref} within {container} "
                        f"but different members")
        for existing in u.lines:
            if existing.ends <= obj.member_set:
                ref = interval(obj, existing.seq[0], existing.seq[-1])
                if ref.member_set != existing.member_set:
                    raise errors.StabilityViolation(
                        f"existing {existing} has the E pair of {ref} within "
                        f"{obj} but different members")
        for r in u.rings:
            if r.member_set <= obj.member_set:
                raise errors.ConsistencyViolation(f"ring {r} would lie within {obj}")
        return ModelUniverse(u.points | obj.member_set, u.lines | {obj},
                             u.rings, u.families, u.areas)

    if isinstance(obj, Ring):
        if obj in u.rings:
            return u
        for l in u.lines:
            if obj.member_set <= l.member_set:
                raise errors.ConsistencyViolation(f"{obj} would lie within line {l}")
        return ModelUniverse(u.points | obj.member_set, u.lines,
                             u.rings | {obj}, u.families, u.areas)

    if isinstance(obj, LineFamily):
        if obj in u.families:
            return u
        pts = set()
        for row in obj.rows:
            pts |= row.member_set
        return ModelUniverse(u.points | pts, u.lines, u.rings,
                             u.families | {obj}, u.areas)

    if isinstance(obj, LatticeArea):
        if obj in u.areas:
            return u
        return ModelUniverse(u.points, u.lines, u.rings, u.families,
                             u.areas | {obj})

    raise TypeError(f"cannot assert object of type {type(obj).__name__}")
