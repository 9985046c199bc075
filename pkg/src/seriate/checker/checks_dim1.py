"""Exhaustive dimension-1 check runners.

Each runner scans its full bounded search space and returns
``(instances, counterexample)`` with ``counterexample=None`` on success.
Counterexamples carry a loadable model, variable bindings, and a
statement whose evaluation confirms the violation.
"""

from __future__ import annotations

from itertools import combinations, permutations

from ..core import (Line, SeriateCandidate, between, concat, free_between,
                    interval, ring_from_lines, ring_rechord, split, split3,
                    validate_seriate)
from ..lang import point_to_name
from .enumerators import enumerate_lines, enumerate_rings


def _line_model(*lines: Line) -> dict:
    pts = sorted(set().union(*(l.member_set for l in lines)))
    return {
        "points": [point_to_name(p) for p in pts],
        "lines": [{"id": f"l{i}", "seq": [point_to_name(p) for p in l.seq]}
                  for i, l in enumerate(lines)],
        "rings": [], "families": [], "areas": [],
    }


def _names(pts) -> list:
    return [point_to_name(p) for p in pts]


def _betw_formula(a, b, c) -> str:
    return f"{point_to_name(a)}/{point_to_name(b)}/{point_to_name(c)}(x)"


def run_th1_1(bounds) -> tuple[int, dict | None]:
    """External self-similarity: every pair of lines sharing exactly one
    end point joins into one line over the union.  Pairs are enumerated
    as the splits of their join, which is a bijection."""
    n = 0
    for l in enumerate_lines(bounds["max_points"]):
        for p in l.interiors():
            n += 1
            a, b = split(l, p)
            joined = concat(a, b)
            ok = (joined == l
                  and a.member_set | b.member_set == l.member_set
                  and joined.ends == l.ends
                  and validate_seriate(SeriateCandidate(joined.seq)).valid)
            if not ok:
                return n, {
                    "kind": "line", "line": list(l.seq), "cut": p,
                    "model": _line_model(l),
                    "env": {"x": _names(l.seq)},
                    "formula": f"L({point_to_name(l.seq[0])},{point_to_name(l.seq[-1])};x)",
                    "evaluates_to": True,
                }
    return n, None


def run_th1_2(bounds) -> tuple[int, dict | None]:
    """Internal self-similarity: splitting at any non end point gives two
    lines sharing exactly the cut and exhausting the whole."""
    n = 0
    for l in enumerate_lines(bounds["max_points"]):
        for p in l.interiors():
            n += 1
            a, b = split(l, p)
            ok = (a.member_set & b.member_set == frozenset((p,))
                  and a.member_set | b.member_set == l.member_set
                  and validate_seriate(SeriateCandidate(a.seq), "relaxed").valid
                  and validate_seriate(SeriateCandidate(b.seq), "relaxed").valid)
            if not ok:
                return n, {
                    "kind": "line", "line": list(l.seq), "cut": p,
                    "model": _line_model(l), "env": {"x": _names(l.seq)},
                    "formula": _betw_formula(l.seq[0], p, l.seq[-1]),
                    "evaluates_to": False,
                }
    return n, None


def run_th1_3(bounds) -> tuple[int, dict | None]:
    """Two interior cuts give three lines that exhaust the whole and meet
    pairwise only in the cut points."""
    n = 0
    for l in enumerate_lines(bounds["max_points"]):
        inner = l.interiors()
        for p, q in combinations(inner, 2):
            n += 1
            a, m, b = split3(l, p, q)
            cuts = {min(l.index(p), l.index(q)), max(l.index(p), l.index(q))}
            i, j = sorted(cuts)
            ok = (a.member_set | m.member_set | b.member_set == l.member_set
                  and a.member_set & m.member_set == frozenset((l.seq[i],))
                  and m.member_set & b.member_set == frozenset((l.seq[j],))
                  and a.member_set & b.member_set == frozenset())
            if not ok:
                return n, {
                    "kind": "line", "line": list(l.seq), "cuts": [p, q],
                    "model": _line_model(l), "env": {"x": _names(l.seq)},
                    "formula": _betw_formula(l.seq[0], p, l.seq[-1]),
                    "evaluates_to": True,
                }
    return n, None


def run_th1_4(bounds) -> tuple[int, dict | None]:
    """Every non end point is between the end points."""
    n = 0
    for l in enumerate_lines(bounds["max_points"]):
        lo, hi = l.seq[0], l.seq[-1]
        for p in l.interiors():
            n += 1
            if not between(l, lo, p, hi):
                return n, {
                    "kind": "line", "line": list(l.seq), "point": p,
                    "model": _line_model(l), "env": {"x": _names(l.seq)},
                    "formula": _betw_formula(lo, p, hi),
                    "evaluates_to": False,
                }
    return n, None


def _triple_relations(l: Line, a, b, c):
    return (between(l, a, b, c), between(l, b, a, c), between(l, a, c, b))


def run_th1_5(bounds) -> tuple[int, dict | None]:
    """Some one of any three points is between the other two."""
    n = 0
    for l in enumerate_lines(bounds["max_points"]):
        for a, b, c in combinations(l.seq, 3):
            n += 1
            if not any(_triple_relations(l, a, b, c)):
                return n, {
                    "kind": "line", "line": list(l.seq), "triple": [a, b, c],
                    "model": _line_model(l), "env": {"x": _names(l.seq)},
                    "formula": (f"{_betw_formula(a, b, c)} | {_betw_formula(b, a, c)}"
                                f" | {_betw_formula(a, c, b)}"),
                    "evaluates_to": False,
                }
    return n, None


def run_th1_6(bounds) -> tuple[int, dict | None]:
    """At most one of any three points is between the other two."""
    n = 0
    for l in enumerate_lines(bounds["max_points"]):
        for a, b, c in combinations(l.seq, 3):
            n += 1
            if sum(_triple_relations(l, a, b, c)) > 1:
                return n, {
                    "kind": "line", "line": list(l.seq), "triple": [a, b, c],
                    "model": _line_model(l), "env": {"x": _names(l.seq)},
                    "formula": (f"~[{_betw_formula(a, b, c)} & {_betw_formula(b, a, c)}]"),
                    "evaluates_to": False,
                }
    return n, None


def run_th1_7(bounds) -> tuple[int, dict | None]:
    """No end point is between two points of its line."""
    n = 0
    for l in enumerate_lines(bounds["max_points"]):
        ends = (l.seq[0], l.seq[-1])
        for p, q in combinations(l.seq, 2):
            for e in ends:
                if e in (p, q):
                    continue
                n += 1
                if between(l, p, e, q):
                    return n, {
                        "kind": "line", "line": list(l.seq), "pair": [p, q],
                        "end": e, "model": _line_model(l),
                        "env": {"x": _names(l.seq)},
                        "formula": f"~{_betw_formula(p, e, q)}",
                        "evaluates_to": False,
                    }
    return n, None


def _free_between_cex(l: Line, mid, lo, hi, extra_formula="") -> dict:
    """Counterexample payload for a free-reading betweenness violation:
    the witness pair of degenerate sub-lines exists inside the member
    set, confirmed by set algebra over the bindings."""
    r = sorted((lo, mid))
    s = sorted((mid, hi))
    nm = point_to_name
    formula = (f"[(r + s) -> x] & [{nm(lo)} -> r] & [{nm(mid)} -> r]"
               f" & [{nm(mid)} -> s] & [{nm(hi)} -> s]"
               f" & ~[{nm(hi)} -> r] & ~[{nm(lo)} -> s]" + extra_formula)
    return {
        "kind": "free-between", "line": list(l.seq),
        "between": [lo, mid, hi],
        "model": _line_model(l),
        "env": {"x": _names(l.seq), "r": _names(r), "s": _names(s)},
        "formula": formula,
        "evaluates_to": True,
    }


def run_th1_6_free(bounds) -> tuple[int, dict | None]:
    """Free reading of betweenness: any sub-sequence pair is a witness, so
    two of three points can both be between the others.  The scan finds
    the canonical-minimal violating instance."""
    n = 0
    for l in enumerate_lines(bounds["max_points"]):
        for a, b, c in combinations(l.seq, 3):
            n += 1
            rels = (free_between(l.member_set, a, b, c),
                    free_between(l.member_set, b, a, c),
                    free_between(l.member_set, a, c, b))
            if sum(rels) > 1:
                return n, _free_between_cex(l, a, b, c)
    return n, None


def run_th1_7_free(bounds) -> tuple[int, dict | None]:
    """Free reading: an end point is between any pair of its line."""
    n = 0
    for l in enumerate_lines(bounds["max_points"]):
        e = l.seq[0]
        for p, q in combinations(l.seq, 2):
            if e in (p, q):
                continue
            n += 1
            if free_between(l.member_set, p, e, q):
                return n, _free_between_cex(l, e, p, q)
    return n, None


def run_th1_8(bounds) -> tuple[int, dict | None]:
    """Every point pair of a ring re-chords it: the two arcs share exactly
    the pair, exhaust the ring, and recompose it."""
    n = 0
    for r in enumerate_rings(bounds["max_points"]):
        for p, q in combinations(sorted(r.member_set), 2):
            n += 1
            a, b = ring_rechord(r, p, q)
            ok = (a.member_set & b.member_set == frozenset((p, q))
                  and a.member_set | b.member_set == r.member_set
                  and ring_from_lines(a, b) == r)
            if not ok:
                return n, {
                    "kind": "ring", "ring": list(r.cyc), "pair": [p, q],
                    "model": {"points": _names(sorted(r.member_set)),
                              "lines": [],
                              "rings": [{"id": "r0", "cyc": _names(r.cyc)}],
                              "families": [], "areas": []},
                    "env": {"x": _names(r.cyc)},
                    "formula": f"RING({point_to_name(r.cyc[0])};x)",
                    "evaluates_to": True,
                }
    return n, None


def run_th1_9(bounds) -> tuple[int, dict | None]:
    """Every one of three ring points is between the other two.

    The scan computes each relation from arc positions (the two arcs of
    a simple cycle meet only in their shared ends, so the relation is
    membership of the middle point in exactly one arc interior).  The
    first ring of each size is cross-checked against the public
    ``between`` operation arc by arc.
    """
    n = 0
    last_size = 0
    for r in enumerate_rings(bounds["max_points"]):
        cross_check = len(r.cyc) != last_size
        last_size = len(r.cyc)
        pos = {p: i for i, p in enumerate(r.cyc)}
        for a, b, c in combinations(sorted(r.member_set), 3):
            n += 1
            ok = True
            for x, y, z in ((a, b, c), (b, a, c), (a, c, b)):
                px, py, pz = pos[x], pos[y], pos[z]
                if px > pz:
                    px, pz = pz, px
                in_first = px < py < pz
                in_second = py < px or py > pz
                rel = in_first != in_second
                if cross_check and rel != between(r, x, y, z):
                    rel = False  # disagreement between routes is a failure
                if not rel:
                    ok = False
                    break
            if not ok:
                return n, {
                    "kind": "ring", "ring": list(r.cyc), "triple": [a, b, c],
                    "model": {"points": _names(sorted(r.member_set)),
                              "lines": [],
                              "rings": [{"id": "r0", "cyc": _names(r.cyc)}],
                              "families": [], "areas": []},
                    "env": {"x": _names(r.cyc)},
                    "formula": _betw_formula(a, b, c),
                    "evaluates_to": False,
                }
    return n, None


def run_th1_10(bounds) -> tuple[int, dict | None]:
    """No ring fits inside a line.

    An injective map of a ring's members into a line induces a linear
    order on them, and betweenness of mapped triples depends only on
    that order; every linear order of k members occurs among the
    canonical lines of length k.  Since all three ring relations hold
    for every ring triple (the previous check), it suffices that no line
    order satisfies all three relations of any triple.  The scan
    evaluates the three interval relations for every order and triple.
    """
    n = 0
    for k in range(4, bounds["max_points"] + 1):
        triples = list(combinations(range(k), 3))
        for perm in permutations(range(k)):
            if perm[0] > perm[-1]:
                continue
            pos = [0] * k
            for i, p in enumerate(perm):
                pos[p] = i
            for a, b, c in triples:
                n += 1
                pa, pb, pc = pos[a], pos[b], pos[c]
                r1 = pa < pb < pc or pc < pb < pa
                r2 = pb < pa < pc or pc < pa < pb
                r3 = pa < pc < pb or pb < pc < pa
                if r1 and r2 and r3:
                    l = Line(perm)
                    return n, {
                        "kind": "ring-in-line", "line": list(perm),
                        "triple": [a, b, c],
                        "model": _line_model(l),
                        "env": {"x": _names(l.seq)},
                        "formula": (f"~[{_betw_formula(a, b, c)} & "
                                    f"{_betw_formula(b, a, c)} & "
                                    f"{_betw_formula(a, c, b)}]"),
                        "evaluates_to": False,
                    }
    return n, None
