"""Independent brute-force decision procedure for seriateness of a point
sequence.

This oracle is deliberately separate from the library: it searches the
space of ALL candidate decompositions (arbitrary block families with
junction overlaps, not just ordered two-block splits of the sequence)
and checks the five decomposition clauses verbatim on each candidate.

Search-space derivation, straight from the clauses themselves: in any
family satisfying (ii)-(iv), an element shared by two blocks is an E
object of both, a non-outer E object lies in exactly two blocks, and
exactly two E objects (the candidate's E pair) lie in exactly one.  So
element multiplicities are 1 or 2, the multiplicity-2 elements are the
"junctions", and counting E slots gives  2 * #blocks = 2 * #junctions + 2.
The oracle therefore enumerates every junction set J containing the
given I object, assigns every other element to one of |J|+1 blocks and
every junction to an unordered pair of blocks, tries every admissible E
pair per block, and accepts if any resulting family passes clauses
(i)-(v) with every block recursively seriate (relaxed).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product


def is_seriate_sequence(seq, strict: bool = True) -> bool:
    """Decide seriateness of a point sequence with its ends as E pair."""
    seq = tuple(seq)
    if len(set(seq)) != len(seq):
        return False  # clause (a): repeated part
    minimum = 3 if strict else 2
    if len(seq) < minimum:
        return False
    if len(seq) == 2:
        return True  # relaxed base: no I objects
    members = frozenset(seq)
    e_pair = frozenset((seq[0], seq[-1]))
    return _is_seriate_set(members, e_pair)


@lru_cache(maxsize=4096)
def _is_seriate_set(members: frozenset, e_pair: frozenset) -> bool:
    """Set-level seriateness: every I object admits some decomposition."""
    if len(members) == 2:
        return e_pair == members
    if not e_pair <= members or len(e_pair) != 2:
        return False
    for p in members - e_pair:
        if not _exists_decomposition(members, e_pair, p):
            return False
    return True


def _exists_decomposition(members: frozenset, e_pair: frozenset, p) -> bool:
    interior = sorted(members - e_pair)
    others = sorted(members)
    for j_size in range(1, len(interior) + 1):
        for junctions in combinations(interior, j_size):
            if p not in junctions:
                continue
            k = j_size + 1  # forced by the E-slot count
            singles = [m for m in others if m not in junctions]
            for star in _families(singles, junctions, k):
                if _clauses_hold(members, e_pair, p, star):
                    return True
    return False


def _families(singles, junctions, k):
    """All block families: singles to one block, junctions to a block pair."""
    single_choices = product(range(k), repeat=len(singles))
    pair_choices = list(combinations(range(k), 2))
    for sc in single_choices:
        base = [set() for _ in range(k)]
        for m, b in zip(singles, sc):
            base[b].add(m)
        for jc in product(pair_choices, repeat=len(junctions)):
            blocks = [set(b) for b in base]
            for j, (b1, b2) in zip(junctions, jc):
                blocks[b1].add(j)
                blocks[b2].add(j)
            if any(len(b) < 2 for b in blocks):
                continue
            yield from _with_e_pairs(blocks, junctions)


def _with_e_pairs(blocks, junctions):
    """Attach every admissible E pair to every block: junction members are
    forced to be E objects of their blocks."""
    options = []
    for b in blocks:
        forced = [m for m in b if m in junctions]
        if len(forced) > 2:
            return
        if len(forced) == 2:
            options.append([frozenset(forced)])
        elif len(forced) == 1:
            options.append([frozenset((forced[0], o))
                            for o in sorted(b) if o != forced[0]])
        else:
            options.append([frozenset(pr) for pr in combinations(sorted(b), 2)])
    for choice in product(*options):
        yield tuple((frozenset(b), ep) for b, ep in zip(blocks, choice))


def _clauses_hold(members, e_pair, p, star) -> bool:
    blocks = [b for b, _ in star]
    eps = [ep for _, ep in star]
    # each block must itself be a seriate set (relaxed recursion)
    for b, ep in star:
        if not _is_seriate_set(b, ep):
            return False
    # (i) union identity
    u = set()
    for b in blocks:
        u |= b
    if u != set(members):
        return False
    # (ii) sharing only as E objects of the sharing block
    for (b1, ep1), (b2, ep2) in combinations(star, 2):
        for m in b1 & b2:
            if m not in ep1 or m not in ep2:
                return False
    # (iii) exactly two E objects in no other block, equal to the E pair
    def mult(m):
        return sum(1 for b in blocks if m in b)
    all_es = set()
    for ep in eps:
        all_es |= ep
    outer = {m for m in all_es if mult(m) == 1}
    if outer != set(e_pair):
        return False
    # (iv) every other E object in exactly two blocks; the given I object
    # must be such an E object
    inner = all_es - outer
    if any(mult(m) != 2 for m in inner):
        return False
    if p not in inner:
        return False
    # (v) no sub-family in which every E object of every member is shared
    # with another member
    n = len(star)
    for r in range(1, n + 1):
        for sub in combinations(range(n), r):
            loop = True
            for i in sub:
                for m in eps[i]:
                    if not any(m in blocks[j] for j in sub if j != i):
                        loop = False
                        break
                if not loop:
                    break
            if loop:
                return False
    return True
