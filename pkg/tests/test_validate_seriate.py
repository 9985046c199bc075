"""Seriateness validation against the decomposition clauses and the
independent brute-force oracle."""

from itertools import product

import pytest

from oracle_seriate import is_seriate_sequence
from seriate.core import Line, SeriateCandidate, validate_seriate
from seriate import errors

A, B, C = 0, 1, 2


def test_minimal_strict_set():
    rep = validate_seriate(SeriateCandidate((A, B, C)))
    assert rep.valid and rep.violations == ()


def test_repeated_part_fails_clause_a():
    rep = validate_seriate(SeriateCandidate((A, B, A)))
    assert not rep.valid and "a" in rep.violations


def test_two_members_strict_vs_relaxed():
    two = SeriateCandidate((A, B))
    strict = validate_seriate(two, "strict")
    assert not strict.valid and "size" in strict.violations
    relaxed = validate_seriate(two, "relaxed")
    assert relaxed.valid


def test_loop_witness_fails_clause_v():
    loop = (SeriateCandidate((A, B)), SeriateCandidate((B, C)),
            SeriateCandidate((C, A)))
    rep = validate_seriate(SeriateCandidate((A, B, C), witness=loop))
    assert not rep.valid and "b.v" in rep.violations


def test_separate_loop_beside_chain_fails_clause_v():
    # a valid two-block chain plus a detached three-block cycle
    chain_plus_loop = (
        SeriateCandidate((0, 1)), SeriateCandidate((1, 2)),
        SeriateCandidate((3, 4)), SeriateCandidate((4, 5)),
        SeriateCandidate((5, 3)),
    )
    cand = SeriateCandidate((0, 1, 2, 3, 4, 5), e_pair=frozenset((0, 2)),
                            witness=chain_plus_loop)
    rep = validate_seriate(cand)
    assert not rep.valid and "b.v" in rep.violations


def test_good_witness_accepted():
    star = (SeriateCandidate((0, 1)), SeriateCandidate((1, 2, 3)))
    rep = validate_seriate(SeriateCandidate((0, 1, 2, 3), witness=star))
    assert rep.valid


def test_epair_must_match_sequence_ends():
    cand = SeriateCandidate((0, 1, 2), e_pair=frozenset((0, 1)))
    rep = validate_seriate(cand)
    assert not rep.valid and "b.iii" in rep.violations


def test_dimension_mismatch():
    with pytest.raises(errors.DimensionMismatch):
        validate_seriate(SeriateCandidate((0, Line([1, 2, 3]))))


def test_line_members_disjointness():
    rows = (Line([0, 1, 2]), Line([3, 4, 5]), Line([6, 7, 8]))
    assert validate_seriate(SeriateCandidate(rows)).valid
    overlapping = (Line([0, 1, 2]), Line([2, 3, 4]), Line([5, 6, 7]))
    rep = validate_seriate(SeriateCandidate(overlapping))
    assert not rep.valid and "a" in rep.violations


def test_oracle_agreement_small():
    # full agreement up to length 5 over a 5-point pool; the acceptance
    # suite runs the length-6 sweep
    pool = range(5)
    for length in range(1, 6):
        for seq in product(pool, repeat=length):
            lib = validate_seriate(SeriateCandidate(seq)).valid
            oracle = is_seriate_sequence(seq)
            injective = len(set(seq)) == len(seq)
            assert lib == oracle == (injective and length >= 3), seq


def test_oracle_agreement_relaxed():
    for seq in [(0, 1), (0, 0), (4, 2)]:
        lib = validate_seriate(SeriateCandidate(seq), "relaxed").valid
        assert lib == is_seriate_sequence(seq, strict=False)
