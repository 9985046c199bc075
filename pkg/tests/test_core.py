"""Dimension-0/1 kernel: line and ring operations, assertion rules."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seriate import errors
from seriate.core import (Line, ModelUniverse, Ring, assert_object, between,
                          concat, free_between, interval, ring_from_lines,
                          ring_rechord, split, split3)

A, B, C, D, E, P, Q, X, Y = 0, 1, 2, 3, 4, 15, 16, 23, 24


class TestLine:
    def test_reversal_identity(self):
        assert Line([A, X, B]) == Line([B, X, A])
        assert Line([2, 7, 5, 1]) == Line([1, 5, 7, 2])

    def test_canonical_orientation(self):
        assert Line([5, 3, 1]).seq == (1, 3, 5)

    def test_degenerate_flag(self):
        assert Line([A, B]).degenerate
        assert not Line([A, B, C]).degenerate

    def test_rejects_repeats_and_singletons(self):
        with pytest.raises(errors.InvalidObject):
            Line([A, B, A])
        with pytest.raises(errors.InvalidObject):
            Line([A])

    def test_ends_unordered(self):
        assert Line([A, X, B]).ends == frozenset((A, B))


class TestRing:
    def test_rotation_reflection_identity(self):
        r = Ring([A, X, B, Y])
        assert r == Ring([X, B, Y, A])
        assert r == Ring([A, Y, B, X])

    def test_canonical_starts_small_toward_smaller_neighbour(self):
        assert Ring([3, 1, 2, 4]).cyc[0] == 1
        r = Ring([0, 5, 2, 7])
        assert r.cyc[0] == 0 and r.cyc[1] <= r.cyc[-1]

    def test_minimum_size(self):
        with pytest.raises(errors.InvalidObject):
            Ring([A, B, C])


class TestConcat:
    def test_joins_through_shared_end(self):
        assert concat(Line([A, X, B]), Line([B, Y, C])) == Line([A, X, B, Y, C])

    def test_shared_interior_rejected(self):
        with pytest.raises(errors.SharedInterior):
            concat(Line([A, X, B]), Line([B, X, C]))

    def test_no_shared_endpoint(self):
        with pytest.raises(errors.NoSharedEndpoint):
            concat(Line([A, X, B]), Line([C, Y, D]))

    def test_multiple_shared(self):
        with pytest.raises(errors.MultipleShared):
            concat(Line([A, X, B]), Line([B, Y, A]))


class TestSplit:
    def test_interior_split(self):
        a, b = split(Line([A, P, Q, B]), Q)
        assert a == Line([A, P, Q]) and b == Line([Q, B])

    def test_degenerate_halves(self):
        a, b = split(Line([A, X, B]), X)
        assert a.degenerate and b.degenerate
        assert a.member_set | b.member_set == {A, X, B}

    def test_endpoint_rejected(self):
        with pytest.raises(errors.NotInterior):
            split(Line([A, P, B]), A)

    def test_absent_point(self):
        with pytest.raises(errors.NotMember):
            split(Line([A, P, B]), Q)


class TestSplit3:
    def test_three_intervals(self):
        a, m, b = split3(Line([A, P, X, Q, B]), P, Q)
        assert (a, m, b) == (Line([A, P]), Line([P, X, Q]), Line([Q, B]))

    def test_order_normalized(self):
        assert split3(Line([A, P, X, Q, B]), Q, P) == \
            split3(Line([A, P, X, Q, B]), P, Q)

    def test_duplicate_cut(self):
        with pytest.raises(errors.DuplicateCut):
            split3(Line([A, P, B]), P, P)


class TestInterval:
    def test_contiguous_run(self):
        assert interval(Line([A, P, X, Q, B]), P, Q) == Line([P, X, Q])

    def test_identity(self):
        assert interval(Line([A, P, B]), A, B) == Line([A, P, B])

    def test_not_member(self):
        with pytest.raises(errors.NotMember):
            interval(Line([A, P, B]), A, C)


class TestBetween:
    def test_line_between(self):
        assert between(Line([A, B, C]), A, B, C)
        assert not between(Line([A, B, C, D]), B, A, C)

    def test_ring_between_always(self):
        assert between(Ring([A, B, C, D]), C, A, B)

    def test_not_distinct(self):
        with pytest.raises(errors.NotDistinct):
            between(Line([A, B, C]), A, A, C)

    def test_free_reading_holds_everywhere(self):
        l = Line([A, B, C])
        assert free_between(l.member_set, B, A, C)
        assert free_between(l.member_set, A, B, C)


class TestRings:
    def test_compose(self):
        assert ring_from_lines(Line([A, X, B]), Line([B, Y, A])) == Ring([A, X, B, Y])

    def test_shared_interior(self):
        with pytest.raises(errors.SharedInterior):
            ring_from_lines(Line([A, X, B]), Line([B, X, A]))

    def test_endpoint_mismatch(self):
        with pytest.raises(errors.EndpointMismatch):
            ring_from_lines(Line([A, X, B]), Line([C, Y, A]))

    def test_rechord(self):
        r = Ring([A, X, B, Y])
        a, b = ring_rechord(r, X, Y)
        assert {a, b} == {Line([X, B, Y]), Line([Y, A, X])}
        assert ring_from_lines(a, b) == r

    def test_rechord_recovers_composition(self):
        r = Ring([A, X, B, Y])
        a, b = ring_rechord(r, A, B)
        assert {a, b} == {Line([A, X, B]), Line([B, Y, A])}

    def test_rechord_not_distinct(self):
        with pytest.raises(errors.NotDistinct):
            ring_rechord(Ring([A, X, B, Y]), A, A)


class TestAssertObject:
    def test_stability_same_epair_different_members(self):
        u = assert_object(ModelUniverse(), Line([A, X, B]))
        with pytest.raises(errors.StabilityViolation):
            assert_object(u, Line([A, Y, B]))

    def test_disjoint_line_succeeds(self):
        u = assert_object(ModelUniverse(), Line([A, X, B]))
        u = assert_object(u, Line([C, D, E]))
        assert Line([C, D, E]) in u.lines

    def test_ring_over_existing_arcs(self):
        u = ModelUniverse(points=frozenset({A, X, B, Y}),
                          lines=frozenset({Line([A, X, B]), Line([B, Y, A])}))
        u = assert_object(u, Ring([A, X, B, Y]))
        assert Ring([A, X, B, Y]) in u.rings

    def test_reassert_is_noop(self):
        u = assert_object(ModelUniverse(), Line([A, X, B]))
        assert assert_object(u, Line([A, X, B])) == u

    def test_sub_line_must_match_interval(self):
        u = assert_object(ModelUniverse(), Line([A, P, X, Q, B]))
        u = assert_object(u, interval(Line([A, P, X, Q, B]), P, Q))
        with pytest.raises(errors.StabilityViolation):
            assert_object(u, Line([P, Q]), strict=False)

    def test_ring_inside_line_contradiction(self):
        u = assert_object(ModelUniverse(), Line([A, B, C, D, E]))
        with pytest.raises(errors.ConsistencyViolation):
            assert_object(u, Ring([A, B, C, D]))

    def test_static_stability_invariant(self):
        with pytest.raises(errors.InvalidObject):
            ModelUniverse(points=frozenset({A, B, C, X}),
                          lines=frozenset({Line([A, X, B, C]), Line([A, B])}))


@settings(max_examples=120, derandomize=True)
@given(st.integers(min_value=3, max_value=7).flatmap(
    lambda n: st.permutations(list(range(n)))))
def test_split_concat_roundtrip(seq):
    l = Line(seq)
    for p in l.interiors():
        a, b = split(l, p)
        assert concat(a, b) == l


@settings(max_examples=120, derandomize=True)
@given(st.integers(min_value=3, max_value=7).flatmap(
    lambda n: st.permutations(list(range(n)))))
def test_between_trichotomy(seq):
    from itertools import combinations
    l = Line(seq)
    for a, b, c in combinations(l.seq, 3):
        rels = [between(l, a, b, c), between(l, b, a, c), between(l, a, c, b)]
        assert sum(rels) == 1


@settings(max_examples=80, derandomize=True)
@given(st.integers(min_value=3, max_value=6).flatmap(
    lambda n: st.permutations(list(range(n)))))
def test_endpoints_never_between(seq):
    from itertools import combinations
    l = Line(seq)
    for p, q in combinations(l.seq, 2):
        for e in (l.seq[0], l.seq[-1]):
            if e not in (p, q):
                assert not between(l, p, e, q)


@settings(max_examples=60, derandomize=True)
@given(st.integers(min_value=4, max_value=9).flatmap(
    lambda n: st.permutations(list(range(n)))))
def test_ring_rechord_exhausts(seq):
    from itertools import combinations
    r = Ring(seq)
    for p, q in combinations(sorted(r.member_set), 2):
        a, b = ring_rechord(r, p, q)
        assert a.member_set & b.member_set == frozenset((p, q))
        assert a.member_set | b.member_set == r.member_set


@settings(max_examples=60, derandomize=True)
@given(st.lists(st.integers(min_value=0, max_value=8), min_size=3, max_size=6,
                unique=True))
def test_assert_monotone(pts):
    l = Line(pts)
    u0 = assert_object(ModelUniverse(), l)
    assert l in u0.lines and l.member_set <= u0.points
    assert assert_object(u0, l) == u0
