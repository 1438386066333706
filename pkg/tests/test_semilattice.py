import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nextclosure.semilattice import (
    INTERSECTION,
    UNION,
    EmptyGeneratorsError,
    GeneratorTable,
    LecticOrdering,
    Order,
    Semilattice,
    check_laws,
    delta,
    enumerate_all,
    first_element,
    footprint,
    generated_semilattice,
    join_irreducibles,
    lectic_compare,
    leq,
    next_element,
    plus,
)

from conftest import AB, A, B, E, lectic_key, oracle_closure_under_join, oracle_sorted


def idx(*positions):
    return sum(1 << p for p in positions)


class TestSpecExamples:
    def test_leq(self):
        assert leq(A, AB)
        assert not leq(A, B)
        assert leq(A, A)

    def test_footprint(self, s1):
        assert footprint(E, s1) == idx(2)
        assert footprint(A, s1) == idx(0, 2)
        assert footprint(AB, s1) == idx(0, 1, 2)

    def test_delta(self, s1):
        assert delta(AB, AB, s1) == 0
        assert delta(E, A, s1) == idx(0)
        assert delta(A, B, s1) == idx(0, 1)

    def test_compare(self, s1):
        assert lectic_compare(B, A, s1) == LecticOrdering(Order.LESS, 0)
        assert lectic_compare(A, A, s1) == LecticOrdering(Order.EQUAL)
        assert lectic_compare(AB, A, s1) == LecticOrdering(Order.GREATER, 1)

    def test_plus(self, s1):
        assert plus(E, 1, s1) == B
        assert plus(A, 1, s1) == AB
        assert plus(B, 0, s1) == A
        with pytest.raises(IndexError):
            plus(A, 3, s1)

    def test_next(self, s1):
        assert next_element(E, s1) == B
        assert next_element(A, s1) == AB
        assert next_element(AB, s1) is None

    def test_first(self, s1):
        assert first_element(s1) == E
        assert first_element(GeneratorTable(UNION, [A])) == A
        assert first_element(GeneratorTable(UNION, [A, B])) == B
        with pytest.raises(EmptyGeneratorsError):
            first_element(GeneratorTable(UNION, []))

    def test_enumerate_all(self, s1):
        assert enumerate_all(s1) == [E, B, A, AB]
        assert enumerate_all(GeneratorTable(UNION, [A])) == [A]
        assert enumerate_all(GeneratorTable(UNION, [A, B])) == [B, A, AB]
        with pytest.raises(EmptyGeneratorsError):
            enumerate_all(GeneratorTable(UNION, []))

    def test_frozen_sequences_match_oracle(self, s1):
        join, le = UNION.join, UNION.leq
        assert oracle_sorted([A, B, E], join, le) == [E, B, A, AB]
        assert oracle_sorted([A, B], join, le) == [B, A, AB]

    def test_join_irreducibles(self):
        assert set(join_irreducibles([E, A, B, AB])) == {E, A, B}
        assert set(join_irreducibles([E, A])) == {E, A}
        assert join_irreducibles([A]) == [A]

    def test_generated_semilattice(self, s1):
        assert len(generated_semilattice(s1)) == 4
        assert generated_semilattice(GeneratorTable(UNION, [A, B])) == {A, B, AB}
        assert generated_semilattice(GeneratorTable(UNION, [A])) == {A}


def test_divisibility_semilattice():
    # join = lcm, order = divisibility; generators fixed as (4, 6, 1, 9)
    lcm = Semilattice(math.lcm)
    table = GeneratorTable(lcm, [4, 6, 1, 9])
    got = enumerate_all(table)
    assert got == oracle_sorted(table.generators, lcm.join, lcm.leq)
    assert set(got) == {1, 4, 6, 9, 12, 18, 36}
    assert got[0] == 1


def test_intersection_semilattice_orders_by_reverse_inclusion():
    assert INTERSECTION.leq(0b111, 0b011)
    assert not INTERSECTION.leq(0b011, 0b111)


def test_custom_equality_is_used():
    # elements are (value, tag) pairs; tags are ignored by equality
    lat = Semilattice(lambda a, b: (a[0] | b[0], "j"), equals=lambda a, b: a[0] == b[0])
    table = GeneratorTable(lat, [(1, "x"), (2, "y")])
    assert [v for v, _ in enumerate_all(table)] == [2, 1, 3]


def test_duplicate_generators_and_dedup():
    table = GeneratorTable(UNION, [A, B, A, E, B])
    assert enumerate_all(table) == oracle_sorted(table.generators, UNION.join, UNION.leq)
    assert table.deduplicated().generators == (A, B, E)
    assert set(enumerate_all(table.deduplicated())) == set(enumerate_all(table))


def test_check_laws():
    assert check_laws([0, 1, 2, 3], UNION) == []
    bad = Semilattice(lambda a, b: a - b)
    assert {v.law for v in check_laws([1, 2], bad)} >= {"idempotent", "commutative"}


# ---------------------------------------------------------------- properties

gen_lists = st.lists(st.integers(0, 255), min_size=1, max_size=7)


def _table(gens):
    return GeneratorTable(UNION, gens)


@settings(max_examples=150, deadline=None)
@given(gen_lists)
def test_enumeration_matches_oracle(gens):
    table = _table(gens)
    got = enumerate_all(table)
    expected = oracle_sorted(gens, UNION.join, UNION.leq)
    assert got == expected
    assert len(got) == len(set(got)) == len(generated_semilattice(table))
    for a, b in zip(got, got[1:]):
        assert lectic_compare(a, b, table).outcome is Order.LESS


@settings(max_examples=150, deadline=None)
@given(gen_lists)
def test_skip_rule_is_sound(gens):
    table = _table(gens)
    for a in generated_semilattice(table):
        assert next_element(a, table) == next_element(a, table, skip=False)


@settings(max_examples=150, deadline=None)
@given(gen_lists)
def test_first_element_is_lectic_minimum(gens):
    table = _table(gens)
    elems = oracle_closure_under_join(gens, UNION.join)
    expected = min(elems, key=lambda e: lectic_key(e, gens, UNION.leq))
    assert first_element(table) == expected


@settings(max_examples=150, deadline=None)
@given(gen_lists)
def test_footprints_reconstruct_and_are_injective(gens):
    table = _table(gens)
    seen = {}
    for a in generated_semilattice(table):
        fp = footprint(a, table)
        joined = 0
        for i, x in enumerate(gens):
            if fp >> i & 1:
                joined |= x
        assert joined == a
        assert fp not in seen
        seen[fp] = a


@settings(max_examples=100, deadline=None)
@given(gen_lists)
def test_order_properties(gens):
    table = _table(gens)
    elems = sorted(generated_semilattice(table))
    cmp = {(a, b): lectic_compare(a, b, table) for a in elems for b in elems}
    for (a, b), r in cmp.items():
        assert (r.outcome is Order.EQUAL) == (a == b)
        # antisymmetry of the witness
        back = cmp[b, a]
        assert back.witness == r.witness
        assert back.outcome.value == -r.outcome.value
        if UNION.leq(a, b):
            assert r.outcome is not Order.GREATER
        if r.outcome is Order.LESS:
            i = r.witness
            for k in range(i):
                assert UNION.leq(gens[k], a) == UNION.leq(gens[k], b)
            # helper lemma iii and iv
            p = plus(a, i, table)
            assert cmp[p, b].outcome is not Order.GREATER
            assert lectic_compare(a, p, table) == LecticOrdering(Order.LESS, i)
    for i, x in enumerate(gens):
        for a in elems:
            if not UNION.leq(x, a):
                assert cmp[a, plus(a, i, table)].outcome is Order.LESS


@settings(max_examples=60, deadline=None)
@given(gen_lists)
def test_transitivity(gens):
    table = _table(gens)
    elems = sorted(generated_semilattice(table))
    less = {(a, b) for a in elems for b in elems if lectic_compare(a, b, table).outcome is Order.LESS}
    for a, b in less:
        for c in elems:
            if (b, c) in less:
                assert (a, c) in less


def test_join_irreducibles_of_powerset_are_singletons_and_empty():
    elems = list(range(16))
    assert sorted(join_irreducibles(elems)) == [0, 1, 2, 4, 8]


@settings(max_examples=80, deadline=None)
@given(gen_lists)
def test_join_irreducibles_generate_and_are_needed(gens):
    table = _table(gens)
    elems = generated_semilattice(table)
    irr = join_irreducibles(elems)
    assert generated_semilattice(_table(irr)) == elems
    # every irreducible appears among the generators
    assert set(irr) <= set(gens)
