"""Shared fixtures and independent oracles.

The oracles here work on frozensets and plain loops and deliberately avoid
the package's bitmask code paths.
"""

import itertools

import pytest

from nextclosure import FormalContext, GeneratorTable, UNION

A = frozenset("a")
B = frozenset("b")
AB = frozenset("ab")
E = frozenset()


@pytest.fixture
def s1():
    """({a}, {b}, {}) under union."""
    return GeneratorTable(UNION, [A, B, E])


@pytest.fixture
def k1():
    return FormalContext.from_sets([[0, 1], [1, 2], [0, 2]], 3)


def lectic_key(elem, generators, leq):
    """Lexicographic key on generator-membership tuples; False sorts first."""
    return tuple(leq(x, elem) for x in generators)


def oracle_closure_under_join(generators, join):
    elems = set(generators)
    while True:
        new = {join(a, b) for a in elems for b in elems} - elems
        if not new:
            return elems
        elems |= new


def oracle_sorted(generators, join, leq):
    elems = oracle_closure_under_join(generators, join)
    return sorted(elems, key=lambda e: lectic_key(e, generators, leq))


def set_rows(K):
    """Context rows as frozensets of attribute positions, read cell by cell."""
    return [frozenset(m for m in range(K.n_attributes) if K.has(g, m)) for g in range(K.n_objects)]


def oracle_intents(K):
    """{B'' : B subset of M} with set-based derivations."""
    rows = set_rows(K)
    M = frozenset(range(K.n_attributes))
    out = set()
    for r in range(K.n_attributes + 1):
        for b in itertools.combinations(range(K.n_attributes), r):
            b = frozenset(b)
            ext = [row for row in rows if b <= row]
            out.add(frozenset.intersection(M, *ext))
    return out


def oracle_extents(K):
    rows = set_rows(K)
    G = frozenset(range(K.n_objects))
    out = set()
    for r in range(K.n_objects + 1):
        for a in itertools.combinations(range(K.n_objects), r):
            common = frozenset.intersection(frozenset(range(K.n_attributes)), *(rows[g] for g in a))
            out.add(frozenset(g for g in G if common <= rows[g]))
    return out


def to_set(mask):
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def intent_key(intent, rows, full):
    """Generalized lectic key for intents: generators are the rows followed by M, order is reverse inclusion."""
    return tuple(row >= intent for row in rows) + (full >= intent,)


ACCEPTANCE_RESULTS = []


def record(criterion, ok, detail):
    ACCEPTANCE_RESULTS.append((criterion, ok, detail))
    print(f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}")
