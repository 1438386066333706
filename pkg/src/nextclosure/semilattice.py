"""Next-Closure over an arbitrary finite join-semilattice.

The semilattice is described by a binary ``join`` and an equality test. It is
enumerated from a finite *generator sequence*: position 0 is the smallest
index and the lectically most significant one. Every element ``a`` is
identified by its footprint, the bitmask of generator positions ``i`` with
``x_i <= a``, and two elements compare lectically by the smallest position at
which their footprints differ.

Nothing here assumes the elements are sets; the tests use ints, frozensets and
closure systems, and :mod:`nextclosure.context` uses the intersection
semilattice of intents.
"""

from __future__ import annotations

import enum
import operator
from dataclasses import dataclass, field
from typing import Any, Callable, Generic, Hashable, Iterable, Iterator, Optional, Sequence, TypeVar

from . import bits

T = TypeVar("T")


class EmptyGeneratorsError(ValueError):
    """Raised when asked to enumerate from an empty generator sequence."""


@dataclass(frozen=True)
class Semilattice(Generic[T]):
    """A join operation plus the equality used to derive its order.

    ``join`` must be associative, commutative and idempotent on the elements
    that are actually reached; this is not checked (see :func:`check_laws`).
    """

    join: Callable[[T, T], T]
    equals: Callable[[T, T], bool] = operator.eq

    def leq(self, a: T, b: T) -> bool:
        """``a <= b`` in the derived order, i.e. ``join(a, b) == b``."""
        return self.equals(self.join(a, b), b)

    def join_all(self, first: T, rest: Iterable[T]) -> T:
        acc = first
        for x in rest:
            acc = self.join(acc, x)
        return acc


#: Set union on ints or frozensets; the order is inclusion.
UNION: Semilattice[Any] = Semilattice(operator.or_)
#: Set intersection as a join; the derived order is reverse inclusion.
INTERSECTION: Semilattice[Any] = Semilattice(operator.and_)


def leq(a: T, b: T, lattice: Semilattice[T] = UNION) -> bool:
    return lattice.leq(a, b)


@dataclass(frozen=True)
class GeneratorTable(Generic[T]):
    """An ordered generator sequence ``(x_0, ..., x_{n-1})`` over ``lattice``.

    Duplicates are allowed. The table is immutable and may be shared between
    concurrently running enumerations.
    """

    lattice: Semilattice[T]
    generators: tuple[T, ...]

    def __init__(self, lattice: Semilattice[T], generators: Iterable[T]):
        object.__setattr__(self, "lattice", lattice)
        object.__setattr__(self, "generators", tuple(generators))

    def __len__(self) -> int:
        return len(self.generators)

    def __getitem__(self, i: int) -> T:
        return self.generators[i]

    def deduplicated(self) -> GeneratorTable[T]:
        """Drop later copies of equal generators, keeping first positions."""
        kept: list[T] = []
        for x in self.generators:
            if not any(self.lattice.equals(x, y) for y in kept):
                kept.append(x)
        return GeneratorTable(self.lattice, kept)


class Order(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class LecticOrdering:
    outcome: Order
    witness: Optional[int] = None


def footprint(a: T, table: GeneratorTable[T]) -> int:
    """Bitmask of the positions ``i`` with ``x_i <= a``."""
    leq_ = table.lattice.leq
    mask = 0
    for i, x in enumerate(table.generators):
        if leq_(x, a):
            mask |= 1 << i
    return mask


def delta(a: T, b: T, table: GeneratorTable[T]) -> int:
    """Positions of generators below exactly one of ``a`` and ``b``."""
    return footprint(a, table) ^ footprint(b, table)


def compare_footprints(fa: int, fb: int) -> LecticOrdering:
    diff = fa ^ fb
    if not diff:
        return LecticOrdering(Order.EQUAL)
    i = bits.lowest(diff)
    return LecticOrdering(Order.LESS if fb >> i & 1 else Order.GREATER, i)


def lectic_compare(a: T, b: T, table: GeneratorTable[T]) -> LecticOrdering:
    """Compare two generated elements in the lectic order of ``table``.

    The witness is the smallest position whose generator lies below exactly
    one of the two; ``a`` is the smaller one iff that generator is below ``b``.
    """
    return compare_footprints(footprint(a, table), footprint(b, table))


def lectic_key(a: T, table: GeneratorTable[T]) -> tuple[bool, ...]:
    """Sort key realising the lectic order of ``table`` on generated elements."""
    fa = footprint(a, table)
    return tuple(bool(fa >> i & 1) for i in range(len(table)))


def _plus(fa: int, i: int, table: GeneratorTable[T]) -> T:
    gens = table.generators
    below = (gens[j] for j in bits.iter_indices(bits.prefix(fa, i)))
    return table.lattice.join_all(gens[i], below)


def plus(a: T, i: int, table: GeneratorTable[T]) -> T:
    """Join of ``x_i`` with every earlier generator lying below ``a``."""
    if not 0 <= i < len(table):
        raise IndexError(f"generator index {i} out of range for {len(table)} generators")
    return _plus(footprint(a, table), i, table)


def next_element(a: T, table: GeneratorTable[T], *, skip: bool = True) -> Optional[T]:
    """Lectic successor of ``a``, or ``None`` if ``a`` is the largest element.

    Positions are scanned from the last one down and the first candidate
    ``a (+) i`` that ``a`` precedes at position ``i`` is returned. With
    ``skip`` (the default) positions whose generator already lies below ``a``
    are passed over and acceptance only checks that no earlier generator
    outside the footprint of ``a`` moved under the candidate. ``skip=False``
    tries every position and runs a full lectic comparison instead; it exists
    as a slower cross-check.
    """
    gens = table.generators
    leq_ = table.lattice.leq
    fa = footprint(a, table)
    for i in range(len(gens) - 1, -1, -1):
        if skip:
            if fa >> i & 1:
                continue
            candidate = _plus(fa, i, table)
            outside = bits.prefix(~fa, i)
            if not any(leq_(gens[k], candidate) for k in bits.iter_indices(outside)):
                return candidate
        else:
            candidate = _plus(fa, i, table)
            if compare_footprints(fa, footprint(candidate, table)) == LecticOrdering(Order.LESS, i):
                return candidate
    return None


def first_element(table: GeneratorTable[T]) -> T:
    """Lectically smallest generated element.

    This is the minimal generator (with respect to the semilattice order) that
    sits at the largest position. With repeated generators only the first
    copy's position counts: later copies share its footprint.
    """
    gens = table.generators
    if not gens:
        raise EmptyGeneratorsError("no generators, nothing to enumerate")
    lat = table.lattice
    for i in range(len(gens) - 1, -1, -1):
        x = gens[i]
        if any(lat.equals(gens[j], x) for j in range(i)):
            continue
        if not any(lat.leq(y, x) and not lat.equals(y, x) for y in gens):
            return x
    raise AssertionError("finite generator set without a minimal element; join is not a semilattice")


def iter_elements(table: GeneratorTable[T]) -> Iterator[T]:
    a: Optional[T] = first_element(table)
    while a is not None:
        yield a
        a = next_element(a, table)


def enumerate_all(table: GeneratorTable[T]) -> list[T]:
    """All generated elements in strictly increasing lectic order."""
    return list(iter_elements(table))


def join_irreducibles(elements: Iterable[T], lattice: Semilattice[T] = UNION) -> list[T]:
    """Elements that are not the join of the strictly smaller input elements.

    An element qualifies when nothing in ``elements`` lies strictly below it,
    or when the join of everything strictly below it is still strictly below it.
    Input order is preserved.
    """
    elems = list(elements)
    result = []
    for a in elems:
        lower = [b for b in elems if lattice.leq(b, a) and not lattice.equals(b, a)]
        if not lower:
            result.append(a)
            continue
        j = lattice.join_all(lower[0], lower[1:])
        if lattice.leq(j, a) and not lattice.equals(j, a):
            result.append(a)
    return result


H = TypeVar("H", bound=Hashable)


def generated_semilattice(table: GeneratorTable[H]) -> set[H]:
    """Brute-force closure of the generators under join (test oracle).

    Relies on the elements' own hashing and ``==``, not on ``lattice.equals``.
    """
    if not table.generators:
        raise EmptyGeneratorsError("no generators, nothing to enumerate")
    join = table.lattice.join
    seen = set(table.generators)
    frontier = list(seen)
    while frontier:
        fresh = []
        for a in frontier:
            for x in table.generators:
                b = join(a, x)
                if b not in seen:
                    seen.add(b)
                    fresh.append(b)
        frontier = fresh
    return seen


@dataclass
class LawViolation:
    law: str
    operands: tuple[Any, ...] = field(default_factory=tuple)


def check_laws(elements: Sequence[T], lattice: Semilattice[T]) -> list[LawViolation]:
    """Exhaustively test the semilattice laws on ``elements`` (cubic in size)."""
    join, eq = lattice.join, lattice.equals
    out = []
    for a in elements:
        if not eq(join(a, a), a):
            out.append(LawViolation("idempotent", (a,)))
        for b in elements:
            if not eq(join(a, b), join(b, a)):
                out.append(LawViolation("commutative", (a, b)))
            for c in elements:
                if not eq(join(join(a, b), c), join(a, join(b, c))):
                    out.append(LawViolation("associative", (a, b, c)))
    return out
