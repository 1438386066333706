"""Classic Next-Closure for closure operators on ``{0, ..., n-1}``.

Subsets are int bitmasks (see :mod:`nextclosure.bits`). Element 0 is the
lectically most significant position.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from . import bits
from .semilattice import GeneratorTable, Semilattice

#: Largest ``n`` for which :func:`validate_closure_axioms` checks every subset.
EXHAUSTIVE_LIMIT = 12
#: Default cap for :func:`brute_force_closed`.
BRUTE_FORCE_LIMIT = 20


@dataclass(frozen=True)
class ClosureOperator:
    """A map on subsets of ``{0, ..., n-1}`` expected to be a closure operator.

    ``apply`` is called with and must return int bitmasks. The axioms are
    not enforced; use :func:`validate_closure_axioms`.
    """

    n: int
    apply: Callable[[int], int]

    def __call__(self, subset: int) -> int:
        return self.apply(subset)

    @property
    def base(self) -> int:
        return bits.full(self.n)


def identity(n: int) -> ClosureOperator:
    return ClosureOperator(n, lambda a: a)


def constant_full(n: int) -> ClosureOperator:
    m = bits.full(n)
    return ClosureOperator(n, lambda a: m)


@dataclass(frozen=True)
class Violation:
    axiom: str  # "extensive", "idempotent" or "monotone"
    subset: int
    other: Optional[int] = None


def validate_closure_axioms(c: ClosureOperator, samples: int = 2000, seed: int = 0) -> list[Violation]:
    """Look for violations of extensivity, idempotency and monotonicity.

    For ``n <= EXHAUSTIVE_LIMIT`` every subset is checked, with monotonicity
    tested on each pair ``A`` and ``A | {i}`` (which covers all pairs by
    transitivity). Larger operators are probed on ``samples`` random subsets.
    An empty list means nothing was found.
    """
    if c.n <= EXHAUSTIVE_LIMIT:
        subsets = range(1 << c.n)
    else:
        rng = random.Random(seed)
        subsets = [rng.getrandbits(c.n) for _ in range(samples)]

    found = []
    for a in subsets:
        ca = c(a)
        if a & ca != a:
            found.append(Violation("extensive", a))
        if c(ca) != ca:
            found.append(Violation("idempotent", a))
        for i in range(c.n):
            if not a >> i & 1:
                b = a | 1 << i
                if ca & c(b) != ca:
                    found.append(Violation("monotone", a, b))
    return found


def classic_plus(a: int, i: int, c: ClosureOperator) -> int:
    """``c({j in a : j < i} | {i})``."""
    return c(bits.prefix(a, i) | 1 << i)


def classic_next(a: int, c: ClosureOperator) -> Optional[int]:
    """Lectically next closed set after the closed set ``a``, or ``None``."""
    for i in range(c.n - 1, -1, -1):
        if a >> i & 1:
            continue
        b = classic_plus(a, i, c)
        # b agrees with a below i
        if bits.prefix(b ^ a, i) == 0:
            return b
    return None


def iter_closed(c: ClosureOperator) -> Iterator[int]:
    a: Optional[int] = c(0)
    while a is not None:
        yield a
        a = classic_next(a, c)


def classic_enumerate(c: ClosureOperator) -> list[int]:
    """All closed sets of ``c`` in lectic order, starting from ``c(0)``."""
    return list(iter_closed(c))


def closure_semilattice(c: ClosureOperator) -> Semilattice[int]:
    """Closed sets of ``c`` with ``X v Y = c(X | Y)``."""
    return Semilattice(lambda x, y: c(x | y))


def closure_generators(c: ClosureOperator) -> GeneratorTable[int]:
    """Generators ``c({0}), ..., c({n-1}), c(0)`` for the closed-set semilattice.

    The last entry only provides the starting point; it lies below every
    closed set and so is never used to build a successor.
    """
    gens = [c(1 << i) for i in range(c.n)]
    gens.append(c(0))
    return GeneratorTable(closure_semilattice(c), gens)


def brute_force_closed(c: ClosureOperator, limit: int = BRUTE_FORCE_LIMIT) -> set[int]:
    """``{c(A) : A subset of M}`` by applying ``c`` to every subset (test oracle)."""
    if c.n > limit:
        raise ValueError(f"base set of size {c.n} exceeds brute-force limit {limit}")
    return {c(a) for a in range(1 << c.n)}
