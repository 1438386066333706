"""Formal contexts and enumeration of their intents.

Object and attribute subsets are int bitmasks over the context's index order.
Intents are enumerated with the semilattice form of Next-Closure applied to
``(intents, intersection)``, generated by the object rows ``{g}'`` in object
order. The full attribute set ``M`` comes first and acts as an extra
generator placed after every object.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from . import bits
from .closure import ClosureOperator, classic_enumerate


class FormalContext:
    """Objects, attributes and an incidence relation between them.

    ``rows[g]`` is the bitmask of attributes of object ``g``. Every access to
    the incidence through :meth:`row`, :meth:`column` or :meth:`has` is
    tallied in :attr:`reads`, counted in matrix cells; that counter is the
    only mutable state.
    """

    def __init__(self, objects: Sequence[str], attributes: Sequence[str], rows: Sequence[int]):
        self.objects = tuple(objects)
        self.attributes = tuple(attributes)
        self._rows = tuple(rows)
        if len(self._rows) != len(self.objects):
            raise ValueError(f"{len(self._rows)} rows for {len(self.objects)} objects")
        for names, kind in ((self.objects, "object"), (self.attributes, "attribute")):
            if len(set(names)) != len(names):
                raise ValueError(f"duplicate {kind} names")
        m = bits.full(len(self.attributes))
        for g, r in enumerate(self._rows):
            if r < 0 or r & ~m:
                raise ValueError(f"row {g} has bits outside {len(self.attributes)} attributes")
        self.reads = 0

    @classmethod
    def from_sets(
        cls,
        rows: Sequence[Iterable[int]],
        n_attributes: int,
        objects: Optional[Sequence[str]] = None,
        attributes: Optional[Sequence[str]] = None,
    ) -> FormalContext:
        """Build a context from per-object attribute index lists, naming ``g0..``, ``m0..`` by default."""
        objects = objects if objects is not None else [f"g{g}" for g in range(len(rows))]
        attributes = attributes if attributes is not None else [f"m{m}" for m in range(n_attributes)]
        return cls(objects, attributes, [bits.from_indices(r) for r in rows])

    @classmethod
    def from_matrix(
        cls,
        matrix: Sequence[Sequence[bool]],
        objects: Optional[Sequence[str]] = None,
        attributes: Optional[Sequence[str]] = None,
    ) -> FormalContext:
        width = len(attributes) if attributes is not None else (len(matrix[0]) if matrix else 0)
        rows = []
        for line in matrix:
            if len(line) != width:
                raise ValueError("ragged incidence matrix")
            rows.append([m for m, v in enumerate(line) if v])
        return cls.from_sets(rows, width, objects, attributes)

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    @property
    def n_attributes(self) -> int:
        return len(self.attributes)

    @property
    def all_objects(self) -> int:
        return bits.full(len(self.objects))

    @property
    def all_attributes(self) -> int:
        return bits.full(len(self.attributes))

    def row(self, g: int) -> int:
        self.reads += len(self.attributes)
        return self._rows[g]

    def column(self, m: int) -> int:
        self.reads += len(self.objects)
        return bits.from_indices(g for g, r in enumerate(self._rows) if r >> m & 1)

    def has(self, g: int, m: int) -> bool:
        self.reads += 1
        return bool(self._rows[g] >> m & 1)

    def transpose(self) -> FormalContext:
        cols = [
            bits.from_indices(g for g, r in enumerate(self._rows) if r >> m & 1)
            for m in range(len(self.attributes))
        ]
        return FormalContext(self.attributes, self.objects, cols)

    def subcontext(self, keep: Iterable[int]) -> FormalContext:
        """Context restricted to the objects at positions ``keep`` (in that order)."""
        keep = list(keep)
        return FormalContext([self.objects[g] for g in keep], self.attributes, [self._rows[g] for g in keep])

    def attribute_names(self, mask: int) -> list[str]:
        return [self.attributes[m] for m in bits.iter_indices(mask)]

    def object_names(self, mask: int) -> list[str]:
        return [self.objects[g] for g in bits.iter_indices(mask)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalContext):
            return NotImplemented
        return (self.objects, self.attributes, self._rows) == (other.objects, other.attributes, other._rows)

    def __hash__(self) -> int:
        return hash((self.objects, self.attributes, self._rows))

    def __repr__(self) -> str:
        return f"FormalContext({len(self.objects)} objects, {len(self.attributes)} attributes)"


def derive_attributes(K: FormalContext, objects: int) -> int:
    """Attributes shared by all given objects; the empty set yields ``M``."""
    result = K.all_attributes
    for g in bits.iter_indices(objects):
        result &= K.row(g)
    return result


def derive_objects(K: FormalContext, attributes: int) -> int:
    """Objects having every given attribute; the empty set yields ``G``."""
    result = 0
    for g in range(K.n_objects):
        if K.row(g) & attributes == attributes:
            result |= 1 << g
    return result


def intent_closure(K: FormalContext, attributes: int) -> int:
    return derive_attributes(K, derive_objects(K, attributes))


def closure_operator(K: FormalContext) -> ClosureOperator:
    """The double derivation on attribute sets of ``K``."""
    return ClosureOperator(K.n_attributes, lambda b: intent_closure(K, b))


def reducible_objects(K: FormalContext) -> list[int]:
    """Positions of objects that can be dropped without changing the intents.

    An object goes if an earlier object has the same row, or if its row equals
    the intersection of all rows strictly containing it. With no such rows
    that intersection is ``M``, so full rows are covered too.
    """
    rows = [K.row(g) for g in range(K.n_objects)]
    distinct = set(rows)
    drop = []
    seen = set()
    for g, r in enumerate(rows):
        if r in seen:
            drop.append(g)
            continue
        seen.add(r)
        meet = K.all_attributes
        for s in distinct:
            if s != r and s & r == r:
                meet &= s
        if meet == r:
            drop.append(g)
    return drop


def clarify_reduce_objects(K: FormalContext) -> FormalContext:
    """Object clarified and reduced copy of ``K``, keeping object order."""
    drop = set(reducible_objects(K))
    return K.subcontext(g for g in range(K.n_objects) if g not in drop)


@dataclass(frozen=True)
class ObjectIntentTable:
    """Object intents ``{g}'`` read once from a context, plus the full set ``M``."""

    rows: tuple[int, ...]
    full: int

    def __len__(self) -> int:
        return len(self.rows)


def object_intent_rows(K: FormalContext) -> ObjectIntentTable:
    """Read each object's attribute row once, cell by cell."""
    n, m = K.n_objects, K.n_attributes
    rows = []
    for g in range(n):
        r = 0
        for a in range(m):
            if K.has(g, a):
                r |= 1 << a
        rows.append(r)
    return ObjectIntentTable(tuple(rows), K.all_attributes)


@dataclass
class StepCounters:
    """Work done by one call of :func:`instrumented_next_intent`."""

    superset_tests: int = 0
    intersections: int = 0


def _next_intent(table: ObjectIntentTable, intent: int, counters: Optional[StepCounters]) -> Optional[int]:
    rows = table.rows
    # extent of the current intent: objects whose row contains it
    extent = 0
    for h, r in enumerate(rows):
        if r & intent == intent:
            extent |= 1 << h
    if counters is not None:
        counters.superset_tests += len(rows)

    for g in range(len(rows) - 1, -1, -1):
        if extent >> g & 1:
            continue
        candidate = rows[g]
        for h in bits.iter_indices(bits.prefix(extent, g)):
            candidate &= rows[h]
            if counters is not None:
                counters.intersections += 1
        accepted = True
        for h in bits.iter_indices(bits.prefix(~extent, g)):
            if counters is not None:
                counters.superset_tests += 1
            if rows[h] & candidate == candidate:
                accepted = False
                break
        if accepted:
            return candidate
    return None


def next_intent(table: ObjectIntentTable, intent: int) -> Optional[int]:
    """Intent following ``intent`` in the order generated by the object rows.

    Objects are scanned from last to first. An object ``g`` whose row already
    contains ``intent`` is skipped. Otherwise the candidate is the row of
    ``g`` intersected with the rows of the earlier objects containing
    ``intent``, and it is accepted unless some earlier object not containing
    ``intent`` contains the candidate. Only ``table`` is consulted, never the
    context itself.
    """
    return _next_intent(table, intent, None)


def instrumented_next_intent(table: ObjectIntentTable, intent: int) -> tuple[Optional[int], StepCounters]:
    """:func:`next_intent` together with the number of superset tests and intersections it made."""
    counters = StepCounters()
    return _next_intent(table, intent, counters), counters


def iter_intents(K: FormalContext, reduce: bool = True) -> Iterator[int]:
    """Yield the intents of ``K``, starting with ``M``.

    With ``reduce=False`` the caller promises ``K`` is already clarified and
    reduced; an unreduced context still yields every intent once, but the
    order then depends on the redundant rows.
    """
    if reduce:
        K = clarify_reduce_objects(K)
    table = object_intent_rows(K)
    a: Optional[int] = table.full
    while a is not None:
        yield a
        a = next_intent(table, a)


def enumerate_intents(K: FormalContext, reduce: bool = True) -> list[int]:
    return list(iter_intents(K, reduce))


def iter_extents(K: FormalContext, reduce: bool = True) -> Iterator[int]:
    """Extents of ``K``, enumerated as the intents of the transposed context."""
    return iter_intents(K.transpose(), reduce)


def enumerate_extents(K: FormalContext, reduce: bool = True) -> list[int]:
    return list(iter_extents(K, reduce))


def intents_classic(K: FormalContext) -> list[int]:
    """Intents by classic Next-Closure on the double derivation (baseline)."""
    return classic_enumerate(closure_operator(K))


def brute_force_intents(K: FormalContext) -> set[int]:
    """``{B'' : B subset of M}`` over every attribute subset (test oracle)."""
    return {intent_closure(K, b) for b in range(1 << K.n_attributes)}
