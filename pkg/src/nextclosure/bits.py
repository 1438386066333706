"""Small helpers for subsets of ``{0, ..., n-1}`` stored as Python ints.

Bit ``i`` of the integer is set iff ``i`` belongs to the subset.
"""

from typing import Iterable, Iterator


def from_indices(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        if i < 0:
            raise ValueError(f"negative index {i}")
        mask |= 1 << i
    return mask


def iter_indices(mask: int) -> Iterator[int]:
    """Yield the members of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_indices(mask: int) -> list[int]:
    return list(iter_indices(mask))


def full(n: int) -> int:
    return (1 << n) - 1


def lowest(mask: int) -> int:
    """Smallest member of a nonempty ``mask``."""
    if not mask:
        raise ValueError("empty set has no smallest member")
    return (mask & -mask).bit_length() - 1


def is_subset(a: int, b: int) -> bool:
    return a & b == a


def prefix(mask: int, i: int) -> int:
    """Members of ``mask`` strictly below ``i``."""
    return mask & ((1 << i) - 1)


def lectic_less(a: int, b: int) -> bool:
    """Classic lectic order: the smallest element of the symmetric difference lies in ``b``."""
    diff = a ^ b
    return bool(diff) and bool(b & (diff & -diff))
