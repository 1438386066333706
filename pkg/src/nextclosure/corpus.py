"""Reproducible random formal contexts driven by splitmix64."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator

from .context import FormalContext

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(seed: int) -> Iterator[int]:
    """Infinite stream of 64-bit outputs of splitmix64 started from ``seed``."""
    state = seed & MASK64
    while True:
        state = (state + GOLDEN_GAMMA) & MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        yield z ^ (z >> 31)


def random_context(objects: int, attributes: int, density: float, seed: int) -> FormalContext:
    """Context whose cells are set independently with probability ``density``.

    One draw per cell in row-major order; a cell is set iff
    ``draw / 2**64 < density``, compared exactly so that density 1 fills
    every cell. Objects are named ``g0, g1, ...`` and attributes ``m0, m1, ...``.
    """
    if objects < 0 or attributes < 0:
        raise ValueError("object and attribute counts must be non-negative")
    if not 0 <= density <= 1:
        raise ValueError(f"density must lie in [0, 1], got {density}")
    if not 0 <= seed <= MASK64:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    # draw < density * 2**64  <=>  draw < ceil(density * 2**64) for integer draws
    threshold = math.ceil(Fraction(density) * (1 << 64))
    draws = splitmix64(seed)
    rows = []
    for _ in range(objects):
        r = 0
        for m in range(attributes):
            if next(draws) < threshold:
                r |= 1 << m
        rows.append(r)
    return FormalContext(
        [f"g{g}" for g in range(objects)],
        [f"m{m}" for m in range(attributes)],
        rows,
    )
