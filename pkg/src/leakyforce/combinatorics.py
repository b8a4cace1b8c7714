"""Colexicographic enumeration of fixed-size subsets as bitmasks.

Colex order on k-subsets of ``{0, ..., n-1}`` coincides with increasing
integer order of their bitmasks, so Gosper's successor walks it directly.
"""

from __future__ import annotations

from math import comb
from typing import Iterator


def next_colex(mask: int) -> int:
    """Next integer with the same popcount (Gosper's hack). ``mask`` must be nonzero."""
    low = mask & -mask
    ripple = mask + low
    return (((ripple ^ mask) >> 2) // low) | ripple


def colex_rank(mask: int) -> int:
    rank = 0
    i = 0
    while mask:
        low = mask & -mask
        i += 1
        rank += comb(low.bit_length() - 1, i)
        mask ^= low
    return rank


def colex_unrank(rank: int, k: int) -> int:
    """The ``k``-subset with colex rank ``rank`` as a bitmask."""
    mask = 0
    for i in range(k, 0, -1):
        c = i - 1
        while comb(c + 1, i) <= rank:
            c += 1
        rank -= comb(c, i)
        mask |= 1 << c
    return mask


def iter_colex(n: int, k: int, start: int = 0, stop: int | None = None) -> Iterator[int]:
    """Yield ``k``-subsets of ``range(n)`` with colex ranks in ``[start, stop)``."""
    total = comb(n, k)
    stop = total if stop is None else min(stop, total)
    if start >= stop:
        return
    if k == 0:
        yield 0
        return
    mask = colex_unrank(start, k)
    for _ in range(stop - start):
        yield mask
        mask = next_colex(mask)
