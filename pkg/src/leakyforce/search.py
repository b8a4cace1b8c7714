"""Minimum l-leaky forcing sets: exact size-increasing search and a local-search heuristic."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from math import comb

from .combinatorics import iter_colex
from .forcing import closure_mask
from .graph import Graph, GraphError, iter_bits, popcount
from .parallel import blocks, default_workers, map_ordered
from .verify import _scan_placements, is_leaky_forcing_set

SUBSET_BLOCK = 20_000
# Total subsets below which a process pool is not worth starting.
PARALLEL_MIN_SUBSETS = 500_000


@dataclass(frozen=True)
class SearchResult:
    """Outcome of :func:`min_leaky_forcing_number`.

    ``value`` is ``None`` when the budget ran out; ``sizes_exhausted`` is then
    the largest subset size whose subsets were all tested and rejected
    (``lower - 1`` if none).
    """

    value: int | None
    witness: int | None
    ell: int
    sizes_exhausted: int
    subsets_tested: int
    wall_time: float


def _first_passing(
    adjacency: tuple[int, ...], n: int, size: int, ell: int, start: int, stop: int
) -> tuple[int, int | None]:
    """Scan ``size``-subsets with colex ranks in ``[start, stop)``.

    Returns ``(tested, first_passing_mask)``.
    """
    full = (1 << n) - 1
    total_leaks = comb(n, ell)
    tested = 0
    for b in iter_colex(n, size, start, stop):
        tested += 1
        final, forcers = closure_mask(adjacency, b)
        if final != full:
            continue
        if ell == 0:
            return tested, b
        if _scan_placements(adjacency, n, b, ell, 0, total_leaks, forcers)[1] is None:
            return tested, b
    return tested, None


def min_leaky_forcing_number(
    g: Graph,
    ell: int,
    lower: int | None = None,
    upper: int | None = None,
    max_subsets: int | None = None,
    max_seconds: float | None = None,
    workers: int | None = None,
) -> SearchResult:
    """Smallest ``s`` such that some ``s``-subset is an ``ell``-leaky forcing set.

    Sizes are tried upward from ``max(lower, 1)`` (default lower bound: the
    minimum degree), subsets of each size in colex order, so the witness is
    the colex-first minimum set.  The budget (``max_subsets``,
    ``max_seconds``) is checked between blocks of subsets.
    """
    n = g.vertex_count
    if not 0 <= ell <= n:
        raise GraphError(f"ell must be in [0, {n}], got {ell}")
    if lower is not None and upper is not None and lower > upper:
        raise ValueError(f"lower bound {lower} exceeds upper bound {upper}")
    t0 = time.perf_counter()
    if n == 0:
        return SearchResult(0, 0, ell, 0, 0, 0.0)
    lo = max(g.min_degree() if lower is None else lower, 1)
    hi = n if upper is None else min(upper, n)
    workers = default_workers() if workers is None else workers
    tested = 0

    def out_of_budget() -> bool:
        if max_subsets is not None and tested >= max_subsets:
            return True
        return max_seconds is not None and time.perf_counter() - t0 >= max_seconds

    for size in range(lo, hi + 1):
        total = comb(n, size)
        spans = blocks(total, SUBSET_BLOCK)
        batch = workers if workers > 1 and total >= PARALLEL_MIN_SUBSETS else 1
        for i in range(0, len(spans), batch):
            if out_of_budget():
                return SearchResult(None, None, ell, size - 1, tested, time.perf_counter() - t0)
            chunk = spans[i : i + batch]
            jobs = [(g.adjacency, n, size, ell, a, b) for a, b in chunk]
            results = map_ordered(_first_passing, jobs, batch)
            for count, found in results:
                tested += count
                if found is not None:
                    return SearchResult(size, found, ell, size - 1, tested, time.perf_counter() - t0)
    return SearchResult(None, None, ell, hi, tested, time.perf_counter() - t0)


def _score(adjacency, full: int, b: int, placements: list[int]) -> tuple[int, int]:
    """(placements survived, colored count at the worst stall); larger is better."""
    final, forcers = closure_mask(adjacency, b)
    if final != full:
        return -1, popcount(final)
    survived = 0
    worst = popcount(full)
    for leaks in placements:
        if not leaks & forcers:
            survived += 1
            continue
        final, _ = closure_mask(adjacency, b, leaks)
        if final == full:
            survived += 1
        else:
            worst = min(worst, popcount(final))
    return survived, worst


def _sample_placements(rng: random.Random, n: int, ell: int, k: int) -> list[int]:
    total = comb(n, ell)
    if total <= k:
        return list(iter_colex(n, ell))
    return [sum(1 << v for v in rng.sample(range(n), ell)) for _ in range(k)]


def heuristic_leaky_set_search(
    g: Graph,
    ell: int,
    target_size: int,
    seed: int = 0,
    restarts: int = 20,
    max_steps: int = 200,
    sample_size: int = 1000,
    max_seconds: float | None = None,
) -> int | None:
    """Look for an ``ell``-leaky forcing set of exactly ``target_size`` vertices.

    Each restart draws a random set and climbs by single-vertex swaps,
    accepting the first swap that improves the score.  Scores are computed
    against a sample of at most ``sample_size`` leak placements (all of them
    when there are fewer); any set surviving the whole sample is then checked
    exhaustively with :func:`is_leaky_forcing_set` before being returned.
    Deterministic for a fixed ``seed`` unless ``max_seconds`` cuts it short.
    """
    n = g.vertex_count
    if not 0 <= target_size <= n:
        raise GraphError(f"target size must be in [0, {n}], got {target_size}")
    if not 0 <= ell <= n:
        raise GraphError(f"ell must be in [0, {n}], got {ell}")
    rng = random.Random(seed)
    adjacency, full = g.adjacency, g.full_mask
    t0 = time.perf_counter()
    tried = set()
    for _ in range(restarts):
        placements = _sample_placements(rng, n, ell, sample_size)
        goal = len(placements)
        b = sum(1 << v for v in rng.sample(range(n), target_size))
        score = _score(adjacency, full, b, placements)
        for _ in range(max_steps):
            if score[0] == goal:
                if b not in tried:
                    tried.add(b)
                    if is_leaky_forcing_set(g, b, ell, workers=1).passed:
                        return b
                # Sample too lenient for this set; refresh it and keep climbing.
                placements = _sample_placements(rng, n, ell, sample_size)
                score = _score(adjacency, full, b, placements)
                if score[0] == goal:
                    break
            inside = list(iter_bits(b))
            outside = list(iter_bits(full & ~b))
            swaps = [(u, v) for u in inside for v in outside]
            rng.shuffle(swaps)
            for u, v in swaps:
                cand = b ^ (1 << u) ^ (1 << v)
                s = _score(adjacency, full, cand, placements)
                if s > score:
                    b, score = cand, s
                    break
            else:
                break
            if max_seconds is not None and time.perf_counter() - t0 >= max_seconds:
                return None
    return None
