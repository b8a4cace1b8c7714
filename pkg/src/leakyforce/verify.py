"""Exhaustive adversarial leak checks for candidate forcing sets."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Mapping, Union

from .combinatorics import iter_colex
from .forcing import _check_subset, closure_mask
from .graph import Graph, GraphError, GridLabeling, iter_bits
from .parallel import blocks, default_workers, map_ordered

Coord = tuple[int, int]
Embedding = Union[Mapping[Coord, Coord], Callable[[Coord], Coord], None]

# Below this many placements a process pool costs more than it saves.
PARALLEL_MIN_PLACEMENTS = 200_000
_BLOCK = 50_000
_REMEMBERED_FORCER_SETS = 8


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    ell: int
    placements_checked: int
    witness_leaks: int | None = None
    witness_stall: int | None = None


def _scan_placements(
    adjacency: tuple[int, ...], n: int, b: int, ell: int, start: int, stop: int, seed_forcers: int
) -> tuple[int, int | None, int | None]:
    """Check leak placements with colex ranks in ``[start, stop)``.

    Returns ``(checked, witness_leaks, witness_stall)`` for the first failing
    placement, or ``(stop - start, None, None)``.

    A placement disjoint from the forcers of some successful chronicle
    cannot block that chronicle, so it is accepted without a closure run.
    """
    full = (1 << n) - 1
    known = [seed_forcers]
    checked = 0
    for leaks in iter_colex(n, ell, start, stop):
        checked += 1
        if any(not leaks & f for f in known):
            continue
        final, forcers = closure_mask(adjacency, b, leaks)
        if final != full:
            return checked, leaks, final
        known.insert(0, forcers)
        del known[_REMEMBERED_FORCER_SETS:]
    return checked, None, None


def is_leaky_forcing_set(
    g: Graph, b: int, ell: int, workers: int | None = None
) -> VerificationReport:
    """Decide whether ``b`` forces all of ``g`` under every placement of ``ell`` leaks.

    Only placements of exactly ``ell`` leaks are enumerated: adding leaks
    never enlarges the closure.  If ``b`` already stalls without leaks, the
    report fails immediately with an empty witness leak set and zero
    placements checked.
    """
    _check_subset(g, b, "initial set")
    n = g.vertex_count
    if not 0 <= ell <= n:
        raise GraphError(f"ell must be in [0, {n}], got {ell}")
    final, forcers = closure_mask(g.adjacency, b)
    if final != g.full_mask:
        return VerificationReport(False, ell, 0, 0, final)
    if ell == 0:
        return VerificationReport(True, 0, 1)
    total = comb(n, ell)
    workers = default_workers() if workers is None else workers
    if workers <= 1 or total < PARALLEL_MIN_PLACEMENTS:
        checked, leaks, stall = _scan_placements(g.adjacency, n, b, ell, 0, total, forcers)
        if leaks is None:
            return VerificationReport(True, ell, total)
        return VerificationReport(False, ell, checked, leaks, stall)
    jobs = [(g.adjacency, n, b, ell, lo, hi, forcers) for lo, hi in blocks(total, _BLOCK)]
    results = map_ordered(_scan_placements, jobs, workers)
    for (lo, _), (checked, leaks, stall) in zip(blocks(total, _BLOCK), results):
        if leaks is not None:
            return VerificationReport(False, ell, lo + checked, leaks, stall)
    return VerificationReport(True, ell, total)


def containment_check(
    b_small: int,
    small_labeling: GridLabeling,
    b_big: int,
    big_labeling: GridLabeling,
    embedding: Embedding = None,
) -> bool:
    """Whether the image of ``b_small`` under a coordinate embedding lies in ``b_big``.

    ``embedding`` maps small-grid ``(row, col)`` pairs to big-grid pairs; it
    may be a mapping or a callable, and defaults to the identity.  It must be
    injective on the whole small grid.
    """
    if embedding is None:
        embed = lambda rc: rc  # noqa: E731
    elif callable(embedding):
        embed = embedding
    else:
        embed = embedding.__getitem__
    image = {}
    for r in range(1, small_labeling.rows + 1):
        for c in range(1, small_labeling.cols + 1):
            target = tuple(embed((r, c)))
            big_labeling.to_index(*target)
            if target in image:
                raise GraphError(
                    f"embedding is not injective: {image[target]} and {(r, c)} both map to {target}"
                )
            image[target] = (r, c)
    return all(
        b_big >> big_labeling.to_index(*embed(small_labeling.to_coord(v))) & 1
        for v in iter_bits(b_small)
    )


def count_failing_placements(g: Graph, b: int, ell: int) -> tuple[int, int]:
    """Run every ``ell``-leak placement to completion.

    Returns ``(placements, failing)``; unlike :func:`is_leaky_forcing_set`
    this never stops early, so it measures how far a set is from passing.
    """
    _check_subset(g, b, "initial set")
    n = g.vertex_count
    if not 0 <= ell <= n:
        raise GraphError(f"ell must be in [0, {n}], got {ell}")
    full = g.full_mask
    total = failing = 0
    for leaks in iter_colex(n, ell):
        total += 1
        failing += closure_mask(g.adjacency, b, leaks)[0] != full
    return total, failing
