"""Worker-count configuration and deterministic block scheduling."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")


def default_workers() -> int:
    """Worker count from ``FORCING_THREADS``, else the usable CPU count."""
    env = os.environ.get("FORCING_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError(f"FORCING_THREADS must be an integer, got {env!r}") from None
    try:
        return max(1, len(os.sched_getaffinity(0)))
    except AttributeError:
        return os.cpu_count() or 1


def blocks(total: int, size: int) -> list[tuple[int, int]]:
    return [(lo, min(lo + size, total)) for lo in range(0, total, size)]


def map_ordered(fn: Callable[..., T], jobs: Iterable[tuple], workers: int) -> list[T]:
    """Apply ``fn(*job)`` to each job, returning results in job order.

    Runs in-process when ``workers == 1``.  ``fn`` must be a module-level
    function so it pickles.
    """
    jobs = list(jobs)
    if workers <= 1 or len(jobs) <= 1:
        return [fn(*job) for job in jobs]
    with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
        futures = [pool.submit(fn, *job) for job in jobs]
        return [f.result() for f in futures]
