"""Forcing closure under the color change rule with leaky vertices.

A colored vertex that is not a leak forces its neighbor when that neighbor is
its only uncolored neighbor.  Leaks can be colored (initially or by being
forced) but never force.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, iter_bits


@dataclass(frozen=True)
class ForcingChronicle:
    """Replayable record of a synchronous closure run.

    ``events`` holds ``(forcer, forced, round)`` triples in round order, and
    within a round by increasing forcer index.
    """

    initial: int
    leaks: int
    events: tuple[tuple[int, int, int], ...]
    final: int
    stalled: bool

    @property
    def rounds(self) -> int:
        return self.events[-1][2] if self.events else 0

    @property
    def forcers(self) -> int:
        mask = 0
        for v, _, _ in self.events:
            mask |= 1 << v
        return mask


def _check_subset(g: Graph, mask: int, what: str) -> None:
    if mask < 0 or mask & ~g.full_mask:
        raise GraphError(f"{what} contains vertices outside the graph")


def closure(g: Graph, initial: int, leaks: int = 0) -> ForcingChronicle:
    """Run synchronous forcing rounds from ``initial`` until nothing changes.

    In each round every colored non-leak vertex with exactly one uncolored
    neighbor (with respect to the state at the start of the round) forces it.
    When several vertices could force the same target, the lowest-indexed one
    is recorded.
    """
    _check_subset(g, initial, "initial set")
    _check_subset(g, leaks, "leak set")
    adj = g.adjacency
    colored = initial
    events: list[tuple[int, int, int]] = []
    rnd = 0
    while True:
        rnd += 1
        claimed = 0
        new_events = []
        for v in iter_bits(colored & ~leaks):
            unc = adj[v] & ~colored
            if unc and not unc & (unc - 1) and not unc & claimed:
                claimed |= unc
                new_events.append((v, unc.bit_length() - 1, rnd))
        if not new_events:
            break
        events.extend(new_events)
        colored |= claimed
    return ForcingChronicle(
        initial=initial,
        leaks=leaks,
        events=tuple(events),
        final=colored,
        stalled=colored != g.full_mask,
    )


def closure_mask(adjacency: tuple[int, ...], colored: int, leaks: int = 0) -> tuple[int, int]:
    """Fast closure returning ``(final_colored, forcer_mask)``.

    Forces are applied as soon as they are found, so the forcer set belongs to
    one valid (sequential) chronicle.  The final state equals that of
    :func:`closure`; no input validation is done here.
    """
    active = colored & ~leaks
    forcers = 0
    progress = True
    while progress:
        progress = False
        pending = active
        while pending:
            low = pending & -pending
            pending ^= low
            unc = adjacency[low.bit_length() - 1] & ~colored
            if not unc:
                active ^= low
            elif not unc & (unc - 1):
                colored |= unc
                forcers |= low
                active ^= low
                if not unc & leaks:
                    active |= unc
                progress = True
    return colored, forcers


def is_zero_forcing_set(g: Graph, b: int) -> bool:
    _check_subset(g, b, "initial set")
    return closure_mask(g.adjacency, b)[0] == g.full_mask


def replay(g: Graph, chronicle: ForcingChronicle) -> int:
    """Apply chronicle events one at a time, checking each against the rule.

    Returns the resulting colored set; raises ``ValueError`` on an invalid
    event.
    """
    colored = chronicle.initial
    for forcer, forced, _ in chronicle.events:
        if not colored >> forcer & 1:
            raise ValueError(f"forcer {forcer} is not colored")
        if chronicle.leaks >> forcer & 1:
            raise ValueError(f"forcer {forcer} is a leak")
        if g.adjacency[forcer] & ~colored != 1 << forced:
            raise ValueError(f"{forced} is not the unique uncolored neighbor of {forcer}")
        colored |= 1 << forced
    return colored
