"""Explicit 1-leaky forcing sets for K_n x P_t, K_n x C_t and K_n x K_n.

Coordinates are 1-based ``(row, col)``: rows index the ``K_n`` factor and
columns the path, cycle, or second ``K_n`` factor.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .graph import (
    Graph,
    GraphError,
    GridLabeling,
    complete_graph,
    cycle_graph,
    direct_product,
    hypercube_graph,
    path_graph,
    to_mask,
)

FAMILIES = ("kn_pt", "kn_ct", "kn_kn")


@dataclass(frozen=True)
class ConstructedSet:
    family: str
    n: int
    t: int | None
    case_tag: str
    coords: frozenset[tuple[int, int]]
    expected_size: int

    def __post_init__(self) -> None:
        cols = self.n if self.t is None else self.t
        if len(self.coords) != self.expected_size:
            raise AssertionError(
                f"{self.family}({self.n}, {self.t}): built {len(self.coords)} vertices, "
                f"expected {self.expected_size}"
            )
        for r, c in self.coords:
            if not (1 <= r <= self.n and 1 <= c <= cols):
                raise AssertionError(f"coordinate ({r}, {c}) out of range")

    def graph(self) -> tuple[Graph, GridLabeling]:
        return product_graph(self.family, self.n, self.t)

    def mask(self, labeling: GridLabeling | None = None) -> int:
        if labeling is None:
            labeling = GridLabeling(self.n, self.n if self.t is None else self.t)
        return labeling.mask(self.coords)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "t": self.t,
            "case_tag": self.case_tag,
            "coords": [list(rc) for rc in sorted(self.coords)],
        }


def product_graph(family: str, n: int, t: int | None = None) -> tuple[Graph, GridLabeling]:
    """The direct product graph a construction family lives on."""
    if family == "kn_pt":
        return direct_product(complete_graph(n), path_graph(_need_t(t)))
    if family == "kn_ct":
        return direct_product(complete_graph(n), cycle_graph(_need_t(t)))
    if family == "kn_kn":
        return direct_product(complete_graph(n), complete_graph(n))
    raise GraphError(f"unknown construction family {family!r}")


def _need_t(t: int | None) -> int:
    if t is None:
        raise GraphError("this family needs a column count t")
    return t


def _parity_tag(n: int, t: int) -> str:
    return f"t {'even' if t % 2 == 0 else 'odd'}, n {'even' if n % 2 == 0 else 'odd'}"


def _check_nt(n: int, t: int, min_t: int) -> None:
    if n < 3:
        raise GraphError(f"constructions need n >= 3, got n={n}")
    if t < min_t:
        raise GraphError(f"constructions need t >= {min_t}, got t={t}")


def _even_interior(n: int, last: int) -> dict[int, set[int]]:
    """Rows per column for the even-length pattern on columns ``1..last``.

    Columns 1 and ``last`` are left to the caller.  Column 2 uses rows
    ``2..n-1``; odd columns do too.  The remaining even columns drop a pair of
    rows: the middle pair for even ``n``; for odd ``n``, ``{n-2, n-1}`` on
    columns divisible by 4 and ``{2, 3}`` on the others.
    """
    inner = set(range(2, n))
    rows: dict[int, set[int]] = {2: set(inner)}
    for c in range(3, last):
        if c % 2 == 1:
            rows[c] = set(inner)
        elif n % 2 == 0:
            rows[c] = set(range(1, n + 1)) - {n // 2, n // 2 + 1}
        elif c % 4 == 0:
            rows[c] = set(range(1, n + 1)) - {n - 2, n - 1}
        else:
            rows[c] = set(range(1, n + 1)) - {2, 3}
    return rows


def _path_pattern(n: int, last: int) -> dict[int, set[int]]:
    # The explicit last-column rule overrides the interior families, including
    # column 2 when last == 2.
    rows = _even_interior(n, last)
    rows[1] = set(range(3, n + 1))
    rows[last] = set(range(1, n - 1))
    return rows


def _flatten(rows: dict[int, set[int]]) -> frozenset[tuple[int, int]]:
    return frozenset((r, c) for c, rs in rows.items() for r in rs)


def construct_b1_kn_pt(n: int, t: int) -> ConstructedSet:
    """1-leaky forcing set of ``K_n x P_t`` of size ``(n-2)t`` (t even) or ``(n-2)t + 2`` (t odd).

    For odd ``t`` the even pattern occupies columns ``1..t-1`` and column
    ``t`` is fully colored.
    """
    _check_nt(n, t, 2)
    if t % 2 == 0:
        rows = _path_pattern(n, t)
        size = (n - 2) * t
    else:
        rows = _path_pattern(n, t - 1)
        rows[t] = set(range(1, n + 1))
        size = (n - 2) * t + 2
    return ConstructedSet("kn_pt", n, t, _parity_tag(n, t), _flatten(rows), size)


def construct_b1_kn_ct(n: int, t: int) -> ConstructedSet:
    """1-leaky forcing set of ``K_n x C_t`` of size ``(n-2)t + 4`` (t even) or ``(n-2)t + 2`` (t odd).

    Odd ``t`` reuses the path construction unchanged.  Even ``t`` colors
    columns 1 and ``t`` completely and fills the interior as for paths.
    """
    _check_nt(n, t, 3)
    if t % 2 == 1:
        path_set = construct_b1_kn_pt(n, t)
        return ConstructedSet(
            "kn_ct", n, t, path_set.case_tag, path_set.coords, path_set.expected_size
        )
    rows = _even_interior(n, t)
    rows[1] = set(range(1, n + 1))
    rows[t] = set(range(1, n + 1))
    return ConstructedSet("kn_ct", n, t, _parity_tag(n, t), _flatten(rows), (n - 2) * t + 4)


def construct_b1_kn_kn(n: int) -> ConstructedSet:
    if n < 3:
        raise GraphError(f"constructions need n >= 3, got n={n}")
    if n == 3:
        coords = frozenset({(1, 1), (1, 2), (2, 2), (3, 2), (3, 3)})
        tag = "n = 3"
    else:
        missing = {(1, n - 1), (1, n), (n, 1), (n, 2)}
        coords = frozenset(
            (i, j) for i in range(1, n + 1) for j in range(1, n + 1) if (i, j) not in missing
        )
        tag = "n >= 4"
    return ConstructedSet("kn_kn", n, None, tag, coords, n * n - 4)


def construct(family: str, n: int, t: int | None = None) -> ConstructedSet:
    if family == "kn_pt":
        return construct_b1_kn_pt(n, _need_t(t))
    if family == "kn_ct":
        return construct_b1_kn_ct(n, _need_t(t))
    if family == "kn_kn":
        return construct_b1_kn_kn(n)
    raise GraphError(f"unknown construction family {family!r}")


def load_constructed_set(doc: dict) -> ConstructedSet:
    """Inverse of :meth:`ConstructedSet.to_json`; size is taken from the coordinates."""
    coords = frozenset((int(r), int(c)) for r, c in doc["coords"])
    return ConstructedSet(
        doc["family"], int(doc["n"]), doc.get("t"), doc.get("case_tag", ""), coords, len(coords)
    )


@dataclass(frozen=True)
class HypercubeCandidate:
    dimension: int
    labels: tuple[str, ...]
    provenance: str
    note: str = ""

    def mask(self, g: Graph | None = None) -> int:
        g = hypercube_graph(self.dimension) if g is None else g
        return to_mask(g.index_of_label(lab) for lab in self.labels)


def load_q5_candidate(variant: str = "primary", path: str | None = None) -> HypercubeCandidate:
    """Load the hand-transcribed 18-vertex ``Q_5`` candidate set.

    ``variant`` selects ``"primary"`` or ``"alternate"`` from the bundled
    file (see the file's ``note`` fields for how they differ).  A custom
    file may hold a single set with top-level ``labels``.
    """
    if path is None:
        text = resources.files("leakyforce.data").joinpath("q5_candidate.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    doc = json.loads(text)
    entry = doc if "labels" in doc else doc["variants"][variant]
    return HypercubeCandidate(
        dimension=int(doc.get("dimension", 5)),
        labels=tuple(entry["labels"]),
        provenance=doc.get("provenance", "unknown"),
        note=entry.get("note", ""),
    )
