"""Simple undirected graphs stored as per-vertex neighbor bitsets.

Vertex sets throughout the package are plain Python ints used as bitsets:
bit ``v`` is set when vertex ``v`` is a member.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 1024

FAMILIES = ("complete", "path", "cycle", "hypercube")


class GraphError(ValueError):
    """Raised for malformed graphs, graph files, or family parameters."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..vertex_count-1``.

    ``adjacency[v]`` is the neighbor bitset of ``v``.  ``labels`` optionally
    names vertices (hypercube bit strings); it has no effect on structure.
    """

    vertex_count: int
    adjacency: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        n = self.vertex_count
        if n < 0 or n > MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
        if len(self.adjacency) != n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << n) - 1
        for v, nbrs in enumerate(self.adjacency):
            if nbrs & ~full:
                raise GraphError(f"vertex {v} has a neighbor index >= {n}")
            if nbrs >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in iter_bits(nbrs):
                if not self.adjacency[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        if self.labels is not None and len(self.labels) != n:
            raise GraphError("label count does not match vertex count")

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> Graph:
        adj = [0] * vertex_count
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(vertex_count, tuple(adj), tuple(labels) if labels is not None else None)

    @property
    def full_mask(self) -> int:
        return (1 << self.vertex_count) - 1

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adjacency[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adjacency[v])

    def min_degree(self) -> int:
        if self.vertex_count == 0:
            return 0
        return min(self.degree(v) for v in range(self.vertex_count))

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [
            (u, v)
            for u in range(self.vertex_count)
            for v in iter_bits(self.adjacency[u] >> (u + 1) << (u + 1))
        ]

    @property
    def edge_count(self) -> int:
        return sum(popcount(a) for a in self.adjacency) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def components(self) -> list[int]:
        """Connected components as vertex bitsets, ordered by smallest vertex."""
        seen = 0
        comps = []
        for v in range(self.vertex_count):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                nxt = 0
                for u in iter_bits(frontier):
                    nxt |= self.adjacency[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def index_of_label(self, label: str) -> int:
        if self.labels is None:
            raise GraphError("graph has no vertex labels")
        try:
            return self.labels.index(label)
        except ValueError:
            raise GraphError(f"unknown vertex label {label!r}") from None


@dataclass(frozen=True)
class GridLabeling:
    """Bijection between 1-based ``(row, col)`` coordinates and vertex indices.

    Rows index the first product factor and columns the second.  Indices are
    column-major: ``(r, c) -> (c - 1) * rows + (r - 1)``.
    """

    rows: int
    cols: int

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise GraphError("grid dimensions must be positive")

    @property
    def size(self) -> int:
        return self.rows * self.cols

    def to_index(self, row: int, col: int) -> int:
        if not (1 <= row <= self.rows and 1 <= col <= self.cols):
            raise GraphError(f"coordinate ({row}, {col}) outside {self.rows}x{self.cols} grid")
        return (col - 1) * self.rows + (row - 1)

    def to_coord(self, index: int) -> tuple[int, int]:
        if not 0 <= index < self.size:
            raise GraphError(f"vertex index {index} outside grid of size {self.size}")
        col, row = divmod(index, self.rows)
        return row + 1, col + 1

    def mask(self, coords: Iterable[tuple[int, int]]) -> int:
        return to_mask(self.to_index(r, c) for r, c in coords)

    def coords(self, mask: int) -> list[tuple[int, int]]:
        """Coordinates of the vertices in ``mask``, sorted by (row, col)."""
        return sorted(self.to_coord(v) for v in iter_bits(mask))

    def column(self, col: int) -> int:
        return self.mask((r, col) for r in range(1, self.rows + 1))


@dataclass(frozen=True)
class GraphFamilySpec:
    family: str
    param: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise GraphError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.param < 1:
            raise GraphError(f"{self.family} parameter must be >= 1, got {self.param}")
        if self.family == "cycle" and self.param < 3:
            raise GraphError(f"cycle needs at least 3 vertices, got {self.param}")


def complete_graph(n: int) -> Graph:
    return build_base_graph(GraphFamilySpec("complete", n))


def path_graph(t: int) -> Graph:
    return build_base_graph(GraphFamilySpec("path", t))


def cycle_graph(t: int) -> Graph:
    return build_base_graph(GraphFamilySpec("cycle", t))


def hypercube_graph(d: int) -> Graph:
    return build_base_graph(GraphFamilySpec("hypercube", d))


def build_base_graph(spec: GraphFamilySpec) -> Graph:
    """Build ``K_n``, ``P_t``, ``C_t`` or ``Q_d`` from a family spec.

    Hypercube vertex ``v`` carries the ``d``-bit binary string of ``v`` as its
    label, most significant bit first.
    """
    k = spec.param
    if spec.family == "complete":
        full = (1 << k) - 1
        return Graph(k, tuple(full & ~(1 << v) for v in range(k)))
    if spec.family == "path":
        return Graph.from_edges(k, ((v, v + 1) for v in range(k - 1)))
    if spec.family == "cycle":
        return Graph.from_edges(k, ((v, (v + 1) % k) for v in range(k)))
    if 1 << k > MAX_VERTICES:
        raise GraphError(f"hypercube dimension {k} exceeds {MAX_VERTICES} vertices")
    n = 1 << k
    adj = tuple(to_mask(v ^ (1 << b) for b in range(k)) for v in range(n))
    return Graph(n, adj, tuple(format(v, f"0{k}b") for v in range(n)))


def _product(g: Graph, h: Graph, adjacent) -> tuple[Graph, GridLabeling]:
    if g.vertex_count == 0 or h.vertex_count == 0:
        raise GraphError("product factors must be nonempty")
    grid = GridLabeling(g.vertex_count, h.vertex_count)
    edges = []
    for c in range(h.vertex_count):
        for r in range(g.vertex_count):
            u = grid.to_index(r + 1, c + 1)
            for c2 in range(c, h.vertex_count):
                for r2 in range(g.vertex_count):
                    v = grid.to_index(r2 + 1, c2 + 1)
                    if v > u and adjacent(r, c, r2, c2):
                        edges.append((u, v))
    return Graph.from_edges(grid.size, edges), grid


def direct_product(g: Graph, h: Graph) -> tuple[Graph, GridLabeling]:
    """Direct (tensor) product: both coordinates must be adjacent."""
    return _product(g, h, lambda r, c, r2, c2: g.has_edge(r, r2) and h.has_edge(c, c2))


def cartesian_product(g: Graph, h: Graph) -> tuple[Graph, GridLabeling]:
    """Cartesian product: one coordinate equal, the other adjacent."""
    return _product(
        g,
        h,
        lambda r, c, r2, c2: (r == r2 and h.has_edge(c, c2)) or (c == c2 and g.has_edge(r, r2)),
    )


def save_graph(g: Graph) -> str:
    lines = [f"graph {g.vertex_count}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def load_graph(text: str) -> Graph:
    """Parse the ``graph N`` / ``e U V`` edge-list format.

    Duplicate edges are merged; self-loops and out-of-range indices raise
    :class:`GraphError`.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "graph":
                raise GraphError(f"line {lineno}: expected header 'graph <vertex_count>'")
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
            if n < 0:
                raise GraphError(f"line {lineno}: negative vertex count")
            continue
        if len(parts) != 3 or parts[0] != "e":
            raise GraphError(f"line {lineno}: expected 'e <u> <v>'")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer vertex index") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"line {lineno}: vertex index out of range for {n} vertices")
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u, v))
    if n is None:
        raise GraphError("missing 'graph <vertex_count>' header")
    return Graph.from_edges(n, edges)
