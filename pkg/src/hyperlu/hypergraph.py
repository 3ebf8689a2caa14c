"""Weighted hypergraph states and plain graphs.

A state on ``n`` qubits is a canonical map from hyperedges (sorted
vertex tuples) to nonzero dyadic weights modulo 2, plus a global phase
carried by the empty edge. Identical states compare bit-identical in
canonical form. All values are immutable; every operation returns a new
value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .errors import DimensionMismatchError, VertexRangeError
from .weights import ONE, ZERO, Weight

Edge = tuple[int, ...]


def normalize_edge(vertices: Iterable[int]) -> Edge:
    """Sorted duplicate-free vertex tuple; may be empty (global phase)."""
    vs = sorted(set(vertices))
    for v in vs:
        if not isinstance(v, int) or v < 0:
            raise VertexRangeError(f"bad vertex {v!r}")
    return tuple(vs)


@dataclass(frozen=True)
class WeightedHypergraph:
    """Canonical weighted hypergraph state.

    ``edges`` is sorted lexicographically on the vertex tuples, holds no
    zero weights and no empty edge (that folds into ``phase``).
    Construct through :meth:`make`, which canonicalizes arbitrary input.
    """

    n: int
    edges: tuple[tuple[Edge, Weight], ...] = ()
    phase: Weight = ZERO

    def __post_init__(self) -> None:
        last: Edge | None = None
        for e, w in self.edges:
            if not e:
                raise ValueError("empty edge must fold into phase")
            if e[-1] >= self.n:
                raise VertexRangeError(f"edge {e} out of range for n={self.n}")
            if w.is_zero:
                raise ValueError(f"zero weight stored for edge {e}")
            if last is not None and not last < e:
                raise ValueError("edges not in canonical order")
            last = e

    @classmethod
    def make(
        cls,
        n: int,
        weights: Mapping[Iterable[int], Weight] | Iterable[tuple[Iterable[int], Weight]] = (),
        phase: Weight = ZERO,
    ) -> "WeightedHypergraph":
        """Canonicalize raw edge weights into a state."""
        items = weights.items() if isinstance(weights, Mapping) else weights
        acc: dict[Edge, Weight] = {}
        for raw, w in items:
            e = normalize_edge(raw)
            if e and e[-1] >= n:
                raise VertexRangeError(f"edge {e} out of range for n={n}")
            acc[e] = acc.get(e, ZERO) + w
        phase = phase + acc.pop((), ZERO)
        canon = tuple(sorted((e, w) for e, w in acc.items() if not w.is_zero))
        return cls(n, canon, phase)

    @cached_property
    def _lookup(self) -> dict[Edge, Weight]:
        return dict(self.edges)

    def weight(self, e: Iterable[int]) -> Weight:
        """Weight of an edge, ``Weight(0)`` when absent; () gives the phase."""
        key = normalize_edge(e)
        if not key:
            return self.phase
        return self._lookup.get(key, ZERO)

    def edge_dict(self) -> dict[Edge, Weight]:
        return dict(self.edges)

    def edges_containing(self, v: int) -> tuple[tuple[Edge, Weight], ...]:
        return tuple((e, w) for e, w in self.edges if v in e)

    def __str__(self) -> str:
        body = ", ".join(f"{set(e) if e else '{}'}:{w}" for e, w in self.edges)
        tail = f", phase={self.phase}" if self.phase else ""
        return f"WHG(n={self.n}, {{{body}}}{tail})"


def canonicalize(h: WeightedHypergraph) -> WeightedHypergraph:
    """Re-reduce a state; identity on canonical input (idempotent)."""
    return WeightedHypergraph.make(h.n, h.edges, h.phase)


def add_weight(h: WeightedHypergraph, e: Iterable[int], w: Weight) -> WeightedHypergraph:
    """Add ``w`` (mod 2) to edge ``e``; result is canonical."""
    key = normalize_edge(e)
    if key and key[-1] >= h.n:
        raise VertexRangeError(f"edge {key} out of range for n={h.n}")
    return WeightedHypergraph.make(h.n, list(h.edges) + [(key, w)], h.phase)


def add_weights(h: WeightedHypergraph, delta: Mapping[Edge, Weight]) -> WeightedHypergraph:
    """Merge a whole edge->weight delta at once."""
    return WeightedHypergraph.make(h.n, list(h.edges) + list(delta.items()), h.phase)


def states_equal(
    a: WeightedHypergraph, b: WeightedHypergraph, ignore_global_phase: bool = False
) -> bool:
    """Bit-identical comparison of canonical forms.

    Raises on vertex-count mismatch; with the flag set, the global phase
    is not compared.
    """
    if a.n != b.n:
        raise DimensionMismatchError(f"vertex counts differ: {a.n} != {b.n}")
    if a.edges != b.edges:
        return False
    return ignore_global_phase or a.phase == b.phase


@dataclass(frozen=True)
class SimpleGraph:
    """Labeled graph as a symmetric zero-diagonal bit matrix.

    ``rows[i]`` has bit ``j`` set iff {i, j} is an edge.
    """

    n: int
    rows: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if len(self.rows) != self.n:
            raise ValueError("adjacency row count differs from n")
        for i, r in enumerate(self.rows):
            if r >> self.n:
                raise VertexRangeError(f"row {i} has bits beyond n={self.n}")
            if (r >> i) & 1:
                raise ValueError(f"nonzero diagonal at {i}")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if ((self.rows[i] >> j) & 1) != ((self.rows[j] >> i) & 1):
                    raise ValueError(f"adjacency not symmetric at ({i},{j})")

    @classmethod
    def empty(cls, n: int) -> "SimpleGraph":
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        rows = [0] * n
        for i, j in edges:
            if i == j:
                raise ValueError(f"self-loop at {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise VertexRangeError(f"edge ({i},{j}) out of range for n={n}")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(n, tuple(rows))

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1)

    def edge_list(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if (self.rows[i] >> j) & 1
        ]

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def neighbor_mask(self, v: int) -> int:
        return self.rows[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(j for j in range(self.n) if (self.rows[v] >> j) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            v = frontier
            while v:
                low = v & -v
                nxt |= self.rows[low.bit_length() - 1]
                v ^= low
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    def bipartite_coloring(self) -> tuple[tuple[int, ...], None] | tuple[None, tuple[int, int]]:
        """Two-color the graph.

        Returns (colors, None) on success or (None, violating_edge) when
        an edge joins two vertices of the same forced color.
        """
        colors = [-1] * self.n
        for start in range(self.n):
            if colors[start] != -1:
                continue
            colors[start] = 0
            stack = [start]
            while stack:
                u = stack.pop()
                for w in self.neighbors(u):
                    if colors[w] == -1:
                        colors[w] = colors[u] ^ 1
                        stack.append(w)
                    elif colors[w] == colors[u]:
                        return None, (min(u, w), max(u, w))
        return tuple(colors), None


def from_graph(g: SimpleGraph) -> WeightedHypergraph:
    """Graph state: every graph edge becomes a 2-edge of weight 1."""
    return WeightedHypergraph.make(g.n, {e: ONE for e in g.edge_list()})


def is_graph_state(h: WeightedHypergraph) -> bool:
    """True iff all edges are weight-1 2-edges (global phase arbitrary)."""
    return all(len(e) == 2 and w == ONE for e, w in h.edges)


def to_graph(h: WeightedHypergraph) -> SimpleGraph:
    """Extract the graph of a graph state; raises when ``h`` is not one."""
    if not is_graph_state(h):
        raise ValueError("state is not a graph state")
    return SimpleGraph.from_edges(h.n, [(e[0], e[1]) for e, _ in h.edges])


def star_graph(n: int) -> SimpleGraph:
    """Star with center 0 and leaves 1..n-1."""
    return SimpleGraph.from_edges(n, [(0, i) for i in range(1, n)])


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(
        n, [(i, j) for i in range(n) for j in range(i + 1, n)]
    )
