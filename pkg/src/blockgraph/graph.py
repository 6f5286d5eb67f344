"""Vertex-weighted simple graphs and the composition operations built on them.

A :class:`WeightedGraph` is the pair ``(G, x)``: an undirected simple graph on
the dense vertex ids ``0..n-1`` together with one exact rational weight per
vertex.  Its matrix is ``A(G) + diag(x)``.

Every vertex also carries an integer *label*.  Labels survive deletion and
re-indexing, so reduction traces can name the vertices of the graph the user
started from.  Composition operations (coalescence, bridges, paths) produce a
new graph and therefore assign fresh labels ``0..n-1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exceptions import GraphFormatError, PreconditionError

Edge = tuple[int, int]


@dataclass(frozen=True)
class WeightedGraph:
    adjacency: tuple[frozenset[int], ...]
    weights: tuple[Fraction, ...]
    labels: tuple[int, ...]

    def __post_init__(self):
        if not (len(self.adjacency) == len(self.weights) == len(self.labels)):
            raise GraphFormatError("adjacency, weights and labels differ in length")

    @property
    def n(self) -> int:
        return len(self.adjacency)

    def __len__(self) -> int:
        return len(self.adjacency)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(
            (u, v) for u, nbrs in enumerate(self.adjacency) for v in sorted(nbrs) if u < v
        )

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def index_of(self, label: int) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise PreconditionError(f"no vertex labelled {label}") from None

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise PreconditionError(f"vertex {v!r} not in graph of order {self.n}")

    def with_weight(self, v: int, weight) -> WeightedGraph:
        self.check_vertex(v)
        weights = list(self.weights)
        weights[v] = Fraction(weight)
        return WeightedGraph(self.adjacency, tuple(weights), self.labels)

    def with_weights(self, weights: Sequence) -> WeightedGraph:
        if len(weights) != self.n:
            raise GraphFormatError(f"expected {self.n} weights, got {len(weights)}")
        return WeightedGraph(self.adjacency, tuple(Fraction(w) for w in weights), self.labels)

    def relabelled(self) -> WeightedGraph:
        """Same graph with labels reset to ``0..n-1``."""
        return WeightedGraph(self.adjacency, self.weights, tuple(range(self.n)))

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self.n}, edges={list(self.edges)}, weights={[str(w) for w in self.weights]})"


def build_graph(
    n: int,
    edges: Iterable[Edge] = (),
    weights: Sequence | None = None,
    labels: Sequence[int] | None = None,
) -> WeightedGraph:
    """Build a weighted graph on vertices ``0..n-1``.

    Missing weights default to zero, so ``build_graph(n, edges)`` is the
    unweighted graph ``(G, o)``.  Repeated edges (in either orientation) are
    merged; self-loops and out-of-range endpoints raise
    :class:`GraphFormatError`.
    """
    if n < 0:
        raise GraphFormatError("vertex count must be nonnegative")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    if weights is None:
        weights = [0] * n
    if len(weights) != n:
        raise GraphFormatError(f"expected {n} weights, got {len(weights)}")
    if labels is None:
        labels = range(n)
    labels = tuple(labels)
    if len(labels) != n or len(set(labels)) != n:
        raise GraphFormatError(f"labels must be {n} distinct integers")
    return WeightedGraph(
        tuple(frozenset(a) for a in adj),
        tuple(Fraction(w) for w in weights),
        labels,
    )


def complete_graph(n: int, weights: Sequence | None = None) -> WeightedGraph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)], weights)


def path_graph(n: int, weights: Sequence | None = None) -> WeightedGraph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)], weights)


def induced_subgraph(g: WeightedGraph, keep: Iterable[int]) -> WeightedGraph:
    """Subgraph induced on ``keep``, re-indexed densely in increasing id order.

    Weights are restricted and labels are carried over unchanged.
    """
    keep = set(keep)
    for v in keep:
        g.check_vertex(v)
    order = sorted(keep)
    index = {v: i for i, v in enumerate(order)}
    adjacency = tuple(frozenset(index[w] for w in g.adjacency[v] if w in index) for v in order)
    return WeightedGraph(
        adjacency,
        tuple(g.weights[v] for v in order),
        tuple(g.labels[v] for v in order),
    )


def delete_vertices(g: WeightedGraph, drop: Iterable[int]) -> WeightedGraph:
    """``G \\ Q`` for a vertex set ``Q``."""
    drop = set(drop)
    for v in drop:
        g.check_vertex(v)
    return induced_subgraph(g, (v for v in range(g.n) if v not in drop))


def disjoint_union(*graphs: WeightedGraph) -> WeightedGraph:
    """Concatenate graphs; vertices of later graphs are shifted past earlier ones."""
    edges: list[Edge] = []
    weights: list[Fraction] = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges)
        weights.extend(h.weights)
        offset += h.n
    return build_graph(offset, edges, weights)


def coalesce(
    g1: WeightedGraph,
    v1: int,
    g2: WeightedGraph,
    v2: int,
    merged_weight=None,
) -> WeightedGraph:
    """Identify ``v1`` of ``g1`` with ``v2`` of ``g2``.

    The vertices of ``g1`` keep their ids; those of ``g2`` other than ``v2``
    follow in order.  The merged vertex gets ``merged_weight``, which defaults
    to ``x[v1] + x[v2]`` (the choice under which the determinant splits over
    the coalescence).
    """
    g1.check_vertex(v1)
    g2.check_vertex(v2)
    if merged_weight is None:
        merged_weight = g1.weights[v1] + g2.weights[v2]
    remap = {}
    nxt = g1.n
    for v in range(g2.n):
        if v == v2:
            remap[v] = v1
        else:
            remap[v] = nxt
            nxt += 1
    edges = list(g1.edges) + [(remap[u], remap[v]) for u, v in g2.edges]
    weights = list(g1.weights) + [g2.weights[v] for v in range(g2.n) if v != v2]
    weights[v1] = Fraction(merged_weight)
    return build_graph(nxt, edges, weights)


def connect_by_edge(g1: WeightedGraph, v1: int, g2: WeightedGraph, v2: int) -> WeightedGraph:
    """Disjoint union of ``g1`` and ``g2`` plus the bridge ``{v1, v2}``."""
    return connect_by_path(g1, v1, g2, v2, 0)


def connect_by_path(
    g1: WeightedGraph, v1: int, g2: WeightedGraph, v2: int, k: int
) -> WeightedGraph:
    """Join ``v1`` and ``v2`` by a path with ``k`` new zero-weight interior vertices.

    ``k = 0`` is a single bridge edge.  In terms of the order of the inserted
    path counted with both endpoints, order ``p`` corresponds to ``k = p - 2``.
    The interior vertices get ids ``n1 + n2 .. n1 + n2 + k - 1`` in path order.
    """
    g1.check_vertex(v1)
    g2.check_vertex(v2)
    if k < 0:
        raise PreconditionError("number of interior path vertices must be >= 0")
    n1, n2 = g1.n, g2.n
    chain = [v1] + [n1 + n2 + i for i in range(k)] + [n1 + v2]
    edges = list(g1.edges) + [(u + n1, v + n1) for u, v in g2.edges]
    edges += list(zip(chain, chain[1:]))
    weights = list(g1.weights) + list(g2.weights) + [Fraction(0)] * k
    return build_graph(n1 + n2 + k, edges, weights)


def attach_pendant_edges(g: WeightedGraph, v: int, count: int = 1) -> WeightedGraph:
    """Coalesce ``count`` zero-weight pendant edges at ``v``."""
    g.check_vertex(v)
    edges = list(g.edges) + [(v, g.n + i) for i in range(count)]
    return build_graph(g.n + count, edges, list(g.weights) + [0] * count, _extended_labels(g, count))


def _extended_labels(g: WeightedGraph, count: int) -> list[int]:
    start = max(g.labels, default=-1) + 1
    return list(g.labels) + list(range(start, start + count))


def component_vertex_sets(g: WeightedGraph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        stack = [root]
        while stack:
            v = stack.pop()
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def components(g: WeightedGraph) -> list[WeightedGraph]:
    """Connected components, ordered by their smallest vertex id."""
    sets = component_vertex_sets(g)
    if len(sets) == 1:
        return [g]
    return [induced_subgraph(g, s) for s in sets]


def is_connected(g: WeightedGraph) -> bool:
    return len(component_vertex_sets(g)) <= 1


def is_forest(g: WeightedGraph) -> bool:
    return g.edge_count == g.n - len(component_vertex_sets(g))


def is_tree(g: WeightedGraph) -> bool:
    return g.n >= 1 and is_connected(g) and g.edge_count == g.n - 1
