"""Named families of block graphs, their closed-form singularity tests, and generators.

Enumeration and random generation both grow a graph one clique at a time,
each new clique sharing exactly one vertex with what is already there.  Every
connected block graph arises this way.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .blocks import decompose, require_block_graph
from .exceptions import PreconditionError
from .graph import WeightedGraph, build_graph, disjoint_union, is_forest, is_tree

DEFAULT_WEIGHT_POOL = (Fraction(0), Fraction(1), Fraction(1, 2), Fraction(-1), Fraction(2))
DEFAULT_ENUMERATION_BOUND = 9


def _clique_edges(vertices: Sequence[int]) -> list[tuple[int, int]]:
    return [(a, b) for i, a in enumerate(vertices) for b in vertices[i + 1:]]


class _Grower:
    """Accumulates edges while cliques are hung on existing vertices."""

    def __init__(self, n: int = 0):
        self.n = n
        self.edges: list[tuple[int, int]] = []

    def clique(self, m: int) -> list[int]:
        verts = list(range(self.n, self.n + m))
        self.n += m
        self.edges += _clique_edges(verts)
        return verts

    def hang(self, at: int, m: int) -> list[int]:
        new = list(range(self.n, self.n + m - 1))
        self.n += m - 1
        self.edges += _clique_edges([at] + new)
        return new

    def graph(self) -> WeightedGraph:
        return build_graph(self.n, self.edges)


def _clique_gain(m: int) -> Fraction:
    """Magnitude of the weight a contracted zero-weight pendant ``K_m`` leaves on its cut vertex."""
    return Fraction(m - 1, m - 2)


# ---------------------------------------------------------------------------
# cliques with pendant cliques attached

@dataclass(frozen=True)
class NmkSpec:
    """``K_n`` with ``k`` pendant copies of ``K_m`` at every vertex."""

    n: int
    m: int
    k: int

    def __post_init__(self):
        if self.n < 2 or self.m < 3 or self.k < 1:
            raise PreconditionError(f"need n >= 2, m >= 3, k >= 1; got {self}")

    @property
    def order(self) -> int:
        return self.n + self.n * self.k * (self.m - 1)


@dataclass(frozen=True)
class CoalescedCliqueSpec:
    """Central ``K_n``; ``attachments[i]`` lists the orders of cliques hung on vertex ``i``."""

    n: int
    attachments: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "attachments", tuple(tuple(a) for a in self.attachments))
        if self.n < 2:
            raise PreconditionError("central clique needs at least 2 vertices")
        if len(self.attachments) != self.n:
            raise PreconditionError(f"expected {self.n} attachment lists, got {len(self.attachments)}")
        if any(m < 3 for a in self.attachments for m in a):
            raise PreconditionError("attached cliques must have order >= 3")

    @classmethod
    def from_nmk(cls, spec: NmkSpec) -> CoalescedCliqueSpec:
        return cls(spec.n, tuple((spec.m,) * spec.k for _ in range(spec.n)))

    @property
    def order(self) -> int:
        return self.n + sum(m - 1 for a in self.attachments for m in a)


def make_coalesced_cliques(spec: CoalescedCliqueSpec) -> WeightedGraph:
    grow = _Grower()
    centre = grow.clique(spec.n)
    for i, orders in zip(centre, spec.attachments):
        for m in orders:
            grow.hang(i, m)
    return grow.graph()


def make_nmk(spec: NmkSpec) -> WeightedGraph:
    return make_coalesced_cliques(CoalescedCliqueSpec.from_nmk(spec))


def contracted_centre_weights(spec: CoalescedCliqueSpec) -> list[Fraction]:
    """Weights left on the central clique once every pendant clique is contracted."""
    return [-sum((_clique_gain(m) for m in a), Fraction(0)) for a in spec.attachments]


def predict_coalesced_singular(spec: CoalescedCliqueSpec) -> bool:
    total = sum(
        (1 / (1 + sum((_clique_gain(m) for m in a), Fraction(0))) for a in spec.attachments),
        Fraction(0),
    )
    return total == 1


def predict_nmk_singular(spec: NmkSpec) -> bool:
    return spec.k * (spec.m - 1) == (spec.n - 1) * (spec.m - 2)


# ---------------------------------------------------------------------------
# predicates

def is_b31(g: WeightedGraph) -> bool:
    """Every block has at least three vertices, at least one of them not a cut vertex."""
    forest = require_block_graph(g)
    return all(len(b) >= 3 and b.non_cut_vertices for b in forest.blocks)


def forest_has_perfect_matching(g: WeightedGraph) -> bool:
    """Greedy leaf matching: a leaf must be matched to its only neighbour."""
    if not is_forest(g):
        raise PreconditionError("graph has a cycle")
    adj = [set(a) for a in g.adjacency]
    alive = [True] * g.n
    if any(not a for a in adj):
        return False
    leaves = [v for v in range(g.n) if len(adj[v]) == 1]
    while leaves:
        u = leaves.pop()
        if not alive[u]:
            continue
        if not adj[u]:
            return False
        (w,) = adj[u]
        alive[u] = alive[w] = False
        for x in adj[w]:
            if x == u:
                continue
            adj[x].discard(w)
            if not adj[x]:
                return False
            if len(adj[x]) == 1:
                leaves.append(x)
        adj[u].clear()
        adj[w].clear()
    return not any(alive)


# ---------------------------------------------------------------------------
# trees of block graphs

@dataclass(frozen=True)
class TreeOfBlockGraphsSpec:
    """Block graphs joined by skeleton edges.

    ``skeleton`` holds ``(i, j, u, v)``: an edge from vertex ``u`` of
    ``graphs[i]`` to vertex ``v`` of ``graphs[j]``.  The pairs ``(i, j)``
    must form a tree on ``range(len(graphs))``.
    """

    graphs: tuple[WeightedGraph, ...]
    skeleton: tuple[tuple[int, int, int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "graphs", tuple(self.graphs))
        object.__setattr__(self, "skeleton", tuple(tuple(e) for e in self.skeleton))
        k = len(self.graphs)
        if k == 0:
            raise PreconditionError("need at least one block graph")
        for i, j, u, v in self.skeleton:
            if not (0 <= i < k and 0 <= j < k):
                raise PreconditionError(f"skeleton edge ({i}, {j}) names a missing graph")
            self.graphs[i].check_vertex(u)
            self.graphs[j].check_vertex(v)
        if not is_tree(build_graph(k, [(i, j) for i, j, _, _ in self.skeleton])):
            raise PreconditionError("skeleton pattern is not a tree")
        if len(self.skeleton) != k - 1:
            raise PreconditionError("skeleton pattern has repeated edges")
        for h in self.graphs:
            require_block_graph(h)

    def offsets(self) -> list[int]:
        out, acc = [], 0
        for h in self.graphs:
            out.append(acc)
            acc += h.n
        return out

    def skeleton_edges(self) -> list[tuple[int, int]]:
        off = self.offsets()
        return [(off[i] + u, off[j] + v) for i, j, u, v in self.skeleton]


def make_tree_of_block_graphs(spec: TreeOfBlockGraphsSpec) -> WeightedGraph:
    union = disjoint_union(*spec.graphs)
    return build_graph(union.n, list(union.edges) + spec.skeleton_edges(), union.weights)


def check_tree_b31_conditions(spec: TreeOfBlockGraphsSpec) -> bool:
    """Skeleton edges are pairwise disjoint and every block of order 3+ keeps a non-cut vertex."""
    for idx, h in enumerate(spec.graphs):
        if not is_b31(h):
            raise PreconditionError(f"graph {idx} is not a B31 block graph")
    ends = [x for e in spec.skeleton_edges() for x in e]
    if len(ends) != len(set(ends)):
        return False
    forest = decompose(make_tree_of_block_graphs(spec))
    return all(b.non_cut_vertices for b in forest.blocks if len(b) >= 3)


def _check_tree_attachments(tree: WeightedGraph, attachments: Sequence[Sequence[int]]) -> None:
    if not is_tree(tree):
        raise PreconditionError("skeleton is not a tree")
    if len(attachments) != tree.n:
        raise PreconditionError(f"expected {tree.n} attachment lists, got {len(attachments)}")
    if any(m < 3 for a in attachments for m in a):
        raise PreconditionError("attached cliques must have order >= 3")


def make_mnktree(tree: WeightedGraph, attachments: Sequence[Sequence[int]]) -> WeightedGraph:
    """Hang cliques of the listed orders on each vertex of ``tree``."""
    _check_tree_attachments(tree, attachments)
    grow = _Grower(tree.n)
    grow.edges += list(tree.edges)
    for i, orders in enumerate(attachments):
        for m in orders:
            grow.hang(i, m)
    return grow.graph()


def check_mnktree_condition(tree: WeightedGraph, attachments: Sequence[Sequence[int]]) -> bool:
    """At every tree vertex the contracted clique weight strictly beats the tree degree."""
    _check_tree_attachments(tree, attachments)
    return all(
        sum((_clique_gain(m) for m in attachments[i]), Fraction(0)) > tree.degree(i)
        for i in range(tree.n)
    )


def make_pendant_edges_at_cuts(g: WeightedGraph, cuts: Sequence[int]) -> WeightedGraph:
    """Coalesce one new pendant edge at each listed cut vertex.

    ``g`` must be a block graph whose blocks all have two or more non-cut
    vertices.
    """
    forest = require_block_graph(g)
    if any(len(b.non_cut_vertices) < 2 for b in forest.blocks):
        raise PreconditionError("every block needs at least two non-cut vertices")
    if len(set(cuts)) != len(cuts):
        raise PreconditionError("cut vertices listed twice")
    for c in cuts:
        g.check_vertex(c)
        if c not in forest.cut_vertices:
            raise PreconditionError(f"vertex {c} is not a cut vertex")
    edges = list(g.edges) + [(c, g.n + i) for i, c in enumerate(cuts)]
    return build_graph(g.n + len(cuts), edges, list(g.weights) + [0] * len(cuts))


# ---------------------------------------------------------------------------
# generation

def canonical_key(g: WeightedGraph) -> str:
    """Isomorphism-invariant key of a connected block graph.

    A connected block graph is determined up to isomorphism by its
    block/cut-vertex tree with each block node tagged by its order, so the
    key is the canonical (AHU) encoding of that tree rooted at its centre.
    """
    forest = require_block_graph(g)
    nb = len(forest.blocks)
    cuts = sorted(forest.cut_vertices)
    cut_node = {c: nb + i for i, c in enumerate(cuts)}
    tags = [f"B{len(b)}" for b in forest.blocks] + ["C"] * len(cuts)
    adj: list[list[int]] = [[] for _ in tags]
    for i, b in enumerate(forest.blocks):
        for c in b.cut_vertices:
            adj[i].append(cut_node[c])
            adj[cut_node[c]].append(i)
    if len(tags) - 1 != sum(len(a) for a in adj) // 2:
        raise PreconditionError("canonical_key needs a connected graph")

    # centre(s): peel leaves
    degree = [len(a) for a in adj]
    layer = [v for v in range(len(tags)) if degree[v] <= 1]
    remaining = len(tags)
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                degree[w] -= 1
                if degree[w] == 1:
                    nxt.append(w)
        layer = nxt

    def encode(v: int, parent: int) -> str:
        kids = sorted(encode(w, v) for w in adj[v] if w != parent)
        return tags[v] + "(" + "".join(kids) + ")"

    return min(encode(c, -1) for c in layer)


def _hang_on(g: WeightedGraph, at: int, m: int) -> WeightedGraph:
    new = list(range(g.n, g.n + m - 1))
    return build_graph(g.n + m - 1, list(g.edges) + _clique_edges([at] + new))


def enumerate_block_graphs(
    max_vertices: int,
    *,
    bound: int = DEFAULT_ENUMERATION_BOUND,
    max_clique: int | None = None,
) -> Iterator[WeightedGraph]:
    """Yield every connected block graph on ``1..max_vertices`` vertices once per isomorphism class.

    Graphs come out by increasing order, zero-weighted.  ``max_clique=2``
    restricts the stream to trees.
    """
    if max_vertices > bound:
        raise PreconditionError(f"max_vertices {max_vertices} exceeds enumeration bound {bound}")
    if max_vertices < 1:
        return
    top = max_vertices if max_clique is None else min(max_clique, max_vertices)
    by_order: dict[int, list[WeightedGraph]] = {1: [build_graph(1)]}
    yield by_order[1][0]
    for order in range(2, max_vertices + 1):
        found: dict[str, WeightedGraph] = {}
        for m in range(2, min(top, order) + 1):
            for base in by_order[order - m + 1]:
                for at in range(base.n):
                    cand = _hang_on(base, at, m)
                    found.setdefault(canonical_key(cand), cand)
        by_order[order] = [found[key] for key in sorted(found)]
        yield from by_order[order]


def random_block_graph(
    seed: int,
    max_vertices: int,
    weight_pool: Sequence = DEFAULT_WEIGHT_POOL,
    *,
    max_clique: int = 5,
    max_depth: int = 6,
) -> WeightedGraph:
    """Random connected block graph on ``1..max_vertices`` vertices, deterministic in ``seed``.

    Cliques of order ``2..max_clique`` are hung on vertices at most
    ``max_depth`` attachments away from the first vertex; weights are drawn
    from ``weight_pool``.
    """
    if max_vertices < 1:
        raise PreconditionError("max_vertices must be >= 1")
    if not weight_pool:
        raise PreconditionError("weight pool is empty")
    rng = random.Random(seed)
    target = rng.randint(1, max_vertices)
    grow = _Grower(1)
    depth = [0]
    while grow.n < target:
        at = rng.choice([v for v in range(grow.n) if depth[v] < max_depth])
        m = rng.randint(2, min(max_clique, target - grow.n + 1))
        new = grow.hang(at, m)
        depth += [depth[at] + 1] * len(new)
    pool = [Fraction(w) for w in weight_pool]
    return grow.graph().with_weights([rng.choice(pool) for _ in range(grow.n)])
