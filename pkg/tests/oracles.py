"""Independent reference implementations used only by the tests."""
from fractions import Fraction
from itertools import permutations

import networkx as nx
import sympy

from blockgraph.graph import WeightedGraph


def matrix(g: WeightedGraph) -> list[list[Fraction]]:
    rows = [[Fraction(0)] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        rows[u][v] = rows[v][u] = Fraction(1)
    for v, w in enumerate(g.weights):
        rows[v][v] = w
    return rows


def _perm_sign(p) -> int:
    sign, seen = 1, [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def leibniz_det(g: WeightedGraph) -> Fraction:
    """Sum over all permutations; only for tiny graphs."""
    m = matrix(g)
    total = Fraction(0)
    for p in permutations(range(g.n)):
        term = Fraction(_perm_sign(p))
        for i, j in enumerate(p):
            term *= m[i][j]
            if not term:
                break
        total += term
    return total


def sympy_det(g: WeightedGraph) -> Fraction:
    if g.n == 0:
        return Fraction(1)
    d = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in matrix(g)]).det(
        method="berkowitz"
    )
    d = sympy.Rational(d)
    return Fraction(int(d.p), int(d.q))


def to_nx(g: WeightedGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def nx_blocks(g: WeightedGraph) -> set[frozenset[int]]:
    h = to_nx(g)
    blocks = {frozenset(c) for c in nx.biconnected_components(h)}
    blocks |= {frozenset([v]) for v in h if h.degree(v) == 0}
    return blocks


def brute_cut_vertices(g: WeightedGraph) -> set[int]:
    h = to_nx(g)
    base = nx.number_connected_components(h)
    cuts = set()
    for v in range(g.n):
        k = h.copy()
        k.remove_node(v)
        if nx.number_connected_components(k) > base:
            cuts.add(v)
    return cuts


def nx_is_block_graph(g: WeightedGraph) -> bool:
    h = to_nx(g)
    return all(
        h.subgraph(c).number_of_edges() == len(c) * (len(c) - 1) // 2
        for c in nx.biconnected_components(h)
    )


def has_perfect_matching(g: WeightedGraph) -> bool:
    h = to_nx(g)
    return 2 * len(nx.max_weight_matching(h, maxcardinality=True)) == g.n
