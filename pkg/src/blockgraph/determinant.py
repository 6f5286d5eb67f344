"""Exact determinants of ``A(G, x)`` and the determinant identities for composed graphs.

``det_exact`` is the ground truth the reduction engine is checked against.
It clears denominators, runs fraction-free (Bareiss) elimination over Python
integers, and rescales.  The null graph has determinant 1.
"""
from __future__ import annotations

import math
import os
from fractions import Fraction

from .exceptions import OracleSizeError, PreconditionError
from .graph import (
    WeightedGraph,
    attach_pendant_edges,
    coalesce,
    connect_by_path,
    delete_vertices,
    is_tree,
)
from .reduction import decide

DEFAULT_MAX_VERTICES = 64
MAX_VERTICES_ENV = "BLOCKGRAPH_MAX_DET_VERTICES"


def max_det_vertices() -> int:
    raw = os.environ.get(MAX_VERTICES_ENV)
    if raw is None:
        return DEFAULT_MAX_VERTICES
    try:
        return int(raw)
    except ValueError:
        raise OracleSizeError(f"{MAX_VERTICES_ENV}={raw!r} is not an integer") from None


def integer_det(rows: list[list[int]]) -> int:
    """Bareiss elimination with row exchanges.  ``rows`` is consumed."""
    n = len(rows)
    if n == 0:
        return 1
    m = rows
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            a = row_i[k]
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                row_i[j] = (pivot * row_i[j] - a * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def adjacency_matrix(g: WeightedGraph) -> list[list[Fraction]]:
    """``A(G) + diag(x)`` as a dense list of rows."""
    rows = []
    for v in range(g.n):
        row = [Fraction(0)] * g.n
        for w in g.adjacency[v]:
            row[w] = Fraction(1)
        row[v] = g.weights[v]
        rows.append(row)
    return rows


def det_exact(g: WeightedGraph, max_vertices: int | None = None) -> Fraction:
    if max_vertices is None:
        max_vertices = max_det_vertices()
    if g.n > max_vertices:
        raise OracleSizeError(f"graph has {g.n} vertices, determinant guard is {max_vertices}")
    scale = math.lcm(*(w.denominator for w in g.weights)) if g.n else 1
    rows = []
    for v in range(g.n):
        row = [0] * g.n
        for w in g.adjacency[v]:
            row[w] = scale
        row[v] = int(g.weights[v] * scale)
        rows.append(row)
    return Fraction(integer_det(rows), scale**g.n)


def is_singular(g: WeightedGraph) -> bool:
    return det_exact(g) == 0


def coalescence_det(g1: WeightedGraph, v1: int, g2: WeightedGraph, v2: int) -> Fraction:
    """``det(G1) det(G2 - v2) + det(G1 - v1) det(G2)``.

    Equals the determinant of the coalescence whose merged vertex carries
    ``x[v1] + x[v2]``.
    """
    g1.check_vertex(v1)
    g2.check_vertex(v2)
    return det_exact(g1) * det_exact(delete_vertices(g2, [v2])) + det_exact(
        delete_vertices(g1, [v1])
    ) * det_exact(g2)


def bridge_det(g1: WeightedGraph, v1: int, g2: WeightedGraph, v2: int) -> Fraction:
    """``det(G1) det(G2) - det(G1 - v1) det(G2 - v2)``, the determinant after adding edge v1-v2."""
    g1.check_vertex(v1)
    g2.check_vertex(v2)
    return det_exact(g1) * det_exact(g2) - det_exact(delete_vertices(g1, [v1])) * det_exact(
        delete_vertices(g2, [v2])
    )


def pendant_edge_negation_holds(g: WeightedGraph, u: int, v: int) -> bool:
    """For a pendant edge with zero-weight leaf ``u``: ``det(G - u - v) == -det(G)``."""
    g.check_vertex(u)
    g.check_vertex(v)
    if g.adjacency[u] != frozenset([v]) or g.weights[u] != 0:
        raise PreconditionError(f"{u} is not a zero-weight leaf hanging on {v}")
    return det_exact(delete_vertices(g, [u, v])) == -det_exact(g)


def double_pendant_edge_is_singular(g: WeightedGraph, v: int) -> bool:
    """Hang two pendant edges on ``v`` and report whether the result is singular (it always is)."""
    g.check_vertex(v)
    return det_exact(attach_pendant_edges(g, v, 2)) == 0


def path_parity_check(
    g1: WeightedGraph, v1: int, g2: WeightedGraph, v2: int, k: int
) -> bool:
    """Check ``det`` with ``k`` interior path vertices is minus ``det`` with ``k - 2``."""
    if k < 2:
        raise PreconditionError("path parity needs at least 2 interior vertices")
    longer = det_exact(connect_by_path(g1, v1, g2, v2, k))
    shorter = det_exact(connect_by_path(g1, v1, g2, v2, k - 2))
    return longer == -shorter


def pendant_tree_replacement_check(
    g: WeightedGraph, u: int, v: int, tree: WeightedGraph, attach: int
) -> bool:
    """Replace pendant edge ``{u, v}`` by a nonsingular tree hung at ``v``.

    Coalesces ``g - u`` with ``tree`` (vertex ``attach`` identified with
    ``v``) and returns whether both graphs get the same singularity verdict
    from the reduction engine.
    """
    g.check_vertex(u)
    g.check_vertex(v)
    tree.check_vertex(attach)
    if g.adjacency[u] != frozenset([v]):
        raise PreconditionError(f"{{{u}, {v}}} is not a pendant edge with leaf {u}")
    if g.weights[u] != 0:
        raise PreconditionError("pendant leaf must have weight 0")
    if not is_tree(tree) or any(tree.weights):
        raise PreconditionError("replacement must be an unweighted tree")
    if det_exact(tree) == 0:
        raise PreconditionError("replacement tree is singular")
    rest = delete_vertices(g, [u])
    v_rest = v - (1 if u < v else 0)
    replaced = coalesce(rest, v_rest, tree, attach, merged_weight=g.weights[v])
    return decide(replaced).singular == decide(g).singular
