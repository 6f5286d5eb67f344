"""Small hand-built block graphs with known singularity, used as fixtures.

Each entry is a zero-weight graph together with whether it is singular.
"""
from __future__ import annotations

from typing import Callable, NamedTuple

from .families import (
    CoalescedCliqueSpec,
    NmkSpec,
    TreeOfBlockGraphsSpec,
    make_coalesced_cliques,
    make_mnktree,
    make_nmk,
    make_tree_of_block_graphs,
)
from .graph import WeightedGraph, build_graph, complete_graph


def _from_one_based(n: int, edges: list[tuple[int, int]]) -> WeightedGraph:
    return build_graph(n, [(u - 1, v - 1) for u, v in edges])


def nmk_442() -> WeightedGraph:
    """``K_4`` with two pendant ``K_4`` at every vertex."""
    return make_nmk(NmkSpec(4, 4, 2))


MNKTREE_SKELETON = build_graph(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
MNKTREE_ATTACHMENTS = ((4,), (3, 4), (3,), (4, 4), (3, 3))


def mnktree_example() -> WeightedGraph:
    """Five-vertex tree with cliques hung on every vertex, heavy enough to dominate degrees."""
    return make_mnktree(MNKTREE_SKELETON, MNKTREE_ATTACHMENTS)


def b31_example() -> WeightedGraph:
    """``K_4`` with two pendant ``K_4`` on three of its vertices; the fourth stays free."""
    return make_coalesced_cliques(CoalescedCliqueSpec(4, ((4, 4), (4, 4), (4, 4), ())))


def coalesced_example() -> WeightedGraph:
    """Like :func:`b31_example` but the fourth vertex carries one pendant ``K_4``."""
    return make_coalesced_cliques(CoalescedCliqueSpec(4, ((4, 4), (4, 4), (4, 4), (4,))))


def tree_of_b31_example() -> WeightedGraph:
    """Four B31 graphs joined by three vertex-disjoint skeleton edges (22 vertices)."""
    return _from_one_based(22, [
        (1, 2), (1, 3), (1, 4), (3, 2), (4, 2), (3, 4),
        (1, 7), (1, 8), (7, 8),
        (3, 5), (3, 6), (5, 6),
        (11, 10), (10, 9), (11, 9),
        (21, 22), (20, 22), (21, 20),
        (12, 13), (12, 14), (12, 15), (13, 14), (13, 15), (14, 15),
        (13, 16), (13, 17), (16, 17),
        (18, 12), (19, 12), (18, 19),
        (11, 6), (12, 7), (21, 2),
    ])


def pendant_tree_example() -> WeightedGraph:
    """Cliques with pendant edges, one pendant edge replaced by a small tree (21 vertices)."""
    return _from_one_based(21, [
        (11, 18), (11, 21), (19, 18),
        (1, 3), (1, 4), (1, 2), (3, 2), (4, 2), (3, 4),
        (6, 20), (5, 6), (5, 7), (5, 8), (6, 7), (6, 8), (7, 8),
        (6, 9), (6, 10), (9, 10), (6, 11),
        (3, 12), (3, 13), (13, 12), (14, 3),
        (1, 5), (1, 15), (1, 16), (5, 16), (5, 15), (15, 16),
        (1, 17),
    ])


def shared_skeleton_vertex_spec() -> TreeOfBlockGraphsSpec:
    """Five triangles; two skeleton edges meet at each of two vertices of the middle one."""
    k3 = complete_graph(3)
    return TreeOfBlockGraphsSpec(
        (k3, k3, k3, k3, k3),
        ((0, 1, 1, 0), (0, 2, 0, 0), (0, 3, 0, 0), (0, 4, 1, 0)),
    )


def saturated_block_spec() -> TreeOfBlockGraphsSpec:
    """Two B31 graphs whose free vertices are used up by the single skeleton edge."""
    left = make_coalesced_cliques(CoalescedCliqueSpec(3, ((), (3,), (3,))))
    right = make_coalesced_cliques(CoalescedCliqueSpec(3, ((), (3, 4, 4), (3, 4, 4))))
    return TreeOfBlockGraphsSpec((left, right), ((0, 1, 0, 0),))


def shared_skeleton_vertex_example() -> WeightedGraph:
    return make_tree_of_block_graphs(shared_skeleton_vertex_spec())


def saturated_block_example() -> WeightedGraph:
    return make_tree_of_block_graphs(saturated_block_spec())


class Fixture(NamedTuple):
    name: str
    build: Callable[[], WeightedGraph]
    singular: bool


FIXTURES = (
    Fixture("nmk-4-4-2", nmk_442, True),
    Fixture("mnktree", mnktree_example, False),
    Fixture("b31", b31_example, False),
    Fixture("coalesced-cliques", coalesced_example, False),
    Fixture("tree-of-b31", tree_of_b31_example, False),
    Fixture("pendant-tree", pendant_tree_example, False),
    Fixture("shared-skeleton-vertex", shared_skeleton_vertex_example, True),
    Fixture("saturated-block", saturated_block_example, True),
)
