"""Blocks, cut vertices and the block/cut-vertex forest of a graph."""
from __future__ import annotations

from dataclasses import dataclass, field

from .exceptions import NotBlockGraphError, PreconditionError
from .graph import WeightedGraph


@dataclass(frozen=True)
class Block:
    vertices: frozenset[int]
    is_clique: bool
    cut_vertices: frozenset[int]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def non_cut_vertices(self) -> frozenset[int]:
        return self.vertices - self.cut_vertices


@dataclass(frozen=True)
class BlockCutForest:
    blocks: tuple[Block, ...]
    cut_vertices: frozenset[int]
    # cut vertex -> indices of the blocks containing it
    incidence: dict[int, frozenset[int]] = field(hash=False, compare=False)

    def __len__(self) -> int:
        return len(self.blocks)

    def check_block(self, b: int) -> None:
        if not isinstance(b, int) or not 0 <= b < len(self.blocks):
            raise PreconditionError(f"block index {b!r} out of range 0..{len(self.blocks) - 1}")


def _biconnected(g: WeightedGraph) -> tuple[list[tuple[set[int], int]], set[int]]:
    """Iterative Hopcroft-Tarjan.  Returns ``[(vertex set, edge count)]`` and cut vertices."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    found: list[tuple[set[int], int]] = []
    cuts: set[int] = set()
    clock = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        if not g.adjacency[root]:
            found.append(({root}, 0))
            continue
        root_children = 0
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(sorted(g.adjacency[root])))]
        while stack:
            v, parent, it = stack[-1]
            descended = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = clock
                    clock += 1
                    edge_stack.append((v, w))
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(sorted(g.adjacency[w]))))
                    descended = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if descended:
                continue
            stack.pop()
            if not stack:
                break
            u = stack[-1][0]
            low[u] = min(low[u], low[v])
            if low[v] >= disc[u]:
                if u != root:
                    cuts.add(u)
                comp: set[int] = set()
                count = 0
                while True:
                    a, b = edge_stack.pop()
                    comp.add(a)
                    comp.add(b)
                    count += 1
                    if (a, b) == (u, v):
                        break
                found.append((comp, count))
        if root_children > 1:
            cuts.add(root)
    return found, cuts


def decompose(g: WeightedGraph) -> BlockCutForest:
    """Split ``g`` into blocks.  Isolated vertices become blocks of size one.

    Blocks are ordered by their sorted vertex tuples, so the result is
    deterministic for a given graph.
    """
    found, cuts = _biconnected(g)
    cut_set = frozenset(cuts)
    blocks = []
    for verts, count in found:
        s = len(verts)
        blocks.append(
            Block(frozenset(verts), count == s * (s - 1) // 2, frozenset(verts) & cut_set)
        )
    blocks.sort(key=lambda b: sorted(b.vertices))
    incidence: dict[int, set[int]] = {c: set() for c in cut_set}
    for i, blk in enumerate(blocks):
        for c in blk.cut_vertices:
            incidence[c].add(i)
    return BlockCutForest(
        tuple(blocks), cut_set, {c: frozenset(s) for c, s in incidence.items()}
    )


def is_block_graph(g: WeightedGraph, forest: BlockCutForest | None = None) -> bool:
    """True when every block of ``g`` is a clique."""
    if forest is None:
        forest = decompose(g)
    return all(b.is_clique for b in forest.blocks)


def require_block_graph(g: WeightedGraph) -> BlockCutForest:
    forest = decompose(g)
    if not is_block_graph(g, forest):
        raise NotBlockGraphError("graph has a block that is not a clique")
    return forest


def pendant_blocks(forest: BlockCutForest) -> list[tuple[int, int | None]]:
    """Blocks with at most one cut vertex, paired with that cut vertex (or None).

    A block with no cut vertex is a whole connected component.
    """
    out = []
    for i, blk in enumerate(forest.blocks):
        if len(blk.cut_vertices) == 1:
            (c,) = blk.cut_vertices
            out.append((i, c))
        elif not blk.cut_vertices:
            out.append((i, None))
    return out


def non_cut_vertices(forest: BlockCutForest, b: int) -> frozenset[int]:
    forest.check_block(b)
    return forest.blocks[b].non_cut_vertices
