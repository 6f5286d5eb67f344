"""Pendant-block reduction of vertex-weighted block graphs.

A pendant clique ``B`` hanging off a cut vertex ``k`` can be removed without
changing whether ``A(G, x)`` is singular:

* if ``t`` of its non-cut weights equals 1, delete all of ``B`` (``k``
  included);
* if exactly one non-cut weight is 1, or none is and ``t != 1``, delete the
  non-cut vertices and add ``gamma`` to the weight of ``k``.

Here ``t(x) = sum 1/(1 - x_i)``.  Repeating this until every component is a
single clique settles the question, since a weighted clique is singular
exactly when two of its weights are 1, or none is and ``t = 1``.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .blocks import BlockCutForest, decompose, pendant_blocks, require_block_graph
from .exceptions import PreconditionError
from .graph import WeightedGraph, components, delete_vertices

ONE = Fraction(1)


def t_of(weights: Iterable) -> Fraction | None:
    """``sum 1/(1 - x_i)``, or None when some ``x_i`` equals 1."""
    total = Fraction(0)
    for x in weights:
        if x == ONE:
            return None
        total += 1 / (ONE - x)
    return total


def gamma_of(weights: Sequence) -> Fraction:
    """Weight added to the cut vertex when a clique with these non-cut weights is contracted.

    Raises PreconditionError when the clique on ``weights`` is itself
    singular (two or more weights equal to 1, or ``t = 1``).
    """
    ones = sum(1 for x in weights if x == ONE)
    if ones >= 2:
        raise PreconditionError("two or more weights equal to 1: clique is singular")
    if ones == 1:
        return -ONE
    t = t_of(weights)
    if t == ONE:
        raise PreconditionError("t(x) = 1: clique is singular")
    return -t / (t - 1)


class BlockTag(enum.Enum):
    TWO_OR_MORE_ONES = "TwoOrMoreOnes"
    EXACTLY_ONE_ONE = "ExactlyOneOne"
    TAU_EQUALS_ONE = "TauEqualsOne"
    TAU_NOT_ONE = "TauNotOne"


@dataclass(frozen=True)
class BlockClass:
    tag: BlockTag
    tau: Fraction | None = None

    def __str__(self) -> str:
        if self.tag is BlockTag.TAU_NOT_ONE:
            return f"{self.tag.value}({self.tau})"
        return self.tag.value


class StepKind(enum.Enum):
    DELETE = "DELETE"
    CONTRACT = "CONTRACT"


class Witness(enum.Enum):
    CLIQUE_COMPONENT_TAU_ONE = "CliqueComponentTauOne"
    BLOCK_WITH_TWO_ONES = "BlockWithTwoOnes"
    ALL_COMPONENTS_NONSINGULAR_CLIQUE = "AllComponentsNonsingularClique"


@dataclass(frozen=True)
class ReductionStep:
    kind: StepKind
    block: tuple[int, ...]  # labels, sorted
    cut: int | None
    tau: Fraction | None = None
    gamma: Fraction | None = None

    def __str__(self) -> str:
        block = "{" + ",".join(map(str, self.block)) + "}"
        if self.kind is StepKind.DELETE:
            return f"DELETE block={block} cut={self.cut} tau=1"
        return f"CONTRACT block={block} cut={self.cut} gamma={self.gamma}"


@dataclass(frozen=True)
class Verdict:
    singular: bool
    witness: Witness
    trace: tuple[ReductionStep, ...] = ()

    def __post_init__(self):
        if self.singular == (self.witness is Witness.ALL_COMPONENTS_NONSINGULAR_CLIQUE):
            raise ValueError(f"witness {self.witness.value} inconsistent with singular={self.singular}")

    @property
    def verdict_line(self) -> str:
        word = "singular" if self.singular else "nonsingular"
        return f"VERDICT {word} witness={self.witness.value}"

    def format_trace(self) -> str:
        return "\n".join([*map(str, self.trace), self.verdict_line]) + "\n"


def _block_weights(g: WeightedGraph, forest: BlockCutForest, b: int) -> list[Fraction]:
    forest.check_block(b)
    return [g.weights[v] for v in sorted(forest.blocks[b].non_cut_vertices)]


def tau_of_block(g: WeightedGraph, forest: BlockCutForest, b: int) -> Fraction | None:
    return t_of(_block_weights(g, forest, b))


def classify_weights(weights: Sequence) -> BlockClass:
    ones = sum(1 for x in weights if x == ONE)
    if ones >= 2:
        return BlockClass(BlockTag.TWO_OR_MORE_ONES)
    if ones == 1:
        return BlockClass(BlockTag.EXACTLY_ONE_ONE)
    t = t_of(weights)
    if t == ONE:
        return BlockClass(BlockTag.TAU_EQUALS_ONE, t)
    return BlockClass(BlockTag.TAU_NOT_ONE, t)


def classify_pendant_block(g: WeightedGraph, forest: BlockCutForest, b: int) -> BlockClass:
    """Classify block ``b`` by its non-cut weights.  ``b`` must be pendant."""
    forest.check_block(b)
    if len(forest.blocks[b].cut_vertices) > 1:
        raise PreconditionError(f"block {b} has more than one cut vertex")
    return classify_weights(_block_weights(g, forest, b))


def _pendant_cut(forest: BlockCutForest, b: int) -> int:
    forest.check_block(b)
    cuts = forest.blocks[b].cut_vertices
    if len(cuts) != 1:
        raise PreconditionError(f"block {b} is not a pendant block with exactly one cut vertex")
    (k,) = cuts
    return k


def pb_delete(g: WeightedGraph, forest: BlockCutForest, b: int) -> WeightedGraph:
    """Delete every vertex of pendant block ``b``, its cut vertex included."""
    _pendant_cut(forest, b)
    cls = classify_pendant_block(g, forest, b)
    if cls.tag is not BlockTag.TAU_EQUALS_ONE:
        raise PreconditionError(f"deletion needs tau = 1, block is {cls}")
    return delete_vertices(g, forest.blocks[b].vertices)


def pb_contract(g: WeightedGraph, forest: BlockCutForest, b: int) -> WeightedGraph:
    """Merge pendant block ``b`` into its cut vertex, shifting that vertex's weight by gamma."""
    k = _pendant_cut(forest, b)
    cls = classify_pendant_block(g, forest, b)
    if cls.tag not in (BlockTag.EXACTLY_ONE_ONE, BlockTag.TAU_NOT_ONE):
        raise PreconditionError(f"contraction needs one weight 1 or tau != 1, block is {cls}")
    gamma = gamma_of(_block_weights(g, forest, b))
    h = g.with_weight(k, g.weights[k] + gamma)
    return delete_vertices(h, forest.blocks[b].non_cut_vertices)


def _has_two_ones(g: WeightedGraph, forest: BlockCutForest) -> bool:
    return any(
        sum(1 for v in blk.non_cut_vertices if g.weights[v] == ONE) >= 2
        for blk in forest.blocks
    )


def decide(g: WeightedGraph, rng: random.Random | None = None) -> Verdict:
    """Decide whether ``A(G, x)`` is singular by pendant-block reduction.

    Components are reduced one at a time.  By default the pendant block with
    the lowest cut-vertex label is taken (ties broken by the block's sorted
    labels), which makes the trace reproducible.  Passing ``rng`` picks the
    next component and pendant block at random instead; the verdict does not
    depend on the order.
    """
    forest = require_block_graph(g)
    if _has_two_ones(g, forest):
        return Verdict(True, Witness.BLOCK_WITH_TWO_ONES)
    trace: list[ReductionStep] = []
    pending = components(g)
    while pending:
        idx = rng.randrange(len(pending)) if rng is not None else 0
        comp = pending.pop(idx)
        forest = decompose(comp)
        if _has_two_ones(comp, forest):
            return Verdict(True, Witness.BLOCK_WITH_TWO_ONES, tuple(trace))
        if len(forest.blocks) == 1:
            cls = classify_weights(comp.weights)
            if cls.tag is BlockTag.TAU_EQUALS_ONE:
                return Verdict(True, Witness.CLIQUE_COMPONENT_TAU_ONE, tuple(trace))
            continue

        candidates = [(b, k) for b, k in pendant_blocks(forest) if k is not None]
        if rng is not None:
            b, k = rng.choice(candidates)
        else:
            b, k = min(
                candidates,
                key=lambda bk: (
                    comp.labels[bk[1]],
                    sorted(comp.labels[v] for v in forest.blocks[bk[0]].vertices),
                ),
            )
        labels = tuple(sorted(comp.labels[v] for v in forest.blocks[b].vertices))
        cls = classify_pendant_block(comp, forest, b)
        if cls.tag is BlockTag.TAU_EQUALS_ONE:
            reduced = pb_delete(comp, forest, b)
            trace.append(ReductionStep(StepKind.DELETE, labels, comp.labels[k], tau=ONE))
        else:
            gamma = gamma_of(_block_weights(comp, forest, b))
            reduced = pb_contract(comp, forest, b)
            trace.append(
                ReductionStep(StepKind.CONTRACT, labels, comp.labels[k], tau=cls.tau, gamma=gamma)
            )
        pending[idx:idx] = components(reduced)
    return Verdict(False, Witness.ALL_COMPONENTS_NONSINGULAR_CLIQUE, tuple(trace))


def check_sufficient_tau(g: WeightedGraph) -> bool:
    """No weight is 1, cut-vertex weights are below 1, and every block has tau > 1.

    Any block graph passing this test is nonsingular.
    """
    forest = require_block_graph(g)
    if any(x == ONE for x in g.weights):
        return False
    if any(g.weights[c] >= ONE for c in forest.cut_vertices):
        return False
    for b in range(len(forest.blocks)):
        tau = tau_of_block(g, forest, b)
        if tau is None or tau <= ONE:
            return False
    return True


def check_sufficient_zero_vertex(g: WeightedGraph) -> bool:
    """All weights below 1, every block has 3+ vertices and a zero-weight non-cut vertex."""
    forest = require_block_graph(g)
    if any(x >= ONE for x in g.weights):
        return False
    for blk in forest.blocks:
        if len(blk) < 3:
            return False
        if not any(g.weights[v] == 0 for v in blk.non_cut_vertices):
            return False
    return True
