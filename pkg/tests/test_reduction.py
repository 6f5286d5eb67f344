import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from blockgraph.blocks import decompose, pendant_blocks
from blockgraph.determinant import det_exact
from blockgraph.exceptions import NotBlockGraphError, PreconditionError
from blockgraph.families import NmkSpec, make_nmk
from blockgraph.graph import build_graph, coalesce, complete_graph, path_graph
from blockgraph.reduction import (
    BlockTag,
    StepKind,
    Verdict,
    Witness,
    check_sufficient_tau,
    check_sufficient_zero_vertex,
    classify_pendant_block,
    classify_weights,
    decide,
    gamma_of,
    pb_contract,
    pb_delete,
    t_of,
    tau_of_block,
)

from conftest import block_graphs

F = Fraction


def _block_index(forest, vertices):
    return next(i for i, b in enumerate(forest.blocks) if set(b.vertices) == set(vertices))


# t and gamma

def test_t_examples():
    assert t_of([0, 0, 0]) == 3
    assert t_of([F(1, 2), -1]) == F(5, 2)
    assert t_of([1, 0]) is None
    assert t_of([]) == 0


@pytest.mark.parametrize("n", range(2, 12))
def test_gamma_of_zeros(n):
    assert gamma_of([0] * n) == F(-n, n - 1)


def test_gamma_examples():
    assert gamma_of([1, 0, 5]) == -1
    assert gamma_of([F(1, 2)]) == -2  # t = 2
    assert gamma_of([0, 0]) == -2
    with pytest.raises(PreconditionError):
        gamma_of([1, 1])
    with pytest.raises(PreconditionError):
        gamma_of([0])  # t = 1


@given(st.lists(st.sampled_from([F(0), F(1, 2), F(-1), F(2), F(1, 3), F(-3, 2)]), min_size=1, max_size=6))
def test_gamma_matches_contracted_determinant(ws):
    t = t_of(ws)
    if t == 1:
        return
    n = len(ws)
    k = build_graph(n + 1, [(i, j) for i in range(n + 1) for j in range(i + 1, n + 1)], [*ws, 0])
    inner = build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)], ws)
    # det(K) = (0 + gamma) * det(K - c) since contracting leaves a single vertex of weight gamma
    assert det_exact(k) == gamma_of(ws) * det_exact(inner)


# classification

def test_classify_weights():
    assert classify_weights([1, 1, 0]).tag is BlockTag.TWO_OR_MORE_ONES
    assert classify_weights([1, 0]).tag is BlockTag.EXACTLY_ONE_ONE
    cls = classify_weights([0])
    assert cls.tag is BlockTag.TAU_EQUALS_ONE and cls.tau == 1
    cls = classify_weights([0, 0])
    assert cls.tag is BlockTag.TAU_NOT_ONE and cls.tau == 2
    assert str(cls) == "TauNotOne(2)"


def test_tau_of_block_ignores_cut_vertex():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)], [0, 0, 0])
    g = coalesce(g, 0, complete_graph(2), 0, F(1))  # cut vertex 0 now weight 1
    forest = decompose(g)
    b = _block_index(forest, [0, 1, 2])
    assert tau_of_block(g, forest, b) == 2
    assert classify_pendant_block(g, forest, b).tag is BlockTag.TAU_NOT_ONE


def test_classify_rejects_internal_block():
    g = path_graph(4)
    forest = decompose(g)
    with pytest.raises(PreconditionError):
        classify_pendant_block(g, forest, _block_index(forest, [1, 2]))


# pendant-block operations

def test_pb_delete_path():
    g = path_graph(4)
    forest = decompose(g)
    h = pb_delete(g, forest, _block_index(forest, [0, 1]))
    assert h.n == 2 and h.labels == (2, 3) and h.edge_count == 1


def test_pb_delete_star():
    star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    forest = decompose(star)
    h = pb_delete(star, forest, _block_index(forest, [0, 1]))
    assert h.n == 2 and h.edge_count == 0 and h.labels == (2, 3)


def test_pb_contract_triangle_on_zero_cut():
    g = coalesce(complete_graph(3), 0, complete_graph(3), 0)
    forest = decompose(g)
    h = pb_contract(g, forest, _block_index(forest, [0, 1, 2]))
    assert h.n == 3 and h.labels == (0, 3, 4)
    assert h.weights == (F(-2), F(0), F(0))


@pytest.mark.parametrize("m", range(3, 9))
def test_pb_contract_clique_gain(m):
    g = coalesce(complete_graph(2), 0, complete_graph(m), 0)
    forest = decompose(g)
    h = pb_contract(g, forest, next(i for i, b in enumerate(forest.blocks) if len(b) == m))
    assert h.weights[0] == F(-(m - 1), m - 2)


def test_pb_contract_with_single_one():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)], [0, 1, 0])
    g = coalesce(g, 0, complete_graph(2), 0)
    forest = decompose(g)
    b = _block_index(forest, [0, 1, 2])
    assert classify_pendant_block(g, forest, b).tag is BlockTag.EXACTLY_ONE_ONE
    assert pb_contract(g, forest, b).weights[0] == -1


def test_operation_preconditions():
    g = path_graph(3)
    forest = decompose(g)
    b = _block_index(forest, [0, 1])
    with pytest.raises(PreconditionError):
        pb_contract(g, forest, b)  # tau = 1
    g2 = coalesce(complete_graph(3), 0, complete_graph(2), 0)
    forest2 = decompose(g2)
    with pytest.raises(PreconditionError):
        pb_delete(g2, forest2, _block_index(forest2, [0, 1, 2]))  # tau = 2
    with pytest.raises(PreconditionError):
        pb_delete(complete_graph(2), decompose(complete_graph(2)), 0)  # no cut vertex


@given(block_graphs(10))
def test_single_step_preserves_singularity(g):
    forest = decompose(g)
    singular = det_exact(g) == 0
    for b, k in pendant_blocks(forest):
        if k is None:
            continue
        tag = classify_pendant_block(g, forest, b).tag
        if tag is BlockTag.TAU_EQUALS_ONE:
            h = pb_delete(g, forest, b)
        elif tag is BlockTag.TWO_OR_MORE_ONES:
            assert singular
            continue
        else:
            h = pb_contract(g, forest, b)
        assert (det_exact(h) == 0) == singular


# the decision procedure

def test_decide_path_three():
    v = decide(path_graph(3))
    assert v.singular and v.witness is Witness.CLIQUE_COMPONENT_TAU_ONE
    assert v.format_trace() == (
        "DELETE block={0,1} cut=1 tau=1\n"
        "VERDICT singular witness=CliqueComponentTauOne\n"
    )


def test_decide_path_four():
    v = decide(path_graph(4))
    assert not v.singular
    assert v.format_trace() == (
        "DELETE block={0,1} cut=1 tau=1\n"
        "VERDICT nonsingular witness=AllComponentsNonsingularClique\n"
    )


def test_decide_contract_trace():
    g = coalesce(complete_graph(3), 0, complete_graph(3), 0)
    v = decide(g)
    assert not v.singular
    assert [str(s) for s in v.trace] == ["CONTRACT block={0,1,2} cut=0 gamma=-2"]
    assert v.trace[0].kind is StepKind.CONTRACT and v.trace[0].tau == 2


def test_decide_small_cases():
    assert decide(build_graph(1, [], [0])).singular
    assert not decide(build_graph(1, [], [1])).singular
    assert not decide(build_graph(0)).singular
    assert not decide(complete_graph(2)).singular
    assert decide(make_nmk(NmkSpec(4, 4, 2))).singular
    assert not decide(make_nmk(NmkSpec(4, 4, 1))).singular


def test_two_ones_shortcut():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)], [1, 1, 0])
    v = decide(g)
    assert v.singular and v.witness is Witness.BLOCK_WITH_TWO_ONES and v.trace == ()
    assert det_exact(g) == 0


def test_two_ones_found_after_contraction():
    # leaf of weight -1 has t = 1/2, so contracting it adds gamma = 1 to the cut vertex,
    # which then joins the triangle's existing weight-1 vertex
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (1, 3)], [-1, 0, 1, 0])
    v = decide(g)
    assert [str(s) for s in v.trace] == ["CONTRACT block={0,1} cut=1 gamma=1"]
    assert v.singular and v.witness is Witness.BLOCK_WITH_TWO_ONES
    assert det_exact(g) == 0


def test_decide_disconnected():
    g = build_graph(5, [(0, 1), (2, 3), (3, 4)])
    assert decide(g).singular  # P3 component
    assert det_exact(g) == 0


def test_decide_rejects_non_block_graph():
    with pytest.raises(NotBlockGraphError):
        decide(build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))


def test_verdict_consistency():
    with pytest.raises(ValueError):
        Verdict(True, Witness.ALL_COMPONENTS_NONSINGULAR_CLIQUE)
    with pytest.raises(ValueError):
        Verdict(False, Witness.BLOCK_WITH_TWO_ONES)


def test_decide_is_deterministic():
    g = make_nmk(NmkSpec(3, 4, 2))
    assert decide(g) == decide(g)


@given(block_graphs(12))
def test_decide_matches_determinant(g):
    assert decide(g).singular == (det_exact(g) == 0)


@given(block_graphs(12), st.integers(0, 2**32))
def test_order_independence(g, seed):
    assert decide(g, rng=random.Random(seed)).singular == decide(g).singular


# sufficient conditions

def test_sufficient_zero_vertex_triangle():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)], [0, F(1, 2), F(1, 2)])
    assert check_sufficient_zero_vertex(g)
    assert det_exact(g) != 0


def test_sufficient_conditions_examples():
    assert not check_sufficient_zero_vertex(path_graph(3))  # blocks too small
    assert check_sufficient_tau(build_graph(2, [(0, 1)], [F(1, 2), F(1, 2)]))  # tau = 2 + 2
    assert check_sufficient_tau(path_graph(2))  # one block, t = 2
    assert not check_sufficient_tau(path_graph(3))  # pendant blocks have tau = 1
    assert not check_sufficient_tau(build_graph(1, [], [1]))


@given(block_graphs(10))
def test_sufficient_conditions_imply_nonsingular(g):
    if check_sufficient_tau(g) or check_sufficient_zero_vertex(g):
        assert det_exact(g) != 0
