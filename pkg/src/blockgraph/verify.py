"""Cross-verification suites: the reduction engine against the exact determinant,
the determinant identities, and the family laws.

Each check returns a :class:`CheckResult`; ``run_suite`` groups them the way
the ``verify`` subcommand reports them.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .determinant import (
    bridge_det,
    coalescence_det,
    det_exact,
    double_pendant_edge_is_singular,
    path_parity_check,
    pendant_edge_negation_holds,
)
from .families import (
    DEFAULT_WEIGHT_POOL,
    NmkSpec,
    enumerate_block_graphs,
    forest_has_perfect_matching,
    is_b31,
    make_nmk,
    random_block_graph,
)
from .gallery import FIXTURES
from .graph import attach_pendant_edges, coalesce, connect_by_edge
from .reduction import check_sufficient_tau, check_sufficient_zero_vertex, decide, gamma_of

SUFFICIENCY_POOL = (Fraction(0), Fraction(1, 2), Fraction(-1), Fraction(-2), Fraction(1, 3), Fraction(2))


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int
    failures: list
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{self.name}: {status} ({self.checked} checked, {len(self.failures)} failed, {self.seconds:.1f}s)"
        if self.failures:
            text += f" first failure: {self.failures[0]}"
        return text


def _timed(name: str, body: Callable[[], tuple[int, list]]) -> CheckResult:
    start = time.perf_counter()
    checked, failures = body()
    return CheckResult(name, not failures and checked > 0, checked, failures, time.perf_counter() - start)


def _agrees(g) -> bool:
    return decide(g).singular == (det_exact(g) == 0)


def check_oracle_exhaustive(max_vertices: int = 8) -> CheckResult:
    def body():
        failures, checked = [], 0
        for g in enumerate_block_graphs(max_vertices):
            checked += 1
            if not _agrees(g):
                failures.append(g)
        return checked, failures

    return _timed(f"oracle-exhaustive(n<={max_vertices})", body)


def check_oracle_random(samples: int = 10_000, seed: int = 0, max_vertices: int = 12) -> CheckResult:
    def body():
        failures = []
        for i in range(samples):
            g = random_block_graph(seed * 1_000_003 + i, max_vertices, DEFAULT_WEIGHT_POOL)
            if not _agrees(g):
                failures.append(g)
        return samples, failures

    return _timed(f"oracle-random(samples={samples})", body)


def check_order_independence(graphs: int = 100, orders: int = 20, seed: int = 0) -> CheckResult:
    def body():
        rng = random.Random(seed)
        failures = []
        for i in range(graphs):
            g = random_block_graph(rng.randrange(2**32), 12, DEFAULT_WEIGHT_POOL)
            reference = decide(g).singular
            for _ in range(orders):
                if decide(g, rng=random.Random(rng.randrange(2**32))).singular != reference:
                    failures.append(g)
                    break
        return graphs * orders, failures

    return _timed(f"order-independence({graphs}x{orders})", body)


def check_nmk_law(n_max: int = 8, m_max: int = 8, k_max: int = 4) -> CheckResult:
    def body():
        failures, checked = [], 0
        for n in range(2, n_max + 1):
            for m in range(3, m_max + 1):
                for k in range(1, k_max + 1):
                    spec = NmkSpec(n, m, k)
                    checked += 1
                    if decide(make_nmk(spec)).singular != (k * (m - 1) == (n - 1) * (m - 2)):
                        failures.append(spec)
        if not decide(make_nmk(NmkSpec(4, 4, 2))).singular:
            failures.append(NmkSpec(4, 4, 2))
        return checked, failures

    return _timed("nmk-law", body)


def check_forest_law(max_vertices: int = 10) -> CheckResult:
    def body():
        failures, checked = [], 0
        for t in enumerate_block_graphs(max_vertices, bound=max_vertices, max_clique=2):
            checked += 1
            if decide(t).singular == forest_has_perfect_matching(t):
                failures.append(t)
        return checked, failures

    return _timed(f"forest-matching-law(n<={max_vertices})", body)


def check_gamma_closed_form(n_max: int = 20) -> CheckResult:
    def body():
        failures = [n for n in range(2, n_max + 1) if gamma_of([0] * n) != Fraction(-n, n - 1)]
        return n_max - 1, failures

    return _timed("gamma-closed-form", body)


def _random_pair(rng: random.Random, pool, max_vertices: int = 7):
    g1 = random_block_graph(rng.randrange(2**32), max_vertices, pool)
    g2 = random_block_graph(rng.randrange(2**32), max_vertices, pool)
    return g1, rng.randrange(g1.n), g2, rng.randrange(g2.n)


def check_coalescence_identity(pairs: int = 1000, seed: int = 0, pool=DEFAULT_WEIGHT_POOL) -> CheckResult:
    def body():
        rng = random.Random(seed)
        failures = []
        for _ in range(pairs):
            g1, v1, g2, v2 = _random_pair(rng, pool)
            if coalescence_det(g1, v1, g2, v2) != det_exact(coalesce(g1, v1, g2, v2)):
                failures.append((g1, v1, g2, v2))
        return pairs, failures

    return _timed("coalescence-identity", body)


def check_bridge_identity(pairs: int = 1000, seed: int = 1, pool=DEFAULT_WEIGHT_POOL) -> CheckResult:
    def body():
        rng = random.Random(seed)
        failures = []
        for _ in range(pairs):
            g1, v1, g2, v2 = _random_pair(rng, pool)
            if bridge_det(g1, v1, g2, v2) != det_exact(connect_by_edge(g1, v1, g2, v2)):
                failures.append((g1, v1, g2, v2))
        return pairs, failures

    return _timed("bridge-identity", body)


def check_pendant_negation(instances: int = 1000, seed: int = 2, pool=DEFAULT_WEIGHT_POOL) -> CheckResult:
    def body():
        rng = random.Random(seed)
        failures = []
        for _ in range(instances):
            h = random_block_graph(rng.randrange(2**32), 10, pool)
            v = rng.randrange(h.n)
            g = attach_pendant_edges(h, v)
            if not pendant_edge_negation_holds(g, g.n - 1, v):
                failures.append((g, v))
        return instances, failures

    return _timed("pendant-edge-negation", body)


def check_path_parity(pairs: int = 200, seed: int = 3, pool=DEFAULT_WEIGHT_POOL) -> CheckResult:
    def body():
        rng = random.Random(seed)
        failures = []
        for _ in range(pairs):
            g1, v1, g2, v2 = _random_pair(rng, pool)
            for k in (2, 3, 4, 5):
                if not path_parity_check(g1, v1, g2, v2, k):
                    failures.append((g1, v1, g2, v2, k))
        return pairs * 4, failures

    return _timed("path-parity", body)


def check_double_pendant(hosts: int = 200, seed: int = 4, pool=DEFAULT_WEIGHT_POOL) -> CheckResult:
    def body():
        rng = random.Random(seed)
        failures = []
        for _ in range(hosts):
            g = random_block_graph(rng.randrange(2**32), 10, pool)
            v = rng.randrange(g.n)
            if not double_pendant_edge_is_singular(g, v):
                failures.append((g, v))
        return hosts, failures

    return _timed("double-pendant-edge", body)


def check_sufficiency(max_vertices: int = 8, samples: int = 2000, seed: int = 5) -> CheckResult:
    """Each sufficient condition for nonsingularity must never hold on a singular graph."""

    def body():
        graphs = list(enumerate_block_graphs(max_vertices))
        for i in range(samples):
            pool = DEFAULT_WEIGHT_POOL if i % 2 == 0 else SUFFICIENCY_POOL
            graphs.append(random_block_graph(seed * 1_000_003 + i, 12, pool))
        failures = []
        hits = {"tau": 0, "zero-vertex": 0, "b31": 0}
        for g in graphs:
            premises = {
                "tau": check_sufficient_tau(g),
                "zero-vertex": check_sufficient_zero_vertex(g),
                "b31": not any(g.weights) and is_b31(g),
            }
            if not any(premises.values()):
                continue
            singular = decide(g).singular or det_exact(g) == 0
            for name, holds in premises.items():
                if holds:
                    hits[name] += 1
                    if singular:
                        failures.append((name, g))
        for name, count in hits.items():
            if count == 0:
                failures.append((name, "premise never satisfied"))
        return len(graphs), failures

    return _timed("sufficient-conditions", body)


def check_fixtures() -> CheckResult:
    def body():
        failures = []
        for fx in FIXTURES:
            g = fx.build()
            if decide(g).singular != fx.singular or (det_exact(g) == 0) != fx.singular:
                failures.append(fx.name)
        return len(FIXTURES), failures

    return _timed("fixtures", body)


SUITES = ("oracle", "identities", "families")


def run_suite(name: str, seed: int = 0, samples: int = 10_000) -> list[CheckResult]:
    if name == "oracle":
        return [
            check_oracle_exhaustive(),
            check_oracle_random(samples=samples, seed=seed),
            check_order_independence(seed=seed),
        ]
    if name == "identities":
        return [
            check_gamma_closed_form(),
            check_coalescence_identity(seed=seed),
            check_bridge_identity(seed=seed + 1),
            check_pendant_negation(seed=seed + 2),
            check_path_parity(seed=seed + 3),
            check_double_pendant(seed=seed + 4),
        ]
    if name == "families":
        return [
            check_nmk_law(),
            check_forest_law(),
            check_sufficiency(seed=seed + 5),
            check_fixtures(),
        ]
    raise ValueError(f"unknown suite {name!r}")
