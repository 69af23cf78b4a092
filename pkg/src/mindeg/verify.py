"""Oracle-versus-formula checks run by ``mindeg verify``.

Each check returns ``(passed, expected, actual)`` with human-readable
expected/actual strings; :func:`run_suite` adds wall-clock budgets.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, List, Tuple

from . import formulas as F
from .model import Graph, build_complete, build_complete_bipartite, build_rpartite_hypergraph
from .oracle import (
    exhaustive_expected_count,
    exhaustive_inclusion_probability,
    exhaustive_k_distribution,
)
from .process import (
    edge_ids_of,
    monte_carlo_expected_count,
    monte_carlo_inclusion,
    stopping_time_summary,
)

MC_TRIALS = 100_000
MC_Z = 4.0
MC_SEED = 2008


@dataclass
class Check:
    criterion: str
    name: str
    budget: float
    suites: Tuple[str, ...]
    fn: Callable[..., Tuple[bool, str, str]]


def _q(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def k22_matching() -> Tuple[Graph, frozenset]:
    g = build_complete_bipartite(2)
    # edges (0,2),(0,3),(1,2),(1,3): {(0,2),(1,3)} is a perfect matching
    return g, edge_ids_of(g, [(0, 2), (1, 3)])


def check_k22_thm1(**_):
    g, J = k22_matching()
    oracle = exhaustive_inclusion_probability(g, 1, J)
    formula = F.thm1_fraction(2, 1)
    return oracle == formula == Fraction(1, 2), "1/2", f"oracle {_q(oracle)}, thm1 {_q(formula)}"


def check_cor1_n3(**_):
    val = exhaustive_expected_count(build_complete_bipartite(3), 1, "bipartite-matchings")
    return val == Fraction(36, 35) == F.cor1_expected_matchings(3), "36/35", _q(val)


def check_k4_hamcycles(**_):
    val = exhaustive_expected_count(build_complete(4), 2, "hamiltonian-cycles")
    formula = 3 * F.cor3_hamcycle_fraction(4, 3)
    return val == formula == 1, "1 (= 3 x 1/3)", f"oracle {_q(val)}, formula {_q(formula)}"


def check_thm2_degeneration(**_):
    bad = [n for n in range(1, 31) if F.thm2_expected_matchings(n, 2) != F.cor1_expected_matchings(n)]
    return not bad, "equal for n=1..30", f"mismatch at n={bad}" if bad else "equal for n=1..30"


def check_thm3_degeneration(**_):
    bad = []
    for n in range(1, 16):
        pm = Fraction(factorial(2 * n), 2**n * factorial(n))
        if F.thm3_expected_matchings(n, 2) != pm * F.cor2_matching_fraction(n, 2 * n - 1):
            bad.append(n)
    return not bad, "equal for n=1..15", f"mismatch at n={bad}" if bad else "equal for n=1..15"


def decomposition_mismatches() -> List[Tuple[int, int, int]]:
    bad = []
    for h in range(1, 13):
        for D in range(0, 13):
            target = F.thm1_fraction(h, D)
            for E in range(h, 61):
                if sum(F.contribution_distribution(E, h, D).values()) != target:
                    bad.append((h, D, E))
    return bad


def check_decomposition(**_):
    bad = decomposition_mismatches()
    if not bad:
        return True, "sum_k = thm1 on full grid", "equal on all grid points"
    short = all(E < h + 2 * D for h, D, E in bad)
    note = " (all with E < h + 2*Delta)" if short else ""
    return False, "sum_k = thm1 on full grid", f"{len(bad)} mismatching (h, Delta, E) points{note}, first {bad[0]}"


def check_k22_kdist(**_):
    g, J = k22_matching()
    dist = exhaustive_k_distribution(g, 1, J)
    expected = {2: Fraction(1, 6), 3: Fraction(1, 3)}
    formula = F.contribution_distribution(4, 2, 1)
    pointwise = all(dist.get(k, 0) == v for k, v in formula.items()) and set(dist) <= set(formula)
    ok = {k: v for k, v in dist.items() if v} == expected and pointwise
    shown = ", ".join(f"{k}: {_q(v)}" for k, v in dist.items())
    return ok, "{2: 1/6, 3: 1/3}", "{" + shown + "}"


def check_k222(**_):
    val = exhaustive_expected_count(build_rpartite_hypergraph(2, 3), 1, "hypergraph-matchings")
    formula = F.thm2_expected_matchings(2, 3)
    return val == formula == Fraction(27, 35), "27/35", f"oracle {_q(val)}, thm2 {_q(formula)}"


def check_k4_pm(**_):
    val = exhaustive_expected_count(build_complete(4), 1, "perfect-matchings")
    formula = F.thm3_expected_matchings(2, 2)
    return val == formula == Fraction(4, 5), "4/5", f"oracle {_q(val)}, thm3 {_q(formula)}"


def _mc_result(est, exact: Fraction):
    gap = abs(est.mean - float(exact))
    ok = gap <= MC_Z * est.stderr
    return ok, f"{float(exact):.7f} within {MC_Z:g} stderr", f"{est.mean:.7f} +/- {est.stderr:.7f}"


def check_mc_k66(**_):
    g = build_complete_bipartite(6)
    J = edge_ids_of(g, [(i, 6 + i) for i in range(6)])
    est = monte_carlo_inclusion(g, 1, J, MC_TRIALS, seed=MC_SEED)
    return _mc_result(est, Fraction(101, 24024))


def check_mc_k33(**_):
    est = monte_carlo_expected_count(build_complete_bipartite(3), 1, "bipartite-matchings", MC_TRIALS, seed=MC_SEED)
    return _mc_result(est, Fraction(36, 35))


def check_mc_k222(**_):
    est = monte_carlo_expected_count(build_rpartite_hypergraph(2, 3), 1, "hypergraph-matchings", MC_TRIALS, seed=MC_SEED)
    return _mc_result(est, Fraction(27, 35))


def k3_path() -> Tuple[Graph, Graph, frozenset]:
    g = build_complete(3)
    J = Graph(3, ((0, 1), (1, 2)))
    return g, J, edge_ids_of(g, J)


def check_k3_regression(threshold_correction: bool = True, **_):
    g, J, ids = k3_path()
    oracle = exhaustive_inclusion_probability(g, 1, ids)
    general = F.general_copy_probability(g, J, 1, threshold_correction=threshold_correction)
    literal = F.thm1_fraction(2, 1)
    ok = oracle == general == Fraction(1, 3) and literal == Fraction(1, 2)
    return (
        ok,
        "oracle 1/3, general 1/3, thm1 1/2",
        f"oracle {_q(oracle)}, general {_q(general)}, thm1 {_q(literal)}",
    )


def check_argmax(**_):
    E, h, D = 100, 10, 9
    dist = F.contribution_distribution(E, h, D)
    best = max(dist.values())
    scanned = min(k for k, v in dist.items() if v == best)
    k = F.argmax_contribution(E, h, D)
    centre = h * E / (D + h)
    ok = k == scanned and abs(k - centre) <= 3
    return ok, f"within 3 of {centre:.1f}, equal to scan", f"argmax {k}, scan {scanned}"


def check_stopping_time(**_):
    n = 64
    summary = stopping_time_summary(build_complete_bipartite(n), 1, 200, seed=MC_SEED)
    ref = n * math.log(n)
    lo, hi = 0.7 * ref, 1.5 * ref
    mean = summary["mean"]
    return lo <= mean <= hi, f"in [{lo:.1f}, {hi:.1f}]", f"{mean:.2f}"


SMALL = ("small", "full")
FULL = ("full",)

CHECKS: List[Check] = [
    Check("1", "oracle-thm1-K22", 1, SMALL, check_k22_thm1),
    Check("2", "oracle-cor1-K33", 60, FULL, check_cor1_n3),
    Check("3", "oracle-cor3-K4-hamcycles", 1, SMALL, check_k4_hamcycles),
    Check("4", "thm2-r2-equals-cor1", 1, SMALL, check_thm2_degeneration),
    Check("5", "thm3-r2-equals-cor2", 1, SMALL, check_thm3_degeneration),
    Check("6", "per-k-decomposition-grid", 10, SMALL, check_decomposition),
    Check("7", "oracle-k-distribution-K22", 1, SMALL, check_k22_kdist),
    Check("8", "oracle-thm2-K222", 30, FULL, check_k222),
    Check("9", "oracle-thm3-K4", 1, SMALL, check_k4_pm),
    Check("10a", "mc-inclusion-K66", 30, FULL, check_mc_k66),
    Check("10b", "mc-matchings-K33", 30, FULL, check_mc_k33),
    Check("10c", "mc-matchings-K222", 30, FULL, check_mc_k222),
    Check("11", "min-degree-regression-K3-path", 1, SMALL, check_k3_regression),
    Check("12", "argmax-location", 1, SMALL, check_argmax),
    Check("13", "stopping-time-K64-64", 30, FULL, check_stopping_time),
]


def run_suite(suite: str = "small", threshold_correction: bool = True, on_result=None) -> List[dict]:
    if suite not in ("small", "full"):
        raise ValueError(f"unknown suite {suite!r}")
    results = []
    for chk in CHECKS:
        if suite not in chk.suites:
            continue
        t0 = time.perf_counter()
        ok, expected, actual = chk.fn(threshold_correction=threshold_correction)
        seconds = time.perf_counter() - t0
        res = {
            "criterion": chk.criterion,
            "name": chk.name,
            "expected": expected,
            "actual": actual,
            "within_budget": seconds < chk.budget,
            "passed": bool(ok) and seconds < chk.budget,
        }
        if on_result is not None:
            on_result(res, seconds)
        results.append(res)
    return results
