"""Exit criteria for the package, one test per criterion, each under its
stated wall-clock budget."""

import math
import time
from fractions import Fraction
from math import factorial

import pytest

from mindeg import formulas as F
from mindeg import oracle
from mindeg.model import Graph, build_complete, build_complete_bipartite, build_rpartite_hypergraph
from mindeg.oracle import exhaustive_expected_count, exhaustive_inclusion_probability, exhaustive_k_distribution
from mindeg.process import edge_ids_of, monte_carlo_expected_count, monte_carlo_inclusion, stopping_time_summary

Q = Fraction
SEED = 2008
TRIALS = 100_000


@pytest.fixture(autouse=True)
def cold_oracle():
    oracle._census_cache.clear()


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_c01_oracle_thm1_k22(acceptance):
    g = build_complete_bipartite(2)
    J = edge_ids_of(g, [(0, 2), (1, 3)])
    (ex, th), s = timed(lambda: (exhaustive_inclusion_probability(g, 1, J), F.thm1_fraction(2, 1)))
    assert acceptance(1, ex == th == Q(1, 2), s, 1, f"K22 oracle {ex} = thm1 {th} = 1/2")
    assert ex == th == Q(1, 2) and s < 1


def test_c02_cor1_n3_exhaustive(acceptance):
    val, s = timed(lambda: exhaustive_expected_count(build_complete_bipartite(3), 1, "bipartite-matchings"))
    ok = val == Q(36, 35) == F.cor1_expected_matchings(3)
    assert acceptance(2, ok, s, 60, f"K33 over 9! orderings: {val} (want 36/35)")
    assert ok and s < 60


def test_c03_k4_hamcycles(acceptance):
    val, s = timed(lambda: exhaustive_expected_count(build_complete(4), 2, "hamiltonian-cycles"))
    ok = val == 1 == 3 * F.cor3_hamcycle_fraction(4, 3)
    assert acceptance(3, ok, s, 1, f"K4 delta=2 Hamiltonian cycles: {val} (want 1 = 3 x 1/3)")
    assert ok and s < 1


def test_c04_thm2_degenerates_to_cor1(acceptance):
    bad, s = timed(lambda: [n for n in range(1, 31) if F.thm2_expected_matchings(n, 2) != F.cor1_expected_matchings(n)])
    assert acceptance(4, not bad, s, 1, f"thm2(n,2) = cor1(n), n<=30; mismatches {bad}")
    assert not bad and s < 1


def test_c05_thm3_degenerates_to_cor2(acceptance):
    def sweep():
        return [
            n for n in range(1, 16)
            if F.thm3_expected_matchings(n, 2)
            != Q(factorial(2 * n), 2**n * factorial(n)) * F.cor2_matching_fraction(n, 2 * n - 1)
        ]

    bad, s = timed(sweep)
    assert acceptance(5, not bad, s, 1, f"thm3(n,2) = pm(K_2n) cor2(n,2n-1), n<=15; mismatches {bad}")
    assert not bad and s < 1


def test_c06_decomposition_full_grid(acceptance):
    def sweep():
        bad = []
        for h in range(1, 13):
            for D in range(0, 13):
                target = F.thm1_fraction(h, D)
                for E in range(h, 61):
                    total = sum(F.contribution_at_k(E, h, D, k) for k in range(h, E + 1))
                    if total != target:
                        bad.append((h, D, E))
        return bad

    bad, s = timed(sweep)
    short = sum(1 for h, D, E in bad if E < h + 2 * D)
    acceptance(6, not bad, s, 10, f"sum_k contribution = thm1 on h<=12, D<=12, h<=E<=60; {len(bad)} mismatches ({short} with E < h+2D)")
    assert not bad, f"{len(bad)} grid points disagree, e.g. {bad[:3]}"
    assert s < 10


def test_c07_k_distribution_pointwise(acceptance):
    g = build_complete_bipartite(2)
    J = edge_ids_of(g, [(0, 2), (1, 3)])
    dist, s = timed(lambda: exhaustive_k_distribution(g, 1, J))
    formula = F.contribution_distribution(4, 2, 1)
    ok = (
        {k: v for k, v in dist.items() if v} == {2: Q(1, 6), 3: Q(1, 3)}
        and all(dist.get(k, 0) == v for k, v in formula.items())
    )
    assert acceptance(7, ok, s, 1, f"K22 k-distribution {dict(dist)} vs contribution_at_k {formula}")
    assert ok and s < 1


def test_c08_k222_hypergraph(acceptance):
    val, s = timed(lambda: exhaustive_expected_count(build_rpartite_hypergraph(2, 3), 1, "hypergraph-matchings"))
    ok = val == Q(27, 35) == F.thm2_expected_matchings(2, 3)
    assert acceptance(8, ok, s, 30, f"K222 over 8! orderings: {val} (want 27/35)")
    assert ok and s < 30


def test_c09_k4_perfect_matchings(acceptance):
    val, s = timed(lambda: exhaustive_expected_count(build_complete(4), 1, "perfect-matchings"))
    ok = val == Q(4, 5) == F.thm3_expected_matchings(2, 2)
    assert acceptance(9, ok, s, 1, f"K4 delta=1 perfect matchings: {val} (want 4/5)")
    assert ok and s < 1


def _mc(acceptance, label, est_fn, exact):
    est, s = timed(est_fn)
    gap = abs(est.mean - float(exact))
    ok = gap <= 4 * est.stderr
    assert acceptance(label, ok, s, 30, f"{est.mean:.6f} +/- {est.stderr:.6f} vs {exact} ({gap / est.stderr:.2f} stderr)")
    assert ok and s < 30


def test_c10a_mc_k66_inclusion(acceptance):
    g = build_complete_bipartite(6)
    J = edge_ids_of(g, [(i, 6 + i) for i in range(6)])
    _mc(acceptance, "10a", lambda: monte_carlo_inclusion(g, 1, J, TRIALS, seed=SEED), Q(101, 24024))


def test_c10b_mc_k33_matchings(acceptance):
    _mc(acceptance, "10b",
        lambda: monte_carlo_expected_count(build_complete_bipartite(3), 1, "bipartite-matchings", TRIALS, seed=SEED),
        Q(36, 35))


def test_c10c_mc_k222_matchings(acceptance):
    _mc(acceptance, "10c",
        lambda: monte_carlo_expected_count(build_rpartite_hypergraph(2, 3), 1, "hypergraph-matchings", TRIALS, seed=SEED),
        Q(27, 35))


def test_c11_min_degree_regression(acceptance):
    g, J = build_complete(3), Graph(3, ((0, 1), (1, 2)))

    def values():
        return (
            exhaustive_inclusion_probability(g, 1, edge_ids_of(g, J)),
            F.general_copy_probability(g, J, 1),
            F.thm1_fraction(2, 1),
        )

    (ex, gen, lit), s = timed(values)
    ok = ex == Q(1, 3) and gen == Q(1, 3) and lit == Q(1, 2)
    assert acceptance(11, ok, s, 1, f"K3 path: oracle {ex}, general {gen}, closed form {lit}")
    assert ok and s < 1


def test_c12_argmax_location(acceptance):
    def both():
        dist = F.contribution_distribution(100, 10, 9)
        best = max(dist.values())
        return F.argmax_contribution(100, 10, 9), min(k for k, v in dist.items() if v == best)

    (k, scanned), s = timed(both)
    ok = k == scanned and abs(k - 1000 / 19) <= 3
    assert acceptance(12, ok, s, 1, f"argmax {k}, scan {scanned}, predicted {1000 / 19:.1f}")
    assert ok and s < 1


def test_c13_stopping_time(acceptance):
    summary, s = timed(lambda: stopping_time_summary(build_complete_bipartite(64), 1, 200, seed=SEED))
    ref = 64 * math.log(64)
    ok = 0.7 * ref <= summary["mean"] <= 1.5 * ref
    assert acceptance(13, ok, s, 30, f"K64,64 mean k = {summary['mean']:.1f}, band [{0.7 * ref:.1f}, {1.5 * ref:.1f}]")
    assert ok and s < 30
