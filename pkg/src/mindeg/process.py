"""Simulation of the random edge-ordering process stopped at minimum degree delta.

RNG contract
------------
Trial ``t`` under seed ``s`` draws from ``random.Random(s ^ splitmix64(t))``
(64-bit xor, SplitMix64 finalizer as the mixer).  Each next edge is drawn with
``rng.randrange(remaining)``, a partial Fisher-Yates step.  Both are stable
across CPython releases, so a trial is reproducible on any machine regardless
of how trials are split among workers.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .counting import _count_ham_masks, _count_hm, _count_pm_masks, _hm_index, permanent01
from .model import (
    Ambient,
    Estimate,
    Graph,
    InvalidParameter,
    ProcessOutcome,
    SizeCapExceeded,
    UnreachableThreshold,
    check_delta,
)

MASK64 = (1 << 64) - 1

TARGETS = ("bipartite-matchings", "perfect-matchings", "hamiltonian-cycles", "hypergraph-matchings")
# per-trial exact counting is only attempted up to these vertex counts
TARGET_VERTEX_CAPS = {
    "bipartite-matchings": 40,
    "perfect-matchings": 32,
    "hamiltonian-cycles": 16,
    "hypergraph-matchings": 40,
}


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def trial_seed(seed: int, trial_index: int) -> int:
    return (seed & MASK64) ^ splitmix64(trial_index)


class Sampler:
    """Precomputed incidence data for repeated runs on one ambient structure."""

    def __init__(self, ambient: Ambient, delta: int):
        check_delta(delta)
        if ambient.vertex_count == 0:
            raise InvalidParameter("ambient structure has no vertices")
        low = ambient.min_degree()
        if low < delta:
            raise UnreachableThreshold(
                f"delta={delta} exceeds the ambient minimum degree {low}; the process never stops"
            )
        self.ambient = ambient
        self.delta = delta
        self.ends = ambient.edges
        self.m = ambient.edge_count
        self.V = ambient.vertex_count

    def draw(self, rng: random.Random) -> List[int]:
        ends, delta, m = self.ends, self.delta, self.m
        deg = [0] * self.V
        below = self.V
        swapped = {}
        prefix = []
        randrange = rng.randrange
        for i in range(m):
            j = i + randrange(m - i)
            e = swapped.get(j, j)
            swapped[j] = swapped.get(i, i)
            prefix.append(e)
            for v in ends[e]:
                deg[v] += 1
                if deg[v] == delta:
                    below -= 1
            if not below:
                return prefix
        raise AssertionError("process exhausted the edge set without stopping")

    def run(self, seed: int, trial_index: int) -> List[int]:
        return self.draw(random.Random(trial_seed(seed, trial_index)))


def run_process(ambient: Ambient, delta: int, seed: int = 0, trial_index: int = 0) -> ProcessOutcome:
    """One realization of the process; fully determined by (seed, trial_index)."""
    prefix = Sampler(ambient, delta).run(seed, trial_index)
    return ProcessOutcome(tuple(prefix), ambient.edge_count)


def check_outcome(ambient: Ambient, delta: int, outcome: ProcessOutcome) -> None:
    """Assert the stopping-time invariants: distinct valid indices, minimum
    degree >= delta at k, and < delta at k - 1."""
    prefix = outcome.ordering_prefix
    assert len(set(prefix)) == len(prefix), "prefix repeats an edge"
    assert all(0 <= e < ambient.edge_count for e in prefix), "prefix has an invalid edge index"
    deg = [0] * ambient.vertex_count
    for e in prefix[:-1]:
        for v in ambient.edges[e]:
            deg[v] += 1
    assert min(deg) < delta, "process should have stopped earlier"
    for v in ambient.edges[prefix[-1]]:
        deg[v] += 1
    assert min(deg) >= delta, "process stopped below the threshold"


def contains_edges(outcome: ProcessOutcome, J: Iterable[int]) -> bool:
    J = list(J)
    bad = [i for i in J if not (isinstance(i, int) and 0 <= i < outcome.edge_count)]
    if bad:
        raise InvalidParameter(f"invalid edge indices {bad[:5]}")
    present = outcome.edge_set
    return all(i in present for i in J)


# --- per-trial target counting ---------------------------------------------

def _target_counter(ambient: Ambient, target: str):
    if target not in TARGETS:
        raise InvalidParameter(f"unknown target {target!r}; choose from {', '.join(TARGETS)}")
    V = ambient.vertex_count
    cap = TARGET_VERTEX_CAPS[target]
    if V > cap:
        raise SizeCapExceeded(
            f"exact {target} counting per trial is capped at {cap} vertices (got {V}); "
            "estimate the inclusion probability of one copy with monte_carlo_inclusion "
            "and multiply by the number of copies instead"
        )
    ends = ambient.edges
    arity = len(ends[0]) if ends else 2
    if target != "hypergraph-matchings" and arity != 2:
        raise InvalidParameter(f"{target} needs a graph, got an arity-{arity} hypergraph")

    if target == "bipartite-matchings":
        half = V // 2
        if V % 2 or any(not (u < half <= v) for u, v in ends):
            raise InvalidParameter("bipartite-matchings needs parts [0, V/2) and [V/2, V)")

        def count(prefix):
            rows = [0] * half
            for e in prefix:
                u, v = ends[e]
                rows[u] |= 1 << (v - half)
            return permanent01(rows, half)

    elif target == "perfect-matchings":

        def count(prefix):
            if V % 2:
                return 0
            adj = [0] * V
            for e in prefix:
                u, v = ends[e]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            return _count_pm_masks(adj, (1 << V) - 1)

    elif target == "hamiltonian-cycles":

        def count(prefix):
            adj = [0] * V
            for e in prefix:
                u, v = ends[e]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            return _count_ham_masks(V, adj)

    else:

        def count(prefix):
            if V % arity:
                return 0
            return _count_hm(_hm_index(V, [ends[e] for e in prefix]), (1 << V) - 1)

    return count


# --- Monte Carlo ------------------------------------------------------------

def _tally_block(args) -> Tuple[int, int]:
    ambient, delta, seed, start, stop, kind, payload = args
    sampler = Sampler(ambient, delta)
    if kind == "inclusion":
        J = payload

        def value(prefix):
            return 1 if J.issubset(prefix) else 0

    else:
        counter = _target_counter(ambient, payload)

        def value(prefix):
            return counter(prefix)

    s = s2 = 0
    for t in range(start, stop):
        x = value(sampler.run(seed, t))
        s += x
        s2 += x * x
    return s, s2


def _blocks(trials: int, workers: int) -> List[Tuple[int, int]]:
    workers = max(1, min(workers, trials))
    size, extra = divmod(trials, workers)
    out, start = [], 0
    for w in range(workers):
        stop = start + size + (1 if w < extra else 0)
        out.append((start, stop))
        start = stop
    return out


def _run_tallies(ambient, delta, seed, trials, workers, kind, payload) -> Tuple[int, int]:
    jobs = [(ambient, delta, seed, a, b, kind, payload) for a, b in _blocks(trials, workers)]
    if len(jobs) == 1:
        return _tally_block(jobs[0])
    with ProcessPoolExecutor(max_workers=len(jobs)) as pool:
        parts = list(pool.map(_tally_block, jobs))
    return sum(p[0] for p in parts), sum(p[1] for p in parts)


def make_estimate(total: int, total_sq: int, trials: int, seed: int) -> Estimate:
    mean = Fraction(total, trials)
    if trials > 1:
        var = (total_sq - Fraction(total * total, trials)) / (trials - 1)
        stderr = math.sqrt(var / trials)
    else:
        stderr = 0.0
    return Estimate(float(mean), stderr, trials, seed, total, total_sq)


def _check_trials(trials: int) -> None:
    if not isinstance(trials, int) or trials < 1:
        raise InvalidParameter(f"trials must be a positive integer, got {trials!r}")


def monte_carlo_inclusion(
    ambient: Ambient, delta: int, J: Iterable[int], trials: int, seed: int = 0, workers: int = 1
) -> Estimate:
    """Estimate Pr(J is contained in the stopped edge set)."""
    _check_trials(trials)
    J = frozenset(J)
    bad = [i for i in J if not 0 <= i < ambient.edge_count]
    if bad:
        raise InvalidParameter(f"invalid edge indices {sorted(bad)[:5]}")
    Sampler(ambient, delta)  # validate before forking workers
    s, s2 = _run_tallies(ambient, delta, seed, trials, workers, "inclusion", J)
    return make_estimate(s, s2, trials, seed)


def monte_carlo_expected_count(
    ambient: Ambient, delta: int, target: str, trials: int, seed: int = 0, workers: int = 1
) -> Estimate:
    """Estimate the expected number of ``target`` structures in the stopped graph."""
    _check_trials(trials)
    Sampler(ambient, delta)
    _target_counter(ambient, target)
    s, s2 = _run_tallies(ambient, delta, seed, trials, workers, "count", target)
    return make_estimate(s, s2, trials, seed)


def stopping_time_summary(ambient: Ambient, delta: int, trials: int, seed: int = 0) -> dict:
    """Empirical mean, sample standard deviation and histogram of the stopping time."""
    _check_trials(trials)
    sampler = Sampler(ambient, delta)
    hist = Counter(len(sampler.run(seed, t)) for t in range(trials))
    total = sum(k * c for k, c in hist.items())
    total_sq = sum(k * k * c for k, c in hist.items())
    est = make_estimate(total, total_sq, trials, seed)
    return {
        "mean": est.mean,
        "stddev": est.stderr * math.sqrt(trials),
        "histogram": dict(sorted(hist.items())),
    }


def edge_ids_of(ambient: Ambient, J: Graph | Sequence[Tuple[int, ...]]) -> frozenset:
    """Translate a subgraph (or list of edges) of ``ambient`` into edge indices."""
    edges = J.edges if isinstance(J, Graph) else [tuple(sorted(e)) for e in J]
    index = {e: i for i, e in enumerate(ambient.edges)}
    try:
        return frozenset(index[tuple(e)] for e in edges)
    except KeyError as exc:
        raise InvalidParameter(f"edge {exc.args[0]} is not in the ambient structure") from None
