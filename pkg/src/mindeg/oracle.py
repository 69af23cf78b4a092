"""Brute-force ground truth: walk every one of the m! edge orderings.

Each ordering is scanned until the stopping time, and the pair
(stopping time, bitmask of the stopped edge set) is tallied.  Inclusion
probabilities, expected counts and k-distributions are all read off that
census, so one enumeration serves every query on the same (ambient, delta).
Counts stay integers until the final division by m!.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Dict, Iterable, Tuple

from .model import Ambient, InvalidParameter, KDistribution, SizeCapExceeded, UniformHypergraph
from .process import Sampler, _target_counter

MAX_EDGES = 10
MAX_HYPERGRAPH_EDGES_FOR_COUNTS = 8

_census_cache: Dict[Tuple[Ambient, int], Counter] = {}


def _scan_block(args) -> Counter:
    ambient, delta, first = args
    m, V = ambient.edge_count, ambient.vertex_count
    ends = ambient.edges
    tally: Counter = Counter()
    rest = [e for e in range(m) if e != first]
    for tail in permutations(rest):
        order = (first,) + tail
        deg = [0] * V
        below = V
        mask = 0
        for i, e in enumerate(order):
            mask |= 1 << e
            for v in ends[e]:
                deg[v] += 1
                if deg[v] == delta:
                    below -= 1
            if not below:
                tally[(i + 1, mask)] += 1
                break
    return tally


def prefix_census(ambient: Ambient, delta: int, workers: int = 1) -> Counter:
    """Map (k, stopped-edge bitmask) -> number of orderings producing it.

    Orderings are split into contiguous lexicographic blocks by their first
    edge; the merged tally does not depend on ``workers``.
    """
    Sampler(ambient, delta)  # threshold validation
    m = ambient.edge_count
    if m > MAX_EDGES:
        raise SizeCapExceeded(f"exhaustive enumeration is capped at {MAX_EDGES} edges, got {m}")
    key = (ambient, delta)
    if key in _census_cache:
        return _census_cache[key]
    jobs = [(ambient, delta, first) for first in range(m)]
    if workers > 1 and m > 1:
        with ProcessPoolExecutor(max_workers=min(workers, m)) as pool:
            parts = list(pool.map(_scan_block, jobs))
    else:
        parts = [_scan_block(j) for j in jobs]
    census: Counter = Counter()
    for p in parts:
        census.update(p)
    _census_cache[key] = census
    return census


def _j_mask(ambient: Ambient, J: Iterable[int]) -> int:
    mask = 0
    for i in J:
        if not (isinstance(i, int) and 0 <= i < ambient.edge_count):
            raise InvalidParameter(f"invalid edge index {i!r}")
        mask |= 1 << i
    return mask


def exhaustive_inclusion_probability(
    ambient: Ambient, delta: int, J: Iterable[int], workers: int = 1
) -> Fraction:
    """Fraction of all orderings whose stopped edge set contains J."""
    jm = _j_mask(ambient, J)
    census = prefix_census(ambient, delta, workers)
    hits = sum(c for (_, mask), c in census.items() if mask & jm == jm)
    return Fraction(hits, factorial(ambient.edge_count))


def exhaustive_expected_count(
    ambient: Ambient, delta: int, target: str, workers: int = 1
) -> Fraction:
    """Average over all orderings of the exact number of ``target`` structures
    in the stopped graph."""
    if isinstance(ambient, UniformHypergraph) and ambient.edge_count > MAX_HYPERGRAPH_EDGES_FOR_COUNTS:
        raise SizeCapExceeded(
            f"hypergraph expected counts are capped at {MAX_HYPERGRAPH_EDGES_FOR_COUNTS} edges"
        )
    counter = _target_counter(ambient, target)
    census = prefix_census(ambient, delta, workers)
    per_mask: Dict[int, int] = {}
    total = 0
    for (_, mask), c in census.items():
        if mask not in per_mask:
            per_mask[mask] = counter([e for e in range(ambient.edge_count) if mask >> e & 1])
        total += c * per_mask[mask]
    return Fraction(total, factorial(ambient.edge_count))


def exhaustive_k_distribution(
    ambient: Ambient, delta: int, J: Iterable[int], workers: int = 1
) -> KDistribution:
    """k -> Pr(J inside the stopped edge set and the stopping time is k).

    Only k values with positive mass appear.
    """
    jm = _j_mask(ambient, J)
    census = prefix_census(ambient, delta, workers)
    hits: Counter = Counter()
    for (k, mask), c in census.items():
        if mask & jm == jm:
            hits[k] += c
    total = factorial(ambient.edge_count)
    return {k: Fraction(c, total) for k, c in sorted(hits.items())}
