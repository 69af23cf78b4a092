"""Deliberately naive reference implementations, independent of mindeg.

Every ordering is materialized, the stopped edge set is built as a set, and
structures are counted by trying every candidate edge subset.
"""

from fractions import Fraction
from itertools import combinations, permutations
from math import factorial


def stopped_sets(vertex_count, edges, delta):
    """Yield (k, frozenset of edge indices) for every ordering of ``edges``."""
    for order in permutations(range(len(edges))):
        deg = [0] * vertex_count
        for i, e in enumerate(order):
            for v in edges[e]:
                deg[v] += 1
            if min(deg) >= delta:
                yield i + 1, frozenset(order[: i + 1])
                break


def inclusion(vertex_count, edges, delta, J):
    J = frozenset(J)
    hits = sum(1 for _, s in stopped_sets(vertex_count, edges, delta) if J <= s)
    return Fraction(hits, factorial(len(edges)))


def k_distribution(vertex_count, edges, delta, J):
    J = frozenset(J)
    out = {}
    for k, s in stopped_sets(vertex_count, edges, delta):
        if J <= s:
            out[k] = out.get(k, 0) + 1
    return {k: Fraction(c, factorial(len(edges))) for k, c in sorted(out.items())}


def spanning_subsets(vertex_count, edges, size, predicate):
    """Edge-index subsets of the given size whose edges satisfy ``predicate``."""
    return [
        frozenset(c)
        for c in combinations(range(len(edges)), size)
        if predicate([edges[i] for i in c])
    ]


def is_perfect_matching(vertex_count):
    def pred(es):
        covered = [v for e in es for v in e]
        return len(covered) == vertex_count and len(set(covered)) == vertex_count
    return pred


def is_hamiltonian_cycle(vertex_count):
    def pred(es):
        adj = {v: [] for v in range(vertex_count)}
        for u, v in es:
            adj[u].append(v)
            adj[v].append(u)
        if any(len(a) != 2 for a in adj.values()):
            return False
        seen, prev, cur = {0}, None, 0
        while True:
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            if nxt == 0:
                return len(seen) == vertex_count
            seen.add(nxt)
            prev, cur = cur, nxt
    return pred


def expected_count(vertex_count, edges, delta, structures):
    total = 0
    for _, s in stopped_sets(vertex_count, edges, delta):
        total += sum(1 for J in structures if J <= s)
    return Fraction(total, factorial(len(edges)))


def count_bijection_matchings(n, edge_set):
    """Perfect matchings of a bipartite graph with parts 0..n-1, n..2n-1."""
    return sum(
        1 for p in permutations(range(n)) if all((i, n + p[i]) in edge_set for i in range(n))
    )


def count_ham_cycles_by_permutation(vertex_count, edge_set):
    if vertex_count < 3:
        return 0
    n = vertex_count
    count = 0
    for p in permutations(range(1, n)):
        cyc = (0,) + p
        if all(tuple(sorted((cyc[i], cyc[(i + 1) % n]))) in edge_set for i in range(n)):
            count += 1
    return count // 2


def last_edge_inclusion(vertex_count, edges, delta, J, last):
    """Pr(J inside the stopped set and ``last`` is the final edge added)."""
    J = frozenset(J)
    hits = 0
    for order in permutations(range(len(edges))):
        deg = [0] * vertex_count
        for i, e in enumerate(order):
            for v in edges[e]:
                deg[v] += 1
            if min(deg) >= delta:
                if e == last and J <= frozenset(order[: i + 1]):
                    hits += 1
                break
    return Fraction(hits, factorial(len(edges)))
