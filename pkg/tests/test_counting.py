import random
from itertools import combinations
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

import bruteforce as B
from mindeg.counting import (
    count_bipartite_matchings,
    count_hamiltonian_cycles,
    count_hypergraph_matchings,
    count_perfect_matchings,
    enumerate_spanning_copies,
    permanent01,
)
from mindeg.model import (
    Graph,
    InvalidParameter,
    SizeCapExceeded,
    UniformHypergraph,
    build_complete,
    build_complete_bipartite,
    build_complete_hypergraph,
    build_rpartite_hypergraph,
)


def cycle(n):
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


@pytest.mark.parametrize("n", range(1, 9))
def test_knn_matchings(n):
    assert count_bipartite_matchings(build_complete_bipartite(n)) == factorial(n)


def test_k22_minus_edge():
    g = Graph(4, ((0, 2), (1, 3), (1, 2)))
    assert count_bipartite_matchings(g) == 1


def test_bipartite_errors():
    with pytest.raises(InvalidParameter):
        count_bipartite_matchings(Graph(4, ((0, 1),)))
    with pytest.raises(InvalidParameter):
        count_bipartite_matchings(Graph(5, ((0, 3),)), left_size=2)


def test_permanent_identity_matrix():
    assert permanent01([1 << i for i in range(5)], 5) == 1
    assert permanent01([], 0) == 1


def test_bipartite_random_vs_bijections():
    rng = random.Random(12345)
    for _ in range(100):
        n = rng.randint(1, 5)
        edges = tuple((i, n + j) for i in range(n) for j in range(n) if rng.random() < 0.6)
        assert count_bipartite_matchings(Graph(2 * n, edges)) == B.count_bijection_matchings(n, set(edges))


@pytest.mark.parametrize("g, want", [(build_complete(4), 3), (cycle(6), 2), (build_complete(8), 105)])
def test_perfect_matchings(g, want):
    assert count_perfect_matchings(g) == want


def test_perfect_matchings_double_factorial():
    for n in range(1, 7):
        assert count_perfect_matchings(build_complete(2 * n)) == factorial(2 * n) // (2**n * factorial(n))


def test_odd_vertices_return_zero():
    assert count_perfect_matchings(build_complete(5)) == 0
    assert count_hypergraph_matchings(UniformHypergraph(4, 3, ((0, 1, 2),))) == 0


@pytest.mark.parametrize(
    "g, want",
    [(build_complete(4), 3), (cycle(3), 1), (cycle(7), 1), (build_complete_bipartite(3), 6), (build_complete(6), 60)],
)
def test_hamiltonian_cycles(g, want):
    assert count_hamiltonian_cycles(g) == want


def test_hamiltonian_small_vertex_counts():
    assert count_hamiltonian_cycles(build_complete(2)) == 0
    assert count_hamiltonian_cycles(build_complete(1)) == 0


def test_hamiltonian_random_vs_permutations():
    rng = random.Random(777)
    for _ in range(60):
        V = rng.randint(3, 7)
        edges = tuple(e for e in combinations(range(V), 2) if rng.random() < 0.6)
        g = Graph(V, edges)
        assert count_hamiltonian_cycles(g) == B.count_ham_cycles_by_permutation(V, set(edges))


@pytest.mark.parametrize("n, r", [(1, 2), (2, 2), (2, 3), (3, 2), (3, 3), (2, 4)])
def test_rpartite_matchings(n, r):
    assert count_hypergraph_matchings(build_rpartite_hypergraph(n, r)) == factorial(n) ** (r - 1)


@pytest.mark.parametrize("n, r", [(1, 3), (2, 2), (2, 3), (3, 2), (3, 3), (2, 4)])
def test_complete_hypergraph_matchings(n, r):
    want = factorial(r * n) // (factorial(r) ** n * factorial(n))
    assert count_hypergraph_matchings(build_complete_hypergraph(n, r)) == want


@st.composite
def shuffled_graph(draw):
    V = draw(st.integers(2, 8))
    pairs = list(combinations(range(V), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True))
    perm = draw(st.permutations(edges))
    return Graph(V, tuple(edges)), Graph(V, tuple(perm))


@settings(max_examples=50, deadline=None)
@given(shuffled_graph())
def test_counts_ignore_edge_order(pair):
    a, b = pair
    assert count_perfect_matchings(a) == count_perfect_matchings(b)
    assert count_hamiltonian_cycles(a) == count_hamiltonian_cycles(b)
    ha = UniformHypergraph(a.vertex_count, 2, a.edges)
    hb = UniformHypergraph(b.vertex_count, 2, b.edges)
    assert count_hypergraph_matchings(ha) == count_hypergraph_matchings(hb) == count_perfect_matchings(a)


def test_spanning_copies_examples():
    k22 = build_complete_bipartite(2)
    assert enumerate_spanning_copies(k22, Graph(4, ((0, 1), (2, 3)))) == [(0, 3), (1, 2)]
    k3 = build_complete(3)
    path = Graph(3, ((0, 1), (1, 2)))
    assert enumerate_spanning_copies(k3, path) == [(0, 1), (0, 2), (1, 2)]
    k4 = build_complete(4)
    assert len(enumerate_spanning_copies(k4, cycle(4))) == 3


def test_spanning_copies_match_bruteforce():
    g = build_complete(5)
    got = enumerate_spanning_copies(g, cycle(5))
    want = sorted(tuple(sorted(s)) for s in B.spanning_subsets(5, g.edges, 5, B.is_hamiltonian_cycle(5)))
    assert got == want
    g6 = build_complete_bipartite(3)
    got = enumerate_spanning_copies(g6, Graph(6, ((0, 3), (1, 4), (2, 5))))
    want = sorted(tuple(sorted(s)) for s in B.spanning_subsets(6, g6.edges, 3, B.is_perfect_matching(6)))
    assert got == want


def test_spanning_paths_count():
    # K_n has n!/2 Hamiltonian paths
    g = build_complete(5)
    path = Graph(5, ((0, 1), (1, 2), (2, 3), (3, 4)))
    assert len(enumerate_spanning_copies(g, path)) == factorial(5) // 2


def test_generic_copies():
    # spanning stars K_{1,3} inside K_4: one per centre
    star = Graph(4, ((0, 1), (0, 2), (0, 3)))
    assert len(enumerate_spanning_copies(build_complete(4), star)) == 4
    # triangle + isolated vertex is not a spanning-degree-positive H, still enumerable
    tri = Graph(4, ((0, 1), (1, 2), (0, 2)))
    assert len(enumerate_spanning_copies(build_complete(4), tri)) == 4


def test_copies_errors():
    with pytest.raises(InvalidParameter):
        enumerate_spanning_copies(build_complete(3), build_complete(4))
    big = build_complete(11)
    odd = Graph(11, ((0, 1), (0, 2), (0, 3)))
    with pytest.raises(SizeCapExceeded):
        enumerate_spanning_copies(big, odd)
