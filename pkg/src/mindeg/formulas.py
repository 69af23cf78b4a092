"""Exact closed forms for the minimum-degree stopping process.

Every function returns a :class:`fractions.Fraction`; nothing here touches
floating point.  The setting throughout: edges of an ambient graph G are
revealed in uniformly random order until every vertex has degree >= delta,
and we ask how likely a fixed spanning copy J of a target H is to be
contained in the revealed edges.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Mapping

from .model import (
    Graph,
    InvalidParameter,
    KDistribution,
    PreconditionViolation,
    check_delta,
)

K3_COUNTEREXAMPLE = (
    "the closed form assumes every vertex of H has degree exactly delta; "
    "e.g. G = K_3, H = spanning path, delta = 1 has true probability 1/3, "
    "not the closed-form 1/2 (use general_copy_probability instead)"
)


def binomial(a: int, b: int) -> int:
    """C(a, b), taken to be 0 when b lies outside [0, a]."""
    if a < 0:
        raise InvalidParameter(f"binomial upper index must be >= 0, got {a}")
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def _trunc_binomial(a: int, b: int) -> int:
    # no way to choose b items from a negative pool either
    return 0 if a < 0 else binomial(a, b)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidParameter(message)


def _is_int(*xs) -> bool:
    return all(isinstance(x, int) and not isinstance(x, bool) for x in xs)


def thm1_fraction(h: int, big_delta: int) -> Fraction:
    """Probability that a fixed delta-regular copy J (h edges) of H ends up in
    the stopped graph, when G is d-regular and ``big_delta = d - delta``.

    Only valid for delta-regular H; see :func:`general_copy_probability`.
    """
    _require(_is_int(h, big_delta), "h and big_delta must be integers")
    _require(h >= 1, f"h must be >= 1, got {h}")
    _require(big_delta >= 0, f"big_delta must be >= 0, got {big_delta}")
    return Fraction(2, comb(h + big_delta, h)) - Fraction(1, comb(h + 2 * big_delta, h))


def cor1_expected_matchings(n: int) -> Fraction:
    """Expected perfect matchings in the stopped subgraph of K_{n,n}, delta=1."""
    _require(_is_int(n) and n >= 1, f"n must be a positive integer, got {n!r}")
    return factorial(n) * (Fraction(2, comb(2 * n - 1, n)) - Fraction(1, comb(3 * n - 2, n)))


def cor2_matching_fraction(n: int, d: int) -> Fraction:
    """Fraction of perfect matchings of a d-regular graph on 2n vertices that
    survive into the stopped graph (delta=1)."""
    _require(_is_int(n, d), "n and d must be integers")
    _require(n >= 1, f"n must be >= 1, got {n}")
    _require(d >= 1, f"d must be >= 1, got {d}")
    _require(d <= 2 * n - 1, f"a simple d-regular graph on {2 * n} vertices needs d <= {2 * n - 1}")
    return Fraction(2, comb(n + d - 1, n)) - Fraction(1, comb(n + 2 * d - 2, n))


def cor3_hamcycle_fraction(n: int, d: int) -> Fraction:
    """Fraction of Hamiltonian cycles of a d-regular graph on n vertices that
    survive into the stopped graph (delta=2)."""
    _require(_is_int(n, d), "n and d must be integers")
    _require(n >= 3, f"n must be >= 3, got {n}")
    _require(2 <= d <= n - 1, f"d must lie in [2, {n - 1}], got {d}")
    return Fraction(2, comb(n + d - 2, n)) - Fraction(1, comb(n + 2 * d - 4, n))


def _check_nr(n: int, r: int) -> None:
    _require(_is_int(n, r), "n and r must be integers")
    _require(n >= 1, f"n must be >= 1, got {n}")
    _require(r >= 2, f"r must be >= 2, got {r}")


def thm2_term(n: int, r: int, i: int) -> Fraction:
    """Signed i-th inclusion-exclusion term of the diagonal-matching
    probability for the complete r-partite hypergraph.

    ``blocked`` counts the edges meeting at least one of i fixed vertices of
    the last matching edge.
    """
    _check_nr(n, r)
    _require(1 <= i <= r, f"i must lie in [1, {r}]")
    blocked = n**r - (n - 1) ** i * n ** (r - i)
    return (-1) ** (i - 1) * Fraction(comb(r, i), comb(blocked + n - 1, n))


def thm2_expected_matchings(n: int, r: int) -> Fraction:
    """Expected matchings in the stopped transversal hypergraph of K_{n,...,n}."""
    _check_nr(n, r)
    total_matchings = factorial(n) ** (r - 1)
    return total_matchings * sum(thm2_term(n, r, i) for i in range(1, r + 1))


def thm3_term(n: int, r: int, i: int) -> Fraction:
    _check_nr(n, r)
    _require(1 <= i <= r, f"i must lie in [1, {r}]")
    blocked = comb(n * r, r) - comb(n * r - i, r)
    return (-1) ** (i - 1) * Fraction(comb(r, i), comb(blocked + n - 1, n))


def thm3_expected_matchings(n: int, r: int) -> Fraction:
    """Expected matchings in the stopped complete r-uniform hypergraph on rn vertices."""
    _check_nr(n, r)
    total_matchings = Fraction(factorial(r * n), factorial(r) ** n * factorial(n))
    return total_matchings * sum(thm3_term(n, r, i) for i in range(1, r + 1))


def _endpoint_term(h: int, surplus: int) -> Fraction:
    # (h-1)! surplus! / (h+surplus)!: J minus uv, then uv, then the surplus edges
    return Fraction(1, h * comb(h + surplus, h))


def per_edge_last_probability(h: int, delta_u: int, delta_v: int) -> Fraction:
    """Pr(J inside the stopped graph and the last edge is uv), where both u and v
    have J-degree exactly delta and ``delta_u``/``delta_v`` are their degree
    surpluses in G.

    Written symmetrically in u and v; with equal surpluses this is the
    familiar ``(1/h)(2/C(h+D,h) - 1/C(h+2D,h))``.
    """
    _require(_is_int(h, delta_u, delta_v), "arguments must be integers")
    _require(h >= 1, f"h must be >= 1, got {h}")
    _require(delta_u >= 0 and delta_v >= 0, "degree surpluses must be >= 0")
    return (
        _endpoint_term(h, delta_u)
        + _endpoint_term(h, delta_v)
        - _endpoint_term(h, delta_u + delta_v)
    )


def remark_nonregular_expectation(
    G: Graph,
    delta: int,
    h: int,
    copies_through_edge: Mapping[int, int],
    H: Graph | None = None,
) -> Fraction:
    """Expected number of copies of a delta-regular H in the stopped graph of an
    arbitrary (possibly non-regular) G.

    ``copies_through_edge[i]`` is the number of copies J of H in G that use
    edge ``i`` of G; :func:`mindeg.counting.copies_through_edge` computes it.
    Pass ``H`` to have its regularity checked directly; otherwise only the
    edge-count consequence ``2h == delta * |V|`` is checked.
    """
    check_delta(delta)
    _require(_is_int(h) and h >= 1, f"h must be a positive integer, got {h!r}")
    deg = G.degrees()
    if min(deg, default=0) < delta:
        raise PreconditionViolation(f"G has minimum degree {min(deg, default=0)} < delta={delta}")
    if H is not None:
        if H.edge_count != h or H.vertex_count != G.vertex_count:
            raise InvalidParameter("H must have h edges on the vertex set of G")
        if any(x != delta for x in H.degrees()):
            raise PreconditionViolation(K3_COUNTEREXAMPLE)
    elif 2 * h != delta * G.vertex_count:
        raise PreconditionViolation(K3_COUNTEREXAMPLE)
    missing = [i for i in range(G.edge_count) if i not in copies_through_edge]
    if missing:
        raise InvalidParameter(f"copies_through_edge lacks edge indices {missing[:5]}")
    total = Fraction(0)
    for i, (u, v) in enumerate(G.edges):
        c = copies_through_edge[i]
        if c:
            total += c * per_edge_last_probability(h, deg[u] - delta, deg[v] - delta)
    return total


def general_copy_probability(
    G: Graph, J: Graph, delta: int, threshold_correction: bool = True
) -> Fraction:
    """Exact Pr(J is contained in the stopped graph) for any spanning J of G
    with minimum degree >= delta.

    The stopping vertex of the last edge uv must have degree exactly delta in
    the stopped graph, so an endpoint can only play that role when its J-degree
    is delta.  ``threshold_correction=False`` drops that restriction and
    reproduces the delta-regular closed form, which overcounts otherwise.
    """
    check_delta(delta)
    if J.vertex_count != G.vertex_count:
        raise InvalidParameter("J and G must share the vertex set")
    index = G.edge_index()
    missing = [e for e in J.edges if e not in index]
    if missing:
        raise InvalidParameter(f"J is not a subgraph of G; edges {missing[:5]} absent")
    jdeg = J.degrees()
    if min(jdeg, default=0) < delta:
        raise PreconditionViolation(f"J has minimum degree {min(jdeg, default=0)} < delta={delta}")
    h = J.edge_count
    gdeg = G.degrees()
    total = Fraction(0)
    for u, v in J.edges:
        su, sv = gdeg[u] - delta, gdeg[v] - delta
        at_u = jdeg[u] == delta or not threshold_correction
        at_v = jdeg[v] == delta or not threshold_correction
        if at_u:
            total += _endpoint_term(h, su)
        if at_v:
            total += _endpoint_term(h, sv)
        if at_u and at_v:
            total -= _endpoint_term(h, su + sv)
    return total


def _check_triple(edge_total: int, h: int, big_delta: int) -> None:
    _require(_is_int(edge_total, h, big_delta), "arguments must be integers")
    _require(h >= 1, f"h must be >= 1, got {h}")
    _require(big_delta >= 0, f"big_delta must be >= 0, got {big_delta}")
    _require(h <= edge_total, f"h={h} exceeds edge_total={edge_total}")


def contribution_at_k(edge_total: int, h: int, big_delta: int, k: int) -> Fraction:
    """Pr(J inside the first k edges and the process stops exactly at k), for a
    fixed delta-regular copy J with h edges in a regular G with ``edge_total``
    edges.

    Summing over k recovers :func:`thm1_fraction` whenever
    ``edge_total >= h + 2*big_delta``, which every realizable instance
    satisfies.  Below that the binomials truncate to zero and the sum does not.
    """
    _check_triple(edge_total, h, big_delta)
    _require(_is_int(k) and h <= k <= edge_total, f"k must lie in [{h}, {edge_total}], got {k}")
    E = edge_total
    free = k - h
    numer = h * (
        2 * _trunc_binomial(E - h - big_delta, free) - _trunc_binomial(E - h - 2 * big_delta, free)
    )
    # (k-1)! (E-k)! / E!  ==  1 / (E * C(E-1, k-1))
    return Fraction(numer, E * comb(E - 1, k - 1))


def contribution_distribution(edge_total: int, h: int, big_delta: int) -> KDistribution:
    _check_triple(edge_total, h, big_delta)
    return {k: contribution_at_k(edge_total, h, big_delta, k) for k in range(h, edge_total + 1)}


def argmax_contribution(edge_total: int, h: int, big_delta: int) -> int:
    """Smallest k maximizing :func:`contribution_at_k`; lands near h*E/(Delta+h)."""
    dist = contribution_distribution(edge_total, h, big_delta)
    best = max(dist.values())
    return min(k for k, p in dist.items() if p == best)
