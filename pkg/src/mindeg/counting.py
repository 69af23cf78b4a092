"""Exact counters for spanning structures: perfect matchings, Hamiltonian
cycles, hypergraph matchings, and enumeration of spanning copies of a
pattern graph.

All counts are Python ints.  Vertex adjacency is kept as bitmasks.
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

import networkx as nx

from .model import Graph, InvalidParameter, SizeCapExceeded, UniformHypergraph

GENERIC_VERTEX_CAP = 10
GENERIC_SUBSET_CAP = 2_000_000


def _adjacency_masks(vertex_count: int, edges: Sequence[Tuple[int, int]]) -> List[int]:
    adj = [0] * vertex_count
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


# --- bipartite matchings (permanent) ---------------------------------------

def permanent01(rows: Sequence[int], n: int) -> int:
    """Permanent of an n x n 0/1 matrix whose rows are column bitmasks.

    Ryser's inclusion-exclusion over column subsets, walking the subsets in
    Gray-code order so each step updates the row sums by a single column.
    """
    if n == 0:
        return 1
    row_sums = [0] * n
    total = 0
    subset = 0
    for step in range(1, 1 << n):
        col = (step & -step).bit_length() - 1
        bit = 1 << col
        subset ^= bit
        delta = 1 if subset & bit else -1
        for i in range(n):
            if rows[i] & bit:
                row_sums[i] += delta
        prod = 1
        for s in row_sums:
            if not s:
                prod = 0
                break
            prod *= s
        if prod:
            # sign (-1)^(n - |S|)
            total += -prod if (n - bin(subset).count("1")) & 1 else prod
    return total


def _biadjacency(vertex_count: int, edges, left_size: int) -> List[int]:
    if vertex_count != 2 * left_size:
        raise InvalidParameter(
            f"parts must have equal size: {left_size} vs {vertex_count - left_size}"
        )
    rows = [0] * left_size
    for u, v in edges:
        if u < left_size <= v:
            rows[u] |= 1 << (v - left_size)
        elif v < left_size <= u:
            rows[v] |= 1 << (u - left_size)
        else:
            raise InvalidParameter(f"edge ({u}, {v}) does not cross the bipartition")
    return rows


def count_bipartite_matchings(G: Graph, left_size: int | None = None) -> int:
    """Perfect matchings of a balanced bipartite graph with parts
    ``[0, left_size)`` and ``[left_size, V)`` (default: halves)."""
    if left_size is None:
        left_size = G.vertex_count // 2
    rows = _biadjacency(G.vertex_count, G.edges, left_size)
    return permanent01(rows, left_size)


# --- perfect matchings in general graphs ------------------------------------

def _count_pm_masks(adj: List[int], uncovered: int) -> int:
    if not uncovered:
        return 1
    low = uncovered & -uncovered
    v = low.bit_length() - 1
    rest = uncovered ^ low
    choices = adj[v] & rest
    total = 0
    while choices:
        b = choices & -choices
        choices ^= b
        total += _count_pm_masks(adj, rest ^ b)
    return total


def count_perfect_matchings(G: Graph) -> int:
    """Perfect matchings by pairing off the lowest uncovered vertex; 0 if V is odd."""
    if G.vertex_count % 2:
        return 0
    adj = _adjacency_masks(G.vertex_count, G.edges)
    return _count_pm_masks(adj, (1 << G.vertex_count) - 1)


# --- Hamiltonian cycles -----------------------------------------------------

def _count_ham_masks(n: int, adj: List[int]) -> int:
    if n < 3:
        return 0
    # paths[mask][v]: paths from vertex 0 through exactly `mask`, ending at v
    # only odd masks (containing 0) are ever populated
    paths = [None] * (1 << n)
    paths[1] = [0] * n
    paths[1][0] = 1
    for mask in range(1, 1 << n, 2):
        row = paths[mask]
        if row is None:
            continue
        for v in range(n):
            cnt = row[v]
            if not cnt:
                continue
            nxt = adj[v] & ~mask
            while nxt:
                b = nxt & -nxt
                nxt ^= b
                w = b.bit_length() - 1
                target = paths[mask | b]
                if target is None:
                    target = paths[mask | b] = [0] * n
                target[w] += cnt
    full = paths[(1 << n) - 1]
    if full is None:
        return 0
    closing = sum(full[v] for v in range(1, n) if adj[v] & 1)
    return closing // 2


def count_hamiltonian_cycles(G: Graph) -> int:
    """Undirected Hamiltonian cycles, by subset DP over paths anchored at 0."""
    return _count_ham_masks(G.vertex_count, _adjacency_masks(G.vertex_count, G.edges))


# --- hypergraph matchings ---------------------------------------------------

def _count_hm(by_low: List[List[int]], uncovered: int) -> int:
    if not uncovered:
        return 1
    v = (uncovered & -uncovered).bit_length() - 1
    total = 0
    for em in by_low[v]:
        if em & uncovered == em:
            total += _count_hm(by_low, uncovered ^ em)
    return total


def _hm_index(vertex_count: int, edges) -> List[List[int]]:
    # an edge can only be used when its smallest vertex is the lowest uncovered
    by_low: List[List[int]] = [[] for _ in range(vertex_count)]
    for e in edges:
        m = 0
        for v in e:
            m |= 1 << v
        by_low[min(e)].append(m)
    return by_low


def count_hypergraph_matchings(Hg: UniformHypergraph) -> int:
    """Perfect matchings (vertex partitions into edges); 0 if r does not divide V."""
    if Hg.vertex_count % Hg.arity:
        return 0
    return _count_hm(_hm_index(Hg.vertex_count, Hg.edges), (1 << Hg.vertex_count) - 1)


# --- spanning copies --------------------------------------------------------

def _shape(H: Graph) -> str:
    deg = H.degrees()
    n = H.vertex_count
    connected = n > 0 and nx.is_connected(_to_nx(H))
    if n % 2 == 0 and all(d == 1 for d in deg):
        return "matching"
    if n >= 3 and all(d == 2 for d in deg) and connected:
        return "cycle"
    if n >= 2 and connected and H.edge_count == n - 1 and max(deg) <= 2:
        return "path"
    return "generic"


def _to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.vertex_count))
    out.add_edges_from(g.edges)
    return out


def _matching_copies(G: Graph) -> List[Tuple[int, ...]]:
    idx = G.edge_index()
    adj = _adjacency_masks(G.vertex_count, G.edges)
    out = []

    def rec(uncovered: int, chosen: List[int]):
        if not uncovered:
            out.append(tuple(sorted(chosen)))
            return
        low = uncovered & -uncovered
        v = low.bit_length() - 1
        rest = uncovered ^ low
        choices = adj[v] & rest
        while choices:
            b = choices & -choices
            choices ^= b
            w = b.bit_length() - 1
            chosen.append(idx[(v, w)])
            rec(rest ^ b, chosen)
            chosen.pop()

    rec((1 << G.vertex_count) - 1, [])
    return out


def _path_walks(G: Graph, closed: bool) -> List[Tuple[int, ...]]:
    n = G.vertex_count
    idx = G.edge_index()
    adj = _adjacency_masks(n, G.edges)
    out = []

    def key(a, b):
        return idx[(a, b) if a < b else (b, a)]

    def rec(path: List[int], visited: int):
        if len(path) == n:
            first, last = path[0], path[-1]
            if closed:
                # one representative per direction; cycles start at 0
                if not adj[last] & 1 or path[1] > last:
                    return
                ids = [key(path[i], path[i + 1]) for i in range(n - 1)] + [key(last, first)]
            else:
                if first > last:
                    return
                ids = [key(path[i], path[i + 1]) for i in range(n - 1)]
            out.append(tuple(sorted(ids)))
            return
        nxt = adj[path[-1]] & ~visited
        while nxt:
            b = nxt & -nxt
            nxt ^= b
            path.append(b.bit_length() - 1)
            rec(path, visited | b)
            path.pop()

    starts = [0] if closed else range(n)
    for s in starts:
        rec([s], 1 << s)
    return out


def _generic_copies(G: Graph, H: Graph) -> List[Tuple[int, ...]]:
    n = G.vertex_count
    if n > GENERIC_VERTEX_CAP:
        raise SizeCapExceeded(
            f"generic copy enumeration is capped at {GENERIC_VERTEX_CAP} vertices, got {n}"
        )
    from math import comb

    h = H.edge_count
    if comb(G.edge_count, h) > GENERIC_SUBSET_CAP:
        raise SizeCapExceeded(
            f"C({G.edge_count}, {h}) edge subsets exceeds the cap of {GENERIC_SUBSET_CAP}"
        )
    target_seq = sorted(H.degrees())
    max_deg = max(target_seq, default=0)
    Hnx = _to_nx(H)
    deg = [0] * n
    out = []

    def rec(start: int, chosen: List[int]):
        if len(chosen) == h:
            if sorted(deg) == target_seq:
                cand = _to_nx(G.subgraph(chosen))
                if nx.is_isomorphic(cand, Hnx):
                    out.append(tuple(chosen))
            return
        if G.edge_count - start < h - len(chosen):
            return
        for i in range(start, G.edge_count):
            u, v = G.edges[i]
            if deg[u] == max_deg or deg[v] == max_deg:
                continue
            deg[u] += 1
            deg[v] += 1
            chosen.append(i)
            rec(i + 1, chosen)
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1

    rec(0, [])
    return out


def enumerate_spanning_copies(G: Graph, H: Graph) -> List[Tuple[int, ...]]:
    """All spanning subgraphs of G isomorphic to H, each as a sorted tuple of
    G-edge indices, deduplicated and in lexicographic order.

    Perfect matchings, Hamiltonian cycles and Hamiltonian paths get dedicated
    generators; any other H goes through a degree-pruned search capped at
    ``GENERIC_VERTEX_CAP`` vertices.
    """
    if G.vertex_count != H.vertex_count:
        raise InvalidParameter(
            f"vertex counts differ: G has {G.vertex_count}, H has {H.vertex_count}"
        )
    if H.edge_count > G.edge_count:
        return []
    shape = _shape(H)
    if shape == "matching":
        found = _matching_copies(G)
    elif shape == "cycle":
        found = _path_walks(G, closed=True)
    elif shape == "path":
        found = _path_walks(G, closed=False)
    else:
        found = _generic_copies(G, H)
    return sorted(set(found))


def copies_through_edge(G: Graph, copies: Sequence[Tuple[int, ...]]) -> Dict[int, int]:
    """Per-edge tally of how many of ``copies`` use each edge of G."""
    counts = {i: 0 for i in range(G.edge_count)}
    for c in copies:
        for i in c:
            counts[i] += 1
    return counts
