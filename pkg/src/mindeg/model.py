"""Graphs, hypergraphs and value types shared by the rest of the package.

Edges are identified by their position in the edge list, so an ordering of
the ambient edge set is just a permutation of ``range(len(edges))``.
Vertex labels are dense and 0-based.  For the multipartite builders part
``i`` is the label range ``[i*n, (i+1)*n)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Dict, Iterable, Sequence, Tuple, Union

# Exact rationals are stdlib fractions: always reduced, denominator > 0.
ExactRational = Fraction

# k -> Pr(J inside the first k edges and the process stops at k)
KDistribution = Dict[int, Fraction]


class MindegError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameter(MindegError, ValueError):
    pass


class ParseError(MindegError, ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class PreconditionViolation(MindegError, ValueError):
    """Inputs are well formed but outside the domain where a result is defined."""


class UnreachableThreshold(PreconditionViolation):
    pass


class SizeCapExceeded(MindegError, ValueError):
    pass


def _check_edges(vertex_count: int, edges: Sequence[Tuple[int, ...]], arity: int) -> None:
    seen = set()
    for idx, e in enumerate(edges):
        if len(e) != arity:
            raise InvalidParameter(f"edge {idx} has {len(e)} vertices, expected {arity}")
        if len(set(e)) != arity:
            raise InvalidParameter(f"edge {idx} repeats a vertex: {e}")
        for v in e:
            if not 0 <= v < vertex_count:
                raise InvalidParameter(f"edge {idx} vertex {v} out of range [0, {vertex_count})")
        if e in seen:
            raise InvalidParameter(f"duplicate edge {e}")
        seen.add(e)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph.  Each edge is stored as a sorted pair."""

    vertex_count: int
    edges: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InvalidParameter("vertex_count must be nonnegative")
        norm = tuple(tuple(sorted(e)) for e in self.edges)
        _check_edges(self.vertex_count, norm, 2)
        object.__setattr__(self, "edges", norm)

    arity = 2

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    def edge_index(self) -> Dict[Tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def subgraph(self, edge_ids: Iterable[int]) -> "Graph":
        """Spanning subgraph on the given edge indices (kept in index order)."""
        return Graph(self.vertex_count, tuple(self.edges[i] for i in sorted(edge_ids)))


@dataclass(frozen=True)
class UniformHypergraph:
    """r-uniform hypergraph; each edge is a sorted r-tuple of vertices."""

    vertex_count: int
    arity: int
    edges: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InvalidParameter("vertex_count must be nonnegative")
        if self.arity < 2:
            raise InvalidParameter("arity must be at least 2")
        norm = tuple(tuple(sorted(e)) for e in self.edges)
        _check_edges(self.vertex_count, norm, self.arity)
        object.__setattr__(self, "edges", norm)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def subgraph(self, edge_ids: Iterable[int]) -> "UniformHypergraph":
        return UniformHypergraph(
            self.vertex_count, self.arity, tuple(self.edges[i] for i in sorted(edge_ids))
        )


Ambient = Union[Graph, UniformHypergraph]


@dataclass(frozen=True)
class ThresholdParams:
    delta: int

    def __post_init__(self):
        check_delta(self.delta)


def check_delta(delta: int) -> int:
    if not isinstance(delta, int) or delta < 1:
        raise InvalidParameter(f"delta must be a positive integer, got {delta!r}")
    return delta


@dataclass(frozen=True)
class ProcessOutcome:
    """Realized prefix of a random edge ordering, cut at the stopping time."""

    ordering_prefix: Tuple[int, ...]
    edge_count: int

    @property
    def stopping_time(self) -> int:
        return len(self.ordering_prefix)

    @property
    def edge_set(self) -> frozenset:
        return frozenset(self.ordering_prefix)


@dataclass(frozen=True)
class Estimate:
    mean: float
    stderr: float
    trials: int
    seed: int
    # exact tallies backing mean/stderr; keeps reductions order independent
    total: int = field(default=0, compare=False, repr=False)
    total_sq: int = field(default=0, compare=False, repr=False)

    def as_dict(self) -> dict:
        return {"mean": self.mean, "stderr": self.stderr, "trials": self.trials, "seed": self.seed}


# --- builders ---------------------------------------------------------------

def _positive(name: str, value: int, minimum: int = 1) -> None:
    if not isinstance(value, int) or value < minimum:
        raise InvalidParameter(f"{name} must be an integer >= {minimum}, got {value!r}")


def build_complete_bipartite(n: int) -> Graph:
    """K_{n,n}: boys are 0..n-1, girls n..2n-1, edges in row-major order."""
    _positive("n", n)
    return Graph(2 * n, tuple((i, n + j) for i in range(n) for j in range(n)))


def build_complete(m: int) -> Graph:
    _positive("m", m)
    return Graph(m, tuple(combinations(range(m), 2)))


def build_rpartite_hypergraph(n: int, r: int) -> UniformHypergraph:
    """All n**r transversal r-sets of the complete r-partite graph K_{n,...,n}."""
    _positive("n", n)
    _positive("r", r, 2)
    edges = tuple(
        tuple(part * n + j for part, j in enumerate(choice))
        for choice in product(range(n), repeat=r)
    )
    return UniformHypergraph(r * n, r, edges)


def build_complete_hypergraph(n: int, r: int) -> UniformHypergraph:
    """All r-subsets of an rn-element vertex set."""
    _positive("n", n)
    _positive("r", r, 2)
    return UniformHypergraph(r * n, r, tuple(combinations(range(r * n), r)))


# --- file format ------------------------------------------------------------

def _data_lines(text: str):
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _ints(lineno: int, fields: list[str]) -> list[int]:
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise ParseError(lineno, f"expected integers, got {' '.join(fields)!r}") from None


def _parse(text: str, header_len: int):
    lines = list(_data_lines(text))
    if not lines:
        raise ParseError(1, "missing header")
    lineno, fields = lines[0]
    if len(fields) != header_len:
        raise ParseError(lineno, f"header must have {header_len} fields")
    header = _ints(lineno, fields)
    if any(x < 0 for x in header):
        raise ParseError(lineno, "header values must be nonnegative")
    vertex_count, arity, m = (header[0], 2, header[1]) if header_len == 2 else header
    if header_len == 3 and arity < 2:
        raise ParseError(lineno, "arity must be at least 2")
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] + 1 if body else lineno + 1)
        raise ParseError(where, f"header declares {m} edges, found {len(body)}")
    edges = []
    seen = {}
    for lineno, fields in body:
        if len(fields) != arity:
            raise ParseError(lineno, f"expected {arity} vertex indices, got {len(fields)}")
        e = _ints(lineno, fields)
        for v in e:
            if not 0 <= v < vertex_count:
                raise ParseError(lineno, f"vertex {v} out of range [0, {vertex_count})")
        if len(set(e)) != arity:
            raise ParseError(lineno, "self-loop" if arity == 2 else "repeated vertex in edge")
        key = tuple(sorted(e))
        if key in seen:
            raise ParseError(lineno, f"duplicate edge (first seen on line {seen[key]})")
        seen[key] = lineno
        edges.append(key)
    return vertex_count, arity, tuple(edges)


def parse_graph(text: str) -> Graph:
    vertex_count, _, edges = _parse(text, 2)
    return Graph(vertex_count, edges)


def parse_hypergraph(text: str) -> UniformHypergraph:
    vertex_count, arity, edges = _parse(text, 3)
    return UniformHypergraph(vertex_count, arity, edges)


def parse_ambient(text: str) -> Ambient:
    """Dispatch on the header width: "V M" is a graph, "V R M" a hypergraph."""
    for _, fields in _data_lines(text):
        return parse_hypergraph(text) if len(fields) == 3 else parse_graph(text)
    raise ParseError(1, "missing header")


def format_graph(g: Graph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def format_hypergraph(hg: UniformHypergraph) -> str:
    lines = [f"{hg.vertex_count} {hg.arity} {hg.edge_count}"]
    lines += [" ".join(map(str, e)) for e in hg.edges]
    return "\n".join(lines) + "\n"
