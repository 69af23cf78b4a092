"""Exact and simulated subgraph counts in the random edge process stopped at
minimum degree delta."""

from .counting import (
    copies_through_edge,
    count_bipartite_matchings,
    count_hamiltonian_cycles,
    count_hypergraph_matchings,
    count_perfect_matchings,
    enumerate_spanning_copies,
)
from .formulas import (
    argmax_contribution,
    binomial,
    contribution_at_k,
    contribution_distribution,
    cor1_expected_matchings,
    cor2_matching_fraction,
    cor3_hamcycle_fraction,
    general_copy_probability,
    per_edge_last_probability,
    remark_nonregular_expectation,
    thm1_fraction,
    thm2_expected_matchings,
    thm3_expected_matchings,
)
from .model import (
    Estimate,
    ExactRational,
    Graph,
    InvalidParameter,
    MindegError,
    ParseError,
    PreconditionViolation,
    ProcessOutcome,
    SizeCapExceeded,
    ThresholdParams,
    UniformHypergraph,
    UnreachableThreshold,
    build_complete,
    build_complete_bipartite,
    build_complete_hypergraph,
    build_rpartite_hypergraph,
    format_graph,
    format_hypergraph,
    parse_graph,
    parse_hypergraph,
)
from .oracle import exhaustive_expected_count, exhaustive_inclusion_probability, exhaustive_k_distribution
from .process import (
    contains_edges,
    monte_carlo_expected_count,
    monte_carlo_inclusion,
    run_process,
    stopping_time_summary,
)

__version__ = "0.1.0"
