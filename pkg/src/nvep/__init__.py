"""Exact toolkit for the n-vehicle exploration problem.

Model a fleet with rational fuel capacities and burn rates, evaluate and
audit refueling sequences exactly, search for the farthest-reaching order
with cross-checking exact solvers, and decide Hamiltonian path on digraphs
through the fleet model, validated against an independent backtracking
search.
"""

from .core import (
    Instance,
    Sequence,
    TripPlan,
    Vehicle,
    as_rational,
    check_feasibility,
    evaluate,
    respects_adjacency,
    segment_distances,
    trip_plan,
)
from .errors import (
    CapacityError,
    DisagreementError,
    MalformedInputError,
    MalformedSequenceError,
    NvepError,
    ParseError,
    WrongSolverError,
)
from .formats import (
    format_digraph,
    format_instance,
    load_digraph,
    load_instance,
    parse_digraph,
    parse_instance,
)
from .reduction import (
    DecodeRejection,
    Digraph,
    Path,
    ProbeReport,
    decide_hamiltonian_path,
    decode_sequence,
    hp_oracle_backtracking,
    reduce_graph,
    semantics_probe,
    sequence_to_vertices,
    verify_path,
    vertices_to_sequence,
    zero_adjusted_distance,
)
from .solvers import (
    BITMASK_CAP,
    BRUTE_FORCE_CAP,
    CONSTRAINED_BITMASK_CAP,
    SearchStats,
    SolveResult,
    decide_nvep,
    greedy_heuristic,
    solve_branch_and_bound,
    solve_brute_force,
    solve_constrained_dp,
    solve_suffix_dp,
    verify_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "BITMASK_CAP",
    "BRUTE_FORCE_CAP",
    "CONSTRAINED_BITMASK_CAP",
    "CapacityError",
    "DecodeRejection",
    "Digraph",
    "DisagreementError",
    "Instance",
    "MalformedInputError",
    "MalformedSequenceError",
    "NvepError",
    "ParseError",
    "Path",
    "ProbeReport",
    "SearchStats",
    "Sequence",
    "SolveResult",
    "TripPlan",
    "Vehicle",
    "WrongSolverError",
    "as_rational",
    "check_feasibility",
    "decide_hamiltonian_path",
    "decide_nvep",
    "decode_sequence",
    "evaluate",
    "format_digraph",
    "format_instance",
    "greedy_heuristic",
    "hp_oracle_backtracking",
    "load_digraph",
    "load_instance",
    "parse_digraph",
    "parse_instance",
    "reduce_graph",
    "respects_adjacency",
    "segment_distances",
    "semantics_probe",
    "sequence_to_vertices",
    "solve_branch_and_bound",
    "solve_brute_force",
    "solve_constrained_dp",
    "solve_suffix_dp",
    "trip_plan",
    "verify_certificate",
    "verify_path",
    "vertices_to_sequence",
    "zero_adjusted_distance",
]
