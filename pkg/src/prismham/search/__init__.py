"""Exact search: constrained paths, disjoint path pairs and Hamilton cycles."""

from .engines import (
    ENGINES,
    EngineError,
    decide_prism_hamiltonian,
    disjoint_pair_via_hub,
    find_disjoint_pair,
    find_hamilton_cycle,
    find_path,
    layout,
    prove_no_path,
)
from .queries import (
    ABSENT,
    BACKTRACKING,
    BRUTE_FORCE,
    DP,
    FOUND,
    UNLIMITED,
    Budget,
    InconclusiveError,
    PathQuery,
    PathSystemQuery,
    QueryError,
    SearchOutcome,
    SizeError,
)

__all__ = [
    "ABSENT",
    "BACKTRACKING",
    "BRUTE_FORCE",
    "Budget",
    "DP",
    "ENGINES",
    "EngineError",
    "FOUND",
    "InconclusiveError",
    "PathQuery",
    "PathSystemQuery",
    "QueryError",
    "SearchOutcome",
    "SizeError",
    "UNLIMITED",
    "decide_prism_hamiltonian",
    "disjoint_pair_via_hub",
    "find_disjoint_pair",
    "find_hamilton_cycle",
    "find_path",
    "layout",
    "prove_no_path",
]
