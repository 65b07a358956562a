"""Exact desk-scale solvers and certificate verifiers."""

from .jdmfeas import jdm_feasible_from_aggregates, jdm_satisfies_aggregates
from .outcome import SearchBudget, SolveOutcome, Status
from .partition import solve_bf, solve_tp
from .realize import realize_sods, realize_sods_bipartite, realize_xy
from .verify import verify_bf, verify_sods, verify_sods_bipartite, verify_tp, verify_xy

__all__ = [
    "SearchBudget",
    "SolveOutcome",
    "Status",
    "solve_tp",
    "solve_bf",
    "realize_sods",
    "realize_sods_bipartite",
    "realize_xy",
    "jdm_feasible_from_aggregates",
    "jdm_satisfies_aggregates",
    "verify_sods",
    "verify_sods_bipartite",
    "verify_xy",
    "verify_bf",
    "verify_tp",
]
