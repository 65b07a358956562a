"""Batch solver runs over a directory of instance files, reported as CSV."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterator, Optional

from . import io
from .errors import DegseqError
from .solvers import (
    SearchBudget,
    SolveOutcome,
    jdm_feasible_from_aggregates,
    realize_sods,
    realize_sods_bipartite,
    realize_xy,
    solve_bf,
    solve_tp,
)

__all__ = ["BENCH_HEADER", "CSV_COLUMNS", "BenchRecord", "SOLVERS", "solve_file", "bench_run", "bench_csv"]

BENCH_HEADER = "# degseq-lab bench v1"
CSV_COLUMNS = "id,unary_size,verdict,nodes,millis"


def _pairs_size(pairs) -> int:
    return sum(a + b for a, b in pairs)


def _tp(text, budget):
    tp = io.parse_tp(text)
    return tp.unary_size, solve_tp(tp, budget)


def _bf(text, budget):
    bf = io.parse_bf(text)
    return bf.unary_size, solve_bf(bf, budget)


def _target(solver):
    def run(text, budget):
        pairs = io.parse_pairs(text)
        return _pairs_size(pairs), solver(pairs, budget)
    return run


def _aggregates(text, budget):
    sizes, D = io.parse_aggregates(text)
    return sum(sizes) + sum(D), jdm_feasible_from_aggregates(sizes, D, budget)


# file suffix -> parser + solver returning (unary size, outcome)
SOLVERS: dict[str, Callable[[str, Optional[SearchBudget]], tuple[int, SolveOutcome]]] = {
    ".3p": _tp,
    ".bf": _bf,
    ".sods": _target(realize_sods),
    ".bisods": _target(realize_sods_bipartite),
    ".xy": _target(realize_xy),
    ".jdmfeas": _aggregates,
}


@dataclass(frozen=True)
class BenchRecord:
    id: str
    unary_size: int
    verdict: str
    nodes: int
    millis: float

    def csv(self) -> str:
        return f"{self.id},{self.unary_size},{self.verdict},{self.nodes},{self.millis:.3f}"


def solve_file(path: Path, budget: Optional[SearchBudget] = None) -> BenchRecord:
    """Run the solver matching the file suffix; failures become ``error`` records."""
    try:
        solver = SOLVERS[path.suffix]
        size, outcome = solver(io.read_text(path), budget)
    except (KeyError, DegseqError):
        return BenchRecord(path.name, -1, "error", 0, 0.0)
    return BenchRecord(path.name, size, outcome.status.value, outcome.nodes, outcome.millis)


def bench_run(directory, budget: Optional[SearchBudget] = None) -> list[BenchRecord]:
    """One record per instance file, ordered by instance id (the file name)."""
    files = sorted((p for p in Path(directory).iterdir() if p.is_file()), key=lambda p: p.name)
    return [solve_file(p, budget) for p in files]


def bench_csv(records) -> Iterator[str]:
    yield BENCH_HEADER
    yield CSV_COLUMNS
    for r in records:
        yield r.csv()
