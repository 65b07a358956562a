"""Search budgets and three-way solver outcomes."""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum
from typing import Any, Optional

from ..errors import InputError

__all__ = ["SearchBudget", "Status", "SolveOutcome", "BudgetExhausted", "NodeCounter"]


@dataclass(frozen=True)
class SearchBudget:
    """Node and wall-clock limits; None (or 0 from the command line) means unlimited."""

    max_nodes: Optional[int] = None
    max_millis: Optional[int] = None

    def __post_init__(self) -> None:
        for name in ("max_nodes", "max_millis"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise InputError(f"{name} must be positive when set, got {value}")

    @classmethod
    def from_ints(cls, max_nodes: int = 0, max_millis: int = 0) -> SearchBudget:
        return cls(max_nodes or None, max_millis or None)


UNLIMITED = SearchBudget()


class Status(str, Enum):
    SOLVED = "solved"
    INFEASIBLE = "infeasible"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SolveOutcome:
    status: Status
    certificate: Any = None
    nodes: int = 0
    millis: float = 0.0

    @property
    def solved(self) -> bool:
        return self.status is Status.SOLVED

    @property
    def infeasible(self) -> bool:
        return self.status is Status.INFEASIBLE

    @property
    def unknown(self) -> bool:
        return self.status is Status.UNKNOWN


class BudgetExhausted(Exception):
    pass


class NodeCounter:
    """Counts search nodes and raises :class:`BudgetExhausted` past the budget."""

    __slots__ = ("nodes", "max_nodes", "deadline", "start")

    def __init__(self, budget: Optional[SearchBudget]) -> None:
        budget = budget or UNLIMITED
        self.nodes = 0
        self.max_nodes = budget.max_nodes
        self.start = time.perf_counter()
        self.deadline = None if budget.max_millis is None else self.start + budget.max_millis / 1000

    def tick(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExhausted
        if self.deadline is not None and not self.nodes & 255 and time.perf_counter() > self.deadline:
            raise BudgetExhausted

    def outcome(self, status: Status, certificate: Any = None) -> SolveOutcome:
        millis = (time.perf_counter() - self.start) * 1000
        return SolveOutcome(Status(status), certificate, self.nodes, millis)
