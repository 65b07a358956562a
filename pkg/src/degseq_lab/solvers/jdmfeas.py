"""Integer feasibility search for a joint degree matrix with given class aggregates."""

from __future__ import annotations

from math import comb
from typing import Optional, Sequence

from ..errors import InputError
from ..graph import Jdm
from ..graphicality import jdm_graphical
from .outcome import BudgetExhausted, NodeCounter, SearchBudget, SolveOutcome, Status

__all__ = ["jdm_feasible_from_aggregates", "jdm_satisfies_aggregates"]


def _row_totals(J: Sequence[Sequence[int]], i: int, literal: bool) -> tuple[int, int]:
    """(edge-endpoint count, neighbor-degree total) of degree class ``i + 1``."""
    delta = len(J)
    count = sum(J[i][j] for j in range(delta)) + (0 if literal else J[i][i])
    dsum = sum((j + 1) * J[i][j] for j in range(delta)) + (i + 1) * J[i][i]
    return count, dsum


def jdm_satisfies_aggregates(J: Jdm, sizes: Sequence[int], D: Sequence[int], literal: bool = False) -> bool:
    """Check a candidate matrix against the class sizes, the D-totals and graphicality."""
    if J.delta != len(sizes) or len(D) != len(sizes):
        return False
    rows = J.entries
    for i in range(J.delta):
        for j in range(J.delta):
            if rows[i][j] < 0 or rows[i][j] != rows[j][i]:
                return False
            bound = comb(sizes[i], 2) if i == j else sizes[i] * sizes[j]
            if rows[i][j] > bound:
                return False
        count, dsum = _row_totals(rows, i, literal)
        if count != (i + 1) * sizes[i] or dsum != D[i]:
            return False
    return jdm_graphical(J).graphical


def jdm_feasible_from_aggregates(
    sizes: Sequence[int],
    D: Sequence[int],
    budget: Optional[SearchBudget] = None,
    literal: bool = False,
) -> SolveOutcome:
    """Find a graphical JDM with prescribed class sizes and per-class D-totals.

    ``sizes[i - 1]`` is the number of degree-``i`` vertices and ``D[i - 1]``
    the sum of neighbor-degree sums over them. Each class ``i`` must have
    ``J_ii + sum_j J_ij = i |V_i|`` edge endpoints (diagonal edges count
    twice) and ``sum_j j J_ij + i J_ii = D(i)``. With ``literal=True`` the
    count equation drops the extra diagonal term, ``sum_j J_ij = i |V_i|``.

    Entries of the upper triangle are enumerated row by row in increasing
    value, so the first matrix found is the lexicographically least one.
    """
    sizes = [int(s) for s in sizes]
    D = [int(x) for x in D]
    delta = len(sizes)
    if delta == 0 or len(D) != delta:
        raise InputError("need one class size and one D-total per degree class")
    if any(s < 0 for s in sizes) or any(x < 0 for x in D):
        raise InputError("class sizes and D-totals must be nonnegative")

    counter = NodeCounter(budget)
    J = [[0] * delta for _ in range(delta)]
    count = [0] * delta
    dsum = [0] * delta
    need_count = [(i + 1) * sizes[i] for i in range(delta)]
    cells = [(i, j) for i in range(delta) for j in range(i, delta)]

    def bound(i: int, j: int) -> int:
        return comb(sizes[i], 2) if i == j else sizes[i] * sizes[j]

    def add(i: int, j: int, x: int) -> None:
        J[i][j] += x
        if i == j:
            count[i] += x if literal else 2 * x
            dsum[i] += 2 * (i + 1) * x
        else:
            J[j][i] += x
            count[i] += x
            count[j] += x
            dsum[i] += (j + 1) * x
            dsum[j] += (i + 1) * x

    def row_ok(i: int, j: int) -> bool:
        # remaining cells of row i are off-diagonal columns j+1..delta
        cr = need_count[i] - count[i]
        dr = D[i] - dsum[i]
        if cr < 0 or dr < 0:
            return False
        if j == delta - 1:
            return cr == 0 and dr == 0
        return (j + 2) * cr <= dr <= delta * cr

    def search(c: int) -> bool:
        counter.tick()
        if c == len(cells):
            return jdm_graphical(Jdm(tuple(map(tuple, J)))).graphical
        i, j = cells[c]
        unit = 1 if i != j or literal else 2
        for x in range(bound(i, j) + 1):
            if count[i] + x * unit > need_count[i]:
                break
            add(i, j, x)
            if row_ok(i, j) and count[j] <= need_count[j] and dsum[j] <= D[j] and search(c + 1):
                return True
            add(i, j, -x)
        return False

    try:
        found = search(0)
    except BudgetExhausted:
        return counter.outcome(Status.UNKNOWN)
    if not found:
        return counter.outcome(Status.INFEASIBLE)
    cert = Jdm(tuple(map(tuple, J)))
    assert jdm_satisfies_aggregates(cert, sizes, D, literal)
    return counter.outcome(Status.SOLVED, cert)
