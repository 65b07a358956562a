"""Exact backtracking for 3-Partition and Basket Filling."""

from __future__ import annotations

from collections import Counter
from typing import Optional

from ..instances import BasketFillingInstance, ThreePartitionInstance, verify_bf, verify_tp
from .outcome import BudgetExhausted, NodeCounter, SearchBudget, SolveOutcome, Status

__all__ = ["solve_tp", "solve_bf"]


def solve_tp(tp: ThreePartitionInstance, budget: Optional[SearchBudget] = None) -> SolveOutcome:
    """Search for m triples of item indices, each summing to W.

    The lowest unused item always opens the next triple; partners with a
    value already tried at the same slot are skipped.
    """
    counter = NodeCounter(budget)
    alphas = tp.alphas
    n = len(alphas)
    used = [False] * n
    triples: list[tuple[int, int, int]] = []

    def search() -> bool:
        counter.tick()
        try:
            i = used.index(False)
        except ValueError:
            return True
        used[i] = True
        tried_j = set()
        for j in range(i + 1, n):
            if used[j] or alphas[j] in tried_j:
                continue
            tried_j.add(alphas[j])
            need = tp.W - alphas[i] - alphas[j]
            used[j] = True
            for k in range(j + 1, n):
                if not used[k] and alphas[k] == need:
                    used[k] = True
                    triples.append((i, j, k))
                    if search():
                        return True
                    triples.pop()
                    used[k] = False
                    break
            used[j] = False
        used[i] = False
        return False

    try:
        found = search()
    except BudgetExhausted:
        return counter.outcome(Status.UNKNOWN)
    if not found:
        return counter.outcome(Status.INFEASIBLE)
    partition = tuple(sorted(triples))
    assert verify_tp(tp, partition)
    return counter.outcome(Status.SOLVED, partition)


def solve_bf(bf: BasketFillingInstance, budget: Optional[SearchBudget] = None) -> SolveOutcome:
    """Search for a filling, one weight class at a time in decreasing weight.

    For each distinct weight the search chooses how many such items every
    basket receives. Only the residual (count, weight) capacity of a basket
    matters for the rest of the search, so baskets in the same residual
    state are interchangeable: their counts are forced nonincreasing, and
    residual states already proven dead are memoized.
    """
    counter = NodeCounter(budget)
    classes = sorted(Counter(bf.weights).items(), reverse=True)
    k = bf.k
    rc = [c for c, _ in bf.baskets]
    rs = [s for _, s in bf.baskets]
    take = [[0] * k for _ in classes]
    dead: set = set()

    def feasible_after(t: int) -> bool:
        # weights still to place lie in [w_lo, w_hi]
        if t == len(classes):
            return not any(rc) and not any(rs)
        w_hi, w_lo = classes[t][0], classes[-1][0]
        return all(rc[b] * w_lo <= rs[b] <= rc[b] * w_hi for b in range(k))

    def distribute(t: int, b: int, left: int) -> bool:
        w = classes[t][0]
        if b == k:
            return left == 0 and place(t + 1)
        cap = min(rc[b], rs[b] // w, left)
        # identical residual state as the previous basket: take no more than it did
        if b > 0 and (rc[b - 1] + take[t][b - 1], rs[b - 1] + take[t][b - 1] * w) == (rc[b], rs[b]):
            cap = min(cap, take[t][b - 1])
        rest = sum(min(rc[x], rs[x] // w) for x in range(b + 1, k))
        for x in range(cap, max(left - rest, 0) - 1, -1):
            take[t][b] = x
            rc[b] -= x
            rs[b] -= x * w
            ok = distribute(t, b + 1, left - x)
            rc[b] += x
            rs[b] += x * w
            if ok:
                return True
        take[t][b] = 0
        return False

    def place(t: int) -> bool:
        counter.tick()
        if not feasible_after(t):
            return False
        if t == len(classes):
            return True
        key = (t, tuple(sorted(zip(rc, rs))))
        if key in dead:
            return False
        if distribute(t, 0, classes[t][1]):
            return True
        dead.add(key)
        return False

    try:
        found = place(0)
    except BudgetExhausted:
        return counter.outcome(Status.UNKNOWN)
    if not found:
        return counter.outcome(Status.INFEASIBLE)
    # equal-weight items go to baskets in index order
    sol = [-1] * bf.n
    for t, (w, _) in enumerate(classes):
        items = iter(i for i, x in enumerate(bf.weights) if x == w)
        for b in range(k):
            for _ in range(take[t][b]):
                sol[next(items)] = b
    cert = tuple(sol)
    assert verify_bf(bf, cert)
    return counter.outcome(Status.SOLVED, cert)
