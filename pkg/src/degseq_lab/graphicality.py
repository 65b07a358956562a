"""Polynomial-time graphicality tests."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import NamedTuple, Optional, Sequence

from .errors import InputError
from .graph import Graph, Jdm, graph_from_edges

__all__ = [
    "havel_hakimi",
    "erdos_gallai",
    "JdmVerdict",
    "jdm_graphical",
    "sods_d1_necessary",
]


def _check_nonnegative(seq: Sequence[int]) -> None:
    if any(d < 0 for d in seq):
        raise InputError(f"degree sequence has a negative entry: {tuple(seq)}")


def havel_hakimi(seq: Sequence[int]) -> Optional[Graph]:
    """Greedy realization of a degree sequence, or None if it is not graphical.

    The vertex with the largest residual degree is joined to the vertices
    with the next-largest residuals; ties go to the lowest index, so the
    output is deterministic.
    """
    _check_nonnegative(seq)
    n = len(seq)
    residual = list(seq)
    edges = []
    for _ in range(n):
        v = max(range(n), key=lambda x: (residual[x], -x))
        r = residual[v]
        if r == 0:
            break
        residual[v] = 0
        others = sorted((u for u in range(n) if u != v and residual[u] > 0),
                        key=lambda x: (-residual[x], x))
        if len(others) < r:
            return None
        for u in others[:r]:
            residual[u] -= 1
            edges.append((v, u))
    if any(residual):
        return None
    return graph_from_edges(n, edges)


def erdos_gallai(seq: Sequence[int]) -> bool:
    """Erdős–Gallai inequalities on the nonincreasing rearrangement of ``seq``.

    For every k: ``sum(d[:k]) <= k(k-1) + sum(min(d_i, k) for i >= k)``.
    A pointer tracks where the tail drops below k, so the whole check is
    linear after sorting.
    """
    _check_nonnegative(seq)
    d = sorted(seq, reverse=True)
    if sum(d) % 2:
        return False
    n = len(d)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + d[i]
    lhs = 0
    q = n  # d[i] >= k exactly for i < q
    for k in range(1, n + 1):
        lhs += d[k - 1]
        while q > 0 and d[q - 1] < k:
            q -= 1
        big = max(q, k)
        rhs = k * (k - 1) + k * (big - k) + suffix[big]
        if lhs > rhs:
            return False
    return True


class JdmVerdict(NamedTuple):
    graphical: bool
    # class sizes n_i; an int when integral, otherwise the offending Fraction
    sizes: tuple
    reason: str

    def __bool__(self) -> bool:
        return self.graphical


def jdm_graphical(J: Jdm) -> JdmVerdict:
    """Decide whether ``J`` is the joint degree matrix of some simple graph.

    The class size of degree ``i`` is recovered as
    ``n_i = (J_ii + sum_j J_ij) / i``; a graphical matrix needs every
    ``n_i`` integral, ``J_ii <= C(n_i, 2)`` and ``J_ij <= n_i * n_j``.
    An all-zero row means the class is empty.

    Raises:
        InputError: ``J`` is asymmetric or has a negative entry.
    """
    k = J.delta
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            if J[i, j] < 0:
                raise InputError(f"JDM entry ({i}, {j}) is negative")
            if J[i, j] != J[j, i]:
                raise InputError(f"JDM is not symmetric at ({i}, {j})")

    sizes: list = []
    for i in range(1, k + 1):
        total = J[i, i] + sum(J[i, j] for j in range(1, k + 1))
        q = Fraction(total, i)
        sizes.append(int(q) if q.denominator == 1 else q)
    frac = [i + 1 for i, s in enumerate(sizes) if isinstance(s, Fraction)]
    if frac:
        return JdmVerdict(False, tuple(sizes), f"n_{frac[0]} not integer")
    for i in range(1, k + 1):
        if J[i, i] > comb(sizes[i - 1], 2):
            return JdmVerdict(False, tuple(sizes), f"J_{i}{i} exceeds C(n_{i}, 2)")
        for j in range(i + 1, k + 1):
            if J[i, j] > sizes[i - 1] * sizes[j - 1]:
                return JdmVerdict(False, tuple(sizes), f"J_{i}{j} exceeds n_{i} * n_{j}")
    return JdmVerdict(True, tuple(sizes), "graphical")


def sods_d1_necessary(target: Sequence[tuple[int, int]]) -> bool:
    """Cheap necessary conditions for a second-order degree target.

    Returns False only if no graph can realize ``target``. Rules:

    * ``d1 + d2 <= n - 1``: v, its neighbors and its distance-2 vertices
      are distinct.
    * ``d1 = 0`` forces ``d2 = 0``.
    * the ``d1`` projection passes Erdős–Gallai, since it is the degree
      sequence of any realization.
    * ``d2(v)`` is at most the sum of ``d1(u) - 1`` over v's neighbors, and
      the neighbors are ``d1(v)`` of the other vertices, so the ``d1(v)``
      largest such terms bound it.
    """
    n = len(target)
    for d1, d2 in target:
        if d1 < 0 or d2 < 0 or d1 + d2 > n - 1:
            return False
        if d1 == 0 and d2 > 0:
            return False
    d1s = [p[0] for p in target]
    if not erdos_gallai(d1s):
        return False
    order = sorted(range(n), key=lambda v: -d1s[v])
    for v, (d1, d2) in enumerate(target):
        if d2 == 0:
            continue
        reach = 0
        taken = 0
        for u in order:
            if taken == d1:
                break
            if u != v:
                reach += d1s[u] - 1
                taken += 1
        if d2 > reach:
            return False
    return True
