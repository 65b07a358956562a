"""Exact branch-and-prune realization of second-order and neighbor-degree-sum targets.

The search builds the graph one vertex at a time. At each node the
unprocessed vertex with the largest residual degree (ties: lowest index)
is expanded: all of its remaining neighbors are chosen at once among the
other unprocessed vertices, after which its adjacency is final. Edges
between two unprocessed vertices never exist, so the residual degrees of
the unprocessed vertices must form a graphical sequence on their own,
which Erdős–Gallai checks exactly.

Unprocessed vertices with the same target pair and the same (processed)
neighbors are interchangeable: swapping them maps the search state to
itself. Among such a group only prefixes are selected, which cuts every
orbit down to one representative without losing any realization class.

Adjacency is kept as integer bitmasks.
"""

from __future__ import annotations

from typing import Iterator, Optional, Sequence

from ..graph import Graph, bipartition, graph_from_edges, neighbor_degree_sum, second_order_profile
from ..graphicality import erdos_gallai, sods_d1_necessary
from .outcome import BudgetExhausted, NodeCounter, SearchBudget, SolveOutcome, Status

__all__ = ["realize_sods", "realize_sods_bipartite", "realize_xy"]


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _residual_graphical(res: Sequence[int], unprocessed: int) -> bool:
    return erdos_gallai([res[u] for u in _bits(unprocessed)])


class _Search:
    """Shared search skeleton; subclasses supply the profile pruning."""

    def __init__(self, target: Sequence[tuple[int, int]], budget: Optional[SearchBudget], bipartite: bool = False):
        self.target = tuple((int(a), int(b)) for a, b in target)
        self.n = len(self.target)
        self.deg = [p[0] for p in self.target]
        self.counter = NodeCounter(budget)
        self.bipartite = bipartite
        self.adj = [0] * self.n
        self.res = list(self.deg)
        self.unprocessed = (1 << self.n) - 1

    # hooks
    def prefilter(self) -> bool:
        raise NotImplementedError

    def consistent(self, touched: int) -> bool:
        raise NotImplementedError

    def final_profile(self, G: Graph):
        raise NotImplementedError

    def run(self) -> SolveOutcome:
        if not self.prefilter():
            return self.counter.outcome(Status.INFEASIBLE)
        try:
            found = self._search()
        except BudgetExhausted:
            return self.counter.outcome(Status.UNKNOWN)
        if not found:
            return self.counter.outcome(Status.INFEASIBLE)
        G = graph_from_edges(self.n, [(u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v])
        assert self.final_profile(G) == self.target
        assert not self.bipartite or bipartition(G) is not None
        return self.counter.outcome(Status.SOLVED, G)

    def _groups(self, v: int) -> list[list[int]]:
        groups: dict[tuple, list[int]] = {}
        for u in _bits(self.unprocessed & ~(1 << v)):
            if self.res[u] > 0:
                groups.setdefault((self.target[u], self.adj[u]), []).append(u)
        # larger residual first, as Havel-Hakimi would
        return sorted(groups.values(), key=lambda g: (-self.res[g[0]], g[0]))

    def _selections(self, groups: list[list[int]], r: int) -> Iterator[list[int]]:
        room = [0] * (len(groups) + 1)
        for i in range(len(groups) - 1, -1, -1):
            room[i] = room[i + 1] + len(groups[i])
        chosen: list[int] = []

        def rec(i: int, left: int) -> Iterator[list[int]]:
            if left == 0:
                yield chosen
                return
            if i == len(groups) or room[i] < left:
                return
            g = groups[i]
            for x in range(min(len(g), left), -1, -1):
                if room[i + 1] < left - x:
                    break
                chosen.extend(g[:x])
                yield from rec(i + 1, left - x)
                del chosen[len(chosen) - x:]

        return rec(0, r)

    def _search(self) -> bool:
        self.counter.tick()
        res = self.res
        v, best = -1, 0
        for u in _bits(self.unprocessed):
            if res[u] > best:
                v, best = u, res[u]
        if v < 0:
            return True
        groups = self._groups(v)
        vbit = 1 << v
        for sel in self._selections(groups, best):
            smask = 0
            for u in sel:
                smask |= 1 << u
                self.adj[u] |= vbit
                res[u] -= 1
            self.adj[v] = smask | self.adj[v]
            res[v] = 0
            self.unprocessed &= ~vbit
            touched = vbit | smask | self.adj[v]
            for u in sel:
                touched |= self.adj[u]
            if (
                self.consistent(touched)
                and _residual_graphical(res, self.unprocessed)
                and (not self.bipartite or self._two_colorable())
                and self._search()
            ):
                return True
            self.unprocessed |= vbit
            res[v] = best
            self.adj[v] &= ~smask
            for u in sel:
                self.adj[u] &= ~vbit
                res[u] += 1
        return False

    def _two_colorable(self) -> bool:
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] >= 0 or not self.adj[s]:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                for w in _bits(self.adj[u]):
                    if color[w] < 0:
                        color[w] = 1 - color[u]
                        stack.append(w)
                    elif color[w] == color[u]:
                        return False
        return True


class _SodsSearch(_Search):
    def prefilter(self) -> bool:
        return sods_d1_necessary(self.target)

    def consistent(self, touched: int) -> bool:
        adj, res, target = self.adj, self.res, self.target
        for x in _bits(touched):
            reach = 0
            slack = 0
            for u in _bits(adj[x]):
                reach |= adj[u]
                slack += res[u]
            reach &= ~(adj[x] | (1 << x))
            have = reach.bit_count()
            want = target[x][1]
            if res[x] == 0:
                # adjacency of x is final: distance-2 set only grows, by at
                # most one vertex per remaining edge of a neighbor
                if have > want or have + slack < want:
                    return False
            elif have - res[x] > want:
                # at most res[x] of these can still become neighbors of x
                return False
        return True

    def final_profile(self, G: Graph):
        return second_order_profile(G)


class _XySearch(_Search):
    def prefilter(self) -> bool:
        deg = self.deg
        if sum(p[1] for p in self.target) != sum(d * d for d in deg):
            return False
        if not erdos_gallai(deg):
            return False
        top = max(deg, default=0)
        return all(d <= D <= d * top and (d > 0 or D == 0) for d, D in self.target)

    def consistent(self, touched: int) -> bool:
        adj, res, deg, target = self.adj, self.res, self.deg, self.target
        open_degs = [deg[u] for u in _bits(self.unprocessed) if res[u] > 0]
        lo = min(open_degs, default=0)
        hi = max(open_degs, default=0)
        for x in _bits(touched):
            have = sum(deg[u] for u in _bits(adj[x]))
            gap = target[x][1] - have
            r = res[x]
            if r == 0:
                if gap:
                    return False
            elif not r * lo <= gap <= r * hi:
                return False
        return True

    def final_profile(self, G: Graph):
        return neighbor_degree_sum(G)


def realize_sods(target: Sequence[tuple[int, int]], budget: Optional[SearchBudget] = None) -> SolveOutcome:
    """Find a graph whose (d1, d2) profile equals ``target`` position by position."""
    return _SodsSearch(target, budget).run()


def realize_sods_bipartite(target: Sequence[tuple[int, int]], budget: Optional[SearchBudget] = None) -> SolveOutcome:
    """As :func:`realize_sods`, restricted to bipartite graphs."""
    return _SodsSearch(target, budget, bipartite=True).run()


def realize_xy(target: Sequence[tuple[int, int]], budget: Optional[SearchBudget] = None) -> SolveOutcome:
    """Find a graph whose (d, neighbor-degree-sum) profile equals ``target``."""
    return _XySearch(target, budget).run()
