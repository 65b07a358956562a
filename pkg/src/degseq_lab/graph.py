"""Simple graphs and their degree-based profiles.

Every profile here is a plain tuple indexed by vertex, so results compare
directly against the target tuples produced by :mod:`degseq_lab.reductions`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    DuplicateEdgeError,
    EmptyGraphError,
    InputError,
    SelfLoopError,
    VertexRangeError,
)

__all__ = [
    "Graph",
    "Jdm",
    "DegreeSequence",
    "SodsTarget",
    "XyTarget",
    "graph_from_edges",
    "degree_sequence",
    "distance_k_count",
    "second_order_profile",
    "neighbor_degree_sum",
    "jdm_of_graph",
    "degree_spectrum",
    "bipartition",
]

DegreeSequence = tuple[int, ...]
# (d1, d2) per vertex
SodsTarget = tuple[tuple[int, int], ...]
# (d, D2) per vertex
XyTarget = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Build instances with :func:`graph_from_edges`; the constructor trusts
    that ``edges`` holds normalized pairs ``(u, v)`` with ``u < v``.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in nbrs))

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return graph_from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def graph_from_edges(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Build a validated :class:`Graph`.

    Raises:
        SelfLoopError: an edge joins a vertex to itself.
        DuplicateEdgeError: the same unordered pair appears twice.
        VertexRangeError: an endpoint is negative or ``>= n``.
    """
    if n < 0:
        raise InputError(f"vertex count must be nonnegative, got {n}")
    edges: set[tuple[int, int]] = set()
    for u, v in edge_list:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in edges:
            raise DuplicateEdgeError(f"duplicate edge {e}")
        edges.add(e)
    return Graph(n, frozenset(edges))


def _check_vertex(G: Graph, v: int) -> None:
    if not 0 <= v < G.n:
        raise VertexRangeError(f"vertex {v} outside 0..{G.n - 1}")


def degree_sequence(G: Graph) -> DegreeSequence:
    return tuple(len(a) for a in G.adj)


def _distances(G: Graph, source: int, limit: Optional[int] = None) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if limit is not None and dist[u] >= limit:
            continue
        for w in G.adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance_k_count(G: Graph, v: int, k: int) -> int:
    """Number of vertices at shortest-path distance exactly ``k`` from ``v``."""
    _check_vertex(G, v)
    if k < 0:
        raise InputError(f"distance must be nonnegative, got {k}")
    return sum(1 for d in _distances(G, v, limit=k).values() if d == k)


def second_order_profile(G: Graph) -> SodsTarget:
    """Pairs ``(d1(v), d2(v))``: vertices at distance exactly one and two."""
    out = []
    for v in range(G.n):
        first = set(G.adj[v])
        second: set[int] = set()
        for u in G.adj[v]:
            second.update(G.adj[u])
        second -= first
        second.discard(v)
        out.append((len(first), len(second)))
    return tuple(out)


def neighbor_degree_sum(G: Graph) -> XyTarget:
    """Pairs ``(d(v), D2(v))`` where ``D2(v)`` sums the degrees of v's neighbors."""
    deg = degree_sequence(G)
    return tuple((deg[v], sum(deg[u] for u in G.adj[v])) for v in range(G.n))


@dataclass(frozen=True)
class Jdm:
    """Joint degree matrix over degree classes ``1..delta``.

    ``entries`` is stored 0-based; ``J[i, j]`` indexes it by degree class.
    """

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        if any(len(row) != len(rows) for row in rows):
            raise InputError("JDM must be square")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_array(cls, a) -> Jdm:
        return cls(tuple(tuple(int(x) for x in row) for row in np.asarray(a)))

    @property
    def delta(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (1 <= i <= self.delta and 1 <= j <= self.delta):
            raise IndexError(f"degree class ({i}, {j}) outside 1..{self.delta}")
        return self.entries[i - 1][j - 1]

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(self.delta, self.delta)

    def trimmed(self) -> Jdm:
        """Drop trailing all-zero degree classes."""
        d = self.delta
        while d > 0 and not any(self.entries[d - 1]) and not any(r[d - 1] for r in self.entries):
            d -= 1
        return Jdm(tuple(row[:d] for row in self.entries[:d]))


def jdm_of_graph(G: Graph) -> Jdm:
    """Count edges between each pair of degree classes.

    Raises:
        EmptyGraphError: ``G`` has no edges, so the maximum degree is 0.
    """
    deg = degree_sequence(G)
    delta = max(deg, default=0)
    if delta == 0:
        raise EmptyGraphError("the joint degree matrix needs at least one edge")
    J = np.zeros((delta, delta), dtype=np.int64)
    for u, v in G.edges:
        i, j = deg[u] - 1, deg[v] - 1
        J[i, j] += 1
        if i != j:
            J[j, i] += 1
    return Jdm.from_array(J)


def degree_spectrum(G: Graph, v: int) -> tuple[int, ...]:
    """Count v's neighbors by degree; entry ``i - 1`` holds degree-``i`` neighbors.

    The vector has one slot per degree class ``1..Δ`` of ``G``.
    """
    _check_vertex(G, v)
    deg = degree_sequence(G)
    counts = [0] * max(deg, default=0)
    for u in G.adj[v]:
        counts[deg[u] - 1] += 1
    return tuple(counts)


def bipartition(G: Graph) -> Optional[tuple[int, ...]]:
    """Return a 0/1 coloring with no monochromatic edge, or None if G has an odd cycle.

    Each component's lowest vertex gets color 0.
    """
    color = [-1] * G.n
    for s in range(G.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.adj[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return tuple(color)
