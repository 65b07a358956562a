"""Polynomial-time certificate checks for every decision problem in the package."""

from __future__ import annotations

from typing import Sequence

from ..graph import Graph, bipartition, neighbor_degree_sum, second_order_profile
from ..instances import verify_bf, verify_tp

__all__ = ["verify_sods", "verify_sods_bipartite", "verify_xy", "verify_bf", "verify_tp"]


def _as_pairs(target: Sequence[Sequence[int]]) -> tuple[tuple[int, int], ...]:
    return tuple((int(a), int(b)) for a, b in target)


def verify_sods(G: Graph, target: Sequence[Sequence[int]]) -> bool:
    return G.n == len(target) and second_order_profile(G) == _as_pairs(target)


def verify_sods_bipartite(G: Graph, target: Sequence[Sequence[int]]) -> bool:
    return verify_sods(G, target) and bipartition(G) is not None


def verify_xy(G: Graph, target: Sequence[Sequence[int]]) -> bool:
    return G.n == len(target) and neighbor_degree_sum(G) == _as_pairs(target)
