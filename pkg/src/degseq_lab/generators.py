"""Seeded instance generators.

All randomness comes from ``numpy.random.default_rng(seed)`` so a fixed
seed reproduces the same instance bit for bit.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .errors import GenerationError, InputError
from .graph import Graph, graph_from_edges
from .instances import BasketFillingInstance, ThreePartitionInstance

__all__ = ["valid_triples", "gen_tp_solvable", "gen_graph", "gen_bf_solvable"]


def valid_triples(W: int) -> list[tuple[int, int, int]]:
    """All nondecreasing triples strictly between W/4 and W/2 that sum to W."""
    vals = [a for a in range(1, W) if 4 * a > W and 2 * a < W]
    return [(a, b, W - a - b) for a in vals for b in vals
            if a <= b <= W - a - b and W - a - b in vals]


def gen_tp_solvable(seed: int, m: int, W: int) -> ThreePartitionInstance:
    """A solvable 3-Partition instance built from m random valid triples, then shuffled.

    Raises:
        GenerationError: ``W <= 8`` or no valid triple sums to W.
    """
    if m < 1:
        raise InputError(f"m must be positive, got {m}")
    triples = valid_triples(W)
    if W <= 8 or not triples:
        raise GenerationError(f"no triple strictly between W/4 and W/2 sums to W={W} (W > 8 required)")
    rng = np.random.default_rng(seed)
    picks = rng.integers(len(triples), size=m)
    alphas = np.array([x for p in picks for x in triples[p]], dtype=np.int64)
    rng.shuffle(alphas)
    return ThreePartitionInstance(m, W, tuple(int(a) for a in alphas))


def gen_graph(seed: int, n: int, p: float) -> Graph:
    """Erdős–Rényi G(n, p): each pair becomes an edge independently with probability p."""
    if n < 0 or not 0.0 <= p <= 1.0:
        raise InputError(f"need n >= 0 and 0 <= p <= 1, got n={n}, p={p}")
    rng = np.random.default_rng(seed)
    pairs = list(combinations(range(n), 2))
    keep = rng.random(len(pairs)) < p
    return graph_from_edges(n, [e for e, k in zip(pairs, keep) if k])


def gen_bf_solvable(seed: int, n: int, k: int, max_weight: int) -> tuple[BasketFillingInstance, tuple[int, ...]]:
    """A Basket Filling instance together with the filling it was built from.

    Items get weights in ``1..max_weight``; every basket receives at least
    two items and its capacities are read off the random filling.
    """
    if k < 1 or n < 2 * k or max_weight < 1:
        raise InputError(f"need k >= 1, n >= 2k and max_weight >= 1 (n={n}, k={k})")
    rng = np.random.default_rng(seed)
    weights = rng.integers(1, max_weight + 1, size=n)
    extra = rng.integers(k, size=n - 2 * k)
    sizes = np.full(k, 2) + np.bincount(extra, minlength=k)
    owner = np.repeat(np.arange(k), sizes)
    rng.shuffle(owner)
    baskets = tuple((int(sizes[b]), int(weights[owner == b].sum())) for b in range(k))
    bf = BasketFillingInstance(tuple(int(w) for w in weights), baskets)
    return bf, tuple(int(b) for b in owner)
