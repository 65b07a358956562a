"""Instance enumerators shared by several test modules."""

from itertools import combinations_with_replacement

from degseq_lab.instances import BasketFillingInstance, ThreePartitionInstance


def tp_instances(m, W):
    vals = [a for a in range(1, W) if 4 * a > W and 2 * a < W]
    for combo in combinations_with_replacement(vals, 3 * m):
        if sum(combo) == m * W:
            yield ThreePartitionInstance(m, W, combo)


def _basket_multisets(n, M, min_count, lo=(0, 0)):
    """Nondecreasing tuples of (count, capacity) pairs summing to (n, M)."""
    if n == 0:
        if M == 0:
            yield ()
        return
    for c in range(max(min_count, lo[0]), n + 1):
        for s in range(lo[1] if c == lo[0] else 1, M + 1):
            for rest in _basket_multisets(n - c, M - s, min_count, (c, s)):
                yield ((c, s), *rest)


def bf_instances(max_n, max_w, min_count=2):
    """Every Basket Filling instance with nonincreasing weights in 1..max_w,
    at most max_n items, basket counts >= min_count and capacities >= 1."""
    for n in range(1, max_n + 1):
        for weights in combinations_with_replacement(range(max_w, 0, -1), n):
            for baskets in _basket_multisets(n, sum(weights), min_count):
                yield BasketFillingInstance(weights, baskets)
