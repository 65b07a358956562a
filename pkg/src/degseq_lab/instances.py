"""Numeric source instances: 3-Partition and Basket Filling, with their certificates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InputError

__all__ = [
    "ThreePartitionInstance",
    "BasketFillingInstance",
    "BasketAssignment",
    "Partition",
    "NormalizedBasketFilling",
    "normalize_bf",
    "verify_tp",
    "verify_bf",
]

# item index -> basket index
BasketAssignment = tuple[int, ...]
# m triples of item indices
Partition = tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class ThreePartitionInstance:
    """3m integers strictly between W/4 and W/2 that sum to m*W."""

    m: int
    W: int
    alphas: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "alphas", tuple(int(a) for a in self.alphas))
        if self.m < 1:
            raise InputError(f"need at least one triple, got m={self.m}")
        if len(self.alphas) != 3 * self.m:
            raise InputError(f"expected {3 * self.m} numbers, got {len(self.alphas)}")
        for a in self.alphas:
            # W/4 < a < W/2 in integers
            if not (4 * a > self.W and 2 * a < self.W):
                raise InputError(f"{a} is not strictly between W/4 and W/2 for W={self.W}")
        if sum(self.alphas) != self.m * self.W:
            raise InputError(f"numbers sum to {sum(self.alphas)}, expected m*W={self.m * self.W}")

    @property
    def unary_size(self) -> int:
        return self.m * self.W


@dataclass(frozen=True)
class BasketFillingInstance:
    """Items with positive weights and baskets with (count, weight) capacities.

    Capacities must balance the items: the counts sum to the number of items
    and the weight capacities sum to the total weight ``M``.
    """

    weights: tuple[int, ...]
    baskets: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        object.__setattr__(self, "baskets", tuple((int(c), int(s)) for c, s in self.baskets))
        if not self.weights:
            raise InputError("need at least one item")
        if any(w <= 0 for w in self.weights):
            raise InputError("item weights must be positive")
        if any(c < 1 or s < 0 for c, s in self.baskets):
            raise InputError("basket counts must be positive and weight capacities nonnegative")
        if sum(c for c, _ in self.baskets) != self.n:
            raise InputError("basket counts do not sum to the number of items")
        if sum(s for _, s in self.baskets) != self.M:
            raise InputError("basket weight capacities do not sum to the total weight")

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def k(self) -> int:
        return len(self.baskets)

    @property
    def M(self) -> int:
        return sum(self.weights)

    @property
    def unary_size(self) -> int:
        return self.M


def verify_tp(tp: ThreePartitionInstance, partition: Sequence[Sequence[int]]) -> bool:
    """True iff ``partition`` splits the item indices into m triples each summing to W."""
    if len(partition) != tp.m:
        return False
    seen: list[int] = []
    for triple in partition:
        if len(triple) != 3:
            return False
        if any(not 0 <= i < len(tp.alphas) for i in triple):
            return False
        if sum(tp.alphas[i] for i in triple) != tp.W:
            return False
        seen.extend(triple)
    return sorted(seen) == list(range(len(tp.alphas)))


def verify_bf(bf: BasketFillingInstance, sol: Sequence[int]) -> bool:
    """True iff every basket receives exactly its count and weight capacity."""
    if len(sol) != bf.n:
        return False
    counts = [0] * bf.k
    sums = [0] * bf.k
    for item, b in enumerate(sol):
        if not 0 <= b < bf.k:
            return False
        counts[b] += 1
        sums[b] += bf.weights[item]
    return all(counts[b] == c and sums[b] == s for b, (c, s) in enumerate(bf.baskets))


@dataclass(frozen=True)
class NormalizedBasketFilling:
    """Result of removing single-item baskets.

    ``instance`` is None when every basket was eliminated. ``items`` and
    ``baskets`` map indices of the reduced instance back to the original.
    """

    original: BasketFillingInstance
    instance: Optional[BasketFillingInstance]
    items: tuple[int, ...]
    baskets: tuple[int, ...]
    fixed: tuple[tuple[int, int], ...]  # (original item, original basket)

    def lift(self, sol: Sequence[int] = ()) -> BasketAssignment:
        """Map an assignment of the reduced instance to the original one."""
        out = [-1] * self.original.n
        for item, b in self.fixed:
            out[item] = b
        for i, b in enumerate(sol):
            out[self.items[i]] = self.baskets[b]
        return tuple(out)


def normalize_bf(bf: BasketFillingInstance) -> Optional[NormalizedBasketFilling]:
    """Fill every basket of count 1 with an item of exactly its weight.

    Items of equal weight are interchangeable, so the lowest unused index is
    taken. Returns None if some single-item basket has no matching item,
    in which case the instance is unsolvable.
    """
    used: set[int] = set()
    fixed = []
    for b, (c, s) in enumerate(bf.baskets):
        if c != 1:
            continue
        match = next((i for i, w in enumerate(bf.weights) if w == s and i not in used), None)
        if match is None:
            return None
        used.add(match)
        fixed.append((match, b))
    items = tuple(i for i in range(bf.n) if i not in used)
    baskets = tuple(b for b, (c, _) in enumerate(bf.baskets) if c != 1)
    inst = None
    if items:
        inst = BasketFillingInstance(
            tuple(bf.weights[i] for i in items), tuple(bf.baskets[b] for b in baskets)
        )
    return NormalizedBasketFilling(bf, inst, items, baskets, tuple(fixed))
