"""Reductions from 3-Partition and Basket Filling to degree-profile problems.

Each gadget target is laid out in a fixed order: atoms grouped by item,
then weight points, then basket vertices, then (for the general second-order
gadget) the master vertex. A :class:`RoleMap` records that layout so
realizations can be decoded back into source-instance certificates.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import product
from typing import NamedTuple, Optional, Sequence, Union

from .errors import (
    InputError,
    PreconditionError,
    ProfileMismatchError,
    RoleIdentificationError,
    UnsupportedInstanceError,
)
from .graph import Graph, SodsTarget, XyTarget, graph_from_edges, neighbor_degree_sum, second_order_profile
from .instances import (
    BasketAssignment,
    BasketFillingInstance,
    Partition,
    ThreePartitionInstance,
    verify_bf,
    verify_tp,
)

__all__ = [
    "Role",
    "RoleMap",
    "tp_to_bf",
    "bf_needs_rescale",
    "bf_rescale_factor",
    "bf_rescale",
    "bf_to_sods",
    "tp_to_bipartite_sods",
    "tp_to_xy",
    "encode_bf_solution_as_graph",
    "encode_tp_bipartite_solution",
    "encode_tp_xy_solution",
    "decode_sods_solution",
    "decode_bipartite_solution",
    "decode_xy_solution",
]

ATOM, WEIGHT, BASKET, MASTER = "atom", "weight", "basket", "master"


class Role(NamedTuple):
    kind: str
    index: int  # owning item for atoms and weights, basket index for baskets, -1 for the master


@dataclass(frozen=True)
class RoleMap:
    """Role of every position of an emitted target, plus the instance it encodes."""

    roles: tuple[Role, ...]
    instance: Union[BasketFillingInstance, ThreePartitionInstance]

    def positions(self, kind: str) -> list[int]:
        return [p for p, r in enumerate(self.roles) if r.kind == kind]

    def counts(self) -> dict[str, int]:
        out = {ATOM: 0, WEIGHT: 0, BASKET: 0, MASTER: 0}
        for r in self.roles:
            out[r.kind] += 1
        return out

    def __len__(self) -> int:
        return len(self.roles)


def _layout(weights: Sequence[int], k: int, master: bool) -> tuple[Role, ...]:
    roles = [Role(ATOM, i) for i, w in enumerate(weights) for _ in range(w)]
    roles += [Role(WEIGHT, i) for i in range(len(weights))]
    roles += [Role(BASKET, b) for b in range(k)]
    if master:
        roles.append(Role(MASTER, -1))
    return tuple(roles)


def tp_to_bf(tp: ThreePartitionInstance) -> BasketFillingInstance:
    """Every basket takes three items of total weight W."""
    return BasketFillingInstance(tp.alphas, ((3, tp.W),) * tp.m)


def bf_needs_rescale(bf: BasketFillingInstance) -> bool:
    """True iff some ``w_i + 1`` equals a basket count or ``n + k - 1``."""
    bad = {c for c, _ in bf.baskets} | {bf.n + bf.k - 1}
    return any(w + 1 in bad for w in bf.weights)


def bf_rescale_factor(bf: BasketFillingInstance) -> int:
    return (bf.n + bf.k) * max(c for c, _ in bf.baskets)


def bf_rescale(bf: BasketFillingInstance) -> BasketFillingInstance:
    """Multiply weights and weight capacities by ``(n + k) * max c``.

    Counts are unchanged, so assignments carry over in both directions,
    and every scaled weight exceeds both forbidden values.
    """
    f = bf_rescale_factor(bf)
    return BasketFillingInstance(
        tuple(w * f for w in bf.weights), tuple((c, s * f) for c, s in bf.baskets)
    )


def _bf_target(bf: BasketFillingInstance) -> SodsTarget:
    n, k, M = bf.n, bf.k, bf.M
    pairs = [(1, w + 1) for w in bf.weights for _ in range(w)]
    pairs += [(w + 2, (k - 1) + (n - 1)) for w in bf.weights]
    pairs += [(c + 1, (k - 1) + (n - c) + s) for c, s in bf.baskets]
    pairs.append((n + k, M))
    return tuple(pairs)


def bf_to_sods(bf: BasketFillingInstance, auto_rescale: bool = False) -> tuple[SodsTarget, RoleMap]:
    """Second-order degree target whose realizations encode fillings of ``bf``.

    Emits ``M + n + k + 1`` pairs. With ``auto_rescale`` an instance that
    violates the weight conditions is first passed through :func:`bf_rescale`;
    the returned RoleMap then carries the rescaled instance.

    Raises:
        PreconditionError: a basket has count 1 (normalize first), or the
            weight conditions fail and ``auto_rescale`` is off.
    """
    if any(c < 2 for c, _ in bf.baskets):
        raise PreconditionError("baskets of count 1 must be removed with normalize_bf first")
    if bf_needs_rescale(bf):
        if not auto_rescale:
            raise PreconditionError("some w_i + 1 equals a basket count or n + k - 1; rescale first")
        bf = bf_rescale(bf)
    return _bf_target(bf), RoleMap(_layout(bf.weights, bf.k, master=True), bf)


def _check_bipartite_support(tp: ThreePartitionInstance) -> None:
    if tp.W <= 8:
        raise UnsupportedInstanceError(f"the bipartite gadget needs W > 8, got W={tp.W}")


def tp_to_bipartite_sods(tp: ThreePartitionInstance) -> tuple[SodsTarget, RoleMap]:
    """Second-order degree target realizable by a bipartite graph iff ``tp`` is solvable.

    Raises:
        UnsupportedInstanceError: ``W <= 8``.
    """
    _check_bipartite_support(tp)
    pairs = [(1, a) for a in tp.alphas for _ in range(a)]
    pairs += [(a + 1, 2) for a in tp.alphas]
    pairs += [(3, tp.W)] * tp.m
    return tuple(pairs), RoleMap(_layout(tp.alphas, tp.m, master=False), tp)


def tp_to_xy(tp: ThreePartitionInstance) -> tuple[XyTarget, RoleMap]:
    """Degree / neighbor-degree-sum target realizable iff ``tp`` is solvable."""
    pairs = [(1, a + 1) for a in tp.alphas for _ in range(a)]
    pairs += [(a + 1, a + 3) for a in tp.alphas]
    pairs += [(3, tp.W + 3)] * tp.m
    return tuple(pairs), RoleMap(_layout(tp.alphas, tp.m, master=False), tp)


def _gadget_edges(roles: Sequence[Role], basket_of: Sequence[int]) -> list[tuple[int, int]]:
    weight_pos = {r.index: p for p, r in enumerate(roles) if r.kind == WEIGHT}
    basket_pos = {r.index: p for p, r in enumerate(roles) if r.kind == BASKET}
    master = [p for p, r in enumerate(roles) if r.kind == MASTER]
    edges = [(p, weight_pos[r.index]) for p, r in enumerate(roles) if r.kind == ATOM]
    edges += [(weight_pos[i], basket_pos[b]) for i, b in enumerate(basket_of)]
    for omega in master:
        edges += [(p, omega) for p in (*weight_pos.values(), *basket_pos.values())]
    return edges


def encode_bf_solution_as_graph(bf: BasketFillingInstance, sol: Sequence[int]) -> Graph:
    """Gadget graph of a filling, laid out like :func:`bf_to_sods` output.

    Atoms hang off their item's weight point, each weight point joins its
    basket, and the master joins every weight point and basket.

    Raises:
        InputError: ``sol`` is not a valid filling of ``bf``.
    """
    if not verify_bf(bf, sol):
        raise InputError("assignment does not solve the basket filling instance")
    roles = _layout(bf.weights, bf.k, master=True)
    return graph_from_edges(len(roles), _gadget_edges(roles, sol))


def _encode_tp(tp: ThreePartitionInstance, partition: Partition) -> Graph:
    if not verify_tp(tp, partition):
        raise InputError("partition does not solve the 3-partition instance")
    basket_of = [0] * len(tp.alphas)
    for b, triple in enumerate(partition):
        for i in triple:
            basket_of[i] = b
    roles = _layout(tp.alphas, tp.m, master=False)
    return graph_from_edges(len(roles), _gadget_edges(roles, basket_of))


def encode_tp_bipartite_solution(tp: ThreePartitionInstance, partition: Partition) -> Graph:
    """Gadget graph for :func:`tp_to_bipartite_sods`; bipartite by construction."""
    _check_bipartite_support(tp)
    return _encode_tp(tp, partition)


def encode_tp_xy_solution(tp: ThreePartitionInstance, partition: Partition) -> Graph:
    """Gadget graph for :func:`tp_to_xy`."""
    return _encode_tp(tp, partition)


def _items_to_groups(weights: Sequence[int], group_values: Sequence[Sequence[int]]) -> list[int]:
    """Assign items to groups holding the given weight multisets.

    Equal-weight items are interchangeable; the lowest item indices go to the
    lowest groups, which gives the lexicographically least assignment.
    Returns -1 entries if the multisets do not cover the items exactly.
    """
    by_weight: dict[int, list[int]] = defaultdict(list)
    for i, w in enumerate(weights):
        by_weight[w].append(i)
    out = [-1] * len(weights)
    for g, values in enumerate(group_values):
        for w in values:
            pool = by_weight.get(w)
            if not pool:
                return [-1] * len(weights)
            out[pool.pop(0)] = g
    return out


def _check_profile(G: Graph, target: Sequence[tuple[int, int]], profile) -> None:
    if G.n != len(target):
        raise ProfileMismatchError(f"graph has {G.n} vertices, target has {len(target)}")
    got = profile(G)
    if got != tuple(target):
        bad = next(v for v in range(G.n) if got[v] != target[v])
        raise ProfileMismatchError(f"vertex {bad} has profile {got[bad]}, target {target[bad]}")


def decode_sods_solution(G: Graph, bf: BasketFillingInstance, roles: RoleMap) -> BasketAssignment:
    """Read a basket filling off a realization of the :func:`bf_to_sods` target.

    ``roles`` must come from ``bf_to_sods(bf)`` (possibly rescaled). Roles are
    identified structurally: atoms are the degree-1 vertices, the master is a
    vertex with the master profile adjacent to every other non-atom, and the
    rest split into weight points and baskets by profile. Profiles shared by
    two roles (e.g. a basket and the master when ``n = 3, k = 1``) are resolved
    by backtracking over the possible assignments.

    Raises:
        ProfileMismatchError: ``G`` does not realize the gadget target.
        RoleIdentificationError: no role assignment decodes to a valid filling.
    """
    inst = roles.instance
    if inst != bf and inst != bf_rescale(bf):
        raise InputError("role map was not built from this instance")
    target = _bf_target(inst)
    _check_profile(G, target, second_order_profile)
    n, k = inst.n, inst.k
    master_pair = (n + k, inst.M)
    weight_pairs = {(w + 2, (k - 1) + (n - 1)): w for w in inst.weights}
    basket_pairs = {(c + 1, (k - 1) + (n - c) + s): (c, s) for c, s in inst.baskets}

    atoms = {v for v in range(G.n) if target[v][0] == 1}
    core = [v for v in range(G.n) if v not in atoms]
    master_pos = roles.positions(MASTER)[0]
    omegas = sorted((v for v in core if target[v] == master_pair), key=lambda v: (v != master_pos, v))

    for omega in omegas:
        rest = [v for v in core if v != omega]
        if any(not G.has_edge(omega, v) for v in rest):
            continue
        options = []
        for v in rest:
            opts = []
            if target[v] in weight_pairs:
                opts.append(WEIGHT)
            if target[v] in basket_pairs:
                opts.append(BASKET)
            options.append(opts)
        for choice in product(*options):
            sol = _decode_bf_choice(G, inst, atoms, omega, rest, choice, weight_pairs, basket_pairs, target)
            if sol is not None and verify_bf(inst, sol):
                return sol
    raise RoleIdentificationError("no consistent role assignment decodes to a filling")


def _decode_bf_choice(G, inst, atoms, omega, rest, choice, weight_pairs, basket_pairs, target):
    kind = dict(zip(rest, choice))
    for a in atoms:
        (u,) = G.adj[a]
        if kind.get(u) != WEIGHT:
            return None
    baskets_by_class: dict[tuple[int, int], list[int]] = defaultdict(list)
    for v in rest:
        if kind[v] == BASKET:
            baskets_by_class[basket_pairs[target[v]]].append(v)
    index_by_class: dict[tuple[int, int], list[int]] = defaultdict(list)
    for b, cs in enumerate(inst.baskets):
        index_by_class[cs].append(b)
    basket_index = {}
    for cs, verts in baskets_by_class.items():
        if len(verts) != len(index_by_class[cs]):
            return None
        basket_index.update(zip(sorted(verts), index_by_class[cs]))

    contents: list[list[int]] = [[] for _ in range(inst.k)]
    for v in rest:
        if kind[v] != WEIGHT:
            continue
        hubs = [u for u in G.adj[v] if u != omega and u not in atoms]
        if len(hubs) != 1 or kind.get(hubs[0]) != BASKET:
            return None
        contents[basket_index[hubs[0]]].append(weight_pairs[target[v]])
    sol = _items_to_groups(inst.weights, contents)
    return None if -1 in sol else tuple(sol)


def _decode_triples(G: Graph, tp: ThreePartitionInstance, target, basket_pair, weight_value) -> Partition:
    baskets = [v for v in range(G.n) if target[v] == basket_pair]
    if len(baskets) != tp.m:
        raise RoleIdentificationError("basket count does not match the instance")
    used: set[int] = set()
    groups = []
    for b in baskets:
        values = []
        for u in G.adj[b]:
            w = weight_value(target[u])
            if w is None or u in used:
                raise RoleIdentificationError(f"basket vertex {b} has a non-weight neighbor {u}")
            used.add(u)
            values.append(w)
        groups.append(values)
    owner = _items_to_groups(tp.alphas, groups)
    if -1 in owner:
        raise RoleIdentificationError("basket contents do not match the instance numbers")
    triples = [tuple(i for i, g in enumerate(owner) if g == b) for b in range(tp.m)]
    partition = tuple(sorted(triples))
    if not verify_tp(tp, partition):
        raise RoleIdentificationError("decoded triples do not each sum to W")
    return partition


def decode_bipartite_solution(G: Graph, tp: ThreePartitionInstance) -> Partition:
    """Triples formed by the weight-point neighbors of each basket vertex.

    Raises:
        ProfileMismatchError: ``G`` does not realize ``tp_to_bipartite_sods(tp)``.
        RoleIdentificationError: the realization does not have gadget structure.
    """
    target, _ = tp_to_bipartite_sods(tp)
    _check_profile(G, target, second_order_profile)
    values = set(tp.alphas)

    def weight_value(pair: tuple[int, int]) -> Optional[int]:
        a = pair[0] - 1
        return a if pair[1] == 2 and a in values else None

    return _decode_triples(G, tp, target, (3, tp.W), weight_value)


def decode_xy_solution(G: Graph, tp: ThreePartitionInstance) -> Partition:
    """Triples formed by the weight-point neighbors of each basket vertex.

    Raises:
        ProfileMismatchError: ``G`` does not realize ``tp_to_xy(tp)``.
        RoleIdentificationError: the realization does not have gadget structure.
    """
    target, _ = tp_to_xy(tp)
    _check_profile(G, target, neighbor_degree_sum)
    values = set(tp.alphas)

    def weight_value(pair: tuple[int, int]) -> Optional[int]:
        a = pair[0] - 1
        return a if pair[1] == a + 3 and a in values else None

    return _decode_triples(G, tp, target, (3, tp.W + 3), weight_value)
