import random
from itertools import combinations, product
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degseq_lab.errors import InputError
from degseq_lab.graph import Jdm, bipartition, graph_from_edges, jdm_of_graph, neighbor_degree_sum, second_order_profile
from degseq_lab.graphicality import jdm_graphical
from degseq_lab.instances import BasketFillingInstance, ThreePartitionInstance
from degseq_lab.reductions import tp_to_bipartite_sods
from degseq_lab.solvers import (
    SearchBudget,
    Status,
    jdm_feasible_from_aggregates,
    jdm_satisfies_aggregates,
    realize_sods,
    realize_sods_bipartite,
    realize_xy,
    solve_bf,
    solve_tp,
    verify_bf,
    verify_sods,
    verify_sods_bipartite,
    verify_tp,
    verify_xy,
)

from conftest import all_graphs, graphs
from helpers import bf_instances, tp_instances


# --- oracles -----------------------------------------------------------------

def brute_tp(tp):
    n = len(tp.alphas)
    for labels in product(range(tp.m), repeat=n):
        if all(labels.count(b) == 3 and sum(a for a, l in zip(tp.alphas, labels) if l == b) == tp.W
               for b in range(tp.m)):
            return True
    return False


def brute_bf(bf):
    return any(verify_bf(bf, sol) for sol in product(range(bf.k), repeat=bf.n))


@pytest.fixture(scope="module")
def realizable():
    """n -> (sods targets, bipartite sods targets, xy targets) over all labeled graphs."""
    out = {}
    for n in range(1, 6):
        sods, bi, xy = set(), set(), set()
        for G in all_graphs(n):
            t = second_order_profile(G)
            sods.add(t)
            if bipartition(G) is not None:
                bi.add(t)
            xy.add(neighbor_degree_sum(G))
        out[n] = (sods, bi, xy)
    return out


def _matrices(sizes):
    delta = len(sizes)
    cells = [(i, j) for i in range(delta) for j in range(i, delta)]
    bounds = [comb(sizes[i], 2) if i == j else sizes[i] * sizes[j] for i, j in cells]
    for vals in product(*(range(b + 1) for b in bounds)):
        M = [[0] * delta for _ in range(delta)]
        for (i, j), x in zip(cells, vals):
            M[i][j] = M[j][i] = x
        yield M


def brute_jdm_table(sizes, literal=False):
    """D totals -> lexicographically first matrix, by plain enumeration of the upper triangle."""
    table = {}
    for M in _matrices(sizes):
        ok = True
        for i, row in enumerate(M):
            ends = sum(row) + (0 if literal else row[i])
            ok = ok and ends == (i + 1) * sizes[i]
        if not ok:
            continue
        D = tuple(sum((j + 1) * x for j, x in enumerate(row)) + (i + 1) * row[i] for i, row in enumerate(M))
        table.setdefault(D, Jdm(tuple(map(tuple, M))))
    return table


def brute_jdm_feasible(sizes, D, literal=False):
    return brute_jdm_table(sizes, literal).get(tuple(D))


# --- examples ----------------------------------------------------------------

def test_solve_tp_examples():
    o = solve_tp(ThreePartitionInstance(2, 10, (3, 3, 4, 3, 3, 4)))
    assert o.solved and o.certificate == ((0, 1, 2), (3, 4, 5))
    assert solve_tp(ThreePartitionInstance(1, 10, (3, 3, 4))).solved
    o = solve_tp(ThreePartitionInstance(2, 12, (4,) * 6))
    assert o.certificate == ((0, 1, 2), (3, 4, 5))
    assert solve_tp(ThreePartitionInstance(2, 13, (4, 4, 4, 4, 4, 6))).infeasible


def test_solve_bf_examples():
    bf = BasketFillingInstance((5, 4, 3, 3, 3, 2), ((3, 10), (3, 10)))
    o = solve_bf(bf)
    assert o.solved and verify_bf(bf, o.certificate)
    assert sorted(bf.weights[i] for i in range(6) if o.certificate[i] == 0) in ([2, 3, 5], [3, 3, 4])
    o = solve_bf(BasketFillingInstance((6, 2, 2, 2), ((2, 8), (2, 4))))
    assert o.certificate == (0, 0, 1, 1)
    with pytest.raises(InputError):
        solve_bf(BasketFillingInstance((4, 4), ((2, 7),)))


def test_realize_examples(c4):
    o = realize_sods(((1, 1), (2, 0), (1, 1)))
    assert o.solved and o.certificate.sorted_edges() == [(0, 1), (1, 2)]
    assert realize_sods(((1, 0), (1, 1))).infeasible
    assert realize_sods(()).solved
    o = realize_sods_bipartite(((2, 1),) * 4)
    assert o.solved and second_order_profile(o.certificate) == ((2, 1),) * 4
    assert realize_sods_bipartite(((2, 0),) * 3).infeasible
    assert realize_sods(((2, 0),) * 3).solved
    assert realize_xy(((2, 4),) * 3).certificate.m == 3
    assert realize_xy(((1, 1), (1, 1))).certificate.sorted_edges() == [(0, 1)]
    assert realize_xy(((1, 1), (1, 2))).infeasible


def test_identical_pairs_are_not_over_pruned():
    # two vertices with the same target adjacent to each other
    assert realize_sods(((1, 0), (1, 0))).solved
    assert realize_sods(((1, 0),) * 4).solved


def test_bipartite_gadget_round_trip():
    tp = ThreePartitionInstance(1, 10, (3, 3, 4))
    o = realize_sods_bipartite(tp_to_bipartite_sods(tp)[0])
    assert o.solved and bipartition(o.certificate) is not None


def test_jdm_feasible_examples():
    o = jdm_feasible_from_aggregates((0, 3), (0, 12))
    assert o.solved and o.certificate.entries == ((0, 0), (0, 3))
    o = jdm_feasible_from_aggregates((2,), (2,))
    assert o.certificate.entries == ((1,),)
    assert jdm_feasible_from_aggregates((2,), (3,)).infeasible
    with pytest.raises(InputError):
        jdm_feasible_from_aggregates((), ())
    with pytest.raises(InputError):
        jdm_feasible_from_aggregates((1, 2), (3,))


def test_jdm_feasible_literal_mode():
    # K3: each degree-2 vertex has two endpoints, diagonal edges counted once
    # under the literal reading, so 3 edges give 3 != 2 * 3 endpoints
    assert jdm_feasible_from_aggregates((0, 3), (0, 12), literal=True).infeasible
    o = jdm_feasible_from_aggregates((2, 1), (4, 2), literal=True)
    assert o.status == (Status.SOLVED if brute_jdm_feasible((2, 1), (4, 2), True) else Status.INFEASIBLE)


def test_verifiers(c4):
    assert verify_sods(c4, ((2, 1),) * 4)
    assert not verify_sods(c4, ((2, 1),) * 3)
    assert verify_sods_bipartite(c4, ((2, 1),) * 4)
    k3 = graph_from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert not verify_sods_bipartite(k3, ((2, 0),) * 3)
    assert verify_xy(k3, ((2, 4),) * 3)
    tp = ThreePartitionInstance(2, 10, (3, 3, 4, 3, 3, 4))
    assert verify_tp(tp, ((0, 1, 2), (3, 4, 5)))
    assert not verify_tp(tp, ((0, 1, 3), (2, 4, 5)))  # 3 + 3 + 3 = W - 1
    assert not verify_tp(tp, ((0, 1, 2), (0, 1, 2)))
    assert not verify_tp(tp, ((0, 1, 2),))


# --- budgets -----------------------------------------------------------------

def test_budget_validation():
    with pytest.raises(InputError):
        SearchBudget(max_nodes=0)
    assert SearchBudget.from_ints(0, 0) == SearchBudget()
    assert SearchBudget.from_ints(5, 0).max_nodes == 5


def test_unknown_on_tiny_budget():
    tp = ThreePartitionInstance(2, 15, (4, 4, 5, 5, 6, 6))
    target = tp_to_bipartite_sods(tp)[0]
    o = realize_sods_bipartite(target, SearchBudget(max_nodes=5))
    assert o.unknown and o.certificate is None
    assert realize_sods_bipartite(target, SearchBudget(max_millis=1)).status in (Status.UNKNOWN, Status.SOLVED)


def test_budget_monotonicity():
    targets = [
        tp_to_bipartite_sods(ThreePartitionInstance(2, 13, (4, 4, 4, 4, 4, 6)))[0],
        tp_to_bipartite_sods(ThreePartitionInstance(2, 11, (3, 3, 3, 4, 4, 5)))[0],
    ]
    for target in targets:
        full = realize_sods_bipartite(target)
        seen = set()
        for limit in (1, 10, 100, 1000, full.nodes, full.nodes + 1):
            o = realize_sods_bipartite(target, SearchBudget(max_nodes=limit))
            if o.status is not Status.UNKNOWN:
                seen.add(o.status)
                assert o.status == full.status
                assert o.certificate == full.certificate
        assert full.status in seen


def test_determinism():
    tp = ThreePartitionInstance(2, 14, (4, 4, 5, 5, 5, 5))
    t = tp_to_bipartite_sods(tp)[0]
    a, b = realize_sods_bipartite(t), realize_sods_bipartite(t)
    assert a.certificate == b.certificate and a.nodes == b.nodes
    bf = BasketFillingInstance((5, 4, 3, 3, 3, 2), ((3, 10), (3, 10)))
    assert solve_bf(bf).certificate == solve_bf(bf).certificate


# --- oracle agreement --------------------------------------------------------

def test_solve_tp_matches_brute_force():
    for m, Ws in ((1, range(7, 16)), (2, range(7, 16))):
        for W in Ws:
            for tp in tp_instances(m, W):
                rng = random.Random(W)
                shuffled = list(tp.alphas)
                rng.shuffle(shuffled)
                for inst in (tp, ThreePartitionInstance(m, W, tuple(shuffled))):
                    o = solve_tp(inst)
                    assert o.solved == brute_tp(inst)
                    if o.solved:
                        assert verify_tp(inst, o.certificate)


def test_solve_bf_matches_brute_force():
    count = 0
    for bf in bf_instances(5, 3, min_count=1):
        o = solve_bf(bf)
        assert o.solved == brute_bf(bf), bf
        if o.solved:
            assert verify_bf(bf, o.certificate)
        count += 1
    assert count > 500


def test_solve_bf_unsorted_weights():
    bf = BasketFillingInstance((1, 3, 2, 3, 1), ((2, 4), (3, 6)))
    o = solve_bf(bf)
    assert o.solved == brute_bf(bf)
    assert verify_bf(bf, o.certificate)


def test_realize_sods_all_targets_n4(realizable):
    sods, bi, _ = realizable[4]
    pairs = [(a, b) for a in range(4) for b in range(4) if a + b <= 3]
    for target in product(pairs, repeat=4):
        o = realize_sods(target)
        assert o.solved == (target in sods), target
        ob = realize_sods_bipartite(target)
        assert ob.solved == (target in bi), target
        if o.solved:
            assert verify_sods(o.certificate, target)
        if ob.solved:
            assert verify_sods_bipartite(ob.certificate, target)


@settings(max_examples=400, deadline=None)
@given(st.data())
def test_realize_random_targets_n5(realizable, data):
    sods, bi, xy = realizable[5]
    target = tuple(data.draw(st.tuples(st.integers(0, 4), st.integers(0, 4))) for _ in range(5))
    assert realize_sods(target).solved == (target in sods)
    assert realize_sods_bipartite(target).solved == (target in bi)
    xt = tuple(data.draw(st.tuples(st.integers(0, 4), st.integers(0, 16))) for _ in range(5))
    assert realize_xy(xt).solved == (xt in xy)


def test_realize_perturbed_targets_n5(realizable):
    sods, bi, xy = realizable[5]
    for pool, solver in ((sods, realize_sods), (bi, realize_sods_bipartite), (xy, realize_xy)):
        for target in sorted(pool):
            for v in range(5):
                for dx, dy in ((0, 1), (0, -1), (1, -1), (-1, 1)):
                    t = list(target)
                    t[v] = (t[v][0] + dx, t[v][1] + dy)
                    if min(t[v]) < 0:
                        continue
                    t = tuple(t)
                    assert solver(t).solved == (t in pool), (solver.__name__, t)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9))
def test_realize_profiles_of_random_graphs(G):
    for target, solver, check in (
        (second_order_profile(G), realize_sods, verify_sods),
        (neighbor_degree_sum(G), realize_xy, verify_xy),
    ):
        o = solver(target)
        assert o.solved and check(o.certificate, target)
    if bipartition(G) is not None:
        t = second_order_profile(G)
        o = realize_sods_bipartite(t)
        assert o.solved and verify_sods_bipartite(o.certificate, t)


def test_jdm_feasible_matches_brute_force():
    cases = 0
    for delta, top in ((1, 6), (2, 5), (3, 3)):
        for sizes in product(range(top), repeat=delta):
            table = brute_jdm_table(sizes)
            max_d = sum((i + 1) * delta * s for i, s in enumerate(sizes)) + 1
            grid = product(range(max_d + 1), repeat=delta)
            for D in set(grid) if delta < 3 else set(table) | {tuple(x + 1 for x in d) for d in table}:
                fast = jdm_feasible_from_aggregates(sizes, D)
                assert (fast.certificate if fast.solved else None) == table.get(tuple(D)), (sizes, D)
                cases += 1
    assert cases > 1000


def test_jdm_feasible_recovers_graph_aggregates():
    for G in all_graphs(5):
        if not G.m:
            continue
        J = jdm_of_graph(G)
        deg = [d for d, _ in neighbor_degree_sum(G)]
        sizes = [deg.count(i) for i in range(1, J.delta + 1)]
        D = [sum(x for d, x in neighbor_degree_sum(G) if d == i) for i in range(1, J.delta + 1)]
        o = jdm_feasible_from_aggregates(sizes, D)
        assert o.solved
        assert jdm_graphical(o.certificate).sizes == tuple(sizes)
