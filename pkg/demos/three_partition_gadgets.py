"""
3-Partition through degree-sequence gadgets
===========================================

A 3-Partition instance is turned into target degree profiles. A graph
realizing the target exists exactly when the partition does, and the
graph can be decoded back into the triples.
"""

from degseq_lab import ThreePartitionInstance, second_order_profile
from degseq_lab.reductions import (
    decode_bipartite_solution,
    decode_xy_solution,
    tp_to_bf,
    tp_to_bipartite_sods,
    tp_to_xy,
)
from degseq_lab.solvers import realize_sods_bipartite, realize_xy, solve_tp

tp = ThreePartitionInstance(m=2, W=13, alphas=(4, 4, 5, 4, 4, 5))
print("instance:", tp)

# direct search
direct = solve_tp(tp)
print("solve_tp:", direct.status.value, direct.certificate)

# the same instance as Basket Filling: every basket takes three items of total W
print("as basket filling:", tp_to_bf(tp))

# bipartite second-order target: atoms, weight points, baskets
target, roles = tp_to_bipartite_sods(tp)
print("bipartite target roles:", roles.counts())
found = realize_sods_bipartite(target)
print("realize_sods_bipartite:", found.status.value, f"({found.nodes} nodes)")
assert second_order_profile(found.certificate) == target
print("decoded triples:", decode_bipartite_solution(found.certificate, tp))

# neighbor-degree-sum target; no bipartite constraint needed
xy_target, _ = tp_to_xy(tp)
found = realize_xy(xy_target)
print("realize_xy:", found.status.value, "decoded:", decode_xy_solution(found.certificate, tp))

# an unsolvable instance stays unsolvable in every encoding
bad = ThreePartitionInstance(m=2, W=13, alphas=(4, 4, 4, 4, 4, 6))
print("unsolvable:", solve_tp(bad).status.value,
      realize_sods_bipartite(tp_to_bipartite_sods(bad)[0]).status.value,
      realize_xy(tp_to_xy(bad)[0]).status.value)
