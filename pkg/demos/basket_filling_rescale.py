"""
Basket Filling and the second-order gadget
==========================================

Encode a filling as a graph, read its profile, and decode it again.
Instances whose weights collide with a basket count need rescaling first.
"""

from degseq_lab import BasketFillingInstance, second_order_profile
from degseq_lab.reductions import (
    bf_needs_rescale,
    bf_rescale,
    bf_to_sods,
    decode_sods_solution,
    encode_bf_solution_as_graph,
)
from degseq_lab.solvers import realize_sods, solve_bf, verify_bf

bf = BasketFillingInstance(weights=(5, 4, 4, 3, 3, 3), baskets=((3, 11), (3, 11)))
print("needs rescale:", bf_needs_rescale(bf))

sol = solve_bf(bf).certificate
print("filling:", sol)

# every valid filling has a gadget graph with exactly the target profile
target, roles = bf_to_sods(bf)
G = encode_bf_solution_as_graph(bf, sol)
assert second_order_profile(G) == target
print(f"gadget: {G.n} vertices, {G.m} edges, roles {roles.counts()}")

# going the other way, search the target directly and decode
found = realize_sods(target)
back = decode_sods_solution(found.certificate, bf, roles)
print("decoded from search:", back, verify_bf(bf, back))

# weight 2 gives w + 1 = 3, a basket count; multiply weights and capacities
clash = BasketFillingInstance(weights=(5, 4, 3, 3, 3, 2), baskets=((3, 10), (3, 10)))
print("needs rescale:", bf_needs_rescale(clash))
big = bf_rescale(clash)
print("rescaled:", big)
# scaling keeps the counts, so verdicts and fillings carry over
print("verdicts:", solve_bf(clash).status.value, solve_bf(big).status.value)
target, roles = bf_to_sods(clash, auto_rescale=True)
print("rescaled target has", len(target), "vertices")
