"""
Degree profiles of a small graph
================================

Second-order degrees, neighbor-degree sums and the joint degree matrix,
computed on a random graph and checked against a few identities.
"""

import numpy as np

from degseq_lab import (
    degree_sequence,
    jdm_graphical,
    jdm_of_graph,
    neighbor_degree_sum,
    second_order_profile,
)
from degseq_lab.generators import gen_graph

# a seeded G(n, p) graph; the same seed always gives the same edges
G = gen_graph(seed=4, n=9, p=0.35)
print(f"{G.n} vertices, {G.m} edges:", G.sorted_edges())

# (d1, d2): how many vertices sit at distance exactly 1 and exactly 2
sods = np.array(second_order_profile(G))
print("d1, d2 per vertex:\n", sods.T)

# (d, D2): degree and the sum of the neighbors' degrees
xy = np.array(neighbor_degree_sum(G))
print("d, D2 per vertex:\n", xy.T)

# every edge uv contributes d(u) to D2(v) and d(v) to D2(u)
deg = np.array(degree_sequence(G))
assert xy[:, 1].sum() == (deg ** 2).sum()

# walks v-u-w with w != v reach every distance-2 vertex at least once
has_edges = deg > 0
assert np.all(xy[has_edges, 1] >= sods[has_edges, 1] + deg[has_edges])

# joint degree matrix: J[i, j] counts edges between degree-i and degree-j vertices
J = jdm_of_graph(G)
print("joint degree matrix:\n", J.as_array())
verdict = jdm_graphical(J)
print("graphical:", verdict.graphical, "class sizes:", verdict.sizes)
