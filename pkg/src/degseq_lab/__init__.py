"""Degree-based graph profiles, NP-hardness reduction gadgets and exact solvers."""

from .graph import (
    Graph,
    Jdm,
    bipartition,
    degree_sequence,
    degree_spectrum,
    distance_k_count,
    graph_from_edges,
    jdm_of_graph,
    neighbor_degree_sum,
    second_order_profile,
)
from .graphicality import erdos_gallai, havel_hakimi, jdm_graphical, sods_d1_necessary
from .instances import BasketFillingInstance, ThreePartitionInstance, normalize_bf

__version__ = "0.1.0"
