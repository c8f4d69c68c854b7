"""
Fundamental cycle and Milnor page of an E8 graph
================================================

Build the all -2 E8 tree, run the Laufer sweep and read off the page.
"""

from __future__ import annotations

import numpy as np

from plumbob import FamilySpec, fundamental_cycle, generate_family, intersection_matrix, page_topology, piece_inventory

# the icosahedral (i) graph at b = 2 is the E8 configuration
graph = generate_family(FamilySpec("icosahedral", "i", 2))
print(intersection_matrix(graph))

# m is the smallest positive vector with I m <= 0; n = -I m counts binding circles
cycle = fundamental_cycle(graph)
print("m =", cycle.m)
print("n =", cycle.n)
assert (intersection_matrix(graph) @ np.array(cycle.m)).tolist() == [-x for x in cycle.n]

# each sphere contributes a branched cover; gluing them gives the page
for piece in piece_inventory(graph, cycle).pieces:
    print(f"A{piece.vertex + 1}: m={piece.multiplicity} euler={piece.euler}")

page = page_topology(graph, cycle)
print(f"page genus {page.genus} with {page.boundary_count} boundary circle")

# a different starting vertex reaches the same cycle
assert fundamental_cycle(graph, pick=lambda bad: bad[-1]).m == cycle.m
