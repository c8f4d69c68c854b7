"""
Embedding plumbing lattices in a diagonal lattice
=================================================

A planar page forces the filling's intersection lattice into some copy
of n<-1>.  The search below decides that question exactly.
"""

from __future__ import annotations

from plumbob import PlumbingGraph, count_embeddings_up_to_symmetry, figure12_pattern_match, find_embedding, lattice_of
from plumbob.graph import FamilySpec, generate_family

# D4: one embedding up to symmetry, using four coordinates
d4 = PlumbingGraph((-2,) * 4, ((0, 1), (0, 2), (0, 3)))
verdict = find_embedding(lattice_of(d4))
print(verdict.status, verdict.embedding.vectors)
print("count:", count_embeddings_up_to_symmetry(lattice_of(d4)))

# extending two leaves of the D4 star is already fatal
fig = PlumbingGraph((-2,) * 6, ((0, 1), (0, 2), (0, 3), (3, 4), (1, 5)))
print(figure12_pattern_match(fig), find_embedding(lattice_of(fig)).status)

# extending one leaf repeatedly gives D_n, which embeds
d6 = PlumbingGraph((-2,) * 6, ((0, 1), (0, 2), (0, 3), (3, 4), (4, 5)))
print(figure12_pattern_match(d6), find_embedding(lattice_of(d6)).status)

# the E-series and a weighted b = 3 graph
for family, variant, b in [("tetrahedral", "i", 2), ("octahedral", "i", 2), ("icosahedral", "i", 2), ("octahedral", "i", 3)]:
    spec = FamilySpec(family, variant, b)
    v = find_embedding(lattice_of(generate_family(spec)))
    print(f"{spec.label():24s} {v.status}")

# a cap on the dimension can only give a positive answer or "inconclusive"
print(find_embedding(lattice_of(d4), max_dim=3).status)
