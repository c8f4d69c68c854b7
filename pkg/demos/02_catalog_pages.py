"""
Pages across the quotient catalog
=================================

Cyclic graphs come from Hirzebruch-Jung strings; the other families are
stars with three arms.  Every b > 2 graph has a planar page.
"""

from __future__ import annotations

from plumbob import FamilySpec, continued_fraction_expand, fundamental_cycle, generate_family, page_topology
from plumbob.graph import VARIANTS

# 7/3 = 3 - 1/2, so the cyclic quotient of type (7, 3) resolves to a [3, 2] string
print(continued_fraction_expand(7, 3))
spec = FamilySpec("cyclic", nq=(7, 3))
g = generate_family(spec)
print(spec.label(), g.weights, page_topology(g, fundamental_cycle(g)))

# a small table: genus and boundary count for every variant at b = 2 and b = 3
print(f"{'graph':28s} {'genus':>5s} {'N':>3s}")
for family, variants in VARIANTS.items():
    for variant in variants:
        for b in (2, 3):
            spec = FamilySpec(family, variant, b)
            g = generate_family(spec)
            page = page_topology(g, fundamental_cycle(g))
            print(f"{spec.label():28s} {page.genus:5d} {page.boundary_count:3d}")

# dihedral graphs carry a chain on the third arm
for chain in [(2,), (3,), (2, 2, 2), (3, 2, 4)]:
    spec = FamilySpec("dihedral", b=2, chain=chain)
    g = generate_family(spec)
    page = page_topology(g, fundamental_cycle(g))
    print(f"{spec.label():28s} {page.genus:5d} {page.boundary_count:3d}")
