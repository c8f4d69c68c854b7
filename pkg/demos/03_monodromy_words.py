"""
Monodromy as Dehn twist words
=============================

The annulus data of a resolution graph gives a fractional twist on each
annulus.  For catalog graphs the fractional pieces combine into an honest
product of right-handed twists, which we check in homology.
"""

from __future__ import annotations

import numpy as np

from plumbob import FamilySpec, fractional_plan, fundamental_cycle, generate_family, homology_action, verify_relations
from plumbob.monodromy import HomologyModel, catalog_entry, format_word, parse_word

# cyclic graphs: every root order is 1, so the plan is already a word
spec = FamilySpec("cyclic", chain=(2, 3))
g = generate_family(spec)
plan = fractional_plan(g, fundamental_cycle(g))
print(plan.is_integral(), format_word(plan.as_word()))

# E8: the edge between the arms of length four and two needs a 30th root
g = generate_family(FamilySpec("icosahedral", "i", 2))
plan = fractional_plan(g, fundamental_cycle(g))
print(sorted({e.root_order for e in plan.entries}))

# catalog words on the genus one pages
for variant in ("i", "ii", "iii"):
    entry = catalog_entry(FamilySpec("icosahedral", variant, 2))
    print(entry.spec.label(), "->", format_word(entry.word))

# the standard relations hold as integer matrices
print(verify_relations())

# (t_a t_b)^6 is the boundary twist, which acts trivially on the closed torus classes
step = homology_action(parse_word("T(al) T(be)"), HomologyModel(1))
print(step)
print(np.array_equal(np.linalg.matrix_power(step, 6), np.eye(2, dtype=np.int64)))
