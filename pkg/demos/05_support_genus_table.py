"""
Support genus across the catalog
================================

Combine the page genus with the lattice verdict for every graph in the
default grid and tabulate the result by family.
"""

from __future__ import annotations

from collections import Counter

from plumbob import analyze, run_reproduce
from plumbob.analysis import default_grid
from plumbob.graph import FamilySpec, generate_family

# one full report
report = analyze(generate_family(FamilySpec("octahedral", "i", 2)))
print(report.to_text())

# b = 2 graphs only, all families
summary = run_reproduce([s for s in default_grid(max_length=3) if s.family == "cyclic" or s.b == 2])
print(summary.to_text())

genus_one = sorted(r.spec.label() for r in summary.results if r.classification == "support_genus_1")
print("support genus exactly one:", genus_one)
print(Counter(r.classification for r in summary.results))
