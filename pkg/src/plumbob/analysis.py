"""End-to-end analysis of a plumbing graph and the catalog regression run."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import __version__
from .cycle import (
    ConsistencyError,
    CycleData,
    PageTopology,
    PieceInventory,
    cycle_json,
    fundamental_cycle,
    page_topology,
    piece_inventory,
)
from .graph import VARIANTS, FamilySpec, PlumbingGraph, generate_family, graph_to_json, identify_family
from .lattice import EMBEDDABLE, NOT_EMBEDDABLE, LatticeVerdict, find_embedding, lattice_of
from .monodromy import (
    CatalogEntry,
    FractionalTwistPlan,
    WordError,
    catalog_entry,
    format_word,
    fractional_plan,
    word_boundary_profile,
)
from .reference import expected_classification, page_erratum, stated_page, table_cycle

__all__ = [
    "FORMAT_VERSION",
    "SUPPORT_GENUS_0",
    "SUPPORT_GENUS_1",
    "SUPPORT_GENUS_AT_MOST_1",
    "ClassificationError",
    "AnalysisReport",
    "classify",
    "analyze",
    "default_grid",
    "GridResult",
    "ReproduceSummary",
    "run_reproduce",
]

FORMAT_VERSION = "1"

SUPPORT_GENUS_0 = "support_genus_0"
SUPPORT_GENUS_1 = "support_genus_1"
SUPPORT_GENUS_AT_MOST_1 = "support_genus_at_most_1"


class ClassificationError(ValueError):
    """The page has genus two or more; no conclusion is drawn."""


def classify(page: PageTopology, verdict: LatticeVerdict) -> str:
    # only a planar Milnor page proves support genus zero; embeddability alone never does
    if page.genus == 0:
        return SUPPORT_GENUS_0
    if page.genus == 1:
        return SUPPORT_GENUS_1 if verdict.status == NOT_EMBEDDABLE else SUPPORT_GENUS_AT_MOST_1
    raise ClassificationError(f"page genus {page.genus} is outside the classification")


@dataclass(frozen=True)
class AnalysisReport:
    graph: PlumbingGraph
    cycle: CycleData
    pieces: PieceInventory
    page: PageTopology
    plan: FractionalTwistPlan
    catalog: CatalogEntry | None
    verdict: LatticeVerdict
    classification: str

    def to_json(self) -> dict:
        catalog = None
        if self.catalog is not None:
            catalog = {
                "spec": self.catalog.spec.to_json(),
                "label": self.catalog.spec.label(),
                "word": format_word(self.catalog.word),
                "notes": list(self.catalog.notes),
            }
        return {
            "tool": {"name": "plumbob", "version": __version__},
            "format_version": FORMAT_VERSION,
            "graph": graph_to_json(self.graph),
            "cycle": cycle_json(self.cycle, self.pieces, self.page),
            "monodromy": {
                "plan": [e.to_json() for e in self.plan.entries],
                "catalog": catalog,
            },
            "lattice": self.verdict.to_json(),
            "classification": self.classification,
        }

    def to_text(self) -> str:
        lines = [
            f"vertices: {len(self.graph)}  edges: {len(self.graph.edges)}",
            f"weights: {list(self.graph.weights)}",
            f"m: {list(self.cycle.m)}",
            f"n: {list(self.cycle.n)}",
            f"page: genus {self.page.genus}, {self.page.boundary_count} boundary components, "
            f"euler {self.page.euler}",
            "pieces:",
        ]
        for p in self.pieces.pieces:
            lines.append(
                f"  A{p.vertex + 1}: m={p.multiplicity} components={p.components} "
                f"genus={p.genus} boundary={p.boundary}"
            )
        roots = sorted({e.root_order for e in self.plan.entries})
        lines.append(f"annulus roots: {len(self.plan.entries)} annuli, root orders {roots}")
        if self.catalog is not None:
            lines.append(f"catalog: {self.catalog.spec.label()}")
            lines.append(f"monodromy: {format_word(self.catalog.word)}")
            for note in self.catalog.notes:
                lines.append(f"  note: {note}")
        v = self.verdict
        if v.embedding is not None:
            lines.append(f"lattice: embeddable in dimension {v.embedding.ambient_dim}")
        else:
            lines.append(f"lattice: {v.status} (searched up to dimension {v.max_dim_searched})")
        lines.append(f"classification: {self.classification}")
        return "\n".join(lines)


def analyze(graph: PlumbingGraph, max_dim: int | None = None) -> AnalysisReport:
    cycle = fundamental_cycle(graph)
    pieces = piece_inventory(graph, cycle)
    page = page_topology(graph, cycle)
    if sum(p.euler for p in pieces.pieces) != page.euler:
        raise ConsistencyError("piece Euler characteristics do not add up to the page")
    plan = fractional_plan(graph, cycle)
    spec = identify_family(graph)
    catalog = catalog_entry(spec) if spec is not None else None
    verdict = find_embedding(lattice_of(graph), max_dim=max_dim)
    return AnalysisReport(graph, cycle, pieces, page, plan, catalog, verdict, classify(page, verdict))


# ---------------------------------------------------------------------------
# Catalog regression
# ---------------------------------------------------------------------------


def default_grid(
    families: Iterable[str] | None = None,
    bmin: int = 2,
    bmax: int = 6,
    entries: Sequence[int] = (2, 3, 4, 5),
    max_length: int = 5,
) -> list[FamilySpec]:
    """Catalog specs: central weights bmin..bmax, chain entries from ``entries``.

    ``max_length`` bounds r, so cyclic chains have up to r entries and dihedral
    chains up to r - 1.
    """
    wanted = tuple(families) if families is not None else tuple(VARIANTS) + ("cyclic", "dihedral")
    specs: list[FamilySpec] = []
    if "cyclic" in wanted:
        for r in range(1, max_length + 1):
            specs.extend(FamilySpec("cyclic", chain=ch) for ch in itertools.product(entries, repeat=r))
    for b in range(bmin, bmax + 1):
        if "dihedral" in wanted:
            for r in range(1, max_length):
                specs.extend(
                    FamilySpec("dihedral", b=b, chain=ch) for ch in itertools.product(entries, repeat=r)
                )
        for family, variants in VARIANTS.items():
            if family in wanted:
                specs.extend(FamilySpec(family, v, b) for v in variants)
    return specs


@dataclass(frozen=True)
class GridResult:
    spec: FamilySpec
    genus: int
    boundary_count: int
    classification: str
    expected: str
    failures: tuple[str, ...] = ()
    errata: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "spec": self.spec.label(),
            "genus": self.genus,
            "N": self.boundary_count,
            "classification": self.classification,
            "expected": self.expected,
            "ok": self.ok,
            "failures": list(self.failures),
            "errata": list(self.errata),
        }


def check_spec(spec: FamilySpec) -> GridResult:
    graph = generate_family(spec)
    report = analyze(graph)
    cycle, page = report.cycle, report.page
    failures: list[str] = []
    errata: list[str] = []

    table = table_cycle(spec)
    if table is not None and (cycle.m, cycle.n) != table:
        failures.append(f"m/n {cycle.m}/{cycle.n} differs from table {table}")

    claim = stated_page(spec)
    if claim.genus != page.genus:
        failures.append(f"genus {page.genus}, stated {claim.genus}")
    if claim.boundary_count != page.boundary_count:
        note = page_erratum(spec)
        if note is None:
            failures.append(f"N {page.boundary_count}, stated {claim.boundary_count}")
        else:
            errata.append(note)

    entry = catalog_entry(spec)
    errata.extend(entry.notes)
    try:
        profile = word_boundary_profile(entry.word, page, cycle)
    except WordError as exc:
        failures.append(f"word: {exc}")
    else:
        if page.genus == 0:
            named = {c for c in profile if c.kind == "boundary"}
            if len(named) != page.boundary_count:
                failures.append(f"word names {len(named)} boundary curves, N = {page.boundary_count}")

    expected = expected_classification(spec)
    if report.classification != expected:
        failures.append(f"classified {report.classification}, expected {expected}")
    if report.verdict.status == EMBEDDABLE and report.verdict.embedding is None:
        failures.append("embeddable verdict without certificate")
    return GridResult(
        spec, page.genus, page.boundary_count, report.classification, expected, tuple(failures), tuple(errata)
    )


@dataclass(frozen=True)
class ReproduceSummary:
    results: tuple[GridResult, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def by_family(self) -> dict[str, dict[str, int]]:
        table: dict[str, dict[str, int]] = {}
        for r in self.results:
            row = table.setdefault(r.spec.family, {"specs": 0, "failed": 0, "errata": 0})
            row["specs"] += 1
            row["failed"] += 0 if r.ok else 1
            row["errata"] += 1 if r.errata else 0
            row[r.classification] = row.get(r.classification, 0) + 1
        return table

    def to_json(self) -> dict:
        return {
            "tool": {"name": "plumbob", "version": __version__},
            "format_version": FORMAT_VERSION,
            "ok": self.ok,
            "families": self.by_family(),
            "results": [r.to_json() for r in self.results],
        }

    def to_text(self) -> str:
        cols = ("specs", "failed", "errata", SUPPORT_GENUS_0, SUPPORT_GENUS_1, SUPPORT_GENUS_AT_MOST_1)
        lines = ["family".ljust(12) + "".join(c.rjust(25 if c.startswith("support") else 8) for c in cols)]
        for family, row in sorted(self.by_family().items()):
            lines.append(
                family.ljust(12)
                + "".join(str(row.get(c, 0)).rjust(25 if c.startswith("support") else 8) for c in cols)
            )
        notes = sorted({note for r in self.results for note in r.errata})
        if notes:
            lines.append("flagged transcription issues:")
            lines.extend(f"  ERRATUM {n}" for n in notes)
        for r in self.results:
            for f in r.failures:
                lines.append(f"FAIL {r.spec.label()}: {f}")
        lines.append("all checks passed" if self.ok else "MISMATCHES FOUND")
        return "\n".join(lines)


def _sort_key(spec: FamilySpec) -> tuple:
    return (spec.family, spec.b or 0, spec.variant or "", spec.chain)


def run_reproduce(specs: Iterable[FamilySpec] | None = None) -> ReproduceSummary:
    items = sorted(default_grid() if specs is None else specs, key=_sort_key)
    return ReproduceSummary(tuple(check_spec(s) for s in items))
