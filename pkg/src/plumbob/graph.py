"""Plumbing graphs: representation, text/JSON formats, catalog generation.

Weights are stored as self-intersection numbers (negative).  The family
generator takes the positive continued-fraction style parameters ``b`` and
``b_i`` and negates them.

Vertex ids run ``0..q-1``.  Curve labels elsewhere in the package use the
1-based names ``A_1 .. A_q`` for the same vertices.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "GraphError",
    "PlumbingGraph",
    "FamilySpec",
    "FAMILIES",
    "VARIANTS",
    "ARM_TABLE",
    "parse_graph",
    "serialize_graph",
    "graph_to_json",
    "graph_from_json",
    "load_graph",
    "continued_fraction_expand",
    "continued_fraction_value",
    "generate_family",
    "identify_family",
    "intersection_matrix",
    "is_negative_definite",
    "leading_minors",
]


class GraphError(ValueError):
    """Invalid graph document or graph parameters."""


# ---------------------------------------------------------------------------
# Graph object
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PlumbingGraph:
    weights: tuple[int, ...]
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        weights = tuple(int(w) for w in self.weights)
        q = len(weights)
        seen = set()
        for i, j in self.edges:
            if i == j:
                raise GraphError(f"self-loop at vertex {i}")
            if not (0 <= i < q and 0 <= j < q):
                raise GraphError(f"edge ({i}, {j}) references a missing vertex")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    def __len__(self) -> int:
        return len(self.weights)

    @property
    def vertices(self) -> tuple[tuple[int, int], ...]:
        return tuple(enumerate(self.weights))

    def neighbors(self, i: int) -> list[int]:
        return sorted({b for a, b in self.edges if a == i} | {a for a, b in self.edges if b == i})

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.weights]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return [sorted(a) for a in adj]

    def valency(self, i: int) -> int:
        return sum(1 for e in self.edges if i in e)

    def valencies(self) -> list[int]:
        return [len(a) for a in self.adjacency()]

    def is_connected(self) -> bool:
        if not self.weights:
            return False
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            for j in adj[stack.pop()]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == len(self.weights)

    def is_tree(self) -> bool:
        return len(self.edges) == len(self.weights) - 1 and self.is_connected()

    def relabel(self, perm: Sequence[int]) -> "PlumbingGraph":
        """Graph with old vertex ``i`` moved to position ``perm[i]``."""
        q = len(self.weights)
        if sorted(perm) != list(range(q)):
            raise GraphError("relabel needs a permutation of the vertex ids")
        weights = [0] * q
        for i, w in enumerate(self.weights):
            weights[perm[i]] = w
        return PlumbingGraph(tuple(weights), tuple((perm[i], perm[j]) for i, j in self.edges))


# ---------------------------------------------------------------------------
# Text and JSON formats
# ---------------------------------------------------------------------------

_STATEMENT = re.compile(r"^(vertex|edge)\s+(-?\d+)\s+(-?\d+)$")


def parse_graph(text: str) -> PlumbingGraph:
    """Parse the line-oriented ``vertex``/``edge`` document.

    Errors carry the offending line number.
    """
    weights: dict[int, int] = {}
    edges: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        match = _STATEMENT.match(line)
        if match is None:
            raise GraphError(f"line {lineno}: syntax error: {raw.strip()!r}")
        kind, a, b = match.group(1), int(match.group(2)), int(match.group(3))
        if kind == "vertex":
            if a < 0:
                raise GraphError(f"line {lineno}: negative vertex id {a}")
            if a in weights:
                raise GraphError(f"line {lineno}: duplicate vertex id {a}")
            weights[a] = b
        else:
            if a == b:
                raise GraphError(f"line {lineno}: self-loop at vertex {a}")
            edges.append((lineno, a, b))

    q = len(weights)
    if sorted(weights) != list(range(q)):
        raise GraphError(f"vertex ids must be contiguous 0..{q - 1}, got {sorted(weights)}")
    seen: set[tuple[int, int]] = set()
    for lineno, a, b in edges:
        for v in (a, b):
            if v not in weights:
                raise GraphError(f"line {lineno}: edge endpoint {v} is not a vertex")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise GraphError(f"line {lineno}: duplicate edge {a} {b}")
        seen.add(key)
    return PlumbingGraph(tuple(weights[i] for i in range(q)), tuple(seen))


def serialize_graph(graph: PlumbingGraph) -> str:
    lines = [f"vertex {i} {w}" for i, w in graph.vertices]
    lines += [f"edge {i} {j}" for i, j in graph.edges]
    return "\n".join(lines) + "\n"


def graph_to_json(graph: PlumbingGraph) -> dict:
    return {
        "vertices": [{"id": i, "weight": w} for i, w in graph.vertices],
        "edges": [[i, j] for i, j in graph.edges],
    }


def graph_from_json(data: dict) -> PlumbingGraph:
    try:
        verts = {int(v["id"]): int(v["weight"]) for v in data["vertices"]}
        if len(verts) != len(data["vertices"]):
            raise GraphError("duplicate vertex id")
        q = len(verts)
        if sorted(verts) != list(range(q)):
            raise GraphError(f"vertex ids must be contiguous 0..{q - 1}")
        edges = [(int(a), int(b)) for a, b in data.get("edges", [])]
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(f"malformed graph JSON: {exc}") from exc
    return PlumbingGraph(tuple(verts[i] for i in range(q)), tuple(edges))


def load_graph(text: str) -> PlumbingGraph:
    """Parse either the DSL or the JSON form (a report's ``graph`` section also works)."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphError(f"invalid JSON: {exc}") from exc
        if "graph" in data and "vertices" not in data:
            data = data["graph"]
        return graph_from_json(data)
    return parse_graph(text)


# ---------------------------------------------------------------------------
# Continued fractions
# ---------------------------------------------------------------------------


def continued_fraction_expand(n: int, q: int) -> list[int]:
    """Hirzebruch-Jung expansion n/q = b_1 - 1/(b_2 - 1/(...)), all b_i >= 2."""
    if not (0 < q < n) or math.gcd(n, q) != 1:
        raise GraphError(f"need 0 < q < n with gcd(n, q) = 1, got n={n}, q={q}")
    out = []
    while q:
        b = -(-n // q)  # ceiling
        out.append(b)
        n, q = q, b * q - n
    return out


def continued_fraction_value(chain: Sequence[int]) -> Fraction:
    value = Fraction(chain[-1])
    for b in reversed(chain[:-1]):
        value = b - 1 / value
    return value


# ---------------------------------------------------------------------------
# Catalog
# ---------------------------------------------------------------------------

FAMILIES = ("cyclic", "dihedral", "tetrahedral", "octahedral", "icosahedral")

# (left arm, right arm), each listed from its leaf toward the center, as
# positive weights.  A bottom -2 leaf hangs off the center in every variant.
ARM_TABLE: dict[str, dict[str, tuple[tuple[int, ...], tuple[int, ...]]]] = {
    "tetrahedral": {
        "i": ((2, 2), (2, 2)),
        "ii": ((3,), (2, 2)),
        "iii": ((3,), (3,)),
    },
    "octahedral": {
        "i": ((2, 2, 2), (2, 2)),
        "ii": ((2, 2, 2), (3,)),
        "iii": ((4,), (2, 2)),
        "iv": ((4,), (3,)),
    },
    "icosahedral": {
        "i": ((2, 2, 2, 2), (2, 2)),
        "ii": ((3, 2), (2, 2)),
        "iii": ((2, 2, 2, 2), (3,)),
        "iv": ((2, 3), (2, 2)),
        "v": ((3, 2), (3,)),
        "vi": ((5,), (2, 2)),
        "vii": ((2, 3), (3,)),
        "viii": ((5,), (3,)),
    },
}

VARIANTS: dict[str, tuple[str, ...]] = {
    "cyclic": (),
    "dihedral": (),
    **{fam: tuple(table) for fam, table in ARM_TABLE.items()},
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    variant: str | None = None
    b: int | None = None
    chain: tuple[int, ...] = ()
    nq: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "chain", tuple(int(c) for c in self.chain))
        if self.family not in FAMILIES:
            raise GraphError(f"unknown family {self.family!r}")
        has_variants = bool(VARIANTS[self.family])
        if has_variants and self.variant not in VARIANTS[self.family]:
            raise GraphError(
                f"{self.family} needs a variant in {VARIANTS[self.family]}, got {self.variant!r}"
            )
        if not has_variants and self.variant is not None:
            raise GraphError(f"{self.family} has no variants")
        if any(c < 2 for c in self.chain):
            raise GraphError(f"chain entries must be >= 2, got {self.chain}")

        if self.family == "cyclic":
            if self.b is not None:
                raise GraphError("cyclic family takes no central weight b")
            if self.nq is not None:
                expanded = tuple(continued_fraction_expand(*self.nq))
                if self.chain and self.chain != expanded:
                    raise GraphError(
                        f"chain {list(self.chain)} disagrees with n/q={self.nq[0]}/{self.nq[1]} "
                        f"= {list(expanded)}"
                    )
                object.__setattr__(self, "chain", expanded)
            if not self.chain:
                raise GraphError("cyclic family needs a chain or (n, q)")
            return

        if self.nq is not None:
            raise GraphError("(n, q) input only applies to the cyclic family")
        if self.b is None or self.b < 2:
            raise GraphError(f"central weight b must be >= 2, got {self.b}")
        if self.family == "dihedral":
            if not self.chain:
                raise GraphError("dihedral family needs a nonempty chain b_1..b_{r-1}")
        elif self.chain:
            raise GraphError(f"{self.family} takes no chain")

    @property
    def r(self) -> int | None:
        if self.family == "cyclic":
            return len(self.chain)
        if self.family == "dihedral":
            return len(self.chain) + 1
        return None

    def label(self) -> str:
        if self.family == "cyclic":
            return f"cyclic[{','.join(map(str, self.chain))}]"
        if self.family == "dihedral":
            return f"dihedral[{','.join(map(str, self.chain))}] b={self.b}"
        return f"{self.family} ({self.variant}) b={self.b}"

    def to_json(self) -> dict:
        out: dict = {"family": self.family}
        if self.variant is not None:
            out["variant"] = self.variant
        if self.b is not None:
            out["b"] = self.b
        if self.chain:
            out["chain"] = list(self.chain)
        return out


def _path_edges(start: int, stop: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(start, stop - 1)]


def generate_family(spec: FamilySpec) -> PlumbingGraph:
    """Minimal resolution graph of the quotient singularity described by ``spec``."""
    if spec.family == "cyclic":
        weights = [-b for b in spec.chain]
        return PlumbingGraph(tuple(weights), tuple(_path_edges(0, len(weights))))

    if spec.family == "dihedral":
        weights = [-b for b in spec.chain] + [-spec.b, -2, -2]
        center = len(spec.chain)
        edges = _path_edges(0, center + 1) + [(center, center + 1), (center, center + 2)]
        return PlumbingGraph(tuple(weights), tuple(edges))

    left, right = ARM_TABLE[spec.family][spec.variant]
    weights = [-w for w in left] + [-spec.b] + [-w for w in reversed(right)] + [-2]
    center = len(left)
    last_arm = center + len(right)
    edges = _path_edges(0, last_arm + 1) + [(center, last_arm + 1)]
    return PlumbingGraph(tuple(weights), tuple(edges))


def identify_family(graph: PlumbingGraph) -> FamilySpec | None:
    """Catalog spec whose generated graph equals ``graph`` exactly (same labels), if any."""
    q = len(graph)
    w = graph.weights
    if q == 0 or any(x > -2 for x in w):
        return None
    candidates: list[FamilySpec] = []
    if all(e == (i, i + 1) for i, e in enumerate(graph.edges)) and len(graph.edges) == q - 1:
        candidates.append(FamilySpec("cyclic", chain=tuple(-x for x in w)))
    deg3 = [i for i, d in enumerate(graph.valencies()) if d == 3]
    if len(deg3) == 1:
        center = deg3[0]
        b = -w[center]
        if center >= 1:
            candidates.append(FamilySpec("dihedral", b=b, chain=tuple(-x for x in w[:center])))
        for family, table in ARM_TABLE.items():
            for variant, (left, _right) in table.items():
                if len(left) == center:
                    candidates.append(FamilySpec(family, variant, b=b))
    for spec in candidates:
        if generate_family(spec) == graph:
            return spec
    return None


# ---------------------------------------------------------------------------
# Intersection form
# ---------------------------------------------------------------------------


def intersection_matrix(graph: PlumbingGraph) -> np.ndarray:
    q = len(graph)
    mat = np.zeros((q, q), dtype=np.int64)
    for i, w in graph.vertices:
        mat[i, i] = w
    for i, j in graph.edges:
        mat[i, j] = mat[j, i] = 1
    return mat


def leading_minors(matrix: Iterable[Iterable[int]]) -> list[int]:
    """Exact leading principal minors via fraction-free (Bareiss) elimination.

    Stops after the first vanishing minor, so the result may be shorter
    than the matrix order.
    """
    a = [[int(x) for x in row] for row in matrix]
    n = len(a)
    minors = []
    prev = 1
    for k in range(n):
        minors.append(a[k][k])
        if a[k][k] == 0:
            break
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return minors


def is_negative_definite(matrix) -> bool:
    """Sylvester's criterion: leading minors alternate in sign, starting negative."""
    mat = np.asarray(matrix)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] == 0:
        return False
    if not np.array_equal(mat, mat.T):
        return False
    minors = leading_minors(mat.tolist())
    if len(minors) != mat.shape[0]:
        return False
    return all((m < 0) if k % 2 == 0 else (m > 0) for k, m in enumerate(minors))
