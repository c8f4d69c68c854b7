"""Isometric embeddings of plumbing lattices into the diagonal lattice.

The target is Z^n with e_k . e_k = -1, so for integer coordinate vectors the
lattice product is minus the Euclidean dot product.  Embedding a lattice with
Gram matrix G amounts to finding integer rows v_i with v_i . v_j = -G[i][j]
(Euclidean).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import networkx as nx
import numpy as np
from networkx.algorithms import isomorphism

from .graph import GraphError, PlumbingGraph, intersection_matrix, is_negative_definite

__all__ = [
    "Lattice",
    "DiagonalEmbedding",
    "LatticeVerdict",
    "EMBEDDABLE",
    "NOT_EMBEDDABLE",
    "INCONCLUSIVE",
    "lattice_of",
    "find_embedding",
    "enumerate_embeddings",
    "count_embeddings_up_to_symmetry",
    "verify_embedding",
    "canonical_form",
    "figure12_pattern_match",
    "search_order",
]

EMBEDDABLE = "embeddable"
NOT_EMBEDDABLE = "not_embeddable"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Lattice:
    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        q = len(self.gram)
        if q == 0 or any(len(row) != q for row in self.gram):
            raise GraphError("Gram matrix must be square and nonempty")
        mat = self.matrix
        if not np.array_equal(mat, mat.T):
            raise GraphError("Gram matrix must be symmetric")
        if (np.diag(mat) > -1).any():
            raise GraphError("diagonal entries must be <= -1")
        if not is_negative_definite(mat):
            raise GraphError("Gram matrix is not negative definite")

    @classmethod
    def from_matrix(cls, mat: np.ndarray | Sequence[Sequence[int]]) -> "Lattice":
        return cls(tuple(tuple(int(x) for x in row) for row in mat))

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.gram, dtype=np.int64)

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def dimension_bound(self) -> int:
        """Any embedding uses at most this many coordinates."""
        return sum(-self.gram[i][i] for i in range(self.rank))


@dataclass(frozen=True)
class DiagonalEmbedding:
    ambient_dim: int
    vectors: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {"verdict": EMBEDDABLE, "ambient_dim": self.ambient_dim, "vectors": [list(v) for v in self.vectors]}


@dataclass(frozen=True)
class LatticeVerdict:
    status: str
    max_dim_searched: int
    embedding: DiagonalEmbedding | None = None

    @property
    def embeddable(self) -> bool:
        return self.status == EMBEDDABLE

    def to_json(self) -> dict:
        if self.embedding is not None:
            return self.embedding.to_json()
        return {"verdict": self.status, "max_dim_searched": self.max_dim_searched}


def lattice_of(graph: PlumbingGraph) -> Lattice:
    return Lattice.from_matrix(intersection_matrix(graph))


def verify_embedding(lattice: Lattice, embedding: DiagonalEmbedding) -> bool:
    """Independent check that the certificate reproduces the Gram matrix."""
    vecs = embedding.vectors
    if len(vecs) != lattice.rank or any(len(v) != embedding.ambient_dim for v in vecs):
        return False
    for i in range(lattice.rank):
        for j in range(lattice.rank):
            if -sum(a * b for a, b in zip(vecs[i], vecs[j])) != lattice.gram[i][j]:
                return False
    return True


def canonical_form(vectors: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Lexicographically minimal (row-major) image under signed coordinate permutations.

    Each column is flipped so its first nonzero entry is negative, zero columns
    are dropped, and columns are sorted ascending.
    """
    rows = len(vectors)
    cols = []
    for col in zip(*vectors) if rows else ():
        first = next((x for x in col if x), 0)
        if first == 0:
            continue
        cols.append(tuple(-x for x in col) if first > 0 else tuple(col))
    cols.sort()
    return tuple(tuple(col[i] for col in cols) for i in range(rows))


# ---------------------------------------------------------------------------
# Search
# ---------------------------------------------------------------------------


def search_order(gram: Sequence[Sequence[int]]) -> list[int]:
    """Placement order: start at the heaviest vertex, then grow connectedly.

    Ties go to the vertex with most placed neighbours, then larger |weight|,
    then larger degree, then lower index.
    """
    q = len(gram)
    nbrs = [[j for j in range(q) if j != i and gram[i][j]] for i in range(q)]
    placed: list[int] = []
    seen: set[int] = set()
    while len(placed) < q:
        best = max(
            (i for i in range(q) if i not in seen),
            key=lambda i: (sum(j in seen for j in nbrs[i]), -gram[i][i], len(nbrs[i]), -i),
        )
        placed.append(best)
        seen.add(best)
    return placed


def _square_partitions(total: int, largest: int, slots: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing positive integers a_1 >= a_2 >= ... with sum of squares ``total``."""
    if total == 0:
        yield ()
        return
    if slots == 0:
        return
    top = min(largest, math.isqrt(total))
    for a in range(top, 0, -1):
        rest = total - a * a
        if rest > (slots - 1) * a * a:
            break
        for tail in _square_partitions(rest, a, slots - 1):
            yield (a,) + tail


class _Search:
    def __init__(self, gram: Sequence[Sequence[int]], max_dim: int):
        self.gram = [list(row) for row in gram]
        self.q = len(gram)
        self.max_dim = max_dim
        self.order = search_order(self.gram)
        self.rows: dict[int, list[int]] = {}

    # rows are kept padded to the current number of used columns
    def _width(self) -> int:
        return len(next(iter(self.rows.values()))) if self.rows else 0

    def run(self, depth: int = 0) -> Iterator[dict[int, list[int]]]:
        if depth == self.q:
            yield {v: list(r) for v, r in self.rows.items()}
            return
        v = self.order[depth]
        norm = -self.gram[v][v]
        placed = list(self.rows)
        targets = [-self.gram[v][u] for u in placed]
        width = self._width()
        prows = [self.rows[u] for u in placed]
        # suffix[u][c]: squared norm of row u over columns c..width-1
        suffix = []
        for row in prows:
            acc = [0] * (width + 1)
            for c in range(width - 1, -1, -1):
                acc[c] = acc[c + 1] + row[c] * row[c]
            suffix.append(acc)
        # twin[c]: previous column identical to c on all placed rows, or -1
        twin = [-1] * width
        last: dict[tuple[int, ...], int] = {}
        for c in range(width):
            key = tuple(row[c] for row in prows)
            twin[c] = last.get(key, -1)
            last[key] = c
        # only rows with a target or some remaining support constrain the choice
        active = list(range(len(placed)))
        new = [0] * width

        def used(c: int, resid: int, dots: list[int]) -> Iterator[None]:
            if c == width:
                if all(d == 0 for d in dots):
                    yield None
                return
            bound = math.isqrt(resid)
            lo, hi = -bound, bound
            if twin[c] >= 0:
                hi = min(hi, new[twin[c]])
            for x in range(hi, lo - 1, -1):
                r2 = resid - x * x
                if r2 < 0:
                    continue
                nd = dots
                if x:
                    nd = [d - x * prows[k][c] for k, d in enumerate(dots)]
                ok = True
                for k in active:
                    d = nd[k]
                    if d and d * d > r2 * suffix[k][c + 1]:
                        ok = False
                        break
                if not ok:
                    continue
                new[c] = x
                yield from used(c + 1, r2, nd)
            new[c] = 0

        for _ in used(0, norm, targets):
            assigned = sum(x * x for x in new)
            base = list(new)
            for fresh in _square_partitions(norm - assigned, norm, self.max_dim - width):
                if fresh:
                    for row in self.rows.values():
                        row.extend([0] * len(fresh))
                self.rows[v] = base + list(fresh)
                yield from self.run(depth + 1)
                del self.rows[v]
                if fresh:
                    for row in self.rows.values():
                        del row[width:]


def _embedding_from(rows: dict[int, list[int]], q: int) -> DiagonalEmbedding:
    canon = canonical_form([rows[i] for i in range(q)])
    return DiagonalEmbedding(len(canon[0]) if canon else 0, canon)


def find_embedding(lattice: Lattice, max_dim: int | None = None) -> LatticeVerdict:
    """Decide embeddability into the diagonal lattice.

    With ``max_dim`` below :attr:`Lattice.dimension_bound` a failed search is
    reported as inconclusive rather than as a negative certificate.
    """
    bound = lattice.dimension_bound
    limit = bound if max_dim is None else min(max_dim, bound)
    if limit < 1:
        raise ValueError("max_dim must be positive")
    search = _Search(lattice.gram, limit)
    for rows in search.run():
        emb = _embedding_from(rows, lattice.rank)
        if not verify_embedding(lattice, emb):
            raise RuntimeError("search produced an invalid certificate")
        return LatticeVerdict(EMBEDDABLE, limit, emb)
    return LatticeVerdict(NOT_EMBEDDABLE if limit >= bound else INCONCLUSIVE, limit)


def enumerate_embeddings(lattice: Lattice, max_dim: int | None = None) -> set[tuple[tuple[int, ...], ...]]:
    """All embeddings up to signed coordinate permutation, as canonical forms."""
    limit = lattice.dimension_bound if max_dim is None else max_dim
    search = _Search(lattice.gram, limit)
    return {canonical_form([rows[i] for i in range(lattice.rank)]) for rows in search.run()}


def _automorphisms(gram: Sequence[Sequence[int]]) -> list[list[int]]:
    q = len(gram)
    g = nx.Graph()
    for i in range(q):
        g.add_node(i, w=gram[i][i])
    for i in range(q):
        for j in range(i + 1, q):
            if gram[i][j]:
                g.add_edge(i, j, w=gram[i][j])
    matcher = isomorphism.GraphMatcher(
        g,
        g,
        node_match=lambda a, b: a["w"] == b["w"],
        edge_match=lambda a, b: a["w"] == b["w"],
    )
    return [[m[i] for i in range(q)] for m in matcher.isomorphisms_iter()]


def count_embeddings_up_to_symmetry(lattice: Lattice, max_dim: int | None = None) -> int:
    """Embeddings counted modulo signed coordinate permutations and lattice automorphisms.

    Lattice automorphisms here are the weighted-graph automorphisms of the
    Gram matrix, acting by relabelling generators.
    """
    forms = enumerate_embeddings(lattice, max_dim)
    autos = _automorphisms(lattice.gram)
    orbits = set()
    for form in forms:
        orbits.add(min(canonical_form([form[p[i]] for i in range(len(form))]) for p in autos))
    return len(orbits)


# ---------------------------------------------------------------------------
# Fast obstruction
# ---------------------------------------------------------------------------


def figure12_pattern_match(graph: PlumbingGraph) -> bool:
    """Detect a D4 star of -2 spheres with two or more leaves extended.

    In any embedding of a D4 star, two leaves map to -e_a + e_j and -e_a - e_j.
    A further neighbour of one of these that is orthogonal to the other would
    need a half-integer coordinate, so such a configuration never embeds.  With
    only one extended leaf that leaf can take the third position and the
    lattice may embed (the D_n series does).
    """
    adj = graph.adjacency()
    w = graph.weights
    for center in range(len(graph)):
        if w[center] != -2:
            continue
        leaves = [j for j in adj[center] if w[j] == -2]
        if len(leaves) < 3:
            continue
        star_leaves = leaves
        # leaves of the star must be pairwise orthogonal
        for a in range(len(star_leaves)):
            for b in range(a + 1, len(star_leaves)):
                for c in range(b + 1, len(star_leaves)):
                    trio = (star_leaves[a], star_leaves[b], star_leaves[c])
                    if any(y in adj[x] for x in trio for y in trio if x != y):
                        continue
                    star = {center, *trio}
                    # the extension must be orthogonal to the other two leaves
                    extended = sum(
                        1
                        for leaf in trio
                        if any(
                            nb not in star and not any(nb in adj[o] for o in trio if o != leaf)
                            for nb in adj[leaf]
                        )
                    )
                    if extended >= 2:
                        return True
    return False
