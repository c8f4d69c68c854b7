"""Fundamental cycle of a resolution graph and the Milnor page it induces."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Callable, Sequence

import numpy as np

from .graph import GraphError, PlumbingGraph, intersection_matrix, is_negative_definite

__all__ = [
    "ConsistencyError",
    "CycleData",
    "VertexPiece",
    "PieceInventory",
    "PageTopology",
    "fundamental_cycle",
    "cycle_from_multiplicities",
    "piece_inventory",
    "page_topology",
    "cycle_json",
]


class ConsistencyError(RuntimeError):
    """Internal arithmetic produced a value the construction forbids."""


@dataclass(frozen=True)
class CycleData:
    m: tuple[int, ...]
    n: tuple[int, ...]


@dataclass(frozen=True)
class VertexPiece:
    vertex: int
    multiplicity: int
    valency: int
    components: int
    genus: int  # per component
    boundary: int  # total over all components
    euler: int
    binding_annuli: int


@dataclass(frozen=True)
class PieceInventory:
    pieces: tuple[VertexPiece, ...]
    edge_annuli: tuple[tuple[tuple[int, int], int], ...]

    def annulus_count(self, i: int, j: int) -> int:
        key = (min(i, j), max(i, j))
        return dict(self.edge_annuli)[key]


@dataclass(frozen=True)
class PageTopology:
    genus: int
    boundary_count: int
    euler: int
    connected: bool = True


def _deficiency(mat: np.ndarray, m: Sequence[int]) -> np.ndarray:
    return -(mat @ np.asarray(m, dtype=np.int64))


def fundamental_cycle(
    graph: PlumbingGraph,
    pick: Callable[[list[int]], int] | None = None,
) -> CycleData:
    """Laufer's algorithm.

    Start from m = (1, ..., 1) and raise m_i at a vertex with n_i < 0 until
    n = -I m is nonnegative.  ``pick`` chooses among the violating vertices
    (default: the lowest index); the result does not depend on it.
    """
    mat = intersection_matrix(graph)
    if not is_negative_definite(mat):
        raise GraphError("intersection matrix is not negative definite")
    m = np.ones(len(graph), dtype=np.int64)
    while True:
        n = _deficiency(mat, m)
        bad = [int(i) for i in np.flatnonzero(n < 0)]
        if not bad:
            return CycleData(tuple(int(x) for x in m), tuple(int(x) for x in n))
        m[bad[0] if pick is None else pick(bad)] += 1


def cycle_from_multiplicities(graph: PlumbingGraph, m: Sequence[int]) -> CycleData:
    """Expert override: wrap a user-chosen m.  No minimality is claimed."""
    if len(m) != len(graph) or any(x < 1 for x in m):
        raise GraphError("multiplicities must be positive, one per vertex")
    n = _deficiency(intersection_matrix(graph), m)
    if (n < 0).any():
        raise GraphError(f"m={list(m)} gives negative n={n.tolist()}")
    return CycleData(tuple(int(x) for x in m), tuple(int(x) for x in n))


def _half(value: int, what: str) -> int:
    if value % 2:
        raise ConsistencyError(f"{what}: odd numerator {value}, genus is not an integer")
    return value // 2


def piece_inventory(graph: PlumbingGraph, cycle: CycleData) -> PieceInventory:
    m, n = cycle.m, cycle.n
    adj = graph.adjacency()
    pieces = []
    for i in range(len(graph)):
        v = len(adj[i])
        gcds = [math.gcd(m[i], m[j]) for j in adj[i]]
        edge_bdry = sum(gcds)
        if n[i] > 0:
            d = 1
            genus = 1 + _half(m[i] * (v + n[i] - 2) - edge_bdry - n[i], f"vertex {i}")
        else:
            d = reduce(math.gcd, [m[j] for j in adj[i]], m[i])
            numer = (m[i] // d) * (v - 2) - edge_bdry // d
            genus = 1 + _half(numer, f"vertex {i}")
        if genus < 0:
            raise ConsistencyError(f"vertex {i}: negative genus {genus}")
        boundary = n[i] + edge_bdry
        euler = m[i] * (2 - v - n[i])
        if euler != 2 * d - 2 * d * genus - boundary:
            raise ConsistencyError(f"vertex {i}: Euler characteristic mismatch")
        pieces.append(VertexPiece(i, m[i], v, d, genus, boundary, euler, n[i]))
    annuli = tuple(((i, j), math.gcd(m[i], m[j])) for i, j in graph.edges)
    return PieceInventory(tuple(pieces), annuli)


def page_topology(graph: PlumbingGraph, cycle: CycleData) -> PageTopology:
    """Genus and boundary count of the page, assuming it is connected."""
    valency = graph.valencies()
    boundary = sum(cycle.n)
    euler = sum(mi * (2 - v - ni) for mi, v, ni in zip(cycle.m, valency, cycle.n))
    genus = _half(2 - boundary - euler, "page")
    if genus < 0 or boundary < 1:
        raise ConsistencyError(f"impossible page: genus {genus}, {boundary} boundary components")
    return PageTopology(genus, boundary, euler)


def cycle_json(cycle: CycleData, pieces: PieceInventory, page: PageTopology) -> dict:
    return {
        "m": list(cycle.m),
        "n": list(cycle.n),
        "pieces": [
            {"vertex": p.vertex, "components": p.components, "genus": p.genus, "boundary": p.boundary}
            for p in pieces.pieces
        ],
        "page": {"genus": page.genus, "boundary": page.boundary_count, "euler": page.euler},
    }
