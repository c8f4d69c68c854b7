from __future__ import annotations

import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_force_minimal_cycle, random_definite_trees
from plumbob.analysis import default_grid
from plumbob.cycle import (
    ConsistencyError,
    CycleData,
    cycle_from_multiplicities,
    cycle_json,
    fundamental_cycle,
    page_topology,
    piece_inventory,
)
from plumbob.graph import FamilySpec, GraphError, PlumbingGraph, generate_family, intersection_matrix

TREES = random_definite_trees(200, seed=11)
SMALL_CATALOG = [s for s in default_grid(max_length=4) if len(generate_family(s)) <= 6]


def _gen(family, variant=None, b=None, chain=()):
    return generate_family(FamilySpec(family, variant, b, tuple(chain)))


# --- fundamental cycle ---------------------------------------------------------


def test_single_vertex():
    assert fundamental_cycle(PlumbingGraph((-3,))) == CycleData((1,), (3,))


@pytest.mark.parametrize("chain", [(2,), (5,), (2, 3), (4, 2, 5), (3, 3, 3, 3, 2)])
def test_cyclic_all_ones(chain):
    c = fundamental_cycle(_gen("cyclic", chain=chain))
    assert c.m == (1,) * len(chain)
    if len(chain) == 1:
        assert c.n == (chain[0],)
    else:
        assert c.n == (chain[0] - 1,) + tuple(b - 2 for b in chain[1:-1]) + (chain[-1] - 1,)


def test_icosahedral_i_b2():
    c = fundamental_cycle(_gen("icosahedral", "i", 2))
    assert c.m == (2, 3, 4, 5, 6, 4, 2, 3)
    assert c.n == (1, 0, 0, 0, 0, 0, 0, 0)


def test_tetrahedral_i_b2():
    c = fundamental_cycle(_gen("tetrahedral", "i", 2))
    assert c.m == (1, 2, 3, 2, 1, 2)
    assert c.n == (0, 0, 0, 0, 0, 1)


def test_rejects_indefinite():
    with pytest.raises(GraphError):
        fundamental_cycle(PlumbingGraph((-1, -1), ((0, 1),)))
    with pytest.raises(GraphError):
        fundamental_cycle(PlumbingGraph((-2, -2, -2, -2, -2), ((0, 1), (0, 2), (0, 3), (0, 4))))


def test_solves_cycle_condition_and_is_positive():
    for g in TREES:
        c = fundamental_cycle(g)
        assert all(x >= 1 for x in c.m) and all(x >= 0 for x in c.n)
        assert (intersection_matrix(g) @ np.array(c.m)).tolist() == [-x for x in c.n]


def test_oracle_equivalence_small():
    for g in TREES[:100] + [generate_family(s) for s in SMALL_CATALOG[::5]]:
        assert brute_force_minimal_cycle(intersection_matrix(g)) == fundamental_cycle(g).m


def test_order_independence():
    graphs = TREES[:30] + [_gen("icosahedral", v, 2) for v in ("i", "ii", "iii", "v")]
    for seed in range(100):
        rng = random.Random(seed)
        g = graphs[seed % len(graphs)]
        assert fundamental_cycle(g, pick=rng.choice) == fundamental_cycle(g)


def test_override():
    g = _gen("dihedral", b=2, chain=(3,))
    c = cycle_from_multiplicities(g, (2, 4, 2, 2))
    assert c.n == (2, 2, 0, 0)
    with pytest.raises(GraphError):
        cycle_from_multiplicities(g, (1, 1, 1, 1))
    with pytest.raises(GraphError):
        cycle_from_multiplicities(g, (1, 2, 1))


# --- pieces and page --------------------------------------------------------------


def test_cyclic_pieces_are_spheres():
    chain = (3, 2, 4, 5)
    g = _gen("cyclic", chain=chain)
    inv = piece_inventory(g, fundamental_cycle(g))
    for piece, b in zip(inv.pieces, chain):
        assert piece.components == 1 and piece.genus == 0 and piece.boundary == b


def test_icosahedral_center_and_bottom_pieces():
    g = _gen("icosahedral", "i", 2)
    inv = piece_inventory(g, fundamental_cycle(g))
    center, bottom = inv.pieces[4], inv.pieces[7]
    assert (center.components, center.genus, center.boundary, center.euler) == (1, 1, 6, -6)
    assert (bottom.components, bottom.genus, bottom.boundary) == (3, 0, 3)
    assert inv.annulus_count(4, 7) == 3
    assert inv.annulus_count(3, 4) == 1


@pytest.mark.parametrize(
    "spec, genus, N",
    [
        (FamilySpec("cyclic", chain=(2, 3)), 0, 3),
        (FamilySpec("cyclic", chain=(5, 2, 2, 4)), 0, 5 + 2 + 2 + 4 - 6),
        (FamilySpec("icosahedral", "i", 2), 1, 1),
        (FamilySpec("dihedral", b=2, chain=(4,)), 1, 3),
        (FamilySpec("tetrahedral", "i", 5), 0, 5),
    ],
    ids=lambda x: x.label() if isinstance(x, FamilySpec) else str(x),
)
def test_page_examples(spec, genus, N):
    g = generate_family(spec)
    page = page_topology(g, fundamental_cycle(g))
    assert (page.genus, page.boundary_count) == (genus, N)
    assert page.connected


def test_euler_consistency_and_json():
    for g in TREES + [generate_family(s) for s in SMALL_CATALOG]:
        c = fundamental_cycle(g)
        inv = piece_inventory(g, c)
        page = page_topology(g, c)
        assert sum(p.euler for p in inv.pieces) == page.euler
        assert page.genus == (2 - page.boundary_count - page.euler) // 2
        for p in inv.pieces:
            assert p.euler == 2 * p.components - 2 * p.components * p.genus - p.boundary
        doc = cycle_json(c, inv, page)
        assert doc["page"] == {"genus": page.genus, "boundary": page.boundary_count, "euler": page.euler}
        assert len(doc["pieces"]) == len(g)


def test_inconsistent_data_is_internal_error():
    g = PlumbingGraph((-2,))
    with pytest.raises(ConsistencyError):
        page_topology(g, CycleData((2,), (1,)))


def test_genus_dichotomy_on_grid():
    for spec in default_grid():
        if spec.family == "cyclic":
            continue
        g = generate_family(spec)
        page = page_topology(g, fundamental_cycle(g))
        assert page.genus == (1 if spec.b == 2 else 0), spec.label()


@st.composite
def definite_trees(draw):
    q = draw(st.integers(1, 7))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, q)]
    weights = tuple(draw(st.integers(-6, -2)) for _ in range(q))
    return PlumbingGraph(weights, tuple((p, i + 1) for i, p in enumerate(parents)))


@settings(max_examples=150, deadline=None)
@given(definite_trees())
def test_minimality_property(g):
    # weight -2 stars with many leaves are not definite; skip those
    try:
        c = fundamental_cycle(g)
    except GraphError:
        return
    mat = intersection_matrix(g)
    # lowering any single coordinate of a minimal cycle breaks feasibility
    for i in range(len(g)):
        if c.m[i] > 1:
            m = np.array(c.m)
            m[i] -= 1
            assert ((-mat @ m) < 0).any()
