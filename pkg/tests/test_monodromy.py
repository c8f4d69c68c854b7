from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import planar_word_classes
from plumbob.analysis import default_grid
from plumbob.cycle import PageTopology, fundamental_cycle, page_topology
from plumbob.graph import VARIANTS, FamilySpec, PlumbingGraph, generate_family
from plumbob.monodromy import (
    CurveRef,
    HomologyModel,
    TwistWord,
    WordError,
    boundary_curve,
    catalog_entry,
    catalog_word,
    edge_core,
    format_word,
    fractional_plan,
    homology_action,
    model_curve,
    parse_word,
    relation_library,
    verify_relations,
    word_boundary_profile,
)


def _spec_graph_cycle(spec):
    g = generate_family(spec)
    return g, fundamental_cycle(g)


# --- words ---------------------------------------------------------------------


def test_word_grammar_example():
    text = "T(d[1,1]) T(a1) T(a2) T(be) T(a1) T(a2) T(be)"
    word = parse_word(text)
    assert format_word(word) == text
    assert word.factors[0] == (boundary_curve(1, 1), 1)


def test_word_grammar_exponents_and_edges():
    word = TwistWord(((edge_core(2, 1, 1), 2), (model_curve("de3"), -1)))
    assert format_word(word) == "T(c[1,2,1])^2 T(de3)^-1"
    assert parse_word(format_word(word)) == word


@pytest.mark.parametrize("bad", ["T(x)", "d[1,1]", "T(d[1])", "T(c[2,1,1])", "T(al)^0", "T(d[0,1])"])
def test_word_grammar_rejects(bad):
    with pytest.raises(WordError):
        parse_word(bad)


curves = st.one_of(
    st.builds(boundary_curve, st.integers(1, 9), st.integers(1, 9)),
    st.builds(lambda i, d, l: edge_core(i, i + d, l), st.integers(1, 8), st.integers(1, 3), st.integers(1, 4)),
    st.sampled_from(["al", "be", "a1", "a2", "a3", "a4", "de1", "de2", "de3", "de4"]).map(model_curve),
)
words = st.lists(st.tuples(curves, st.integers(-3, 3).filter(bool)), max_size=20).map(
    lambda fs: TwistWord(tuple(fs))
)


@given(words)
def test_word_serialization_round_trip(word):
    assert parse_word(format_word(word)) == word


# --- fractional plan -------------------------------------------------------------------


def test_plan_cyclic_is_integral():
    g, c = _spec_graph_cycle(FamilySpec("cyclic", chain=(2, 3, 4)))
    plan = fractional_plan(g, c)
    assert plan.is_integral()
    assert len(plan.entries) == sum(c.n) + len(g.edges)
    assert format_word(plan.as_word()).startswith("T(d[1,1])")


def test_plan_icosahedral_roots():
    g, c = _spec_graph_cycle(FamilySpec("icosahedral", "i", 2))
    plan = fractional_plan(g, c)
    roots = {e.annulus: e.root_order for e in plan.entries}
    assert roots[("edge", (4, 5, 1))] == 30
    assert roots[("binding", (1, 1))] == 2
    # edge (A5, A8): m = 6 and 3, three annuli each with root of order 6
    assert [roots[("edge", (5, 8, l))] for l in (1, 2, 3)] == [6, 6, 6]
    assert not plan.is_integral()
    with pytest.raises(WordError):
        plan.as_word()


def test_plan_single_vertex():
    g = PlumbingGraph((-4,))
    plan = fractional_plan(g, fundamental_cycle(g))
    assert len(plan.entries) == 4 and all(e.root_order == 1 for e in plan.entries)


def test_plan_entry_counts():
    for spec in default_grid(max_length=3)[::11]:
        g, c = _spec_graph_cycle(spec)
        plan = fractional_plan(g, c)
        import math

        expected = sum(c.n) + sum(math.gcd(c.m[i], c.m[j]) for i, j in g.edges)
        assert len(plan.entries) == expected


# --- catalog ---------------------------------------------------------------------------


def test_cyclic_word_example():
    word = catalog_word(FamilySpec("cyclic", chain=(2, 3)))
    assert format_word(word) == "T(d[1,1]) T(d[2,1]) T(d[2,2]) T(c[1,2,1])"


def test_dihedral_r2_b2_word():
    word = catalog_word(FamilySpec("dihedral", b=2, chain=(5,)))
    assert format_word(word) == (
        "T(d[1,1]) T(d[1,2]) T(d[1,3]) T(a1) T(a2) T(be) T(a1) T(a2) T(be)"
    )


def test_genus_one_words():
    assert format_word(catalog_word(FamilySpec("icosahedral", "i", 2))) == " ".join(["T(al) T(be)"] * 5)
    assert format_word(catalog_word(FamilySpec("tetrahedral", "i", 2))) == " ".join(["T(al) T(be)"] * 4)
    assert format_word(catalog_word(FamilySpec("octahedral", "i", 2))) == "T(be) " + " ".join(
        ["T(al) T(be)"] * 4
    )
    simple = catalog_word(FamilySpec("dihedral", b=2, chain=(2, 2, 2)))
    assert format_word(simple) == " ".join(["T(al) T(be)"] * 3) + " T(al)^2"


def test_flagged_readings_carry_notes():
    assert catalog_entry(FamilySpec("octahedral", "i", 4)).notes
    assert catalog_entry(FamilySpec("octahedral", "ii", 2)).notes
    assert catalog_entry(FamilySpec("icosahedral", "viii", 3)).notes
    assert catalog_entry(FamilySpec("dihedral", b=2, chain=(4, 2, 2))).notes
    assert not catalog_entry(FamilySpec("icosahedral", "i", 3)).notes


def test_octahedral_i_planar_word_uses_derivation():
    word = catalog_word(FamilySpec("octahedral", "i", 4))
    assert format_word(word) == "T(d[1,1])^4 T(d[4,1]) T(d[6,1])^3 T(d[7,1])^2"


def test_genus_zero_words_respect_binding_counts():
    for spec in default_grid(max_length=4):
        g, c = _spec_graph_cycle(spec)
        page = page_topology(g, c)
        if page.genus:
            continue
        word = catalog_word(spec)
        profile = word_boundary_profile(word, page, c)
        assert {cu for cu in profile if cu.kind == "boundary"} == {
            boundary_curve(i + 1, t) for i in range(len(g)) for t in range(1, c.n[i] + 1)
        }, spec.label()
        plan = fractional_plan(g, c)
        edges = {e.target.index[:2] for e in plan.entries if e.annulus[0] == "edge" and e.root_order == 1}
        assert {cu.index[:2] for cu in word.curves() if cu.kind == "edge"} <= edges


def test_planar_words_match_isotopy_oracle():
    for spec in default_grid(max_length=4):
        g, c = _spec_graph_cycle(spec)
        if page_topology(g, c).genus:
            continue
        fac = [(cu.kind, cu.index, e) for cu, e in catalog_word(spec).factors]
        expected, actual = planar_word_classes(g.weights, g.edges, c.n, fac)
        assert expected == actual, spec.label()


def test_genus_one_model_curves_fit_page():
    for family, variants in VARIANTS.items():
        for variant in variants:
            spec = FamilySpec(family, variant, 2)
            g, c = _spec_graph_cycle(spec)
            page = page_topology(g, c)
            model = HomologyModel(page.boundary_count)
            for cu in catalog_word(spec).curves():
                if cu.kind == "model":
                    model.class_of(cu)


# --- homology ----------------------------------------------------------------------------


def test_relations_hold():
    report = verify_relations()
    assert len(report) == 7
    assert all(report.values()), report


def test_relation_library_shapes():
    rels = relation_library()
    assert format_word(rels[0].left) == "T(de)"
    assert format_word(rels[0].right) == " ".join(["T(al) T(be)"] * 6)
    assert format_word(rels[2].right) == " ".join(["T(a1) T(a2) T(a2) T(be)"] * 3)
    assert rels[-1].model.boundary_count == 4 and rels[-1].model.rank == 5


def test_two_holed_right_sides_agree():
    rels = {r.name: r for r in relation_library()}
    model = HomologyModel(2)
    a = homology_action(rels["two-holed (a)"].right, model)
    b = homology_action(rels["two-holed (b)"].right, model)
    c = homology_action(rels["two-holed (c)"].right, model)
    assert np.array_equal(a, b) and np.array_equal(b, c)
    assert np.array_equal(a, np.eye(3, dtype=np.int64))


def test_boundary_twist_is_identity():
    assert np.array_equal(homology_action(parse_word("T(de)"), HomologyModel(1)), np.eye(2))


def test_ab_has_order_six():
    model = HomologyModel(1)
    step = homology_action(parse_word("T(al) T(be)"), model)
    power = np.eye(2, dtype=np.int64)
    orders = []
    for k in range(1, 7):
        power = step @ power
        if np.array_equal(power, np.eye(2)):
            orders.append(k)
    assert orders == [6]
    assert abs(int(np.trace(step))) == 1


def test_class_tables():
    m = HomologyModel(3)
    assert m.labels == ("a", "b", "d1", "d2")
    assert m.class_of(model_curve("a3")).tolist() == [1, 0, 1, 1]
    assert m.class_of(model_curve("de3")).tolist() == [0, 0, -1, -1]
    total = sum(m.class_of(model_curve(f"de{k}")) for k in (1, 2, 3))
    assert not total.any()
    assert not HomologyModel(1).class_of(model_curve("de")).any()
    with pytest.raises(WordError):
        m.class_of(model_curve("a4"))
    with pytest.raises(WordError):
        m.class_of(boundary_curve(1, 1))
    with pytest.raises(WordError):
        HomologyModel(2).class_of(model_curve("de"))


model_words = st.lists(
    st.tuples(st.sampled_from(["al", "be", "a1", "a2", "a3", "a4", "de1", "de2", "de3"]), st.integers(-2, 3)),
    max_size=20,
).map(lambda fs: TwistWord(tuple((model_curve(n), e) for n, e in fs if e)))


@settings(max_examples=100)
@given(model_words, model_words)
def test_action_is_a_homomorphism(u, v):
    model = HomologyModel(4)
    left = homology_action(u * v, model)
    assert np.array_equal(left, homology_action(v, model) @ homology_action(u, model))


@settings(max_examples=100)
@given(model_words, st.integers(1, 4))
def test_action_preserves_pairing(word, k):
    model = HomologyModel(k) if k > 1 else HomologyModel(4)
    try:
        A = homology_action(word, model)
    except WordError:
        return
    J = model.pairing
    assert np.array_equal(A.T @ J @ A, J)


# --- boundary profile --------------------------------------------------------------------


def test_profile_examples():
    spec = FamilySpec("cyclic", chain=(2, 3))
    g, c = _spec_graph_cycle(spec)
    page = page_topology(g, c)
    profile = word_boundary_profile(catalog_word(spec), page)
    assert profile == {boundary_curve(1, 1): 1, boundary_curve(2, 1): 1, boundary_curve(2, 2): 1}
    assert len(profile) == page.boundary_count == 3

    e8 = FamilySpec("icosahedral", "i", 2)
    g, c = _spec_graph_cycle(e8)
    assert word_boundary_profile(catalog_word(e8), page_topology(g, c)) == {}
    assert word_boundary_profile(TwistWord(), PageTopology(0, 1, 1)) == {}


def test_profile_rejects_missing_binding():
    spec = FamilySpec("cyclic", chain=(2, 3))
    g, c = _spec_graph_cycle(spec)
    page = page_topology(g, c)
    with pytest.raises(WordError):
        word_boundary_profile(parse_word("T(d[1,2])"), page, c)
    with pytest.raises(WordError):
        word_boundary_profile(parse_word("T(d[1,1]) T(d[2,1]) T(d[2,2]) T(d[3,1])"), page)


def test_curve_validation():
    with pytest.raises(WordError):
        CurveRef("boundary", (1,))
    with pytest.raises(WordError):
        CurveRef("model", name="gamma")
    with pytest.raises(WordError):
        CurveRef("loop", (1, 1))
