import pytest
from hypothesis import given, settings, strategies as st

from collage import corpus
from collage.diagram import OneCellPath, SlicedDiagram, identity, normalize
from collage.oracles import hom_count, small_paths
from collage.presentations import (FDOWN, FUP, CentralTypingError, ResourceLimitExceeded,
                                   box_segments, cap_name, chosen_graph, collage_of, cup_name,
                                   hom_enumerate, syn_functor_box, syn_internal,
                                   typecheck_central, unit_iso_check)
from collage.sig import (BimodularGraph, Edge, FunctorBoxSignature, OneGen, Polygraph, TwoGraph,
                         validate_signature)

from conftest import diagrams

SHARED = corpus.load("shared_state").theory("Shared")


def test_collage_of_empty():
    b = collage_of(BimodularGraph())
    assert b.graph.zero_cells == ("M", "N")
    assert b.graph.one_generators == () and b.graph.two_generators == ()


def test_collage_of_one_object_each():
    g = BimodularGraph(("P",), ("Q",), ("C",))
    b = collage_of(g)
    assert len(b.graph.zero_cells) == 2
    assert {(o.name, o.src, o.tgt) for o in b.graph.one_generators} == \
        {("P", "M", "M"), ("Q", "N", "N"), ("C", "M", "N")}


def test_collage_of_shared_state_central_edges():
    g = SHARED.signature
    graph = collage_of(g).graph
    assert validate_signature(graph) == []
    for e in g.central_edges:
        gen = graph.gen(e.name)
        assert (gen.src, gen.tgt) == ("M", "N")
        typing = typecheck_central(graph.generator(e.name), g)
        for side in (typing.domain, typing.codomain):
            assert side[1] == "S"
        assert sum(w.name == "S" for w in gen.dom) == sum(w.name == "S" for w in gen.cod) == 1


def test_typecheck_central_generator_factorization():
    g = SHARED.signature
    t = typecheck_central(SHARED.graph.generator("getL"), g)
    assert t.domain == ((), "S", ()) and t.codomain == (("V",), "S", ())


def test_no_central_wire():
    g = SHARED.signature
    with pytest.raises(CentralTypingError) as err:
        typecheck_central(SHARED.graph.generator("incL"), g)
    assert err.value.reason == "no central wire"


def test_semaphore_race_is_rejected():
    t = corpus.load("semaphore").theory("Semaphore")
    diags = t.check()
    assert [(d.invariant, d.item) for d in diags] == [("central typing", "race")]
    assert "central state mismatch" in diags[0].message
    typecheck_central(t.diagram("sequential"), t.signature)


@st.composite
def bimodular_graphs(draw):
    left, right, center = ("L1", "L2"), ("R1",), ("C1", "C2")
    nl, nr, nc = draw(st.integers(0, 3)), draw(st.integers(0, 3)), draw(st.integers(0, 3))
    pick = lambda pool, k: tuple(draw(st.lists(st.sampled_from(pool), max_size=k)))
    le = tuple(Edge(f"l{i}", pick(left, 2), pick(left, 2)) for i in range(nl))
    re = tuple(Edge(f"r{i}", pick(right, 2), pick(right, 2)) for i in range(nr))
    ce = tuple(Edge(f"c{i}", pick(left, 1) + (draw(st.sampled_from(center)),) + pick(right, 1),
                    pick(left, 1) + (draw(st.sampled_from(center)),) + pick(right, 1))
               for i in range(nc))
    return BimodularGraph(left, right, center, le, re, ce)


@settings(max_examples=100, deadline=None)
@given(bimodular_graphs())
def test_collage_never_has_reverse_wires_and_unit_is_iso(g):
    b = collage_of(g)
    assert not [o for o in b.graph.one_generators if (o.src, o.tgt) == ("N", "M")]
    assert validate_signature(g) == [] and validate_signature(b.graph) == []
    report = unit_iso_check(g)
    assert report["ok"], report["mismatches"]
    assert chosen_graph(b) == g


def test_unit_iso_counts():
    assert unit_iso_check(BimodularGraph())["ok"]
    g = BimodularGraph(("P",), ("Q",), ("C",),
                       (Edge("l1", ("P",), ("P",)), Edge("l2", (), ("P",))),
                       (Edge("r1", ("Q",), ()), Edge("r2", ("Q",), ("Q",)), Edge("r3", (), ())),
                       (Edge("c", ("P", "C"), ("C", "Q")),))
    report = unit_iso_check(g)
    assert report["ok"]
    assert report["counts"] == {"left": (2, 2), "central": (1, 1), "right": (3, 3)}


def test_unit_iso_shared_state_direct_count():
    g = SHARED.signature
    report = unit_iso_check(g)
    graph = collage_of(g).graph
    by_cells = {}
    for e in graph.two_generators:
        gen = graph.gen(e.name)
        by_cells.setdefault((gen.src, gen.tgt), []).append(e.name)
    assert report["counts"]["left"] == (len(g.left_edges), len(by_cells[("M", "M")]))
    assert report["counts"]["right"] == (len(g.right_edges), len(by_cells[("N", "N")]))
    assert report["counts"]["central"] == (4, len(by_cells[("M", "N")]))


COLLAGE = SHARED.graph


@settings(max_examples=150, deadline=None)
@given(diagrams(COLLAGE, small_paths(COLLAGE, 3), max_layers=4))
def test_typecheck_iff_endpoints_are_m_and_n(d):
    # paths in the collage are composable, so the factorization exists exactly
    # when the boundary runs from M to N
    ok = True
    try:
        typecheck_central(d, SHARED.signature)
    except CentralTypingError:
        ok = False
    assert ok == ((d.source, d.target) == ("M", "N"))


# functor boxes

def test_syn_functor_box_empty():
    pres = syn_functor_box(FunctorBoxSignature())
    g = pres.graph
    assert g.zero_cells == ("A", "X")
    assert [o.name for o in g.one_generators] == [FUP, FDOWN]
    assert [e.name for e in g.two_generators] == ["n", "e"]
    assert [e.name for e in pres.equations] == ["snake_Fdown", "snake_Fup"]


def test_inbox_edge_codomain():
    s = FunctorBoxSignature(("A",), ("Y",), in_box_edges=(Edge("u", ("A",), ("Y",)),))
    g = syn_functor_box(s).graph
    assert g.gen("u").cod == (g.wire(FUP), g.wire("Y"), g.wire(FDOWN))


def test_snake_composites_have_identity_boundaries():
    pres = syn_functor_box(FunctorBoxSignature())
    for eq in pres.equations:
        assert eq.lhs.domain == eq.lhs.codomain == eq.rhs.domain
        assert len(eq.lhs) == 2 and len(eq.rhs) == 0


def test_box_wires_are_bracketed():
    sig = corpus.load("functorbox").theory("Boxes").signature
    g = syn_functor_box(sig).graph
    for e in sig.in_box_edges:
        cod = [w.name for w in g.gen(e.name).cod]
        assert cod.count(FUP) == cod.count(FDOWN) == 1 and cod[0] == FUP and cod[-1] == FDOWN
    for e in sig.out_box_edges:
        dom = [w.name for w in g.gen(e.name).dom]
        assert dom.count(FUP) == dom.count(FDOWN) == 1 and dom[0] == FUP and dom[-1] == FDOWN


def test_box_segments():
    g = syn_functor_box(FunctorBoxSignature((), ("x",))).graph
    assert box_segments(g.path([FUP, "x", FDOWN, FUP, FDOWN])) == [(1, 2), (4, 4)]
    with pytest.raises(Exception):
        box_segments(g.path([FUP, FUP], start="A"))


def test_reserved_names():
    with pytest.raises(ValueError):
        syn_functor_box(FunctorBoxSignature(("n",)))


# internal diagrams

def test_syn_internal_empty():
    pres = syn_internal(Polygraph())
    assert [e.name for e in pres.graph.two_generators] == ["n1", "e1", "n2", "e2"]
    assert [r.name for r in pres.rules] == ["alpha1", "beta1", "alpha2", "beta2",
                                            "u_i", "v_i", "u_j", "v_j"]


def test_syn_internal_one_object():
    pres = syn_internal(Polygraph(("A",)))
    g = pres.graph
    assert g.has_wire("A") and g.has_gen(cap_name("A")) and g.has_gen(cup_name("A"))
    assert [w.name for w in g.gen(cup_name("A")).cod] == ["L", "A", "R"]
    names = [r.name for r in pres.rules]
    assert "c_A" in names and "i_A" in names


def test_internal_rule_boundaries_validate():
    p = corpus.load("comb").theory("Comb").signature
    pres = syn_internal(p)
    assert validate_signature(pres.graph) == []
    for r in pres.rules:
        assert (r.lhs.domain, r.lhs.codomain) == (r.rhs.domain, r.rhs.codomain)
        for side in (r.lhs, r.rhs):
            for _, gen in side.steps:
                assert pres.graph.gen(gen.name) == gen


# enumeration

def test_hom_enumerate_identity_only():
    p = OneCellPath("X", ())
    g = TwoGraph(("X",), (OneGen("A", "X", "X"),), ())
    assert list(hom_enumerate(g, p, p, 0)) == [identity(p)]


def test_hom_enumerate_single_generator():
    g = TwoGraph(("X",), (OneGen("A", "X", "X"), OneGen("B", "X", "X")),
                 (Edge("f", ("A",), ("B",)),))
    res = hom_enumerate(g, g.path(["A"]), g.path(["B"]), 1)
    assert list(res) == [g.generator("f")] and not res.bounded


def test_hom_enumerate_matches_brute_force(test_graph):
    rep = hom_count(test_graph, max_layers=3)
    assert rep.ok and rep.checked > 50


def test_hom_enumerate_with_equations_is_bounded():
    doc = corpus.load("buffer")
    t = doc.theory("Buffer")
    g = t.graph
    p = g.path(["C"])
    free = hom_enumerate(g, p, p, 2)
    quotiented = hom_enumerate(g, p, p, 2, equations=t.equations)
    assert quotiented.bounded
    assert len(quotiented) < len(free)
    assert identity(p) in quotiented


def test_hom_enumerate_resource_limit(test_graph):
    p = test_graph.path(["a", "a"])
    with pytest.raises(ResourceLimitExceeded):
        hom_enumerate(test_graph, p, p, 6, limit=50)
