import pytest
from hypothesis import given, settings, strategies as st

from collage import corpus
from collage.sig import (BimodularGraph, Edge, FunctorBoxSignature, OneGen, Polygraph, TwoGraph,
                         validate_signature)
from collage.syntax import (CollageSyntaxError, UnknownIdentifier, format_theory, parse_file,
                            parse_signature)


@pytest.mark.parametrize("kind, cls", [("bimodular", BimodularGraph), ("monoidal", Polygraph),
                                       ("functorbox", FunctorBoxSignature)])
def test_empty_theory_block(kind, cls):
    sig, eqs = parse_signature(f"{kind} theory E {{ }}")
    assert sig == cls() and len(eqs) == 0
    assert validate_signature(sig) == []


def test_shared_state_signature():
    sig, eqs = parse_signature(corpus.source("shared_state"))
    assert isinstance(sig, BimodularGraph)
    assert sig.center_objects == ("S",)
    assert [e.name for e in sig.central_edges] == ["getL", "putL", "getR", "putR"]
    assert sig.central_edges[0].dom == ("S",) and sig.central_edges[0].cod == ("V", "S")
    assert len(eqs) == 9
    assert validate_signature(sig) == []


def test_undeclared_object_is_unknown_identifier():
    src = "bimodular theory T { left objects: V; center objects: S; central edge g : S -> Q, S; }"
    with pytest.raises(UnknownIdentifier) as err:
        parse_signature(src)
    assert err.value.pos is not None and "Q" in str(err.value)


def test_syntax_error_reports_line_and_column():
    with pytest.raises(CollageSyntaxError) as err:
        parse_file("bimodular theory T {\n  left objects V;\n}")
    assert (err.value.pos.line, err.value.pos.col) == (2, 16)


def test_central_wire_multiplicity():
    g = BimodularGraph(center_objects=("S", "T"),
                       central_edges=(Edge("bad", ("S", "T"), ("S",)),))
    diags = validate_signature(g)
    assert len(diags) == 1
    assert diags[0].invariant == "central wire multiplicity" and diags[0].item == "bad"


def test_central_wire_order():
    g = BimodularGraph(left_objects=("V",), right_objects=("W",), center_objects=("S",),
                       central_edges=(Edge("bad", ("W", "S"), ("S",)),))
    assert [d.invariant for d in validate_signature(g)] == ["central wire order"]


def test_inbox_edge_with_box_domain():
    s = FunctorBoxSignature(plain_objects=("a",), box_objects=("x",),
                            in_box_edges=(Edge("u", ("x",), ("x",)),))
    diags = validate_signature(s)
    assert len(diags) == 1 and diags[0].invariant == "in-box edge boundary"


def test_two_graph_diagnostics():
    g = TwoGraph(("X", "Y"), (OneGen("a", "X", "X"), OneGen("u", "X", "Y")),
                 (Edge("bad", ("a",), ("u",)), Edge("gap", ("u", "u"), ())))
    invariants = sorted(d.invariant for d in validate_signature(g))
    assert invariants == ["composable boundary", "parallel boundary"]


def test_duplicate_names():
    p = Polygraph(("A", "A"), (Edge("f", ("A",), ("A",)), Edge("f", (), ())))
    assert [d.invariant for d in validate_signature(p)] == ["unique names", "unique names"]


@pytest.mark.parametrize("name", sorted(corpus.FILES))
def test_parse_print_round_trip(name):
    doc = corpus.load(name)
    for t in doc.theories.values():
        again = parse_file(format_theory(t)).theory(t.name)
        assert again.signature == t.signature
        assert again.equations == t.equations
        if name == "semaphore":
            assert set(t.diagrams) - set(again.diagrams) == {"race"}
        else:
            assert set(again.diagrams) == set(t.diagrams)
        for n in again.diagrams:
            assert again.diagram(n) == t.diagram(n)


EDGES = [Edge("getL", ("S",), ("V", "S")), Edge("two", ("S", "S"), ("S",)),
         Edge("putR", ("S", "W"), ("S",)), Edge("wrong", ("W", "S"), ("S",)),
         Edge("none", ("V",), ("V",))]


@settings(max_examples=60, deadline=None)
@given(st.permutations(EDGES))
def test_validation_is_order_independent(edges):
    base = BimodularGraph(("V",), ("W",), ("S",), (), (), tuple(EDGES))
    shuffled = BimodularGraph(("V",), ("W",), ("S",), (), (), tuple(edges))
    assert validate_signature(base) == validate_signature(shuffled)
    assert len(validate_signature(base)) == 4
