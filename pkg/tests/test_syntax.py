import pytest
from hypothesis import given, settings

from collage import corpus
from collage.fincat import check_monoidal
from collage.oracles import small_paths
from collage.semantics import build_model, eval_monoidal, interpretation_of
from collage.syntax import (ArityMismatch, CollageSyntaxError, UnknownIdentifier, format_diagram,
                            parse_diagram, parse_file, tokenize)

from conftest import diagrams

TEST_DOC = corpus.load("twograph")
TEST = TEST_DOC.theory("Test")


def test_tokenize_positions_and_comments():
    toks = tokenize("-- note\nedge f : A -> B;")
    assert [t.text for t in toks] == ["edge", "f", ":", "A", "->", "B", ";", ""]
    assert (toks[0].pos.line, toks[0].pos.col) == (2, 1)
    assert toks[4].kind == "punct"


def test_unexpected_character():
    with pytest.raises(CollageSyntaxError):
        tokenize("edge f ! A")


def test_identity_forms():
    assert parse_diagram("id(@Y)", TEST).domain.start == "Y"
    assert parse_diagram("id(a, b)", TEST).domain.names == ("a", "b")
    assert parse_diagram("a", TEST) == parse_diagram("id(a)", TEST)
    with pytest.raises(ArityMismatch):
        parse_diagram("id(a, d)", TEST)
    with pytest.raises(UnknownIdentifier):
        parse_diagram("id(@Z)", TEST)


def test_whiskering_and_commas_agree():
    assert parse_diagram("(f | a) ; (b | f)", TEST) == parse_diagram("(f, a) ; (b, f)", TEST)
    assert parse_diagram("a | cup", TEST).steps[0][0] == 1


def test_diagram_references_and_cycles():
    doc = parse_file("""
        monoidal theory T {
          objects: A;
          edge f : A -> A;
          diagram one : f;
          diagram two : one ; one;
          diagram loop : loop ; f;
        }""")
    t = doc.theory("T")
    assert len(t.diagram("two")) == 2
    with pytest.raises(CollageSyntaxError):
        t.diagram("loop")


def test_equation_boundary_mismatch():
    with pytest.raises(ArityMismatch):
        parse_file("monoidal theory T { objects: A; edge f : A -> A, A; equation e : f = A; }")


def test_unknown_names():
    with pytest.raises(UnknownIdentifier):
        parse_diagram("nothing", TEST)
    with pytest.raises(UnknownIdentifier):
        parse_file("interpretation I of Nope in Z { }")


def test_semicolon_ends_declarations_only_before_a_new_one():
    doc = parse_file("monoidal theory T { objects: A; edge f : A -> A;"
                     " diagram d : f ; f ; f; diagram e : f; }")
    assert len(doc.theory("T").diagram("d")) == 3


def test_find_diagram_qualified_and_ambiguous():
    doc = parse_file("""
        monoidal theory P { objects: A; edge f : A -> A; diagram d : f; }
        monoidal theory Q { objects: A; edge g : A -> A; diagram d : g; }""")
    theory, d = doc.find_diagram("Q.d")
    assert theory.name == "Q" and d.steps[0][1].name == "g"
    with pytest.raises(UnknownIdentifier):
        doc.find_diagram("d")


def test_table_model_declaration():
    doc = parse_file("""
        monoidal theory T { objects: A; edge f : A -> A; diagram ff : f ; f; }
        model Flip {
          objects: o;
          morphism i : o -> o; morphism s : o -> o;
          identity o = i;
          compose i i = i; compose i s = s; compose s i = s; compose s s = i;
          unit: o;
          tensor o o = o;
          tensor i i = i; tensor i s = s; tensor s i = s; tensor s s = i;
        }
        interpretation J of T in Flip { A = o; f = s; }""")
    model = build_model(doc.models["Flip"])
    assert check_monoidal(model) == []
    interp = interpretation_of(doc, doc.interpretations["J"])
    t = doc.theory("T")
    assert eval_monoidal(t.diagram("ff"), interp).value == "i"
    assert eval_monoidal(t.graph.generator("f"), interp).value == "s"


@settings(max_examples=150, deadline=None)
@given(diagrams(TEST.graph, small_paths(TEST.graph, 2), max_layers=5))
def test_format_parse_round_trip(d):
    again = parse_diagram(format_diagram(d), TEST)
    assert again == d
