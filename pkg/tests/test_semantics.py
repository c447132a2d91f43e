import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from collage import corpus
from collage.diagram import OneCellPath, normalize
from collage.fincat import models
from collage.oracles import small_paths
from collage.semantics import (Interpretation, MissingInterpretation, SemanticTypeError,
                               check_interpretation, comb_eval, distinct_witness, eval_collage,
                               eval_functor_box, eval_monoidal, evaluate, interpretations_for,
                               result_key, soundness_check)

from conftest import diagrams

SHARED_DOC = corpus.load("shared_state")
SHARED = SHARED_DOC.theory("Shared")
COUNTER = interpretations_for(SHARED_DOC, "Shared")[0]
BOX_DOC = corpus.load("functorbox")
BOXES = BOX_DOC.theory("Boxes")
PAIR_DOC = corpus.load("monoidal")
PAIR = PAIR_DOC.theory("Pair")
COMB_DOC = corpus.load("comb")
COMB = COMB_DOC.theory("Comb")

EDGES = ("getL", "putL", "getR", "putR", "incL", "discardL", "incR", "discardR")


def z3_sum(d, values):
    # in the regular Z/3 model every layer is its generator's residue; composites add
    return sum(values[g.name] for _, g in d.steps) % 3


def test_counter_values_solve_the_equations_by_hand():
    v = {k: int(COUNTER.mor(k)) for k in EDGES}
    for eq in SHARED.equations:
        assert z3_sum(eq.lhs, v) == z3_sum(eq.rhs, v), eq.name


def test_counter_is_one_of_the_exhaustive_solutions():
    sols = [vals for vals in product(range(3), repeat=len(EDGES))
            if all(z3_sum(eq.lhs, dict(zip(EDGES, vals))) == z3_sum(eq.rhs, dict(zip(EDGES, vals)))
                   for eq in SHARED.equations)]
    # inc = 0 and put = discard = -get on each side
    assert len(sols) == 9
    assert tuple(int(COUNTER.mor(k)) for k in EDGES) in sols


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=len(EDGES), max_size=len(EDGES)))
def test_collage_evaluation_matches_residue_sums(vals):
    i = Interpretation(COUNTER.model, dict(COUNTER.objects),
                       {k: str(x) for k, x in zip(EDGES, vals)})
    values = dict(zip(EDGES, vals))
    for eq in SHARED.equations:
        for side in (eq.lhs, eq.rhs):
            if (side.source, side.target) == ("M", "N"):
                assert int(eval_collage(side, SHARED.signature, i).value) == z3_sum(side, values)


def test_race_diagrams_in_counter():
    vals = {evaluate(SHARED, SHARED.diagram(f"race{k}"), COUNTER).value for k in range(5)}
    assert vals == {"0"}


@settings(max_examples=100, deadline=None)
@given(diagrams(PAIR.graph, small_paths(PAIR.graph, 3), max_layers=5))
def test_evaluation_is_invariant_under_normalization(d):
    for i in interpretations_for(PAIR_DOC, "Pair"):
        assert eval_monoidal(d, i).value == eval_monoidal(normalize(d), i).value


def test_pair_by_hand():
    i = interpretations_for(PAIR_DOC, "Pair")[1]
    assert {evaluate(PAIR, PAIR.diagram(n), i).value for n in ("fg", "gf", "both")} == {"0"}
    assert evaluate(PAIR, PAIR.diagram("wires"), i).value == "0"


@pytest.mark.parametrize("iname", ["BoxesZ2", "BoxesHalf"])
def test_functor_box_merges_are_invisible(iname):
    (i,) = [x for x in interpretations_for(BOX_DOC, "Boxes") if x.name == iname]
    val = lambda n: eval_functor_box(BOXES.diagram(n), BOXES.signature, i).value
    assert val("three_left") == val("three_right")
    assert val("unit_left") == val("unit_right") == val("box_x")
    assert val("zigzag_up3") == val("zigzag_down3") == val("box_x")
    assert val("pair_late") == val("pair_early")


def test_box_x_is_the_image_identity():
    F = models.ceil_half(4)
    (i,) = [x for x in interpretations_for(BOX_DOC, "Boxes") if x.name == "BoxesHalf"]
    # F(3) = 2, so the identity on a box around x is the identity on 2
    assert eval_functor_box(BOXES.diagram("box_x"), BOXES.signature, i).value == \
        F.target.id(F.obj("3"))


@pytest.mark.parametrize("name", corpus.trace_names())
def test_every_corpus_trace_is_sound(name):
    t = corpus.load_trace_file(name)
    doc = corpus.load(t.file)
    interps = interpretations_for(doc, t.theory.name)
    report = soundness_check(t.theory, t.lhs, t.rhs, t.trace, interps)
    assert report.ok, report.to_json()
    assert set(report.verdicts) == {i.name for i in interps}


def test_soundness_catches_a_wrong_endpoint():
    t = corpus.load_trace_file("race")
    report = soundness_check(t.theory, t.lhs, SHARED.diagram("race3"), t.trace, [COUNTER])
    assert not report.trace_ok and not report.ok


def test_comb_ways_agree_over_z2():
    V = models.delooping(2)
    objs = dict.fromkeys("AMBCD", "*")
    for f, h, g in product(V.morphisms, repeat=3):
        r = comb_eval(f, h, g, V, objs)
        assert r.agree and r.direct == V.compose(f, g, h)


def test_comb_ways_agree_over_the_poset():
    V = models.poset_trunc(3)
    rng = random.Random(7)
    done = 0
    while done < 20:
        A, M, B, C, D = (str(rng.randint(0, 3)) for _ in range(5))
        fs, hs, gs = V.hom(A, V.tensor(M, B)), V.hom(V.tensor(M, C), D), V.hom(B, C)
        if not (fs and hs and gs):
            continue
        r = comb_eval(fs[0], hs[0], gs[0], V, dict(zip("AMBCD", (A, M, B, C, D))))
        assert r.agree
        done += 1


def test_corpus_comb_plugs_to_the_filled_diagram():
    for i in interpretations_for(COMB_DOC, "Comb"):
        comb = evaluate(COMB, COMB.diagram("comb"), i)
        filled = evaluate(COMB, COMB.diagram("filled"), i)
        assert len(comb.sockets) == 1 and not filled.sockets
        assert comb.plug([i.mor("g")]) == result_key(filled)[2]


def test_plug_count_must_match():
    i = interpretations_for(COMB_DOC, "Comb")[0]
    with pytest.raises(Exception):
        evaluate(COMB, COMB.diagram("comb"), i).plug([])


def test_missing_entries_are_listed():
    i = Interpretation(COUNTER.model, dict(COUNTER.objects),
                       {k: v for k, v in COUNTER.morphisms.items() if k != "incR"})
    assert i.gaps(SHARED.diagram("race4")) == ["incR"]
    with pytest.raises(MissingInterpretation) as err:
        evaluate(SHARED, SHARED.diagram("race4"), i)
    assert "incR" in str(err.value)


def test_mistyped_generator():
    i = Interpretation(models.poset_trunc(2), {"a": "1"}, {"f": "2_1", "g": "1_1"})
    assert [d.item for d in check_interpretation(PAIR, i)] == ["f"]
    with pytest.raises(SemanticTypeError):
        eval_monoidal(PAIR.diagram("fg"), i)


def test_distinct_witness_separates_by_model():
    i = interpretations_for(PAIR_DOC, "Pair")[1]
    w = distinct_witness(PAIR, [i])
    f = PAIR.graph.generator("f")
    g = PAIR.graph.generator("g")
    assert w(f, g) and w(f, f) is None


def test_identity_on_the_empty_path():
    i = interpretations_for(PAIR_DOC, "Pair")[0]
    from collage.diagram import identity
    assert eval_monoidal(identity(OneCellPath("*")), i).value == i.model.id(i.model.unit)
