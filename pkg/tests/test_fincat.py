from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from collage.fincat import (MAX_OBJECTS, CompositionMismatch, FinBimodularProfunctor, FinCategory,
                            FinLaxMonoidalFunctor, FinMonoidalCategory, NotWellDefined,
                            SizeLimitExceeded, TableError, check_bimodular, check_category,
                            check_lax, check_monoidal, check_profunctor, check_strength,
                            closure_classes, coend, coend_oracle, compose_pointed_profunctors,
                            composite_classes, hom_profunctor, kleisli_promonad,
                            outer_strength_violations, promonad_law_violations, quotient,
                            tensor_bimodular_profunctors)
from collage.fincat import models
from collage.fincat.instances import random_coend_instance, random_tensor_instance


def laws(diags):
    return {d.invariant for d in diags}


# categories and monoidal structure

@pytest.mark.parametrize("m", [models.delooping(2), models.delooping(3), models.discrete_cyclic(3),
                               models.poset_trunc(3), models.poset_trunc(2, "le"),
                               models.unit_category(),
                               models.product(models.delooping(2), models.poset_trunc(1))])
def test_builtin_models_are_monoidal(m):
    assert check_category(m.category) == []
    assert check_monoidal(m) == []


def test_poset_hom_sets():
    p = models.poset_trunc(3)
    assert p.hom("3", "1") == ("3_1",) and p.hom("1", "3") == ()
    assert p.tensor("2", "3") == "3"
    assert len(p.morphisms) == 10


def test_corrupted_tensor_breaks_associativity():
    p = models.poset_trunc(3)
    tobj = dict(p.tensor_objects)
    tobj["1", "1"] = "3"
    tmor = dict(p.tensor_morphisms)
    tmor["1_1", "1_1"] = "3_3"
    bad = FinMonoidalCategory(p.category, p.unit, tobj, tmor)
    assert "associativity" in laws(check_monoidal(bad))


def test_missing_composite_is_reported():
    c = models.delooping(2).category
    comp = dict(c.composition)
    del comp["1", "1"]
    broken = FinCategory(c.objects, c.morphisms, c.identities, comp)
    assert laws(check_category(broken))


def test_size_guard():
    objs = [str(i) for i in range(MAX_OBJECTS + 1)]
    with pytest.raises(SizeLimitExceeded):
        FinCategory(objs, {f"id{o}": (o, o) for o in objs}, {o: f"id{o}" for o in objs},
                    {(f"id{o}", f"id{o}"): f"id{o}" for o in objs})


# lax monoidal functors

def test_identity_and_ceil_half_are_lax():
    assert check_lax(models.identity_lax(models.delooping(2))) == []
    assert check_lax(models.ceil_half(4)) == []


def _mutated(F, **tables):
    kw = dict(objects=F.objects, morphisms=F.morphisms, epsilon=F.epsilon, mu=F.mu)
    kw.update(tables)
    return FinLaxMonoidalFunctor(F.source, F.target, kw["objects"], kw["morphisms"],
                                 kw["epsilon"], kw["mu"])


def test_lax_mutations_name_the_broken_law():
    F = models.ceil_half(4)
    mu = dict(F.mu)
    del mu["1", "1"]
    assert laws(check_lax(_mutated(F, mu=mu))) == {"totality"}
    mu = dict(F.mu)
    mu["1", "1"] = "0_0"
    assert laws(check_lax(_mutated(F, mu=mu))) == {"mu typing"}
    assert laws(check_lax(_mutated(F, epsilon="1_1"))) == {"epsilon typing"}
    G = models.identity_lax(models.delooping(2))
    mors = dict(G.morphisms)
    mors["0"] = "1"
    assert "functoriality" in laws(check_lax(_mutated(G, morphisms=mors)))
    mu = dict(G.mu)
    mu["*", "*"] = "1"
    assert {"left unitality", "right unitality"} <= laws(check_lax(_mutated(G, mu=mu)))


def test_nonidentity_epsilon_breaks_unitality():
    G = models.identity_lax(models.delooping(3))
    assert laws(check_lax(_mutated(G, epsilon="1"))) == {"left unitality", "right unitality"}


# coends

def test_quotient_and_closure_agree_by_hand():
    els = list(range(6))
    pairs = [(0, 1), (2, 3), (3, 4)]
    q = quotient(els, pairs)
    assert q.classes == ((0, 1), (2, 3, 4), (5,))
    assert q.partition() == closure_classes(els, pairs).partition()
    assert q.rep(4) == 2 and q.same(0, 1)


def test_coend_on_a_discrete_category_is_the_diagonal():
    d = models.discrete_cyclic(3).category
    res = coend(d, lambda a, b: [(a, b, i) for i in range(2)] if a == b else [],
                lambda m, x: x, lambda x, m: x)
    assert len(res) == 6


def test_trace_coend_is_conjugacy_classes():
    # \int^* Z/n(*, *) identifies g;h with h;g, so the classes are conjugacy classes
    for n in (2, 3, 4):
        c = models.delooping(n).category
        res = coend(c, lambda a, b: list(c.hom(b, a)),
                    lambda m, x: c.then(m, x), lambda x, m: c.then(x, m))
        assert len(res) == n


def test_coend_of_a_single_orbit():
    # Z/2 acting on {0, 1} by swapping on one side only: everything is glued
    c = models.delooping(2).category
    res = coend(c, lambda a, b: [0, 1],
                lambda m, x: x if m == "0" else 1 - x, lambda x, m: x)
    assert len(res) == 1


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_coend_matches_closure_oracle(seed):
    args = random_coend_instance(seed)
    assert coend(*args).partition() == coend_oracle(*args).partition()


# bimodular categories and profunctors

REG2 = models.regular(models.delooping(2))
REGP = models.regular(models.poset_trunc(2))


@pytest.mark.parametrize("b", [REG2, REGP, models.regular(models.delooping(3))])
def test_regular_is_bimodular(b):
    assert check_bimodular(b) == []


def test_hom_profunctor_laws():
    for b in (REG2, REGP):
        h = hom_profunctor(b)
        assert check_profunctor(h) == [] and check_strength(h) == []


def test_perturbed_strength_fails():
    h = hom_profunctor(REG2)
    e0 = next(h.elements())
    other = [e for e in h.elements() if e != e0][0]
    tl = dict(h.tl)
    tl["*", e0] = other
    bad = FinBimodularProfunctor(h.source, h.target, h.values, h.lmap, h.rmap, tl, h.tr)
    assert "left strength unitality" in laws(check_strength(bad))


@pytest.mark.parametrize("b", [REG2, REGP])
def test_hom_is_a_unit_for_composition(b):
    C = b.carrier
    h = hom_profunctor(b)
    hh = compose_pointed_profunctors(h, h)
    for x, z in product(C.objects, repeat=2):
        assert len(hh.at(x, z)) == len(C.hom(x, z))
    assert check_strength(hh) == []


def test_composition_associates_up_to_class_count():
    h = hom_profunctor(REGP)
    C = REGP.carrier
    left = compose_pointed_profunctors(compose_pointed_profunctors(h, h), h)
    right = compose_pointed_profunctors(h, compose_pointed_profunctors(h, h))
    for x, z in product(C.objects, repeat=2):
        assert len(left.at(x, z)) == len(right.at(x, z)) == len(C.hom(x, z))
    assert composite_classes(h, h, "2", "0").classes


def test_points_must_meet():
    pt = REGP.carrier
    h1 = hom_profunctor(REGP, point="2_1")
    h2 = hom_profunctor(REGP, point="1_0")
    assert compose_pointed_profunctors(h1, h2).point[:2] == ("2", "0")
    with pytest.raises(CompositionMismatch):
        compose_pointed_profunctors(h1, hom_profunctor(REGP, point="0_0"))
    assert pt.hom("2", "0") == ("2_0",)


def _orbits(T, R):
    # classes are orbits of (x, y) -> (t^n x, t_{-n} y)
    k = len(T.source.right.objects)
    seen, count = set(), 0
    for xy in product(T.elements(), R.elements()):
        if xy in seen:
            continue
        count += 1
        for n in range(k):
            seen.add((T.strength_right(xy[0], str(n)), R.strength_left(str(-n % k), xy[1])))
    return count


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_tensor_quotient_is_an_orbit_space(seed):
    T, R = random_tensor_instance(seed)
    q = tensor_bimodular_profunctors(T, R)
    assert len(q) == _orbits(T, R)
    assert q.classes.partition() == closure_classes(q.elements, q.pairs).partition()
    assert outer_strength_violations(T, R, q) == []


def test_tensor_with_a_free_swap_halves():
    for seed in range(200):
        T, R = random_tensor_instance(seed)
        k = len(T.source.right.objects)
        free = all(T.strength_right(x, str(n)) != x for x in T.elements() for n in range(1, k))
        if k == 2 and free:
            q = tensor_bimodular_profunctors(T, R)
            n = len(list(T.elements())) * len(list(R.elements()))
            assert len(q) == n // 2
            return
    pytest.fail("no instance with a free action among the seeds")


def test_tensor_trivial_case():
    h = hom_profunctor(REG2)
    q = tensor_bimodular_profunctors(h, h)
    # every strength of the hom profunctor acts by identities
    assert len(q) == 4


# promonads

@pytest.mark.parametrize("F", [models.identity_lax(models.delooping(2)), models.ceil_half(2)],
                         ids=["Z2", "half"])
@pytest.mark.parametrize("side", ["left", "right"])
def test_kleisli_promonads(F, side):
    k = kleisli_promonad(F, side)
    assert promonad_law_violations(k) == []
    assert check_bimodular(k.bimodular) == []


def test_kleisli_over_z2_is_z2():
    k = kleisli_promonad(models.identity_lax(models.delooping(2)))
    ((a, b),) = list(k.homs)
    # Z2 x Z2 glued along (f;m, g) ~ (f, m;g): only the sum survives
    assert len(k.classes(a, b)) == 2


@pytest.mark.parametrize("side", ["left", "right"])
def test_kleisli_over_the_poset_is_thin(side):
    F = models.ceil_half(2)
    k = kleisli_promonad(F, side)
    n = lambda o: int(o)
    for (s, t), res in k.homs.items():
        if side == "left":
            (a, x), (b, y) = s, t
            exists = any(n(a) >= min(n(b) + n(F.obj(m)), 2) and min(n(m) + n(x), 2) >= n(y)
                         for m in F.source.objects)
        else:
            (x, a), (y, b) = s, t
            exists = any(min(n(x) + n(m), 2) >= n(y) and n(a) >= min(n(F.obj(m)) + n(b), 2)
                         for m in F.source.objects)
        assert len(res) == int(exists)


def test_table_errors():
    F = models.ceil_half(2)
    with pytest.raises(TableError):
        F.laxator("9", "9")
    with pytest.raises(NotWellDefined):
        from collage.fincat.profunctor import _induced
        _induced(quotient([1, 2], [(1, 2)]), [1, 2], lambda x: x, "identity")
