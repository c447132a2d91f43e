"""
Bimodular categories and bimodular profunctors over finite tables.

Profunctor elements are tagged triples ``(X, Y, v)`` so that every element
knows which value set it lives in. ``T(X, Y)`` is contravariant in X and
covariant in Y: ``lmap[f, x]`` for ``f : X' -> X`` lands in ``T(X', Y)`` and
``rmap[x, g]`` for ``g : Y -> Y'`` lands in ``T(X, Y')``.
"""

from __future__ import annotations

from itertools import product
from typing import Mapping

from ..sig import Diagnostic
from .category import FinCategory, FinMonoidalCategory, TableError, _Collector


class FinBimodularCategory:
    """An (M, N)-bimodular category: a carrier with a left M-action and a right N-action."""

    def __init__(self, left: FinMonoidalCategory, carrier: FinCategory, right: FinMonoidalCategory,
                 left_objects: Mapping, left_morphisms: Mapping,
                 right_objects: Mapping, right_morphisms: Mapping):
        self.left = left
        self.carrier = carrier
        self.right = right
        self.left_objects = dict(left_objects)
        self.left_morphisms = dict(left_morphisms)
        self.right_objects = dict(right_objects)
        self.right_morphisms = dict(right_morphisms)

    def __repr__(self):
        return (f"FinBimodularCategory({self.left.category.name} | {self.carrier.name} | "
                f"{self.right.category.name})")

    def act(self, m, x):
        """``m |> x`` on objects."""
        try:
            return self.left_objects[m, x]
        except KeyError:
            raise TableError(f"no left action {m} |> {x}") from None

    def act_mor(self, f, g):
        try:
            return self.left_morphisms[f, g]
        except KeyError:
            raise TableError(f"no left action {f} |> {g}") from None

    def ract(self, x, n):
        """``x <| n`` on objects."""
        try:
            return self.right_objects[x, n]
        except KeyError:
            raise TableError(f"no right action {x} <| {n}") from None

    def ract_mor(self, g, f):
        try:
            return self.right_morphisms[g, f]
        except KeyError:
            raise TableError(f"no right action {g} <| {f}") from None


def check_bimodular(b: FinBimodularCategory) -> list[Diagnostic]:
    """Totality, typing, functoriality, associativity, unitality and compatibility."""
    col = _Collector()
    M, C, N = b.left, b.carrier, b.right
    cobjs = sorted(C.objects, key=repr)
    cmors = sorted(C.morphisms, key=repr)
    for side, acting, objs_t, mors_t, act_o, act_m in (
            ("left", M, b.left_objects, b.left_morphisms,
             lambda m, x: b.act(m, x), lambda f, g: b.act_mor(f, g)),
            ("right", N, b.right_objects, b.right_morphisms,
             lambda m, x: b.ract(x, m), lambda f, g: b.ract_mor(g, f))):
        aobjs = sorted(acting.objects, key=repr)
        amors = sorted(acting.morphisms, key=repr)
        for m, x in product(aobjs, cobjs):
            y = col.attempt(f"{side} action totality", (m, x), lambda: act_o(m, x))
            if y is not None and y not in C.objects:
                col.add(f"{side} action typing", (m, x), f"{y} is not an object")
        for f, g in product(amors, cmors):
            h = col.attempt(f"{side} action totality", (f, g), lambda: act_m(f, g))
            if h is None:
                continue
            if side == "left":
                want = (objs_t.get((M.src(f), C.src(g))), objs_t.get((M.tgt(f), C.tgt(g))))
            else:
                want = (objs_t.get((C.src(g), N.src(f))), objs_t.get((C.tgt(g), N.tgt(f))))
            if C.morphisms.get(h) != want:
                col.add(f"{side} action typing", (f, g), f"{h} has type {C.morphisms.get(h)}, expected {want}")
        for m, x in product(aobjs, cobjs):
            col.law(f"{side} action functoriality", (m, x),
                    lambda: act_m(acting.id(m), C.id(x)), lambda: C.id(act_o(m, x)))
        for (f, f2), (g, g2) in product(sorted(acting.composable(), key=repr),
                                        sorted(C.composable(), key=repr)):
            col.law(f"{side} action functoriality", (f, f2, g, g2),
                    lambda: C.then(act_m(f, g), act_m(f2, g2)),
                    lambda: act_m(acting.then(f, f2), C.then(g, g2)))
        for x in cobjs:
            col.law(f"{side} action unitality", x, lambda: act_o(acting.unit, x), lambda: x)
        for g in cmors:
            col.law(f"{side} action unitality", g, lambda: act_m(acting.id(acting.unit), g), lambda: g)
        for m, m2, x in product(aobjs, aobjs, cobjs):
            if side == "left":
                col.law("left action associativity", (m, m2, x),
                        lambda: act_o(acting.tensor(m, m2), x), lambda: act_o(m, act_o(m2, x)))
            else:
                col.law("right action associativity", (x, m, m2),
                        lambda: act_o(acting.tensor(m, m2), x), lambda: act_o(m2, act_o(m, x)))
        for f, f2, g in product(amors, amors, cmors):
            if side == "left":
                col.law("left action associativity", (f, f2, g),
                        lambda: act_m(acting.tensor_mor(f, f2), g), lambda: act_m(f, act_m(f2, g)))
            else:
                col.law("right action associativity", (g, f, f2),
                        lambda: act_m(acting.tensor_mor(f, f2), g), lambda: act_m(f2, act_m(f, g)))
    for m, x, n in product(sorted(M.objects, key=repr), cobjs, sorted(N.objects, key=repr)):
        col.law("compatibility", (m, x, n),
                lambda: b.act(m, b.ract(x, n)), lambda: b.ract(b.act(m, x), n))
    for f, g, h in product(sorted(M.morphisms, key=repr), cmors, sorted(N.morphisms, key=repr)):
        col.law("compatibility", (f, g, h),
                lambda: b.act_mor(f, b.ract_mor(g, h)), lambda: b.ract_mor(b.act_mor(f, g), h))
    return col.out


class FinBimodularProfunctor:
    """A profunctor ``source -/-> target`` between (M, N)-bimodular categories, with strengths.

    ``tl[m, x]`` is the left strength ``t_m`` and ``tr[x, n]`` the right strength
    ``t^n``; either table may be ``None`` when that side has no action to respect.
    ``point`` is an element or ``None``.
    """

    def __init__(self, source, target, values: Mapping, lmap: Mapping, rmap: Mapping,
                 tl: Mapping | None = None, tr: Mapping | None = None, point=None, name: str = "T"):
        self.source = source
        self.target = target
        self.values = {k: tuple(v) for k, v in values.items()}
        self.lmap = dict(lmap)
        self.rmap = dict(rmap)
        self.tl = None if tl is None else dict(tl)
        self.tr = None if tr is None else dict(tr)
        self.point = point
        self.name = name

    def __repr__(self):
        return f"FinBimodularProfunctor({self.name}: {sum(map(len, self.values.values()))} elements)"

    @property
    def src_cat(self) -> FinCategory:
        return _carrier(self.source)

    @property
    def tgt_cat(self) -> FinCategory:
        return _carrier(self.target)

    def elements(self):
        for key in sorted(self.values, key=repr):
            yield from self.values[key]

    def at(self, x, y) -> tuple:
        return self.values.get((x, y), ())

    def pre(self, f, x):
        try:
            return self.lmap[f, x]
        except KeyError:
            raise TableError(f"{self.name}: no left action of {f} on {x}") from None

    def post(self, x, g):
        try:
            return self.rmap[x, g]
        except KeyError:
            raise TableError(f"{self.name}: no right action of {g} on {x}") from None

    def strength_left(self, m, x):
        try:
            return self.tl[m, x]
        except (KeyError, TypeError):
            raise TableError(f"{self.name}: no left strength t_{m} on {x}") from None

    def strength_right(self, x, n):
        try:
            return self.tr[x, n]
        except (KeyError, TypeError):
            raise TableError(f"{self.name}: no right strength t^{n} on {x}") from None


def _carrier(c):
    if isinstance(c, FinBimodularCategory):
        return c.carrier
    if isinstance(c, FinMonoidalCategory):
        return c.category
    return c


def check_profunctor(T: FinBimodularProfunctor) -> list[Diagnostic]:
    col = _Collector()
    C, D = T.src_cat, T.tgt_cat
    for (x, y), els in sorted(T.values.items(), key=repr):
        for e in els:
            if e[:2] != (x, y):
                col.add("typing", e, f"element filed under {(x, y)}")
    for e in T.elements():
        x, y = e[0], e[1]
        col.law("identity", e, lambda: T.pre(C.id(x), e), lambda: e)
        col.law("identity", e, lambda: T.post(e, D.id(y)), lambda: e)
        for f in sorted(C.morphisms, key=repr):
            if C.tgt(f) != x:
                continue
            r = col.attempt("totality", (f, e), lambda: T.pre(f, e))
            if r is not None and r[:2] != (C.src(f), y):
                col.add("typing", (f, e), f"result {r} is not in T({C.src(f)}, {y})")
        for g in D.homs_from(y):
            r = col.attempt("totality", (e, g), lambda: T.post(e, g))
            if r is not None and r[:2] != (x, D.tgt(g)):
                col.add("typing", (e, g), f"result {r} is not in T({x}, {D.tgt(g)})")
    if col.out:
        return col.out
    for e in T.elements():
        x, y = e[0], e[1]
        into = [f for f in C.morphisms if C.tgt(f) == x]
        for f in into:
            for f2 in [h for h in C.morphisms if C.tgt(h) == C.src(f)]:
                col.law("functoriality", (f2, f, e),
                        lambda: T.pre(f2, T.pre(f, e)), lambda: T.pre(C.then(f2, f), e))
        for g in D.homs_from(y):
            for g2 in D.homs_from(D.tgt(g)):
                col.law("functoriality", (e, g, g2),
                        lambda: T.post(T.post(e, g), g2), lambda: T.post(e, D.then(g, g2)))
            for f in into:
                col.law("bimodule", (f, e, g),
                        lambda: T.post(T.pre(f, e), g), lambda: T.pre(f, T.post(e, g)))
    return col.out


def check_strength(T: FinBimodularProfunctor) -> list[Diagnostic]:
    """Profunctor laws, then associativity, unitality, compatibility and
    naturality of the strengths.

    Associativity is read against the strict action ``(m (x) m') |> X = m |> (m' |> X)``:
    ``t_m(t_m'(x)) = t_{m (x) m'}(x)``, and dually ``t^n'(t^n(x)) = t^{n (x) n'}(x)``.
    """
    out = check_profunctor(T)
    if out:
        return out
    col = _Collector()
    S, R = T.source, T.target
    C, D = T.src_cat, T.tgt_cat
    els = list(T.elements())
    sides = []
    if T.tl is not None:
        sides.append("left")
    if T.tr is not None:
        sides.append("right")
    for side in sides:
        acting = S.left if side == "left" else S.right
        objs = sorted(acting.objects, key=repr)
        if side == "left":
            t = T.strength_left
            on_c, on_d = S.act, R.act
            mor_c, mor_d = S.act_mor, R.act_mor
        else:
            t = lambda n, e: T.strength_right(e, n)
            on_c, on_d = (lambda n, x: S.ract(x, n)), (lambda n, x: R.ract(x, n))
            mor_c, mor_d = (lambda h, g: S.ract_mor(g, h)), (lambda h, g: R.ract_mor(g, h))
        for m in objs:
            for e in els:
                r = col.attempt(f"{side} strength totality", (m, e), lambda: t(m, e))
                if r is not None and r[:2] != (on_c(m, e[0]), on_d(m, e[1])):
                    col.add(f"{side} strength typing", (m, e), f"result {r} has the wrong value set")
        if col.out:
            continue
        for e in els:
            col.law(f"{side} strength unitality", e, lambda: t(acting.unit, e), lambda: e)
        for m, m2 in product(objs, repeat=2):
            for e in els:
                if side == "left":
                    col.law("left strength associativity", (m, m2, e),
                            lambda: t(m, t(m2, e)), lambda: t(acting.tensor(m, m2), e))
                else:
                    col.law("right strength associativity", (m, m2, e),
                            lambda: t(m2, t(m, e)), lambda: t(acting.tensor(m, m2), e))
        for m in objs:
            idm = acting.id(m)
            for e in els:
                x, y = e[0], e[1]
                for f in [f for f in C.morphisms if C.tgt(f) == x]:
                    col.law(f"{side} strength naturality", (m, f, e),
                            lambda: t(m, T.pre(f, e)), lambda: T.pre(mor_c(idm, f), t(m, e)))
                for g in D.homs_from(y):
                    col.law(f"{side} strength naturality", (m, e, g),
                            lambda: t(m, T.post(e, g)), lambda: T.post(t(m, e), mor_d(idm, g)))
        for h in sorted(acting.morphisms, key=repr):
            a, b = acting.src(h), acting.tgt(h)
            for e in els:
                x, y = e[0], e[1]
                col.law(f"{side} strength dinaturality", (h, e),
                        lambda: T.post(t(a, e), mor_d(h, D.id(y))),
                        lambda: T.pre(mor_c(h, C.id(x)), t(b, e)))
    if len(sides) == 2:
        for m, n in product(sorted(S.left.objects, key=repr), sorted(S.right.objects, key=repr)):
            for e in els:
                col.law("strength compatibility", (m, n, e),
                        lambda: T.strength_right(T.strength_left(m, e), n),
                        lambda: T.strength_left(m, T.strength_right(e, n)))
    return out + col.out


def hom_profunctor(b: FinBimodularCategory, point=None) -> FinBimodularProfunctor:
    """``C(X, Y)`` with strengths given by acting with identities."""
    C = b.carrier
    values = {(x, y): tuple((x, y, f) for f in C.hom(x, y)) for x in C.objects for y in C.objects}
    lmap, rmap = {}, {}
    for (x, y), els in values.items():
        for e in els:
            for f in C.morphisms:
                if C.tgt(f) == x:
                    lmap[f, e] = (C.src(f), y, C.then(f, e[2]))
            for g in C.homs_from(y):
                rmap[e, g] = (x, C.tgt(g), C.then(e[2], g))
    tl = {(m, e): (b.act(m, e[0]), b.act(m, e[1]), b.act_mor(b.left.id(m), e[2]))
          for m in b.left.objects for els in values.values() for e in els}
    tr = {(e, n): (b.ract(e[0], n), b.ract(e[1], n), b.ract_mor(e[2], b.right.id(n)))
          for n in b.right.objects for els in values.values() for e in els}
    pt = None
    if point is not None:
        pt = (C.src(point), C.tgt(point), point)
    return FinBimodularProfunctor(b, b, values, lmap, rmap, tl, tr, pt, name=f"hom({C.name})")
