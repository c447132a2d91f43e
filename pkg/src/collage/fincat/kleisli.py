"""
The two promonads of a lax monoidal functor ``F : X -> A`` and their
Kleisli categories.

Left (``A x|_F X``), objects ``(a, x)``::

    hom((a, x), (b, y)) = \\int^M A(a ; b (x) FM) x X(M (x) x ; y)

Right (``X |x_F A``), objects ``(x, a)``, the mirror image::

    hom((x, a), (y, b)) = \\int^M X(x (x) M ; y) x A(a ; FM (x) b)

The usual statement of the right formula reuses ``a, b`` inside the ``X``
factor, which cannot typecheck; the version above is the reading taken.

Morphisms of the resulting FinCategory are ``(source, target, rep)`` with
``rep = (M, M, first, second)`` the least member of the coend class.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .bimodular import FinBimodularCategory
from .category import FinCategory, FinLaxMonoidalFunctor
from .coend import CoendResult, coend
from .profunctor import NotWellDefined


@dataclass
class KleisliCategory:
    side: str
    functor: FinLaxMonoidalFunctor
    category: FinCategory
    bimodular: FinBimodularCategory
    homs: dict

    def classes(self, a, b) -> CoendResult:
        return self.homs[a, b]


class _Promonad:
    def __init__(self, F: FinLaxMonoidalFunctor, side: str):
        if side not in ("left", "right"):
            raise ValueError(f"side must be 'left' or 'right', not {side!r}")
        self.F, self.side = F, side
        self.X, self.A = F.source, F.target

    # the coend body H(c, v): contravariant in c, covariant in v

    def body(self, src, tgt, c, v):
        F, X, A = self.F, self.X, self.A
        if self.side == "left":
            (a, x), (b, y) = src, tgt
            return [(c, v, f, g) for f in A.hom(a, A.tensor(b, F.obj(v)))
                    for g in X.hom(X.tensor(c, x), y)]
        (x, a), (y, b) = src, tgt
        return [(c, v, g, f) for g in X.hom(X.tensor(x, c), y)
                for f in A.hom(a, A.tensor(F.obj(v), b))]

    def left(self, src, m, e):
        X = self.X
        c, v, first, second = e
        if self.side == "left":
            x = src[1]
            return (v, v, first, X.then(X.tensor_mor(m, X.id(x)), second))
        x = src[0]
        return (v, v, X.then(X.tensor_mor(X.id(x), m), first), second)

    def right(self, tgt, e, m):
        F, A = self.F, self.A
        c, v, first, second = e
        b = tgt[0] if self.side == "left" else tgt[1]
        if self.side == "left":
            return (c, c, A.then(first, A.tensor_mor(A.id(b), F.mor(m))), second)
        return (c, c, first, A.then(second, A.tensor_mor(F.mor(m), A.id(b))))

    def hom(self, src, tgt) -> CoendResult:
        return coend(self.X, lambda c, v: self.body(src, tgt, c, v),
                     lambda m, e: self.left(src, m, e),
                     lambda e, m: self.right(tgt, e, m))

    def unit(self, obj):
        F, X, A = self.F, self.X, self.A
        I = X.unit
        if self.side == "left":
            a, x = obj
            return (I, I, A.tensor_mor(A.id(a), F.epsilon), X.id(x))
        x, a = obj
        return (I, I, X.id(x), A.tensor_mor(F.epsilon, A.id(a)))

    def compose(self, src, mid, tgt, e1, e2):
        """Diagrammatic composite of representatives ``e1 : src -> mid`` and ``e2 : mid -> tgt``."""
        F, X, A = self.F, self.X, self.A
        M, _, p1, p2 = e1
        M2, _, q1, q2 = e2
        if self.side == "left":
            f, g, f2, g2 = p1, p2, q1, q2
            c = tgt[0]
            new_m = X.tensor(M2, M)
            f_new = A.compose(f, A.tensor_mor(f2, A.id(F.obj(M))),
                              A.tensor_mor(A.id(c), F.laxator(M2, M)))
            g_new = X.then(X.tensor_mor(X.id(M2), g), g2)
            return (new_m, new_m, f_new, g_new)
        g, f, g2, f2 = p1, p2, q1, q2
        c = tgt[1]
        new_m = X.tensor(M, M2)
        g_new = X.then(X.tensor_mor(g, X.id(M2)), g2)
        f_new = A.compose(f, A.tensor_mor(A.id(F.obj(M)), f2),
                          A.tensor_mor(F.laxator(M, M2), A.id(c)))
        return (new_m, new_m, g_new, f_new)


def _check_same(results, what):
    if len(results) != 1:
        raise NotWellDefined(f"{what} is not well defined: {sorted(map(repr, results))}")
    return next(iter(results))


def kleisli_promonad(F: FinLaxMonoidalFunctor, side: str = "left") -> KleisliCategory:
    """The Kleisli category of one of the two promonads of ``F``, with its bimodular actions.

    Composition, identities and both actions are computed on every member
    of each class; :class:`NotWellDefined` is raised if any disagree.
    """
    pm = _Promonad(F, side)
    X, A = F.source, F.target
    if side == "left":
        objects = [(a, x) for a in A.objects for x in X.objects]
    else:
        objects = [(x, a) for x in X.objects for a in A.objects]
    homs = {(s, t): pm.hom(s, t) for s in objects for t in objects}
    morphisms, identities, composition = {}, {}, {}
    for (s, t), res in homs.items():
        for cls in res.classes:
            morphisms[s, t, cls[0]] = (s, t)
    name = lambda s, t, e: (s, t, homs[s, t].rep(e))
    for o in objects:
        identities[o] = name(o, o, pm.unit(o))
    for (s, m), res1 in homs.items():
        for t in objects:
            res2 = homs[m, t]
            for c1, c2 in product(res1.classes, res2.classes):
                composition[(s, m, c1[0]), (m, t, c2[0])] = _check_same(
                    {name(s, t, pm.compose(s, m, t, e1, e2)) for e1 in c1 for e2 in c2},
                    f"composition {c1[0]!r} ; {c2[0]!r}")
    cat = FinCategory(objects, morphisms, identities, composition,
                      name=f"Kl{'L' if side == 'left' else 'R'}({F.name})")
    bim = _actions(pm, cat, homs, objects, name)
    return KleisliCategory(side, F, cat, bim, homs)


def _actions(pm: _Promonad, K: FinCategory, homs, objects, name) -> FinBimodularCategory:
    X, A = pm.X, pm.A
    lo, lm, ro, rm = {}, {}, {}, {}
    members = {(s, t, c[0]): c for (s, t), res in homs.items() for c in res.classes}
    if pm.side == "left":
        acting_l, acting_r = A, X
        for a2 in A.objects:
            for (a, x) in objects:
                lo[a2, (a, x)] = (A.tensor(a2, a), x)
        for x2 in X.objects:
            for (a, x) in objects:
                ro[(a, x), x2] = (a, X.tensor(x, x2))
        for h in A.morphisms:
            for (s, t, rep), cls in members.items():
                s2, t2 = lo[A.src(h), s], lo[A.tgt(h), t]
                lm[h, (s, t, rep)] = _check_same(
                    {name(s2, t2, (e[0], e[1], A.tensor_mor(h, e[2]), e[3])) for e in cls},
                    f"left action of {h}")
        for k in X.morphisms:
            for (s, t, rep), cls in members.items():
                s2, t2 = ro[s, X.src(k)], ro[t, X.tgt(k)]
                rm[(s, t, rep), k] = _check_same(
                    {name(s2, t2, (e[0], e[1], e[2], X.tensor_mor(e[3], k))) for e in cls},
                    f"right action of {k}")
    else:
        acting_l, acting_r = X, A
        for x2 in X.objects:
            for (x, a) in objects:
                lo[x2, (x, a)] = (X.tensor(x2, x), a)
        for a2 in A.objects:
            for (x, a) in objects:
                ro[(x, a), a2] = (x, A.tensor(a, a2))
        for k in X.morphisms:
            for (s, t, rep), cls in members.items():
                s2, t2 = lo[X.src(k), s], lo[X.tgt(k), t]
                lm[k, (s, t, rep)] = _check_same(
                    {name(s2, t2, (e[0], e[1], X.tensor_mor(k, e[2]), e[3])) for e in cls},
                    f"left action of {k}")
        for h in A.morphisms:
            for (s, t, rep), cls in members.items():
                s2, t2 = ro[s, A.src(h)], ro[t, A.tgt(h)]
                rm[(s, t, rep), h] = _check_same(
                    {name(s2, t2, (e[0], e[1], e[2], A.tensor_mor(e[3], h))) for e in cls},
                    f"right action of {h}")
    return FinBimodularCategory(acting_l, K, acting_r, lo, lm, ro, rm)


def promonad_law_violations(k: KleisliCategory) -> list[str]:
    """Left unit, right unit and associativity on class representatives."""
    from .category import check_category
    return [str(d) for d in check_category(k.category)]
