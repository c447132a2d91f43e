"""
Finite categories, strict monoidal categories and lax monoidal functors,
given by explicit tables and checked exhaustively.

Composition is diagrammatic: ``then(f, g)`` is ``f ; g``. Morphism names are
global, so every morphism knows its source and target.
"""

from __future__ import annotations

from itertools import product
from typing import Hashable, Iterable, Mapping

from ..sig import Diagnostic

MAX_OBJECTS = 64
MAX_MORPHISMS = 4096


class TableError(ValueError):
    """A table lookup outside the defined entries."""


class SizeLimitExceeded(ValueError):
    pass


def _guard(n_obj, n_mor, what):
    if n_obj > MAX_OBJECTS or n_mor > MAX_MORPHISMS:
        raise SizeLimitExceeded(
            f"{what}: {n_obj} objects / {n_mor} morphisms exceeds "
            f"{MAX_OBJECTS} / {MAX_MORPHISMS}")


class FinCategory:
    """A finite category as closed tables."""

    def __init__(self, objects: Iterable[Hashable], morphisms: Mapping[Hashable, tuple],
                 identities: Mapping, composition: Mapping, name: str = ""):
        self.objects = tuple(objects)
        self.morphisms = dict(morphisms)
        self.identities = dict(identities)
        self.composition = dict(composition)
        self.name = name
        _guard(len(self.objects), len(self.morphisms), name or "category")
        self._homs: dict = {}
        self._out: dict = {}
        for f, (a, b) in sorted(self.morphisms.items(), key=lambda kv: repr(kv[0])):
            self._homs.setdefault((a, b), []).append(f)
            self._out.setdefault(a, []).append(f)

    def __repr__(self):
        return (f"FinCategory({self.name or '?'}: {len(self.objects)} objects, "
                f"{len(self.morphisms)} morphisms)")

    def src(self, f):
        return self.morphisms[f][0]

    def tgt(self, f):
        return self.morphisms[f][1]

    def id(self, a):
        return self.identities[a]

    def hom(self, a, b) -> tuple:
        return tuple(self._homs.get((a, b), ()))

    def then(self, f, g):
        try:
            return self.composition[f, g]
        except KeyError:
            raise TableError(f"{self.name}: no composite for {f} ; {g}") from None

    def compose(self, *fs):
        out = fs[0]
        for g in fs[1:]:
            out = self.then(out, g)
        return out

    def homs_from(self, a) -> tuple:
        return tuple(self._out.get(a, ()))

    def composable(self):
        for f, (_, b) in self.morphisms.items():
            for g in self._out.get(b, ()):
                yield f, g


class FinMonoidalCategory:
    """A strict monoidal category: a FinCategory plus tensor tables and a unit."""

    def __init__(self, category: FinCategory, unit, tensor_objects: Mapping, tensor_morphisms: Mapping):
        self.category = category
        self.unit = unit
        self.tensor_objects = dict(tensor_objects)
        self.tensor_morphisms = dict(tensor_morphisms)

    def __getattr__(self, item):
        if item == "category":
            raise AttributeError(item)
        return getattr(self.category, item)

    def __repr__(self):
        return f"FinMonoidalCategory({self.category.name or '?'})"

    def tensor(self, a, b):
        try:
            return self.tensor_objects[a, b]
        except KeyError:
            raise TableError(f"{self.category.name}: no tensor for objects {a}, {b}") from None

    def tensor_mor(self, f, g):
        try:
            return self.tensor_morphisms[f, g]
        except KeyError:
            raise TableError(f"{self.category.name}: no tensor for morphisms {f}, {g}") from None

    def tensor_all(self, objs) -> Hashable:
        out = self.unit
        for o in objs:
            out = self.tensor(out, o)
        return out

    def tensor_mors(self, fs):
        out = self.id(self.unit)
        for f in fs:
            out = self.tensor_mor(out, f)
        return out

    def whisker(self, left_objs, f, right_objs):
        """``id(left) (x) f (x) id(right)``."""
        return self.tensor_mors([self.id(self.tensor_all(left_objs)), f,
                                 self.id(self.tensor_all(right_objs))])


# law checking

class _Collector:
    def __init__(self):
        self.out: list[Diagnostic] = []

    def add(self, law, item, message):
        self.out.append(Diagnostic(law, str(item), message))

    def eq(self, law, item, lhs, rhs):
        if lhs != rhs:
            self.add(law, item, f"{lhs} != {rhs}")

    def law(self, law, item, lhs, rhs):
        """Compare two lazily computed sides; undefined entries were reported already."""
        try:
            left, right = lhs(), rhs()
        except (TableError, KeyError):
            return
        self.eq(law, item, left, right)

    def attempt(self, law, item, fn):
        """Evaluate ``fn``; a missing table entry is reported under ``law``."""
        try:
            return fn()
        except (TableError, KeyError) as err:
            self.add(law, item, f"undefined: {err}")
            return None


def check_category(c: FinCategory) -> list[Diagnostic]:
    col = _Collector()
    objs = set(c.objects)
    for f, (a, b) in c.morphisms.items():
        if a not in objs or b not in objs:
            col.add("typing", f, f"endpoints {a} -> {b} are not objects")
    for a in c.objects:
        i = c.identities.get(a)
        if i is None or c.morphisms.get(i) != (a, a):
            col.add("identity", a, f"identity {i} is missing or has the wrong type")
    if col.out:
        return col.out
    for f, g in sorted(c.composable(), key=repr):
        h = col.attempt("totality", (f, g), lambda: c.then(f, g))
        if h is not None and c.morphisms.get(h) != (c.src(f), c.tgt(g)):
            col.add("typing", (f, g), f"composite {h} has type {c.morphisms.get(h)}")
    if col.out:
        return col.out
    for f in sorted(c.morphisms, key=repr):
        a, b = c.morphisms[f]
        col.eq("left unit", f, c.then(c.id(a), f), f)
        col.eq("right unit", f, c.then(f, c.id(b)), f)
    for f, g in sorted(c.composable(), key=repr):
        fg = c.then(f, g)
        for h in c.homs_from(c.tgt(g)):
            col.eq("associativity", (f, g, h), c.then(fg, h), c.then(f, c.then(g, h)))
    return col.out


def check_monoidal(m: FinMonoidalCategory) -> list[Diagnostic]:
    """Category laws, tensor functoriality, strict associativity and unitality."""
    c = m.category
    out = check_category(c)
    if out:
        return out
    col = _Collector()
    objs = sorted(c.objects, key=repr)
    mors = sorted(c.morphisms, key=repr)
    if m.unit not in c.objects:
        col.add("unit", m.unit, "unit is not an object")
        return col.out
    for a, b in product(objs, repeat=2):
        ab = col.attempt("tensor totality", (a, b), lambda: m.tensor(a, b))
        if ab is not None and ab not in c.objects:
            col.add("tensor typing", (a, b), f"{ab} is not an object")
    for f, g in product(mors, repeat=2):
        fg = col.attempt("tensor totality", (f, g), lambda: m.tensor_mor(f, g))
        if fg is not None:
            want = (m.tensor_objects.get((c.src(f), c.src(g))),
                    m.tensor_objects.get((c.tgt(f), c.tgt(g))))
            if c.morphisms.get(fg) != want:
                col.add("tensor typing", (f, g), f"{fg} has type {c.morphisms.get(fg)}, expected {want}")
    t, tm = m.tensor, m.tensor_mor
    for a, b in product(objs, repeat=2):
        col.law("tensor identity", (a, b), lambda: tm(c.id(a), c.id(b)), lambda: c.id(t(a, b)))
    for a in objs:
        col.law("left unitality", a, lambda: t(m.unit, a), lambda: a)
        col.law("right unitality", a, lambda: t(a, m.unit), lambda: a)
    for f in mors:
        col.law("left unitality", f, lambda: tm(c.id(m.unit), f), lambda: f)
        col.law("right unitality", f, lambda: tm(f, c.id(m.unit)), lambda: f)
    for a, b, d in product(objs, repeat=3):
        col.law("associativity", (a, b, d), lambda: t(t(a, b), d), lambda: t(a, t(b, d)))
    for f, g, h in product(mors, repeat=3):
        col.law("associativity", (f, g, h), lambda: tm(tm(f, g), h), lambda: tm(f, tm(g, h)))
    pairs = sorted(c.composable(), key=repr)
    for (f, f2), (g, g2) in product(pairs, repeat=2):
        col.law("interchange", (f, f2, g, g2),
                lambda: c.then(tm(f, g), tm(f2, g2)), lambda: tm(c.then(f, f2), c.then(g, g2)))
    return col.out


class FinLaxMonoidalFunctor:
    """``F : X -> A`` with ``epsilon : I -> F(I)`` and ``mu[x, y] : F(x) (x) F(y) -> F(x (x) y)``."""

    def __init__(self, source: FinMonoidalCategory, target: FinMonoidalCategory,
                 objects: Mapping, morphisms: Mapping, epsilon, mu: Mapping, name: str = "F"):
        self.source = source
        self.target = target
        self.objects = dict(objects)
        self.morphisms = dict(morphisms)
        self.epsilon = epsilon
        self.mu = dict(mu)
        self.name = name

    def __repr__(self):
        return f"FinLaxMonoidalFunctor({self.name})"

    def obj(self, x):
        return self.objects[x]

    def mor(self, f):
        try:
            return self.morphisms[f]
        except KeyError:
            raise TableError(f"{self.name}: no image for morphism {f}") from None

    def laxator(self, x, y):
        try:
            return self.mu[x, y]
        except KeyError:
            raise TableError(f"{self.name}: no mu entry at ({x}, {y})") from None

    def mu_all(self, xs):
        """The iterated laxator ``F(x1) (x) ... (x) F(xn) -> F(x1 (x) ... (x) xn)``,
        folded from the left; ``epsilon`` for the empty list."""
        X, A = self.source, self.target
        if not xs:
            return self.epsilon
        acc_obj, acc = xs[0], A.id(self.obj(xs[0]))
        for x in xs[1:]:
            step = A.tensor_mor(acc, A.id(self.obj(x)))
            acc = A.then(step, self.laxator(acc_obj, x))
            acc_obj = X.tensor(acc_obj, x)
        return acc


def check_lax(F: FinLaxMonoidalFunctor) -> list[Diagnostic]:
    X, A = F.source, F.target
    col = _Collector()
    xobjs = sorted(X.objects, key=repr)
    xmors = sorted(X.morphisms, key=repr)
    for x in xobjs:
        if F.objects.get(x) not in A.objects:
            col.add("functoriality", x, f"object image {F.objects.get(x)} is not an object")
    if col.out:
        return col.out
    for f in xmors:
        img = col.attempt("functoriality", f, lambda: F.mor(f))
        if img is not None and A.morphisms.get(img) != (F.obj(X.src(f)), F.obj(X.tgt(f))):
            col.add("functoriality", f, f"image {img} has type {A.morphisms.get(img)}")
    for x, y in product(xobjs, repeat=2):
        mu = col.attempt("totality", f"mu({x}, {y})", lambda: F.laxator(x, y))
        if mu is not None:
            want = (A.tensor(F.obj(x), F.obj(y)), F.obj(X.tensor(x, y)))
            if A.morphisms.get(mu) != want:
                col.add("mu typing", f"mu({x}, {y})", f"{mu} has type {A.morphisms.get(mu)}, expected {want}")
    if A.morphisms.get(F.epsilon) != (A.unit, F.obj(X.unit)):
        col.add("epsilon typing", "epsilon",
                f"{F.epsilon} has type {A.morphisms.get(F.epsilon)}, expected {(A.unit, F.obj(X.unit))}")
    if col.out:
        return col.out
    for x in xobjs:
        col.eq("functoriality", f"id({x})", F.mor(X.id(x)), A.id(F.obj(x)))
    for f, g in sorted(X.composable(), key=repr):
        col.eq("functoriality", (f, g), F.mor(X.then(f, g)), A.then(F.mor(f), F.mor(g)))
    for f, g in product(xmors, repeat=2):
        col.eq("naturality", (f, g),
               A.then(A.tensor_mor(F.mor(f), F.mor(g)), F.laxator(X.tgt(f), X.tgt(g))),
               A.then(F.laxator(X.src(f), X.src(g)), F.mor(X.tensor_mor(f, g))))
    for x, y, z in product(xobjs, repeat=3):
        lhs = A.then(A.tensor_mor(F.laxator(x, y), A.id(F.obj(z))), F.laxator(X.tensor(x, y), z))
        rhs = A.then(A.tensor_mor(A.id(F.obj(x)), F.laxator(y, z)), F.laxator(x, X.tensor(y, z)))
        col.eq("associativity", (x, y, z), lhs, rhs)
    for x in xobjs:
        fx = A.id(F.obj(x))
        col.eq("left unitality", x,
               A.then(A.tensor_mor(F.epsilon, fx), F.laxator(X.unit, x)), fx)
        col.eq("right unitality", x,
               A.then(A.tensor_mor(fx, F.epsilon), F.laxator(x, X.unit)), fx)
    return col.out
