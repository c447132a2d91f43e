"""
Built-in finite models.

* ``delooping(n)`` -- the cyclic group Z/n as a one-object monoidal category,
* ``discrete_cyclic(n)`` -- objects Z/n, only identities, tensor is addition,
* ``poset_trunc(k)`` -- objects 0..k with ``min(x + y, k)``; by default
  ``a -> b`` iff ``a >= b``,
* ``unit_category()`` -- one object, one morphism,
* ``product(A, B)`` -- componentwise,
* ``regular(M)`` -- M acting on itself from both sides,
* ``identity_lax(M)`` and ``ceil_half(k)`` -- lax monoidal functors.
"""

from __future__ import annotations

from itertools import product as _product

from .category import FinCategory, FinLaxMonoidalFunctor, FinMonoidalCategory, TableError
from .bimodular import FinBimodularCategory

POINT = "*"


def delooping(n: int) -> FinMonoidalCategory:
    """Z/n with one object ``*``; the morphism ``"k"`` is the residue k."""
    mors = {str(k): (POINT, POINT) for k in range(n)}
    comp = {(str(a), str(b)): str((a + b) % n) for a in range(n) for b in range(n)}
    c = FinCategory((POINT,), mors, {POINT: "0"}, comp, name=f"Z{n}")
    return FinMonoidalCategory(c, POINT, {(POINT, POINT): POINT}, comp)


def discrete_cyclic(n: int) -> FinMonoidalCategory:
    """The discrete monoidal category on Z/n: objects ``"0".."n-1"``, identities ``"id_k"``."""
    objs = tuple(str(k) for k in range(n))
    mors = {f"id_{o}": (o, o) for o in objs}
    ids = {o: f"id_{o}" for o in objs}
    comp = {(f"id_{o}", f"id_{o}"): f"id_{o}" for o in objs}
    tobj = {(str(a), str(b)): str((a + b) % n) for a in range(n) for b in range(n)}
    tmor = {(f"id_{a}", f"id_{b}"): f"id_{c}" for (a, b), c in tobj.items()}
    return FinMonoidalCategory(FinCategory(objs, mors, ids, comp, name=f"disc Z{n}"),
                               "0", tobj, tmor)


def _arrow(a, b):
    return f"{a}_{b}"


def poset_trunc(k: int, order: str = "ge") -> FinMonoidalCategory:
    """Objects ``"0".."k"``, tensor ``min(x + y, k)``, thin.

    ``order="ge"`` has a morphism ``a_b : a -> b`` iff a >= b, ``"le"`` iff a <= b.
    """
    objs = [str(x) for x in range(k + 1)]
    rel = (lambda a, b: a >= b) if order == "ge" else (lambda a, b: a <= b)
    mors = {_arrow(a, b): (str(a), str(b))
            for a in range(k + 1) for b in range(k + 1) if rel(a, b)}
    ids = {str(a): _arrow(a, a) for a in range(k + 1)}
    comp = {}
    for f, (a, b) in mors.items():
        for g, (b2, c) in mors.items():
            if b == b2:
                comp[f, g] = _arrow(a, c)
    t = lambda x, y: min(int(x) + int(y), k)
    tobj = {(a, b): str(t(a, b)) for a in objs for b in objs}
    tmor = {}
    for f, (a, b) in mors.items():
        for g, (c, d) in mors.items():
            tmor[f, g] = _arrow(t(a, c), t(b, d))
    name = f"P{k}{'>=' if order == 'ge' else '<='}"
    return FinMonoidalCategory(FinCategory(objs, mors, ids, comp, name=name), "0", tobj, tmor)


def unit_category() -> FinMonoidalCategory:
    c = FinCategory((POINT,), {"id": (POINT, POINT)}, {POINT: "id"}, {("id", "id"): "id"},
                    name="1")
    return FinMonoidalCategory(c, POINT, {(POINT, POINT): POINT}, {("id", "id"): "id"})


def product(a: FinMonoidalCategory, b: FinMonoidalCategory) -> FinMonoidalCategory:
    """Componentwise product; objects and morphisms are pairs."""
    objs = tuple(_product(a.objects, b.objects))
    mors = {(f, g): ((a.src(f), b.src(g)), (a.tgt(f), b.tgt(g)))
            for f in a.morphisms for g in b.morphisms}
    ids = {(x, y): (a.id(x), b.id(y)) for x, y in objs}
    comp = {}
    for (f, g), (f2, g2) in _product(mors, repeat=2):
        if (f, f2) in a.composition and (g, g2) in b.composition:
            comp[(f, g), (f2, g2)] = (a.composition[f, f2], b.composition[g, g2])
    tobj = {((x, y), (x2, y2)): (a.tensor(x, x2), b.tensor(y, y2)) for (x, y), (x2, y2)
            in _product(objs, repeat=2)}
    tmor = {((f, g), (f2, g2)): (a.tensor_mor(f, f2), b.tensor_mor(g, g2))
            for (f, g), (f2, g2) in _product(mors, repeat=2)}
    c = FinCategory(objs, mors, ids, comp, name=f"{a.category.name}x{b.category.name}")
    return FinMonoidalCategory(c, (a.unit, b.unit), tobj, tmor)


def regular(m: FinMonoidalCategory) -> FinBimodularCategory:
    """M as an (M, M)-bimodular category through its own tensor."""
    return FinBimodularCategory(m, m.category, m,
                                m.tensor_objects, m.tensor_morphisms,
                                m.tensor_objects, m.tensor_morphisms)


def identity_lax(m: FinMonoidalCategory) -> FinLaxMonoidalFunctor:
    return FinLaxMonoidalFunctor(
        m, m, {x: x for x in m.objects}, {f: f for f in m.morphisms}, m.id(m.unit),
        {(x, y): m.id(m.tensor(x, y)) for x in m.objects for y in m.objects}, name="id")


def ceil_half(k: int = 4) -> FinLaxMonoidalFunctor:
    """``F(x) = ceil(x / 2)`` on ``poset_trunc(k)``; ``F(x) + F(y) >= F(x + y)`` gives mu."""
    p = poset_trunc(k)
    F = lambda x: str((int(x) + 1) // 2)
    objs = {x: F(x) for x in p.objects}
    mors = {f: _arrow(F(a), F(b)) for f, (a, b) in p.morphisms.items()}
    mu = {(x, y): _arrow(p.tensor(F(x), F(y)), F(p.tensor(x, y)))
          for x in p.objects for y in p.objects}
    return FinLaxMonoidalFunctor(p, p, objs, mors, _arrow(p.unit, F(p.unit)), mu, name="ceil/2")


# lookup by name, for model declarations and the command line

def build(constructor: str, args=()):
    """Evaluate a constructor expression such as ``delooping(2)``."""
    def nat(i):
        try:
            return int(args[i])
        except (IndexError, ValueError):
            raise TableError(f"{constructor}: expected an integer argument") from None

    table = {
        "delooping": lambda: delooping(nat(0)),
        "discrete": lambda: discrete_cyclic(nat(0)),
        "poset_trunc": lambda: poset_trunc(nat(0), args[1] if len(args) > 1 else "ge"),
        "unit": unit_category,
        "regular": lambda: regular(delooping(nat(0))),
        "bimodular:regular": lambda: regular(delooping(nat(0))),
        "bimodular:regular_poset": lambda: regular(poset_trunc(nat(0))),
        "lax:identity": lambda: identity_lax(delooping(nat(0))),
        "lax:identity_poset": lambda: identity_lax(poset_trunc(nat(0))),
        "lax:ceil_half": lambda: ceil_half(nat(0) if args else 4),
    }
    if constructor not in table:
        raise TableError(f"unknown model constructor {constructor!r}")
    return table[constructor]()
