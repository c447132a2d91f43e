"""
Seeded random instances for the oracle tests.

Random categories are concrete: each object is a small finite set and the
morphisms are the closure under composition of a few random functions.
Random profunctors are built from the underlying-set functor, so they are
genuine profunctors by construction.
"""

from __future__ import annotations

import random
from itertools import product

from .bimodular import FinBimodularCategory, FinBimodularProfunctor
from .category import FinCategory, FinMonoidalCategory
from .models import discrete_cyclic


def _fname(src, tgt, f):
    return f"{src}>{tgt}:{''.join(map(str, f))}"


def random_concrete_category(rng: random.Random, max_objects=3, max_morphisms=20,
                             tries=100):
    """A subcategory of finite sets, with its underlying-set functor."""
    for _ in range(tries):
        n = rng.randint(1, max_objects)
        objs = [f"o{i}" for i in range(n)]
        size = {o: rng.randint(1, 3) for o in objs}
        maps = {}
        for o in objs:
            maps[o, o, tuple(range(size[o]))] = None
        for _ in range(rng.randint(0, 4)):
            a, b = rng.choice(objs), rng.choice(objs)
            maps[a, b, tuple(rng.randrange(size[b]) for _ in range(size[a]))] = None
        changed = True
        while changed and len(maps) <= max_morphisms:
            changed = False
            for (a, b, f), (b2, c, g) in product(list(maps), repeat=2):
                if b == b2:
                    h = (a, c, tuple(g[i] for i in f))
                    if h not in maps:
                        maps[h] = None
                        changed = True
        if len(maps) > max_morphisms:
            continue
        morphisms = {_fname(a, b, f): (a, b) for a, b, f in maps}
        table = {_fname(a, b, f): f for a, b, f in maps}
        ids = {o: _fname(o, o, tuple(range(size[o]))) for o in objs}
        comp = {}
        for (a, b, f), (b2, c, g) in product(maps, repeat=2):
            if b == b2:
                comp[_fname(a, b, f), _fname(b, c, g)] = _fname(a, c, tuple(g[i] for i in f))
        return FinCategory(objs, morphisms, ids, comp, name="rand"), size, table
    raise RuntimeError("could not build a small random category")


def _functions(n, k):
    return list(product(range(k), repeat=n))


def random_profunctor(rng: random.Random, cat: FinCategory, size, table):
    """Either ``Set(U a, U b)`` or ``Set(U a, K) x U b`` for a random small K."""
    kind = rng.choice(["hom", "split"])
    K = rng.randint(1, 2)
    values = {}
    for a, b in product(cat.objects, repeat=2):
        if kind == "hom":
            vals = _functions(size[a], size[b])
        else:
            vals = [(phi, y) for phi in _functions(size[a], K) for y in range(size[b])]
        values[a, b] = tuple((a, b, v) for v in vals)
    lmap, rmap = {}, {}
    for (a, b), els in values.items():
        for e in els:
            v = e[2]
            for f, (a2, a_) in cat.morphisms.items():
                if a_ != a:
                    continue
                fn = table[f]
                if kind == "hom":
                    nv = tuple(v[fn[i]] for i in range(size[a2]))
                else:
                    nv = (tuple(v[0][fn[i]] for i in range(size[a2])), v[1])
                lmap[f, e] = (a2, b, nv)
            for g in cat.homs_from(b):
                gn, b2 = table[g], cat.tgt(g)
                nv = tuple(gn[i] for i in v) if kind == "hom" else (v[0], gn[v[1]])
                rmap[e, g] = (a, b2, nv)
    return FinBimodularProfunctor(cat, cat, values, lmap, rmap, name=f"rand-{kind}")


def random_coend_instance(seed: int):
    """A random category and profunctor; returns the arguments of :func:`coend`."""
    rng = random.Random(seed)
    cat, size, table = random_concrete_category(rng)
    P = random_profunctor(rng, cat, size, table)
    return cat, (lambda a, b: P.at(a, b)), (lambda m, x: P.pre(m, x)), (lambda x, m: P.post(x, m))


# tensor instances

def shift_category(j: int, k: int, labels=("a",)) -> tuple:
    """Discrete objects ``(p, q, label)`` with Z/j acting on p from the left and
    Z/k acting on q from the right."""
    M, N = discrete_cyclic(j), discrete_cyclic(k)
    objs = [(p, q, l) for p in range(j) for q in range(k) for l in labels]
    name = lambda o: f"{o[0]}.{o[1]}.{o[2]}"
    names = [name(o) for o in objs]
    mors = {f"id_{n}": (n, n) for n in names}
    C = FinCategory(names, mors, {n: f"id_{n}" for n in names},
                    {(f"id_{n}", f"id_{n}"): f"id_{n}" for n in names}, name=f"shift{j}x{k}")
    lo, lm, ro, rm = {}, {}, {}, {}
    for (p, q, l) in objs:
        for m in range(j):
            t = name(((p + m) % j, q, l))
            lo[str(m), name((p, q, l))] = t
            lm[f"id_{m}", f"id_{name((p, q, l))}"] = f"id_{t}"
        for n in range(k):
            t = name((p, (q + n) % k, l))
            ro[name((p, q, l)), str(n)] = t
            rm[f"id_{name((p, q, l))}", f"id_{n}"] = f"id_{t}"
    return FinBimodularCategory(M, C, N, lo, lm, ro, rm)


def _cyc_perm(rng, size, order):
    """A permutation of ``range(size)`` whose order divides ``order``."""
    items = list(range(size))
    rng.shuffle(items)
    perm = list(range(size))
    i = 0
    while i < size:
        lengths = [d for d in range(1, order + 1) if order % d == 0 and i + d <= size]
        d = rng.choice(lengths)
        cyc = items[i:i + d]
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            perm[a] = b
        i += d
    return perm


def random_shift_profunctor(rng, B: FinBimodularCategory, j, k, name="T"):
    """Value sets of a random constant size; strengths by commuting permutations
    whose orders divide j and k."""
    s1, s2 = rng.randint(1, 2), rng.randint(1, 2)
    sigma = _cyc_perm(rng, s1, j)
    tau = _cyc_perm(rng, s2, k)
    C = B.carrier
    values = {(x, y): tuple((x, y, (u, w)) for u in range(s1) for w in range(s2))
              for x in C.objects for y in C.objects}
    lmap = {(f"id_{x}", e): e for (x, y), els in values.items() for e in els}
    rmap = {(e, f"id_{y}"): e for (x, y), els in values.items() for e in els}
    tl, tr = {}, {}
    for (x, y), els in values.items():
        for e in els:
            u, w = e[2]
            for m in range(j):
                uu = u
                for _ in range(m):
                    uu = sigma[uu]
                tl[str(m), e] = (B.act(str(m), x), B.act(str(m), y), (uu, w))
            for n in range(k):
                ww = w
                for _ in range(n):
                    ww = tau[ww]
                tr[e, str(n)] = (B.ract(x, str(n)), B.ract(y, str(n)), (u, ww))
    return FinBimodularProfunctor(B, B, values, lmap, rmap, tl, tr, name=name)


def random_tensor_instance(seed: int):
    """``(T, R)`` with T an (M, N)- and R an (N, O)-bimodular profunctor, all cyclic."""
    rng = random.Random(seed)
    j, k, o = rng.randint(1, 2), rng.randint(1, 3), rng.randint(1, 2)
    left = shift_category(j, k, labels=tuple("ab"[:rng.randint(1, 2)]))
    right = shift_category(k, o)
    T = random_shift_profunctor(rng, left, j, k, "T")
    R = random_shift_profunctor(rng, right, k, o, "R")
    els_t, els_r = list(T.elements()), list(R.elements())
    T.point = rng.choice(els_t)
    R.point = rng.choice(els_r)
    return T, R
