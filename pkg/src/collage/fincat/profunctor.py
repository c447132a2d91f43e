"""
Composition and tensor of (pointed, bimodular) profunctors.

Composite elements are tagged ``(X, Z, (p, q))`` where ``(p, q)`` is the
canonical representative of its coend class; every induced action is
computed from every member of a class and must agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bimodular import FinBimodularProfunctor
from .category import TableError
from .coend import CoendResult, coend, quotient, sort_key


class CompositionMismatch(ValueError):
    pass


class NotWellDefined(ValueError):
    pass


def _same_category(a, b) -> bool:
    return a is b or (set(a.objects) == set(b.objects) and a.morphisms == b.morphisms)


def _induced(classes: CoendResult, members, fn, what):
    """Apply ``fn`` to every member of a class; all results must coincide."""
    results = {fn(x) for x in members}
    if len(results) != 1:
        raise NotWellDefined(f"{what} is not well defined on the class of {members[0]!r}: {sorted(results, key=sort_key)}")
    return results.pop()


def compose_pointed_profunctors(P: FinBimodularProfunctor, Q: FinBimodularProfunctor,
                                name: str | None = None) -> FinBimodularProfunctor:
    """``(P ; Q)(X, Z) = \\int^Y P(X, Y) x Q(Y, Z)``."""
    D = P.tgt_cat
    if not _same_category(D, Q.src_cat):
        raise CompositionMismatch(f"{P.name} ends in {D.name}, {Q.name} starts in {Q.src_cat.name}")
    C, E = P.src_cat, Q.tgt_cat
    parts: dict = {}
    for x in C.objects:
        for z in E.objects:
            parts[x, z] = coend(
                D,
                lambda a, b, x=x, z=z: [(p, q) for p in P.at(x, b) for q in Q.at(a, z)],
                lambda m, pq: (pq[0], Q.pre(m, pq[1])),
                lambda pq, m: (P.post(pq[0], m), pq[1]))

    def tag(x, z, pq):
        return (x, z, parts[x, z].rep(pq))

    values, members = {}, {}
    for (x, z), res in parts.items():
        values[x, z] = tuple((x, z, c[0]) for c in res.classes)
        for c in res.classes:
            members[x, z, c[0]] = c
    lmap, rmap = {}, {}
    for (x, z, rep), cls in members.items():
        e = (x, z, rep)
        for f in C.morphisms:
            if C.tgt(f) == x:
                x2 = C.src(f)
                lmap[f, e] = _induced(parts[x, z], cls, lambda pq: tag(x2, z, (P.pre(f, pq[0]), pq[1])),
                                      f"left action of {f}")
        for g in E.homs_from(z):
            z2 = E.tgt(g)
            rmap[e, g] = _induced(parts[x, z], cls, lambda pq: tag(x, z2, (pq[0], Q.post(pq[1], g))),
                                  f"right action of {g}")
    tl = tr = None
    S, R = P.source, Q.target
    if P.tl is not None and Q.tl is not None:
        tl = {}
        for (x, z, rep), cls in members.items():
            for m in S.left.objects:
                tl[m, (x, z, rep)] = _induced(
                    parts[x, z], cls,
                    lambda pq: tag(S.act(m, x), R.act(m, z),
                                   (P.strength_left(m, pq[0]), Q.strength_left(m, pq[1]))),
                    f"left strength t_{m}")
    if P.tr is not None and Q.tr is not None:
        tr = {}
        for (x, z, rep), cls in members.items():
            for n in S.right.objects:
                tr[(x, z, rep), n] = _induced(
                    parts[x, z], cls,
                    lambda pq: tag(S.ract(x, n), R.ract(z, n),
                                   (P.strength_right(pq[0], n), Q.strength_right(pq[1], n))),
                    f"right strength t^{n}")
    point = None
    if P.point is not None and Q.point is not None:
        if P.point[1] != Q.point[0]:
            raise CompositionMismatch(
                f"points do not meet: {P.name} ends at {P.point[1]}, {Q.name} starts at {Q.point[0]}")
        x, z = P.point[0], Q.point[1]
        point = tag(x, z, (P.point, Q.point))
    return FinBimodularProfunctor(P.source, Q.target, values, lmap, rmap, tl, tr, point,
                                  name=name or f"{P.name};{Q.name}")


def composite_classes(P, Q, x, z) -> CoendResult:
    """The coend partition behind ``(P ; Q)(x, z)``, for inspection and oracles."""
    D = P.tgt_cat
    return coend(D, lambda a, b: [(p, q) for p in P.at(x, b) for q in Q.at(a, z)],
                 lambda m, pq: (pq[0], Q.pre(m, pq[1])),
                 lambda pq, m: (P.post(pq[0], m), pq[1]))


@dataclass
class TensorQuotient:
    """``T (x)_N R`` as pairs of elements modulo ``(t^n(x), y) ~ (x, t_n(y))``.

    ``tl`` is induced by the left strengths of ``T`` and ``tr`` by the right
    strengths of ``R``; both are maps on class representatives.
    """
    classes: CoendResult
    elements: tuple
    pairs: tuple
    tl: dict = field(default_factory=dict)
    tr: dict = field(default_factory=dict)
    point: tuple | None = None

    def __len__(self):
        return len(self.classes)


def tensor_relation(T: FinBimodularProfunctor, R: FinBimodularProfunctor):
    """All pairs of elements and the generating identifications."""
    N = T.source.right
    if not _same_category(N.category, R.source.left.category) or N.unit != R.source.left.unit:
        raise CompositionMismatch("the right action of T and the left action of R differ")
    t_els, r_els = list(T.elements()), list(R.elements())
    elements = [(x, y) for x in t_els for y in r_els]
    pairs = []
    for n in sorted(N.objects, key=sort_key):
        for x in t_els:
            tx = T.strength_right(x, n)
            for y in r_els:
                pairs.append(((tx, y), (x, R.strength_left(n, y))))
    return elements, pairs


def tensor_bimodular_profunctors(T: FinBimodularProfunctor, R: FinBimodularProfunctor,
                                 check: bool = True) -> TensorQuotient:
    elements, pairs = tensor_relation(T, R)
    classes = quotient(elements, pairs)
    out = TensorQuotient(classes, tuple(elements), tuple(pairs))
    members = {c[0]: c for c in classes.classes}
    if T.tl is not None:
        for rep, cls in members.items():
            for m in T.source.left.objects:
                fn = lambda xy: classes.rep((T.strength_left(m, xy[0]), xy[1]))
                out.tl[m, rep] = (_induced(classes, cls, fn, f"outer strength t_{m}")
                                  if check else fn(rep))
    if R.tr is not None:
        for rep, cls in members.items():
            for o in R.source.right.objects:
                fn = lambda xy: classes.rep((xy[0], R.strength_right(xy[1], o)))
                out.tr[rep, o] = (_induced(classes, cls, fn, f"outer strength t^{o}")
                                  if check else fn(rep))
    if T.point is not None and R.point is not None:
        out.point = classes.rep((T.point, R.point))
    return out


def outer_strength_violations(T, R, q: TensorQuotient) -> list[str]:
    """Members of one class whose images under an outer strength land in different classes."""
    bad = []
    for cls in q.classes.classes:
        if T.tl is not None:
            for m in T.source.left.objects:
                imgs = {q.classes.rep((T.strength_left(m, x), y)) for x, y in cls}
                if len(imgs) > 1:
                    bad.append(f"t_{m} on class of {cls[0]!r}")
        if R.tr is not None:
            for o in R.source.right.objects:
                imgs = {q.classes.rep((x, R.strength_right(y, o))) for x, y in cls}
                if len(imgs) > 1:
                    bad.append(f"t^{o} on class of {cls[0]!r}")
    return bad


def check_equilibrators(tau, left_cat, middle, right_cat) -> list[str]:
    """Equilibrator coherence on user-supplied data.

    ``tau[x, n, y]`` is a morphism name; the pair category's composition is
    given by ``compose`` inside ``tau["compose"]``. Checks
    ``tau(x, m (x) n, y) = tau(x <| m, n, y) ; tau(x, m, n |> y)`` and
    ``tau(x, I, y) = id``.
    """
    compose = tau["compose"]
    ident = tau["identity"]
    bad = []
    for x in left_cat.carrier.objects:
        for y in right_cat.carrier.objects:
            if tau[x, middle.unit, y] != ident(x, y):
                bad.append(f"tau({x}, I, {y}) is not the identity")
            for m in middle.objects:
                for n in middle.objects:
                    lhs = tau[x, middle.tensor(m, n), y]
                    try:
                        rhs = compose(tau[left_cat.ract(x, m), n, y], tau[x, m, right_cat.act(n, y)])
                    except (KeyError, TableError):
                        bad.append(f"tau({x}, {m}, {n}, {y}) composite undefined")
                        continue
                    if lhs != rhs:
                        bad.append(f"tau({x}, {m}(x){n}, {y}) != composite")
    return bad
