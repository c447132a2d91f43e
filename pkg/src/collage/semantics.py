"""
Evaluation of diagrams in finite models.

Four evaluators share one :class:`Interpretation` record:

* :func:`eval_monoidal` -- one zero-cell, a strict monoidal model,
* :func:`eval_collage` -- bimodular graphs in a bimodular category,
* :func:`eval_functor_box` -- functor boxes through a lax monoidal functor,
* :func:`eval_internal` -- tubes, evaluated to a pointed profunctor element.

Models are strict, so a path evaluates to the tensor of its wires and a
layer to a whiskered morphism. Every layer is type-checked against the
model before it is composed.

The tube evaluator reads a diagram as a chain of pieces separated by
*sockets*. A socket is a cap ``B^ょ`` immediately followed by a cup ``C_ょ``
at the same offset; the wires around it, flattened, form a residual pair
``(P, Q)``. With ``L`` and ``R`` flattened to the unit and ``n1, e1, n2, e2``
read as identities, a piece is a morphism of V and the pieces form a chain
of pointed profunctors ``1 -/-> VxV -/-> ... -/-> 1``::

    piece_0 in V(A, P (x) B (x) Q)       piece_k in V(P (x) C (x) Q, D)

The composite is a coend over the residual pairs, where ``(m, m')`` acts by
``m (x) B (x) m'`` on the left piece and by ``m (x) C (x) m'`` on the right
piece. Plugging ``g : B -> C`` into a representative gives
``p0 ; (P (x) g (x) Q) ; p1``, and this is checked on every class member.
An opening cup at the empty path, a closing cap back to the empty path and
sockets are the only cuts understood here.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .diagram import DiagramError, OneCellPath, SlicedDiagram, normalize
from .fincat import models as fmodels
from .fincat.bimodular import FinBimodularCategory, FinBimodularProfunctor
from .fincat.category import (FinLaxMonoidalFunctor, FinMonoidalCategory, FinCategory,
                              TableError)
from .fincat.coend import sort_key
from .fincat.profunctor import (NotWellDefined, compose_pointed_profunctors,
                                composite_classes)
from .presentations import (FDOWN, FUP, TUBE_L, TUBE_R, box_segments, cap_name,
                            cup_name, syn_internal, typecheck_central)
from .sig import (BimodularGraph, Diagnostic, Edge, FunctorBoxSignature, Polygraph,
                  central_factor)

TUBE_CELLS = ("n1", "e1", "n2", "e2")


class SemanticsError(ValueError):
    pass


class MissingInterpretation(SemanticsError):
    def __init__(self, gaps: Iterable[str], what: str = "interpretation"):
        self.gaps = sorted(set(gaps))
        super().__init__(f"{what} has no entry for: {', '.join(self.gaps)}")


class SemanticTypeError(SemanticsError):
    pass


@dataclass
class Interpretation:
    """Values of 1-generators (``objects``) and 2-generators (``morphisms``) in ``model``."""
    model: object
    objects: dict = field(default_factory=dict)
    morphisms: dict = field(default_factory=dict)
    name: str = "I"
    model_name: str = ""

    def obj(self, wire: str):
        try:
            return self.objects[wire]
        except KeyError:
            raise MissingInterpretation([wire]) from None

    def mor(self, gen: str):
        try:
            return self.morphisms[gen]
        except KeyError:
            raise MissingInterpretation([gen]) from None

    def gaps(self, d: SlicedDiagram, structural: Iterable[str] = ()) -> list[str]:
        skip = set(structural)
        wires = {w.name for p in d.paths() for w in p.wires} - skip
        gens = {g.name for _, g in d.steps} - skip
        return sorted((wires - set(self.objects)) | (gens - set(self.morphisms)))


@dataclass(frozen=True)
class EvalResult:
    """A morphism together with the composite it came from."""
    value: object
    source: object
    target: object
    layers: tuple = ()

    def witness(self) -> str:
        if not self.layers:
            return f"id = {self.value}"
        return " ; ".join(map(str, self.layers)) + f" = {self.value}"

    def to_json(self) -> dict:
        return {"value": _plain(self.value), "source": _plain(self.source),
                "target": _plain(self.target), "layers": [_plain(x) for x in self.layers]}


def _plain(x):
    if isinstance(x, tuple):
        return [_plain(y) for y in x]
    return x


def _expect(cat, f, src, tgt, what):
    if f not in cat.morphisms:
        raise SemanticTypeError(f"{what}: {f!r} is not a morphism of {cat.name}")
    if (cat.src(f), cat.tgt(f)) != (src, tgt):
        raise SemanticTypeError(
            f"{what}: {f} : {cat.src(f)} -> {cat.tgt(f)}, expected {src} -> {tgt}")
    return f


def _missing(d, interp, structural=()):
    gaps = interp.gaps(d, structural)
    if gaps:
        raise MissingInterpretation(gaps)


def _fold(cat, start, layer_mors):
    acc = cat.id(start)
    for f in layer_mors:
        acc = cat.then(acc, f)
    return acc


# monoidal

def eval_monoidal(d: SlicedDiagram, i: Interpretation) -> EvalResult:
    """Fold the layers of a one-zero-cell diagram into a morphism of ``i.model``."""
    V = i.model
    if not isinstance(V, FinMonoidalCategory):
        raise SemanticsError("monoidal evaluation needs a monoidal model")
    if d.source != d.target:
        raise SemanticsError("monoidal evaluation needs a diagram over one zero-cell")
    _missing(d, i)
    val = lambda ws: V.tensor_all([i.obj(w.name) for w in ws])
    mors = []
    for layer in d.layers:
        g = layer.gen
        f = _expect(V, i.mor(g.name), val(g.dom), val(g.cod), f"generator {g.name}")
        mors.append(V.whisker([i.obj(w.name) for w in layer.left], f,
                              [i.obj(w.name) for w in layer.right]))
    start, end = val(d.domain.wires), val(d.codomain.wires)
    return EvalResult(_fold(V, start, mors), start, end, tuple(mors))


# bimodular

def _collage_value(B: FinBimodularCategory, i, names, g):
    split, why = central_factor(names, g)
    if split is None:
        raise SemanticsError(f"path {', '.join(names)}: {why}")
    ms, c, ns = split
    m = B.left.tensor_all([i.obj(x) for x in ms])
    n = B.right.tensor_all([i.obj(x) for x in ns])
    return B.act(m, B.ract(i.obj(c), n)), split


def eval_collage(d: SlicedDiagram, g: BimodularGraph, i: Interpretation) -> EvalResult:
    """Evaluate a central diagram as ``(m1 (x) ...) |> c <| (n1 (x) ...)`` morphisms."""
    B = i.model
    if not isinstance(B, FinBimodularCategory):
        raise SemanticsError("collage evaluation needs a bimodular model")
    _missing(d, i)
    Mc, C, Nc = B.left, B.carrier, B.right
    names = {w.name for p in d.paths() for w in p.wires}
    if d.source == d.target:
        # a diagram inside one region is a morphism of the acting category
        side = Mc if d.source == "M" else Nc
        objs = set(g.left_objects if d.source == "M" else g.right_objects)
        if not names <= objs:
            raise SemanticsError(f"wires {sorted(names - objs)} do not live in region {d.source}")
        return eval_monoidal(d, Interpretation(side, i.objects, i.morphisms, i.name))
    typecheck_central(d, g)
    left = {e.name for e in g.left_edges}
    right = {e.name for e in g.right_edges}
    mors = []
    for layer in d.layers:
        gen = layer.gen
        names = [w.name for w in layer.input]
        (_, (ms, c, ns)) = _collage_value(B, i, names, g)
        k, n = layer.offset, len(gen.dom)
        if gen.name in left:
            f = _expect(Mc, i.mor(gen.name), Mc.tensor_all([i.obj(w.name) for w in gen.dom]),
                        Mc.tensor_all([i.obj(w.name) for w in gen.cod]), f"left edge {gen.name}")
            mf = Mc.whisker([i.obj(x) for x in ms[:k]], f, [i.obj(x) for x in ms[k + n:]])
            rest = B.ract(i.obj(c), Nc.tensor_all([i.obj(x) for x in ns]))
            mors.append(B.act_mor(mf, C.id(rest)))
        elif gen.name in right:
            k -= len(ms) + 1
            f = _expect(Nc, i.mor(gen.name), Nc.tensor_all([i.obj(w.name) for w in gen.dom]),
                        Nc.tensor_all([i.obj(w.name) for w in gen.cod]), f"right edge {gen.name}")
            nf = Nc.whisker([i.obj(x) for x in ns[:k]], f, [i.obj(x) for x in ns[k + n:]])
            mors.append(B.act_mor(Mc.id(Mc.tensor_all([i.obj(x) for x in ms])),
                                  B.ract_mor(C.id(i.obj(c)), nf)))
        else:
            dom_v, _ = _collage_value(B, i, [w.name for w in gen.dom], g)
            cod_v, _ = _collage_value(B, i, [w.name for w in gen.cod], g)
            f = _expect(C, i.mor(gen.name), dom_v, cod_v, f"central edge {gen.name}")
            lw = [i.obj(w.name) for w in layer.left]
            rw = [i.obj(w.name) for w in layer.right]
            mors.append(B.act_mor(Mc.id(Mc.tensor_all(lw)),
                                  B.ract_mor(f, Nc.id(Nc.tensor_all(rw)))))
    start = _collage_value(B, i, d.domain.names, g)[0]
    end = _collage_value(B, i, d.codomain.names, g)[0]
    return EvalResult(_fold(C, start, mors), start, end, tuple(mors))


# functor boxes

def _units(path: OneCellPath):
    """Split a path into plain wires and whole boxes: ``(start, stop, inner names or None)``."""
    segs = {s - 1: e for s, e in box_segments(path)}
    out, k = [], 0
    while k < len(path):
        if k in segs:
            e = segs[k]
            out.append((k, e + 1, path.names[k + 1:e]))
            k = e + 1
        else:
            out.append((k, k + 1, None))
            k += 1
    return out


def _fb_kinds(s: FunctorBoxSignature) -> dict:
    kinds = {"n": "unit", "e": "merge"}
    for fam, edges in (("plain", s.plain_edges), ("box", s.box_edges),
                       ("inbox", s.in_box_edges), ("outbox", s.out_box_edges)):
        kinds.update({e.name: fam for e in edges})
    return kinds


def eval_functor_box(d: SlicedDiagram, s: FunctorBoxSignature, i: Interpretation) -> EvalResult:
    """Evaluate a functor-box diagram in the target of the lax functor ``i.model``.

    A plain wire is its object of A and a box around ``x1 ... xn`` is
    ``F(x1 (x) ... (x) xn)``. ``n`` is the unit laxator and ``e`` the
    multiplication; a box edge acts by ``F`` on the whiskered morphism of X.
    """
    F = i.model
    if not isinstance(F, FinLaxMonoidalFunctor):
        raise SemanticsError("functor-box evaluation needs a lax monoidal functor")
    X, A = F.source, F.target
    _missing(d, i, (FUP, FDOWN, "n", "e"))
    kinds = _fb_kinds(s)

    def unit_value(u):
        if u[2] is None:
            return None
        return F.obj(X.tensor_all([i.obj(x) for x in u[2]]))

    def path_units(path):
        try:
            us = _units(path)
        except DiagramError as err:
            raise SemanticsError(f"ill-formed box nesting: {err}") from None
        return [(u, i.obj(path.names[u[0]]) if u[2] is None else unit_value(u)) for u in us]

    mors = []
    for layer in d.layers:
        gen = layer.gen
        kind = kinds[gen.name]
        inp = OneCellPath(d.domain.start, layer.input)
        out = OneCellPath(d.domain.start, layer.output)
        ui, uo = path_units(inp), path_units(out)
        lo, hi = layer.offset, layer.offset + len(gen.dom)
        if kind == "box":
            # the box that contains the edge
            idx = next(j for j, (u, _) in enumerate(ui)
                       if u[2] is not None and u[0] < lo and hi < u[1])
            u = ui[idx][0]
            inner = list(u[2])
            a = lo - u[0] - 1
            f = _expect(X, i.mor(gen.name), X.tensor_all([i.obj(w.name) for w in gen.dom]),
                        X.tensor_all([i.obj(w.name) for w in gen.cod]), f"box edge {gen.name}")
            xf = X.whisker([i.obj(x) for x in inner[:a]], f,
                           [i.obj(x) for x in inner[a + len(gen.dom):]])
            core = F.mor(xf)
            before, after = [v for _, v in ui[:idx]], [v for _, v in ui[idx + 1:]]
        else:
            first = next((j for j, (u, _) in enumerate(ui) if u[0] >= lo), len(ui))
            last = next((j for j, (u, _) in enumerate(ui) if u[0] >= hi), len(ui))
            if kind == "merge":
                first -= 1
            covered = [v for _, v in ui[first:last]]
            n_out = len(uo) - (len(ui) - (last - first))
            produced = [v for _, v in uo[first:first + n_out]]
            src, tgt = A.tensor_all(covered), A.tensor_all(produced)
            if kind == "unit":
                core = _expect(A, F.epsilon, src, tgt, "epsilon")
            elif kind == "merge":
                xs = [X.tensor_all([i.obj(x) for x in u[2]]) for u, _ in ui[first:last]]
                core = _expect(A, F.laxator(*xs), src, tgt, f"mu{tuple(xs)}")
            else:
                core = _expect(A, i.mor(gen.name), src, tgt, f"{kind} edge {gen.name}")
            before, after = [v for _, v in ui[:first]], [v for _, v in ui[last:]]
        mors.append(A.whisker(before, core, after))
    start = A.tensor_all([v for _, v in path_units(d.domain)])
    end = A.tensor_all([v for _, v in path_units(d.codomain)])
    return EvalResult(_fold(A, start, mors), start, end, tuple(mors))


# internal diagrams

@dataclass
class Socket:
    hole_in: object
    hole_out: object
    residual: tuple
    names: tuple = ()


@dataclass
class InternalValue:
    """A point of a composite of pointed profunctors, with its pieces kept for plugging."""
    V: FinMonoidalCategory
    pieces: list
    sockets: list
    composite: FinBimodularProfunctor
    chain: list = field(default_factory=list)

    @property
    def point(self):
        return self.composite.point

    def plug(self, gs: Sequence = ()) -> object:
        """The morphism obtained by filling each socket, checked on whole classes."""
        if len(gs) != len(self.sockets):
            raise SemanticsError(f"{len(self.sockets)} sockets, {len(gs)} plugs given")
        V = self.V
        for g, sock in zip(gs, self.sockets):
            _expect(V, g, sock.hole_in, sock.hole_out, "plug")
        memo = {}

        def value(level, elem):
            if level == 0:
                return elem[2]
            key = (level, elem)
            if key not in memo:
                left, right = self.chain[level - 1], self.pieces[level]
                x, z, rep = elem
                classes = composite_classes(left, right, x, z)
                members = next(c for c in classes.classes if classes.rep(rep) == c[0])
                out = set()
                for p, q in members:
                    P, Q = q[0]
                    plugged = V.tensor_mors([V.id(P), gs[level - 1], V.id(Q)])
                    out.add(V.compose(value(level - 1, p), plugged, q[2]))
                if len(out) != 1:
                    raise NotWellDefined(f"plugging is not constant on the class of {rep!r}: "
                                         f"{sorted(out, key=sort_key)}")
                memo[key] = out.pop()
            return memo[key]

        return value(len(self.sockets), self.point)

    def classes(self):
        return self.composite.at("*", "*")

    def to_json(self) -> dict:
        return {"point": repr(self.point[2]), "classes": len(self.classes()),
                "sockets": [list(s.names) for s in self.sockets]}


def _flat(i: Interpretation, wires) -> list:
    return [i.obj(w.name) for w in wires if w.name not in (TUBE_L, TUBE_R)]


def _cut_kind(name: str, p: Polygraph):
    for o in p.objects:
        if name == cup_name(o):
            return "cup", o
        if name == cap_name(o):
            return "cap", o
    return None, None


def _pieces(d: SlicedDiagram, p: Polygraph, i: Interpretation):
    """Split a tube diagram at its cuts into V-morphisms and sockets."""
    V = i.model
    layers = d.layers
    pieces, sockets = [], []
    if not d.domain.wires:
        src = V.unit
    else:
        src = V.tensor_all(_flat(i, d.domain.wires))
    acc, src_spec = V.id(src), ("fixed", src)
    k = 0
    while k < len(layers):
        layer = layers[k]
        kind, obj = _cut_kind(layer.gen.name, p)
        left, right = _flat(i, layer.left), _flat(i, layer.right)
        if kind == "cup" and k == 0 and not d.domain.wires:
            a = i.obj(obj)
            acc, src_spec = V.id(a), ("fixed", a)
            k += 1
            continue
        if kind == "cap":
            nxt = layers[k + 1] if k + 1 < len(layers) else None
            nkind, nobj = _cut_kind(nxt.gen.name, p) if nxt else (None, None)
            if nkind == "cup" and nxt.offset == layer.offset:
                P, Q = V.tensor_all(left), V.tensor_all(right)
                b, c = i.obj(obj), i.obj(nobj)
                pieces.append((src_spec, ("pair", b), acc, (P, Q)))
                sockets.append(Socket(b, c, (P, Q), (obj, nobj)))
                src_spec = ("pair", c)
                acc = V.id(V.tensor_all([P, c, Q]))
                k += 2
                continue
            if k == len(layers) - 1 and not layer.output:
                pieces.append((src_spec, ("fixed", i.obj(obj)), acc, None))
                return pieces, sockets
        if kind is not None:
            raise SemanticsError(
                f"unsupported cut: {layer.gen.name} at layer {k}, offset {layer.offset}")
        g = layer.gen
        if g.name in TUBE_CELLS:
            f = V.id(V.tensor_all(_flat(i, g.dom)))
        else:
            f = _expect(V, i.mor(g.name), V.tensor_all(_flat(i, g.dom)),
                        V.tensor_all(_flat(i, g.cod)), f"edge {g.name}")
        acc = V.then(acc, V.whisker(left, f, right))
        k += 1
    end = V.tensor_all(_flat(i, d.codomain.wires))
    pieces.append((src_spec, ("fixed", end), acc, None))
    return pieces, sockets


def _piece_profunctor(V, VV, one, spec_in, spec_out, point_pair_in, point_pair_out, f, name):
    """The pointed profunctor whose values are V-morphisms between two ends.

    A ``("fixed", a)`` end lives over the unit category; a ``("pair", b)`` end
    over VxV, where the residual pair ``(P, Q)`` means ``P (x) b (x) Q``.
    """
    def ends(spec):
        if spec[0] == "fixed":
            return one.category, {"*": spec[1]}
        b = spec[1]
        return VV.category, {pq: V.tensor_all([pq[0], b, pq[1]]) for pq in VV.objects}

    def mor_on(spec, m):
        if spec[0] == "fixed":
            return V.id(spec[1])
        return V.tensor_mors([m[0], V.id(spec[1]), m[1]])

    C, cin = ends(spec_in)
    D, cout = ends(spec_out)
    values = {(x, y): tuple((x, y, h) for h in V.hom(cin[x], cout[y]))
              for x in C.objects for y in D.objects}
    lmap, rmap = {}, {}
    for (x, y), els in values.items():
        for e in els:
            for m in C.morphisms:
                if C.tgt(m) == x:
                    lmap[m, e] = (C.src(m), y, V.then(mor_on(spec_in, m), e[2]))
            for m in D.homs_from(y):
                rmap[e, m] = (x, D.tgt(m), V.then(e[2], mor_on(spec_out, m)))
    x0 = "*" if spec_in[0] == "fixed" else point_pair_in
    y0 = "*" if spec_out[0] == "fixed" else point_pair_out
    return FinBimodularProfunctor(C, D, values, lmap, rmap, point=(x0, y0, f), name=name)


def eval_internal(d: SlicedDiagram, p: Polygraph, i: Interpretation) -> InternalValue:
    """Evaluate a tube diagram over ``syn_internal(p)`` to a pointed profunctor element."""
    V = i.model
    if not isinstance(V, FinMonoidalCategory):
        raise SemanticsError("internal evaluation needs a monoidal model")
    structural = {TUBE_L, TUBE_R, *TUBE_CELLS}
    structural |= {cap_name(o) for o in p.objects} | {cup_name(o) for o in p.objects}
    _missing(d, i, structural)
    missing = sorted(o for o in p.objects if o not in i.objects
                     and any(w.name in (cap_name(o), cup_name(o)) for _, w in d.steps))
    if missing:
        raise MissingInterpretation(missing)
    raw, sockets = _pieces(d, p, i)
    one = fmodels.unit_category()
    VV = fmodels.product(V, V)
    profs = []
    for n, (spec_in, spec_out, f, pair_out) in enumerate(raw):
        pair_in = raw[n - 1][3] if n else None
        profs.append(_piece_profunctor(V, VV, one, spec_in, spec_out, pair_in, pair_out, f,
                                       f"piece{n}"))
    chain = [profs[0]]
    for q in profs[1:]:
        chain.append(compose_pointed_profunctors(chain[-1], q))
    return InternalValue(V, profs, sockets, chain[-1], chain)


def comb_diagram(graph) -> SlicedDiagram:
    """The comb ``A -> M, B`` then hole ``B -> C`` then ``M, C -> D`` as tubes.

    ``graph`` is the 2-graph of ``syn_internal`` over objects A, M, B, C, D
    with edges ``f : A -> M, B`` and ``h : M, C -> D``.
    """
    g = graph.gen
    steps = [(0, g(cup_name("A"))), (1, g("f")), (2, g("n2")), (3, g(cap_name("B"))),
             (3, g(cup_name("C"))), (2, g("e1")), (1, g("h")), (0, g(cap_name("D")))]
    return SlicedDiagram.from_steps(OneCellPath("I"), steps)


COMB_POLYGRAPH = Polygraph(("A", "M", "B", "C", "D"),
                           (Edge("f", ("A",), ("M", "B")), Edge("h", ("M", "C"), ("D",))))


@dataclass(frozen=True)
class CombResult:
    direct: object
    internal: object
    value: InternalValue

    @property
    def agree(self) -> bool:
        return self.direct == self.internal


def comb_eval(f, h, g, V: FinMonoidalCategory, objects: dict) -> CombResult:
    """Evaluate the comb ``(f, h)`` plugged with ``g`` directly and through tubes.

    ``objects`` assigns V-objects to A, M, B, C, D.
    """
    A, M, B, C, D = (objects[k] for k in "AMBCD")
    _expect(V, f, A, V.tensor(M, B), "comb f")
    _expect(V, h, V.tensor(M, C), D, "comb h")
    _expect(V, g, B, C, "plug")
    direct = V.compose(f, V.tensor_mor(V.id(M), g), h)
    pres = syn_internal(COMB_POLYGRAPH)
    d = comb_diagram(pres.graph)
    interp = Interpretation(V, dict(objects), {"f": f, "h": h}, name="comb")
    value = eval_internal(d, COMB_POLYGRAPH, interp)
    return CombResult(direct, value.plug([g]), value)


# theories, models and soundness

def evaluate(theory, d: SlicedDiagram, i: Interpretation):
    """Dispatch on the kind of ``theory``."""
    kind = theory.kind
    if kind in ("monoidal", "two"):
        return eval_monoidal(d, i)
    if kind == "bimodular":
        return eval_collage(d, theory.signature, i)
    if kind == "functorbox":
        return eval_functor_box(d, theory.signature, i)
    if kind == "internal":
        return eval_internal(d, theory.signature, i)
    raise SemanticsError(f"no evaluator for {kind} theories")


def result_key(r):
    """What two evaluations must share to count as equal."""
    if isinstance(r, InternalValue):
        return r.point
    return r.value


def _table_model(table: dict) -> FinMonoidalCategory:
    objects = table["objects"]
    morphisms = {f: (a, b) for f, a, b in table["morphisms"]}
    cat = FinCategory(objects, morphisms, table["identities"], table["compose"])
    tobj = {k: v for k, v in table["tensor"].items() if k[0] in objects and k[1] in objects}
    tmor = {k: v for k, v in table["tensor"].items() if k not in tobj}
    return FinMonoidalCategory(cat, table["unit"], tobj, tmor)


def build_model(decl):
    """A fincat value from a parsed model declaration."""
    if decl.table is not None:
        return _table_model(decl.table)
    return fmodels.build(decl.constructor, decl.args)


def interpretation_of(doc, decl) -> Interpretation:
    theory = doc.theory(decl.theory)
    if decl.target not in doc.models:
        raise MissingInterpretation([decl.target], "model table")
    model = build_model(doc.models[decl.target])
    graph = theory.graph
    objects, morphisms = {}, {}
    for k, v in decl.mapping:
        if graph.has_wire(k):
            objects[k] = v
        else:
            morphisms[k] = v
    return Interpretation(model, objects, morphisms, decl.name, decl.target)


def interpretations_for(doc, theory_name: str) -> list[Interpretation]:
    return [interpretation_of(doc, decl) for decl in doc.interpretations.values()
            if decl.theory == theory_name]


def check_interpretation(theory, i: Interpretation) -> list[Diagnostic]:
    """Evaluate every generator on its own; each failure is one diagnostic."""
    out = []
    kind = theory.kind
    sig = theory.signature
    graph = theory.graph
    if kind == "bimodular":
        M_, N_ = i.model.left, i.model.right
        for fam, cat, edges in (("left", M_, sig.left_edges), ("right", N_, sig.right_edges)):
            for e in edges:
                try:
                    _expect(cat, i.mor(e.name), cat.tensor_all([i.obj(x) for x in e.dom]),
                            cat.tensor_all([i.obj(x) for x in e.cod]), f"{fam} edge {e.name}")
                except (SemanticsError, TableError) as err:
                    out.append(Diagnostic("interpretation typing", e.name, str(err)))
        names = [e.name for e in sig.central_edges]
    elif kind == "functorbox":
        F = i.model
        X, A = F.source, F.target
        ax = lambda ns: A.tensor_all([i.obj(x) for x in ns])
        xx = lambda ns: X.tensor_all([i.obj(x) for x in ns])
        fx = lambda ns: F.obj(xx(ns))
        for fam, cat, edges, dom, cod in (
                ("plain", A, sig.plain_edges, ax, ax), ("box", X, sig.box_edges, xx, xx),
                ("in-box", A, sig.in_box_edges, ax, fx), ("out-box", A, sig.out_box_edges, fx, ax)):
            for e in edges:
                try:
                    _expect(cat, i.mor(e.name), dom(e.dom), cod(e.cod), f"{fam} edge {e.name}")
                except (SemanticsError, TableError, KeyError) as err:
                    out.append(Diagnostic("interpretation typing", e.name, str(err)))
        return out
    elif kind == "internal":
        names = [e.name for e in sig.edges]
    else:
        names = [e.name for e in graph.two_generators]
    for n in names:
        try:
            d = graph.generator(n)
            if kind == "internal":
                V = i.model
                e = next(x for x in sig.edges if x.name == n)
                _expect(V, i.mor(n), V.tensor_all([i.obj(x) for x in e.dom]),
                        V.tensor_all([i.obj(x) for x in e.cod]), f"edge {n}")
            else:
                evaluate(theory, d, i)
        except (SemanticsError, TableError, DiagramError) as err:
            out.append(Diagnostic("interpretation typing", n, str(err)))
    return out


@dataclass
class SoundnessReport:
    trace_ok: bool
    message: str
    verdicts: dict

    @property
    def ok(self) -> bool:
        return self.trace_ok and all(v["equal"] for v in self.verdicts.values())

    def to_json(self) -> str:
        return json.dumps({"trace": self.trace_ok, "message": self.message,
                           "models": self.verdicts, "ok": self.ok}, sort_keys=True)


def soundness_check(theory, d1: SlicedDiagram, d2: SlicedDiagram, trace, interps: Sequence[Interpretation],
                    rules=None) -> SoundnessReport:
    """Validate the trace from ``d1`` to ``d2``, then compare evaluations model by model."""
    from .rewrite import theory_rules, validate_trace
    rules = theory_rules(theory) if rules is None else rules
    if trace is None or not trace.steps:
        ok = normalize(d1) == normalize(d2)
        msg = "empty trace" if ok else "empty trace between different diagrams"
    else:
        chk = validate_trace(trace, rules, end=d2)
        ok, msg = chk.ok, chk.message

    def one(i):
        try:
            a, b = result_key(evaluate(theory, d1, i)), result_key(evaluate(theory, d2, i))
            return i.name, {"equal": a == b, "lhs": repr(a), "rhs": repr(b)}
        except (SemanticsError, TableError, DiagramError) as err:
            return i.name, {"equal": False, "error": str(err)}

    with ThreadPoolExecutor(max_workers=max(1, min(4, len(interps)))) as pool:
        results = sorted(pool.map(one, interps))
    return SoundnessReport(ok, msg, dict(results))


def distinct_witness(theory, interps: Sequence[Interpretation]) -> Callable:
    """A ``bounded_eq`` hook: two diagrams are distinct when some model separates them."""
    def witness(d1, d2):
        for i in interps:
            try:
                a, b = result_key(evaluate(theory, d1, i)), result_key(evaluate(theory, d2, i))
            except (SemanticsError, TableError, DiagramError):
                continue
            if a != b:
                return f"{i.name}: {a!r} != {b!r}"
        return None
    return witness
