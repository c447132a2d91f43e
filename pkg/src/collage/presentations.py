"""
Syntactic 2-categories built from signatures.

* :func:`collage_of` -- the two-0-cell collage of a bimodular graph,
* :func:`syn_functor_box` -- functor boxes as an adjunction ``Fup -| Fdown``,
* :func:`syn_internal` -- tubes for internal diagrams, with their 3-cells as
  rewrite rules.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .diagram import (BoundaryMismatch, DiagramError, OneCellPath, SlicedDiagram,
                      identity, normalize)
from .sig import (BimodularGraph, Diagnostic, Edge, EquationSet, Equation,
                  FunctorBoxSignature, OneGen, Polygraph, TwoGraph, central_factor,
                  validate_signature)

M, N = "M", "N"
PLAIN, BOX = "A", "X"
OUTSIDE, INSIDE = "I", "G"
FUP, FDOWN = "Fup", "Fdown"
TUBE_L, TUBE_R = "L", "R"


class CentralTypingError(DiagramError):
    """A bimodular diagram whose wires do not factor as (M-wires, central, N-wires)."""

    def __init__(self, message, reason, layer=None):
        super().__init__(message)
        self.reason = reason
        self.layer = layer


class ResourceLimitExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class BipointedTwoGraph:
    graph: TwoGraph
    pointM: str = M
    pointN: str = N

    def __post_init__(self):
        for p in (self.pointM, self.pointN):
            if p not in self.graph.zero_cells:
                raise ValueError(f"chosen zero-cell {p!r} is not in the graph")


@dataclass(frozen=True)
class CentralTyping:
    domain: tuple[tuple[str, ...], str, tuple[str, ...]]
    codomain: tuple[tuple[str, ...], str, tuple[str, ...]]


@dataclass(frozen=True)
class AdjointPair:
    up: str
    down: str
    unit: str
    counit: str


@dataclass(frozen=True)
class FunctorBoxPresentation:
    graph: TwoGraph
    pair: AdjointPair
    equations: EquationSet


@dataclass(frozen=True)
class InternalPresentation:
    graph: TwoGraph
    pairs: tuple[AdjointPair, ...]
    rules: tuple = field(default=(), compare=False)


def _reserved(names, reserved, what):
    clash = sorted(set(names) & set(reserved))
    if clash:
        raise ValueError(f"{what}: names {clash} are reserved by the presentation")


# collage

def collage_of(g: BimodularGraph) -> BipointedTwoGraph:
    ones = ([OneGen(o, M, M) for o in g.left_objects]
            + [OneGen(o, N, N) for o in g.right_objects]
            + [OneGen(o, M, N) for o in g.center_objects])
    twos = ([replace(e, cell=M) for e in g.left_edges] + [replace(e, cell=N) for e in g.right_edges]
            + list(g.central_edges))
    return BipointedTwoGraph(TwoGraph((M, N), tuple(ones), tuple(twos)), M, N)


def chosen_graph(b: BipointedTwoGraph) -> BimodularGraph:
    """Read a bimodular graph back off a bipointed 2-graph."""
    g, m, n = b.graph, b.pointM, b.pointN
    objs = {key: tuple(o.name for o in g.one_generators if (o.src, o.tgt) == key)
            for key in ((m, m), (n, n), (m, n))}
    edges = {key: [] for key in objs}
    for e in g.two_generators:
        gen = g.gen(e.name)
        key = (gen.src, gen.tgt)
        if key in edges:
            edges[key].append(e)
    return BimodularGraph(objs[m, m], objs[n, n], objs[m, n],
                          tuple(edges[m, m]), tuple(edges[n, n]), tuple(edges[m, n]))


def typecheck_central(d: SlicedDiagram, g: BimodularGraph) -> CentralTyping:
    """Factor every path of ``d`` as (left wires, one central wire, right wires)."""
    factors = []
    for i, path in enumerate(d.paths()):
        split, why = central_factor(path.names, g)
        if split is None:
            where = "domain" if i == 0 else f"output of layer {i - 1}"
            ncent = sum(n in g.center_objects for n in path.names)
            reason = ("no central wire" if ncent == 0 else
                      "more than one central wire" if ncent > 1 else "wire order")
            raise CentralTypingError(f"{where}: {why}", reason, layer=i - 1 if i else None)
        factors.append(split)
    return CentralTyping(factors[0], factors[-1])


def central_mismatch(err: BoundaryMismatch, g: BimodularGraph) -> CentralTypingError | None:
    """Reinterpret a boundary mismatch on the central wire as a typing error."""
    if err.expected is None or err.found is None:
        return None
    center = set(g.center_objects)
    want = [w.name for w in err.expected if w.name in center]
    got = [w.name for w in err.found if w.name in center]
    if want and got and want != got:
        return CentralTypingError(
            f"central wire mismatch: expected {', '.join(want)}, found {', '.join(got)}",
            "central state mismatch")
    return None


def unit_iso_check(g: BimodularGraph) -> dict:
    """Compare the edges of ``g`` with the chosen 2-generators of its collage."""
    b = collage_of(g)
    back = chosen_graph(b)
    families = (("left", g.left_edges, back.left_edges),
                ("central", g.central_edges, back.central_edges),
                ("right", g.right_edges, back.right_edges))
    counts, mismatches = {}, []
    for name, ours, theirs in families:
        counts[name] = (len(ours), len(theirs))
        a = {(e.name, e.dom, e.cod) for e in ours}
        b_ = {(e.name, e.dom, e.cod) for e in theirs}
        for item in sorted(a ^ b_):
            mismatches.append(f"{name} edge {item[0]} only on one side")
    for name, ours, theirs in (("left", g.left_objects, back.left_objects),
                               ("right", g.right_objects, back.right_objects),
                               ("center", g.center_objects, back.center_objects)):
        if set(ours) != set(theirs):
            mismatches.append(f"{name} objects differ")
    reverse = [o.name for o in b.graph.one_generators if (o.src, o.tgt) == (N, M)]
    if reverse:
        mismatches.append(f"1-generators from N to M: {reverse}")
    return {"ok": not mismatches, "counts": counts, "mismatches": mismatches}


# functor boxes

def syn_functor_box(s: FunctorBoxSignature) -> FunctorBoxPresentation:
    names = s.plain_objects + s.box_objects + tuple(
        e.name for e in s.plain_edges + s.box_edges + s.in_box_edges + s.out_box_edges)
    _reserved(names, (FUP, FDOWN, "n", "e"), "functor-box signature")
    ones = ([OneGen(o, PLAIN, PLAIN) for o in s.plain_objects]
            + [OneGen(o, BOX, BOX) for o in s.box_objects]
            + [OneGen(FUP, PLAIN, BOX), OneGen(FDOWN, BOX, PLAIN)])
    twos = [Edge("n", (), (FUP, FDOWN)), Edge("e", (FDOWN, FUP), ())]
    twos += list(s.plain_edges) + list(s.box_edges)
    twos += [Edge(e.name, e.dom, (FUP,) + e.cod + (FDOWN,), e.pos) for e in s.in_box_edges]
    twos += [Edge(e.name, (FUP,) + e.dom + (FDOWN,), e.cod, e.pos) for e in s.out_box_edges]
    graph = TwoGraph((PLAIN, BOX), tuple(ones), tuple(twos))
    pair = AdjointPair(FUP, FDOWN, "n", "e")
    return FunctorBoxPresentation(graph, pair, EquationSet(tuple(snake_equations(graph, pair))))


def snake_equations(graph: TwoGraph, pair: AdjointPair, names=None) -> list[Equation]:
    """``(down | unit) ; (counit | down) = id`` and ``(unit | up) ; (up | counit) = id``."""
    up, down = graph.wire(pair.up), graph.wire(pair.down)
    unit, counit = graph.gen(pair.unit), graph.gen(pair.counit)
    on_down = SlicedDiagram.from_steps(OneCellPath(down.src, (down,)), [(1, unit), (0, counit)])
    on_up = SlicedDiagram.from_steps(OneCellPath(up.src, (up,)), [(0, unit), (1, counit)])
    first, second = names or (f"snake_{pair.down}", f"snake_{pair.up}")
    return [Equation(first, on_down, identity(on_down.domain)),
            Equation(second, on_up, identity(on_up.domain))]


def box_segments(path: OneCellPath) -> list[tuple[int, int]]:
    """Index ranges ``[i, j)`` of the box contents between matched Fup ... Fdown."""
    out, opened = [], None
    for i, w in enumerate(path.wires):
        if w.name == FUP:
            if opened is not None:
                raise DiagramError(f"nested {FUP} at position {i}")
            opened = i + 1
        elif w.name == FDOWN:
            if opened is None:
                raise DiagramError(f"unmatched {FDOWN} at position {i}")
            out.append((opened, i))
            opened = None
    if opened is not None:
        raise DiagramError(f"unmatched {FUP} at position {opened - 1}")
    return out


# internal diagrams

def cap_name(obj: str) -> str:
    """Tube end ``L ; A ; R -> id``."""
    return f"{obj}^ょ"


def cup_name(obj: str) -> str:
    """Tube start ``id -> L ; A ; R``."""
    return f"{obj}_ょ"


def syn_internal(p: Polygraph) -> InternalPresentation:
    names = p.objects + tuple(e.name for e in p.edges)
    _reserved(names, (TUBE_L, TUBE_R, "n1", "e1", "n2", "e2"), "polygraph")
    ones = ([OneGen(o, INSIDE, INSIDE) for o in p.objects]
            + [OneGen(TUBE_L, OUTSIDE, INSIDE), OneGen(TUBE_R, INSIDE, OUTSIDE)])
    twos = [Edge("n1", (), (TUBE_L, TUBE_R)), Edge("e1", (TUBE_R, TUBE_L), ()),
            Edge("n2", (), (TUBE_R, TUBE_L)), Edge("e2", (TUBE_L, TUBE_R), ())]
    for o in p.objects:
        twos += [Edge(cap_name(o), (TUBE_L, o, TUBE_R), ()),
                 Edge(cup_name(o), (), (TUBE_L, o, TUBE_R))]
    twos += list(p.edges)
    graph = TwoGraph((OUTSIDE, INSIDE), tuple(ones), tuple(twos))
    pairs = (AdjointPair(TUBE_L, TUBE_R, "n1", "e1"), AdjointPair(TUBE_R, TUBE_L, "n2", "e2"))
    from .rewrite import internal_rules
    return InternalPresentation(graph, pairs, tuple(internal_rules(graph, p)))


# enumeration

@dataclass(frozen=True)
class HomEnumeration:
    diagrams: tuple[SlicedDiagram, ...]
    bounded: bool = False

    def __len__(self):
        return len(self.diagrams)

    def __iter__(self):
        return iter(self.diagrams)


def _placements(graph: TwoGraph, path: OneCellPath):
    for name in sorted(graph.gens):
        gen = graph.gens[name]
        n = len(gen.dom)
        for offset in range(len(path) - n + 1):
            if (path.wires[offset:offset + n] == gen.dom
                    and path.cell_at(offset) == gen.src
                    and path.cell_at(offset + n) == gen.tgt):
                yield offset, gen


def enumerate_layer_sequences(graph: TwoGraph, domain: OneCellPath, max_layers: int,
                              limit: int = 500_000):
    """Every diagram with the given domain and at most ``max_layers`` layers."""
    out = [identity(domain)]
    frontier = [identity(domain)]
    for _ in range(max_layers):
        nxt = []
        for d in frontier:
            for offset, gen in _placements(graph, d.codomain):
                nxt.append(SlicedDiagram.from_steps(d.domain, d.steps + ((offset, gen),)))
                if len(out) + len(nxt) > limit:
                    raise ResourceLimitExceeded(f"more than {limit} diagrams")
        out += nxt
        frontier = nxt
    return out


def hom_enumerate(graph: TwoGraph, domain: OneCellPath, codomain: OneCellPath,
                  max_layers: int = 6, equations: EquationSet | None = None,
                  limit: int = 200_000, depth: int = 4) -> HomEnumeration:
    """Exchange-normal forms from ``domain`` to ``codomain`` with at most ``max_layers`` layers.

    Normal forms with k layers are exactly the normal forms of (k-1)-layer
    normal forms extended by one layer, so each level is deduplicated before
    growing the next.
    """
    level = {identity(domain)}
    found = [d for d in level if d.codomain == codomain]
    total = 1
    for _ in range(max_layers):
        nxt = set()
        for d in sorted(level, key=_order):
            for offset, gen in _placements(graph, d.codomain):
                nxt.add(normalize(SlicedDiagram.from_steps(d.domain, d.steps + ((offset, gen),))))
        total += len(nxt)
        if total > limit:
            raise ResourceLimitExceeded(f"more than {limit} normal forms")
        found += [d for d in nxt if d.codomain == codomain]
        level = nxt
    found.sort(key=_order)
    if not equations:
        return HomEnumeration(tuple(found))
    from .rewrite import bounded_eq, rules_from_equations
    rules = rules_from_equations(equations)
    kept: list[SlicedDiagram] = []
    for d in found:
        if not any(bounded_eq(k, d, rules, depth).verdict == "equal" for k in kept):
            kept.append(d)
    return HomEnumeration(tuple(kept), bounded=True)


def _order(d: SlicedDiagram):
    return (len(d), [(o, g.name) for o, g in d.steps])
