"""
Signatures: polygraphs, 2-graphs, bimodular graphs and functor-box signatures.

All signature values are immutable. Edges are stored uniformly as
``Edge(name, dom, cod)`` with object names on both sides; which family an
edge belongs to is given by the field holding it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .diagram import Gen, OneCellPath, SlicedDiagram, Wire


@dataclass(frozen=True)
class Pos:
    line: int
    col: int

    def __str__(self):
        return f"{self.line}:{self.col}"


@dataclass(frozen=True)
class Edge:
    """``cell`` anchors a 2-generator whose boundaries are both empty."""
    name: str
    dom: tuple[str, ...]
    cod: tuple[str, ...]
    pos: Pos | None = field(default=None, compare=False)
    cell: str | None = field(default=None, compare=False)

    def __str__(self):
        return f"{self.name} : {', '.join(self.dom)} -> {', '.join(self.cod)}".replace(" :  ->", " : ->")


@dataclass(frozen=True)
class Polygraph:
    objects: tuple[str, ...] = ()
    edges: tuple[Edge, ...] = ()


@dataclass(frozen=True)
class OneGen:
    name: str
    src: str
    tgt: str
    pos: Pos | None = field(default=None, compare=False)


@dataclass(frozen=True)
class TwoGraph:
    """Zero-cells, 1-generators and 2-generators of a free 2-category."""
    zero_cells: tuple[str, ...] = ()
    one_generators: tuple[OneGen, ...] = ()
    two_generators: tuple[Edge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "_wires", {g.name: Wire(g.name, g.src, g.tgt)
                                            for g in self.one_generators})
        object.__setattr__(self, "_gens", None)

    def wire(self, name: str) -> Wire:
        try:
            return self._wires[name]
        except KeyError:
            raise KeyError(f"unknown 1-generator {name!r}") from None

    def has_wire(self, name: str) -> bool:
        return name in self._wires

    def has_gen(self, name: str) -> bool:
        return name in self.gens

    def path(self, names, start: str | None = None) -> OneCellPath:
        wires = tuple(self.wire(n) for n in names)
        if start is None:
            if not wires:
                raise ValueError("empty path needs a start zero-cell")
            start = wires[0].src
        return OneCellPath(start, wires)

    @property
    def gens(self) -> dict[str, Gen]:
        if self._gens is None:
            out = {}
            for e in self.two_generators:
                dom = tuple(self.wire(n) for n in e.dom)
                cod = tuple(self.wire(n) for n in e.cod)
                src, tgt = _endpoints(e, dom, cod, self.zero_cells)
                out[e.name] = Gen(e.name, src, tgt, dom, cod)
            object.__setattr__(self, "_gens", out)
        return self._gens

    def gen(self, name: str) -> Gen:
        try:
            return self.gens[name]
        except KeyError:
            raise KeyError(f"unknown 2-generator {name!r}") from None

    def generator(self, name: str) -> SlicedDiagram:
        return SlicedDiagram.generator(self.gen(name))


def _endpoints(e: Edge, dom, cod, cells=()):
    ends = set()
    for path in (dom, cod):
        if path:
            ends.add((path[0].src, path[-1].tgt))
    if len(ends) > 1:
        raise ValueError(f"2-generator {e.name}: domain and codomain are not parallel")
    if not ends:
        if e.cell is not None:
            return e.cell, e.cell
        if len(cells) == 1:
            return cells[0], cells[0]
        raise ValueError(f"2-generator {e.name}: both boundaries empty, zero-cell unknown")
    return ends.pop()


@dataclass(frozen=True)
class BimodularGraph:
    left_objects: tuple[str, ...] = ()
    right_objects: tuple[str, ...] = ()
    center_objects: tuple[str, ...] = ()
    left_edges: tuple[Edge, ...] = ()
    right_edges: tuple[Edge, ...] = ()
    central_edges: tuple[Edge, ...] = ()


@dataclass(frozen=True)
class FunctorBoxSignature:
    plain_objects: tuple[str, ...] = ()
    box_objects: tuple[str, ...] = ()
    plain_edges: tuple[Edge, ...] = ()
    box_edges: tuple[Edge, ...] = ()
    in_box_edges: tuple[Edge, ...] = ()
    out_box_edges: tuple[Edge, ...] = ()


Signature = Union[Polygraph, TwoGraph, BimodularGraph, FunctorBoxSignature]


@dataclass(frozen=True)
class Equation:
    name: str
    lhs: SlicedDiagram
    rhs: SlicedDiagram
    pos: Pos | None = field(default=None, compare=False)


@dataclass(frozen=True)
class EquationSet:
    equations: tuple[Equation, ...] = ()

    def __iter__(self):
        return iter(self.equations)

    def __len__(self):
        return len(self.equations)

    def __getitem__(self, name):
        for eq in self.equations:
            if eq.name == name:
                return eq
        raise KeyError(name)


@dataclass(frozen=True)
class Diagnostic:
    invariant: str
    item: str
    message: str
    pos: Pos | None = field(default=None, compare=False)

    def __str__(self):
        where = f"{self.pos}: " if self.pos else ""
        return f"{where}{self.invariant}: {self.item}: {self.message}"


# validation

def _duplicates(names):
    seen, dup = set(), []
    for n in names:
        if n in seen and n not in dup:
            dup.append(n)
        seen.add(n)
    return dup


def _check_names(out, kind, names):
    for n in _duplicates(names):
        out.append(Diagnostic("unique names", n, f"{kind} declared more than once"))


def _check_refs(out, edge, allowed_dom, allowed_cod, family):
    for side, names, allowed in (("domain", edge.dom, allowed_dom),
                                 ("codomain", edge.cod, allowed_cod)):
        for n in names:
            if n not in allowed:
                out.append(Diagnostic(
                    f"{family} boundary", edge.name,
                    f"{side} object {n!r} is not allowed here", edge.pos))


def _central_factor(names, left, center, right):
    """Split a boundary into (left, center, right) or explain why not."""
    centers = [i for i, n in enumerate(names) if n in center]
    if len(centers) != 1:
        return None, f"expected exactly one center object, found {len(centers)}"
    k = centers[0]
    if any(n not in left for n in names[:k]):
        return None, "objects left of the center wire must be left objects"
    if any(n not in right for n in names[k + 1:]):
        return None, "objects right of the center wire must be right objects"
    return (names[:k], names[k], names[k + 1:]), None


def validate_signature(sig: Signature) -> list[Diagnostic]:
    """Diagnostics for every violated signature invariant, in a fixed order."""
    out: list[Diagnostic] = []
    if isinstance(sig, Polygraph):
        objs = set(sig.objects)
        _check_names(out, "object", sig.objects)
        _check_names(out, "edge", [e.name for e in sig.edges])
        for e in sig.edges:
            _check_refs(out, e, objs, objs, "edge")
    elif isinstance(sig, TwoGraph):
        _check_names(out, "zero-cell", sig.zero_cells)
        _check_names(out, "generator", [g.name for g in sig.one_generators]
                     + [e.name for e in sig.two_generators])
        cells = set(sig.zero_cells)
        for g in sig.one_generators:
            for c in (g.src, g.tgt):
                if c not in cells:
                    out.append(Diagnostic("declared zero-cells", g.name,
                                          f"unknown zero-cell {c!r}", g.pos))
        ones = {g.name: g for g in sig.one_generators}
        for e in sig.two_generators:
            bad = [n for n in e.dom + e.cod if n not in ones]
            if bad:
                out.append(Diagnostic("declared 1-generators", e.name,
                                      f"unknown 1-generators {bad}", e.pos))
                continue
            ends = []
            for side, path in (("domain", e.dom), ("codomain", e.cod)):
                for a, b in zip(path, path[1:]):
                    if ones[a].tgt != ones[b].src:
                        out.append(Diagnostic("composable boundary", e.name,
                                              f"{side} {a} ; {b} is not composable", e.pos))
                if path:
                    ends.append((ones[path[0]].src, ones[path[-1]].tgt))
            if len(set(ends)) > 1:
                out.append(Diagnostic("parallel boundary", e.name,
                                      "domain and codomain have different endpoints", e.pos))
            if not ends and e.cell is not None and e.cell not in cells:
                out.append(Diagnostic("declared zero-cells", e.name,
                                      f"unknown zero-cell {e.cell!r}", e.pos))
            elif not ends and e.cell is None and len(sig.zero_cells) != 1:
                out.append(Diagnostic("parallel boundary", e.name,
                                      "both boundaries empty", e.pos))
    elif isinstance(sig, BimodularGraph):
        left, right, center = map(set, (sig.left_objects, sig.right_objects, sig.center_objects))
        _check_names(out, "object", sig.left_objects + sig.right_objects + sig.center_objects)
        _check_names(out, "edge", [e.name for e in
                                   sig.left_edges + sig.right_edges + sig.central_edges])
        for e in sig.left_edges:
            _check_refs(out, e, left, left, "left edge")
        for e in sig.right_edges:
            _check_refs(out, e, right, right, "right edge")
        known = left | right | center
        for e in sig.central_edges:
            unknown = [n for n in e.dom + e.cod if n not in known]
            if unknown:
                out.append(Diagnostic("declared objects", e.name,
                                      f"unknown objects {unknown}", e.pos))
                continue
            for side, names in (("domain", e.dom), ("codomain", e.cod)):
                ncent = sum(n in center for n in names)
                if ncent != 1:
                    out.append(Diagnostic(
                        "central wire multiplicity", e.name,
                        f"{side} has {ncent} center objects, expected exactly one", e.pos))
                    continue
                _, why = _central_factor(names, left, center, right)
                if why:
                    out.append(Diagnostic("central wire order", e.name,
                                          f"{side}: {why}", e.pos))
    elif isinstance(sig, FunctorBoxSignature):
        plain, box = set(sig.plain_objects), set(sig.box_objects)
        _check_names(out, "object", sig.plain_objects + sig.box_objects)
        _check_names(out, "edge", [e.name for e in sig.plain_edges + sig.box_edges
                                   + sig.in_box_edges + sig.out_box_edges])
        for e in sig.plain_edges:
            _check_refs(out, e, plain, plain, "plain edge")
        for e in sig.box_edges:
            _check_refs(out, e, box, box, "box edge")
        for e in sig.in_box_edges:
            _check_refs(out, e, plain, box, "in-box edge")
        for e in sig.out_box_edges:
            _check_refs(out, e, box, plain, "out-box edge")
    else:
        raise TypeError(f"not a signature: {type(sig).__name__}")
    return sorted(out, key=lambda d: (d.invariant, d.item, d.message))


def central_factor(names, g: BimodularGraph):
    """Factor a wire-name sequence as (left prefix, central wire, right suffix)."""
    return _central_factor(tuple(names), set(g.left_objects), set(g.center_objects),
                           set(g.right_objects))
