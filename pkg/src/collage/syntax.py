"""
The ``.collage`` text format: tokenizer, parser, elaborator and printer.

A file is a sequence of blocks::

    bimodular theory Shared {
      left objects: V;  right objects: W;  center objects: S;
      central edge getL : S -> V, S;
      equation e : getL ; (V | getR) = getR ; (getL | W);
      diagram race : getL ; getR;
    }
    model Z3 = delooping(3);
    interpretation I of Shared in Z3s { V = *; getL = 1; }

Inside a theory, ``;`` composes vertically, ``|`` and ``,`` juxtapose
horizontally, a bare 1-generator name stands for its identity, ``id(a, b)``
is an identity on a path and ``id(@X)`` the empty identity at zero-cell X.
A ``;`` ends a declaration when the next tokens start a new declaration.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .diagram import (BoundaryMismatch, DiagramError, OneCellPath, SlicedDiagram,
                      compose_vertical, identity, tensor_horizontal)
from .presentations import (CentralTypingError, central_mismatch, collage_of, syn_functor_box,
                            syn_internal, typecheck_central, box_segments)
from .sig import (BimodularGraph, Diagnostic, Edge, Equation, EquationSet, FunctorBoxSignature,
                  OneGen, Polygraph, Pos, TwoGraph, validate_signature)

MONOIDAL_CELL = "*"


class CollageSyntaxError(ValueError):
    def __init__(self, message, pos: Pos | None = None):
        self.pos = pos
        self.bare = message
        super().__init__(f"{pos}: {message}" if pos else message)


class UnknownIdentifier(CollageSyntaxError):
    pass


class ArityMismatch(CollageSyntaxError):
    pass


# tokens

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<comment>--[^\n]*)
  | (?P<arrow>->)
  | (?P<punct>[{}();:,|=@])
  | (?P<ident>[\w^'*.]+)
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: Pos


def tokenize(source: str) -> list[Token]:
    out, i, line, col = [], 0, 1, 1
    while i < len(source):
        m = _TOKEN.match(source, i)
        if m is None:
            raise CollageSyntaxError(f"unexpected character {source[i]!r}", Pos(line, col))
        kind, text = m.lastgroup, m.group()
        if kind not in ("ws", "comment"):
            out.append(Token("punct" if kind == "arrow" else kind, text, Pos(line, col)))
        nl = text.count("\n")
        if nl:
            line += nl
            col = len(text) - text.rfind("\n")
        else:
            col += len(text)
        i = m.end()
    out.append(Token("eof", "", Pos(line, col)))
    return out


# expression trees

@dataclass(frozen=True)
class Ref:
    name: str
    pos: Pos = field(compare=False)


@dataclass(frozen=True)
class Id:
    names: tuple[str, ...]
    cell: str | None
    pos: Pos = field(compare=False)


@dataclass(frozen=True)
class Seq:
    parts: tuple
    pos: Pos = field(compare=False)


@dataclass(frozen=True)
class Par:
    parts: tuple
    pos: Pos = field(compare=False)


# documents

THEORY_KINDS = ("monoidal", "two", "bimodular", "functorbox", "internal")

_OBJECT_DECLS = {
    "monoidal": {(): "objects"},
    "internal": {(): "objects"},
    "bimodular": {("left",): "left_objects", ("right",): "right_objects",
                  ("center",): "center_objects"},
    "functorbox": {("plain",): "plain_objects", ("box",): "box_objects"},
}
_EDGE_DECLS = {
    "monoidal": {(): "edges"},
    "internal": {(): "edges"},
    "bimodular": {("left",): "left_edges", ("right",): "right_edges",
                  ("central",): "central_edges"},
    "functorbox": {("plain",): "plain_edges", ("box",): "box_edges",
                   ("inbox",): "in_box_edges", ("outbox",): "out_box_edges"},
}


@dataclass
class Theory:
    name: str
    kind: str
    signature: object
    equations: EquationSet
    diagrams: dict
    pos: Pos | None = None
    raw_equations: list = field(default_factory=list)
    _presentation: object = None
    _cache: dict = field(default_factory=dict)

    @property
    def presentation(self):
        if self._presentation is None:
            self._presentation = presentation_of(self.kind, self.signature)
        return self._presentation

    @property
    def graph(self) -> TwoGraph:
        p = self.presentation
        return p if isinstance(p, TwoGraph) else p.graph

    def diagram(self, name: str) -> SlicedDiagram:
        if name not in self.diagrams:
            raise UnknownIdentifier(f"theory {self.name} has no diagram {name!r}")
        if name not in self._cache:
            expr, _ = self.diagrams[name]
            self._cache[name] = elaborate(expr, self, _active=(name,))
        return self._cache[name]

    def check(self) -> list[Diagnostic]:
        """Signature diagnostics, then typing diagnostics for every diagram."""
        out = list(validate_signature(self.signature))
        if out:
            return out
        for name, (expr, pos) in self.diagrams.items():
            try:
                d = self.diagram(name)
                if self.kind == "bimodular":
                    typecheck_central(d, self.signature)
                elif self.kind == "functorbox":
                    for path in d.paths():
                        box_segments(path)
            except CentralTypingError as err:
                out.append(Diagnostic("central typing", name, f"{err.reason}: {err}", pos))
            except BoundaryMismatch as err:
                if self.kind == "bimodular":
                    typed = central_mismatch(err, self.signature)
                    if typed is not None:
                        out.append(Diagnostic("central typing", name,
                                              f"{typed.reason}: {typed}", pos))
                        continue
                out.append(Diagnostic("boundary", name, str(err), pos))
            except (DiagramError, CollageSyntaxError) as err:
                out.append(Diagnostic("well-formed diagram", name, str(err), pos))
        return out


@dataclass(frozen=True)
class ModelDecl:
    name: str
    constructor: str | None
    args: tuple
    table: dict | None
    pos: Pos | None = field(default=None, compare=False)


@dataclass(frozen=True)
class InterpretationDecl:
    name: str
    theory: str
    target: str
    mapping: tuple[tuple[str, str], ...]
    pos: Pos | None = field(default=None, compare=False)

    def as_dict(self) -> dict:
        return dict(self.mapping)


@dataclass
class Document:
    theories: dict = field(default_factory=dict)
    models: dict = field(default_factory=dict)
    interpretations: dict = field(default_factory=dict)

    def theory(self, name: str | None = None) -> Theory:
        if name is None:
            if len(self.theories) != 1:
                raise UnknownIdentifier("several theories; name one explicitly")
            return next(iter(self.theories.values()))
        try:
            return self.theories[name]
        except KeyError:
            raise UnknownIdentifier(f"no theory {name!r}") from None

    def find_diagram(self, ref: str) -> tuple[Theory, SlicedDiagram]:
        """Resolve ``Theory.diagram`` or a diagram name unique across the file."""
        if "." in ref:
            t, _, d = ref.partition(".")
            if t in self.theories:
                theory = self.theories[t]
                return theory, theory.diagram(d)
        owners = [t for t in self.theories.values() if ref in t.diagrams]
        if not owners:
            raise UnknownIdentifier(f"no diagram {ref!r}")
        if len(owners) > 1:
            raise UnknownIdentifier(f"diagram {ref!r} is ambiguous; qualify it with the theory")
        return owners[0], owners[0].diagram(ref)


def presentation_of(kind: str, sig):
    if kind == "monoidal":
        return monoidal_graph(sig)
    if kind == "two":
        return sig
    if kind == "bimodular":
        return collage_of(sig)
    if kind == "functorbox":
        return syn_functor_box(sig)
    if kind == "internal":
        return syn_internal(sig)
    raise ValueError(kind)


def monoidal_graph(p: Polygraph) -> TwoGraph:
    """A polygraph as a 2-graph with one zero-cell."""
    return TwoGraph((MONOIDAL_CELL,),
                    tuple(OneGen(o, MONOIDAL_CELL, MONOIDAL_CELL) for o in p.objects),
                    tuple(p.edges))


# parser

class _Parser:
    def __init__(self, source: str):
        self.toks = tokenize(source)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def peek(self, k=1) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def next(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def at(self, text) -> bool:
        return self.tok.text == text and self.tok.kind != "eof"

    def expect(self, text) -> Token:
        if not self.at(text):
            got = self.tok.text or "end of file"
            raise CollageSyntaxError(f"expected {text!r}, found {got!r}", self.tok.pos)
        return self.next()

    def ident(self, what="identifier") -> Token:
        if self.tok.kind != "ident":
            got = self.tok.text or "end of file"
            raise CollageSyntaxError(f"expected {what}, found {got!r}", self.tok.pos)
        return self.next()

    def names(self, stop) -> list[Token]:
        """Comma-separated identifiers up to (not including) one of ``stop``."""
        out = []
        if self.tok.text in stop:
            return out
        if self.at("(") and self.peek().text == ")":
            self.i += 2
            return out
        out.append(self.ident("object name"))
        while self.at(","):
            self.next()
            out.append(self.ident("object name"))
        return out

    # blocks

    def document(self) -> Document:
        doc = Document()
        while self.tok.kind != "eof":
            t = self.tok
            if t.text in THEORY_KINDS and self.peek().text == "theory":
                th = self.theory()
                if th.name in doc.theories:
                    raise CollageSyntaxError(f"theory {th.name} defined twice", th.pos)
                doc.theories[th.name] = th
            elif t.text == "model":
                m = self.model()
                doc.models[m.name] = m
            elif t.text in ("lax", "bimodular") and self.peek(2).text == "=":
                m = self.model(keyword=t.text)
                doc.models[m.name] = m
            elif t.text == "interpretation":
                it = self.interpretation()
                doc.interpretations[it.name] = it
            else:
                raise CollageSyntaxError(f"unexpected {t.text!r} at top level", t.pos)
        for it in doc.interpretations.values():
            if it.theory not in doc.theories:
                raise UnknownIdentifier(f"interpretation {it.name}: no theory {it.theory!r}", it.pos)
            if it.target not in doc.models:
                raise UnknownIdentifier(f"interpretation {it.name}: no model {it.target!r}", it.pos)
        return doc

    def theory(self) -> Theory:
        kind_tok = self.next()
        kind = kind_tok.text
        self.expect("theory")
        name = self.ident("theory name").text
        self.expect("{")
        fields = {}
        wires, cells, zero = [], [], []
        equations, diagrams = [], {}
        while not self.at("}"):
            t = self.tok
            if t.kind == "eof":
                raise CollageSyntaxError(f"unterminated theory {name}", kind_tok.pos)
            words = []
            while self.tok.kind == "ident" and self.tok.text not in (
                    "objects", "edge", "equation", "diagram", "wire", "cell", "cells"):
                words.append(self.next().text)
            head = self.tok
            if head.text == "objects":
                self.next()
                key = _OBJECT_DECLS.get(kind, {}).get(tuple(words))
                if key is None:
                    raise CollageSyntaxError(
                        f"{' '.join(words + ['objects'])} not allowed in a {kind} theory", t.pos)
                self.expect(":")
                fields.setdefault(key, []).extend(self.names((";",)))
                self.expect(";")
            elif head.text == "cells" and words == ["zero"] and kind == "two":
                self.next()
                self.expect(":")
                zero.extend(t.text for t in self.names((";",)))
                self.expect(";")
            elif head.text == "edge":
                self.next()
                key = _EDGE_DECLS.get(kind, {}).get(tuple(words))
                if key is None:
                    raise CollageSyntaxError(
                        f"{' '.join(words + ['edge'])} not allowed in a {kind} theory", t.pos)
                fields.setdefault(key, []).append(self.edge())
            elif head.text == "wire" and not words and kind == "two":
                self.next()
                n = self.ident("wire name")
                self.expect(":")
                src = self.ident("zero-cell").text
                self.expect("->")
                tgt = self.ident("zero-cell").text
                self.expect(";")
                wires.append((n.text, src, tgt, n.pos))
            elif head.text == "cell" and not words and kind == "two":
                self.next()
                cells.append(self.edge())
            elif head.text == "equation" and not words:
                self.next()
                n = self.ident("equation name")
                self.expect(":")
                lhs = self.expr()
                self.expect("=")
                rhs = self.expr()
                self.expect(";")
                equations.append((n.text, lhs, rhs, n.pos))
            elif head.text == "diagram" and not words:
                self.next()
                n = self.ident("diagram name")
                self.expect(":")
                body = self.expr()
                self.expect(";")
                if n.text in diagrams:
                    raise CollageSyntaxError(f"diagram {n.text} defined twice", n.pos)
                diagrams[n.text] = (body, n.pos)
            else:
                raise CollageSyntaxError(f"unexpected {t.text!r} in theory {name}", t.pos)
        self.expect("}")
        if kind == "two":
            sig = TwoGraph(tuple(zero), tuple(OneGen(*w) for w in wires), tuple(cells))
        else:
            cls = {"monoidal": Polygraph, "internal": Polygraph, "bimodular": BimodularGraph,
                   "functorbox": FunctorBoxSignature}[kind]
            sig = cls(**{k: tuple(t.text if isinstance(t, Token) else t for t in v)
                         for k, v in fields.items()})
        _check_declared(kind, sig, {t.text: t.pos for v in fields.values() for t in v
                                    if isinstance(t, Token)})
        theory = Theory(name, kind, sig, EquationSet(), diagrams, kind_tok.pos, equations)
        if not validate_signature(sig):
            eqs = []
            for ename, lhs, rhs, pos in equations:
                try:
                    left = elaborate(lhs, theory)
                    right = elaborate(rhs, theory)
                except DiagramError as err:
                    raise ArityMismatch(f"equation {ename}: {err}", pos) from None
                if (left.domain, left.codomain) != (right.domain, right.codomain):
                    raise ArityMismatch(
                        f"equation {ename}: sides have boundaries "
                        f"[{', '.join(left.domain.names)}] -> [{', '.join(left.codomain.names)}] and "
                        f"[{', '.join(right.domain.names)}] -> [{', '.join(right.codomain.names)}]",
                        pos)
                eqs.append(Equation(ename, left, right, pos))
            theory.equations = EquationSet(tuple(eqs))
        return theory

    def edge(self) -> Edge:
        n = self.ident("edge name")
        self.expect(":")
        dom = self.names(("->",))
        self.expect("->")
        cod = self.names((";",))
        self.expect(";")
        return Edge(n.text, tuple(t.text for t in dom), tuple(t.text for t in cod), n.pos)

    # expressions

    def _ends_decl(self) -> bool:
        nxt, after = self.peek(), self.peek(2)
        return nxt.kind == "eof" or nxt.text == "}" or (
            nxt.kind == "ident" and (after.kind == "ident" or after.text == ":"))

    def expr(self):
        pos = self.tok.pos
        parts = [self.par()]
        while self.at(";") and not self._ends_decl():
            self.next()
            parts.append(self.par())
        return parts[0] if len(parts) == 1 else Seq(tuple(parts), pos)

    def par(self):
        pos = self.tok.pos
        parts = [self.atom()]
        while self.at("|") or self.at(","):
            self.next()
            parts.append(self.atom())
        return parts[0] if len(parts) == 1 else Par(tuple(parts), pos)

    def atom(self):
        t = self.tok
        if self.at("("):
            self.next()
            e = self.expr()
            self.expect(")")
            return e
        if t.kind == "ident" and t.text == "id" and self.peek().text == "(":
            self.next()
            self.next()
            if self.at("@"):
                self.next()
                cell = self.ident("zero-cell").text
                self.expect(")")
                return Id((), cell, t.pos)
            names = tuple(n.text for n in self.names((")",)))
            self.expect(")")
            return Id(names, None, t.pos)
        if t.kind == "ident":
            self.next()
            return Ref(t.text, t.pos)
        raise CollageSyntaxError(f"expected a diagram, found {t.text or 'end of file'!r}", t.pos)

    # models and interpretations

    def model(self, keyword="model") -> ModelDecl:
        self.expect(keyword)
        n = self.ident("model name")
        if self.at("="):
            self.next()
            ctor = self.ident("constructor").text
            args = []
            self.expect("(")
            while not self.at(")"):
                args.append(self.ident("argument").text)
                if not self.at(")"):
                    self.expect(",")
            self.expect(")")
            self.expect(";")
            return ModelDecl(n.text, f"{keyword}:{ctor}" if keyword != "model" else ctor,
                             tuple(args), None, n.pos)
        self.expect("{")
        table = {"objects": [], "morphisms": [], "identities": {}, "compose": {},
                 "unit": None, "tensor": {}}
        while not self.at("}"):
            t = self.ident("model declaration")
            if t.text == "objects":
                self.expect(":")
                table["objects"] += [x.text for x in self.names((";",))]
            elif t.text == "morphism":
                f = self.ident("morphism name").text
                self.expect(":")
                a = self.ident("object").text
                self.expect("->")
                b = self.ident("object").text
                table["morphisms"].append((f, a, b))
            elif t.text == "identity":
                a = self.ident("object").text
                self.expect("=")
                table["identities"][a] = self.ident("morphism").text
            elif t.text in ("compose", "tensor"):
                x = self.ident().text
                y = self.ident().text
                self.expect("=")
                table[t.text][x, y] = self.ident().text
            elif t.text == "unit":
                self.expect(":")
                table["unit"] = self.ident("object").text
            else:
                raise CollageSyntaxError(f"unknown model declaration {t.text!r}", t.pos)
            self.expect(";")
        self.expect("}")
        return ModelDecl(n.text, None, (), table, n.pos)

    def interpretation(self) -> InterpretationDecl:
        self.expect("interpretation")
        n = self.ident("interpretation name")
        self.expect("of")
        theory = self.ident("theory name").text
        self.expect("in")
        target = self.ident("model name").text
        self.expect("{")
        mapping = []
        while not self.at("}"):
            k = self.ident("generator name")
            self.expect("=")
            v = self.ident("value")
            self.expect(";")
            mapping.append((k.text, v.text))
        self.expect("}")
        return InterpretationDecl(n.text, theory, target, tuple(mapping), n.pos)


def _check_declared(kind, sig, positions):
    """Boundary names must be declared somewhere in the theory."""
    if kind == "two":
        cells = set(sig.zero_cells)
        for g in sig.one_generators:
            for c in (g.src, g.tgt):
                if c not in cells:
                    raise UnknownIdentifier(f"wire {g.name}: unknown zero-cell {c!r}", g.pos)
        known = {g.name for g in sig.one_generators}
        edges = sig.two_generators
    else:
        known = set()
        for attr in ("objects", "left_objects", "right_objects", "center_objects",
                     "plain_objects", "box_objects"):
            known |= set(getattr(sig, attr, ()))
        edges = [e for attr in ("edges", "left_edges", "right_edges", "central_edges",
                                "plain_edges", "box_edges", "in_box_edges", "out_box_edges")
                 for e in getattr(sig, attr, ())]
    for e in edges:
        for n in e.dom + e.cod:
            if n not in known:
                raise UnknownIdentifier(f"edge {e.name}: undeclared object {n!r}", e.pos)


# elaboration

def elaborate(expr, theory: Theory, _active=()) -> SlicedDiagram:
    graph = theory.graph
    if isinstance(expr, Ref):
        name = expr.name
        if graph.has_gen(name):
            return graph.generator(name)
        if graph.has_wire(name):
            return identity(graph.path((name,)))
        if name in theory.diagrams:
            if name in _active:
                raise CollageSyntaxError(f"diagram {name} refers to itself", expr.pos)
            body, _ = theory.diagrams[name]
            return elaborate(body, theory, _active + (name,))
        raise UnknownIdentifier(f"unknown identifier {name!r}", expr.pos)
    if isinstance(expr, Id):
        if expr.cell is not None:
            if expr.cell not in graph.zero_cells:
                raise UnknownIdentifier(f"unknown zero-cell {expr.cell!r}", expr.pos)
            return identity(OneCellPath(expr.cell))
        for n in expr.names:
            if not graph.has_wire(n):
                raise UnknownIdentifier(f"unknown 1-generator {n!r}", expr.pos)
        if not expr.names:
            if len(graph.zero_cells) != 1:
                raise CollageSyntaxError("id() needs a zero-cell: write id(@X)", expr.pos)
            return identity(OneCellPath(graph.zero_cells[0]))
        try:
            return identity(graph.path(expr.names))
        except DiagramError as err:
            raise ArityMismatch(str(err), expr.pos) from None
    parts = [elaborate(p, theory, _active) for p in expr.parts]
    out = parts[0]
    for k, d in enumerate(parts[1:], 1):
        try:
            if isinstance(expr, Seq):
                out = compose_vertical(out, d)
            else:
                out = tensor_horizontal(out, d)
        except BoundaryMismatch as err:
            err.args = (f"{expr.parts[k].pos}: {err.args[0]}",)
            raise
    return out


def parse_file(source: str) -> Document:
    return _Parser(source).document()


def parse_signature(source: str):
    """The signature and equations of the only (or first) theory in ``source``."""
    doc = parse_file(source)
    if not doc.theories:
        raise CollageSyntaxError("no theory block found")
    t = next(iter(doc.theories.values()))
    return t.signature, t.equations


def parse_diagram(text: str, theory: Theory) -> SlicedDiagram:
    p = _Parser(text)
    e = p.expr()
    if p.tok.kind != "eof":
        raise CollageSyntaxError(f"trailing input {p.tok.text!r}", p.tok.pos)
    return elaborate(e, theory)


# printing

def _names(xs) -> str:
    return ", ".join(xs)


def format_diagram(d: SlicedDiagram) -> str:
    """An expression that parses back to ``d`` (same layers, same whiskers)."""
    if not d.layers:
        if not d.domain.wires:
            return f"id(@{d.domain.start})"
        return f"id({_names(d.domain.names)})"
    rows = []
    for layer in d.layers:
        parts = [w.name for w in layer.left] + [layer.gen.name] + [w.name for w in layer.right]
        rows.append(parts[0] if len(parts) == 1 else "(" + " | ".join(parts) + ")")
    return " ; ".join(rows)


def _edge_line(keyword: str, e: Edge) -> str:
    dom = f" {_names(e.dom)}" if e.dom else ""
    cod = f" {_names(e.cod)}" if e.cod else ""
    return f"  {keyword} {e.name} :{dom} ->{cod};"


def format_signature(sig, equations: EquationSet = EquationSet(), name: str = "T",
                     diagrams: dict | None = None) -> str:
    if isinstance(sig, TwoGraph):
        lines = [f"two theory {name} {{", f"  zero cells: {_names(sig.zero_cells)};"]
        lines += [f"  wire {g.name} : {g.src} -> {g.tgt};" for g in sig.one_generators]
        lines += [_edge_line("cell", e) for e in sig.two_generators]
    elif isinstance(sig, BimodularGraph):
        lines = [f"bimodular theory {name} {{"]
        for word, objs in (("left", sig.left_objects), ("right", sig.right_objects),
                           ("center", sig.center_objects)):
            if objs:
                lines.append(f"  {word} objects: {_names(objs)};")
        for word, edges in (("left", sig.left_edges), ("right", sig.right_edges),
                            ("central", sig.central_edges)):
            lines += [_edge_line(f"{word} edge", e) for e in edges]
    elif isinstance(sig, FunctorBoxSignature):
        lines = [f"functorbox theory {name} {{"]
        for word, objs in (("plain", sig.plain_objects), ("box", sig.box_objects)):
            if objs:
                lines.append(f"  {word} objects: {_names(objs)};")
        for word, edges in (("plain", sig.plain_edges), ("box", sig.box_edges),
                            ("inbox", sig.in_box_edges), ("outbox", sig.out_box_edges)):
            lines += [_edge_line(f"{word} edge", e) for e in edges]
    elif isinstance(sig, Polygraph):
        lines = [f"monoidal theory {name} {{"]
        if sig.objects:
            lines.append(f"  objects: {_names(sig.objects)};")
        lines += [_edge_line("edge", e) for e in sig.edges]
    else:
        raise TypeError(f"not a signature: {type(sig).__name__}")
    for eq in equations:
        lines.append(f"  equation {eq.name} : {format_diagram(eq.lhs)} = {format_diagram(eq.rhs)};")
    for dname, d in (diagrams or {}).items():
        lines.append(f"  diagram {dname} : {format_diagram(d)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def format_theory(theory: Theory) -> str:
    """Print a theory back to source; diagrams that do not elaborate are left out."""
    diagrams = {}
    for n in theory.diagrams:
        try:
            diagrams[n] = theory.diagram(n)
        except (DiagramError, CollageSyntaxError):
            continue
    text = format_signature(theory.signature, theory.equations, theory.name, diagrams)
    if theory.kind == "internal":
        text = text.replace("monoidal theory", "internal theory", 1)
    return text
