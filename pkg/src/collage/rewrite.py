"""
Equational rewriting of sliced diagrams.

Matching works on a bounded exchange neighbourhood: a rule's left-hand side
must appear as a contiguous block of layers, shifted by a common wire offset,
in some diagram reachable from the target by at most ``search_bound``
exchange moves. Rewritten diagrams are always returned in normal form.
"""

from __future__ import annotations

import json
import os
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .diagram import (OneCellPath, SlicedDiagram, Step, exchange_orbit, identity,
                      normalize, BoundaryMismatch, DiagramError)
from .presentations import (AdjointPair, FunctorBoxPresentation, cap_name, cup_name,
                            snake_equations, TUBE_L, TUBE_R, OUTSIDE, INSIDE, FUP, FDOWN)
from .sig import EquationSet, Polygraph, TwoGraph

DEFAULT_DEPTH = 32
DEFAULT_SEARCH_BOUND = 8
REPRESENTATIVE_LIMIT = 4000

FORWARD, BACKWARD = "forward", "backward"


def default_depth() -> int:
    return int(os.environ.get("COLLAGE_DEPTH", DEFAULT_DEPTH))


class StaleOccurrence(DiagramError):
    pass


@dataclass(frozen=True)
class RewriteRule:
    name: str
    lhs: SlicedDiagram
    rhs: SlicedDiagram
    invertible: bool = True
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if (self.lhs.domain, self.lhs.codomain) != (self.rhs.domain, self.rhs.codomain):
            raise BoundaryMismatch(
                f"rule {self.name}: sides have different boundaries "
                f"[{self.lhs.domain}] -> [{self.lhs.codomain}] vs "
                f"[{self.rhs.domain}] -> [{self.rhs.codomain}]")

    def oriented(self, orientation: str) -> tuple[SlicedDiagram, SlicedDiagram]:
        if orientation == FORWARD:
            return self.lhs, self.rhs
        if orientation == BACKWARD:
            if not self.invertible:
                raise ValueError(f"rule {self.name} is one-way")
            return self.rhs, self.lhs
        raise ValueError(f"unknown orientation {orientation!r}")


@dataclass(frozen=True)
class Occurrence:
    layer: int
    offset: int
    orientation: str = FORWARD
    representative: tuple[Step, ...] | None = field(default=None, compare=False)


@dataclass(frozen=True)
class TraceStep:
    rule: str
    layer: int
    offset: int
    orientation: str = FORWARD

    def to_json(self) -> dict:
        return {"rule": self.rule, "layer": self.layer, "offset": self.offset,
                "orientation": self.orientation}


@dataclass(frozen=True)
class RewriteTrace:
    start: SlicedDiagram
    steps: tuple[TraceStep, ...] = ()

    def to_json(self) -> list:
        return [s.to_json() for s in self.steps]

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False) + "\n"


def load_trace(data, start: SlicedDiagram) -> RewriteTrace:
    if isinstance(data, str):
        data = json.loads(data)
    steps = tuple(TraceStep(s["rule"], int(s["layer"]), int(s["offset"]),
                            s.get("orientation", FORWARD)) for s in data)
    return RewriteTrace(start, steps)


# rule kits

def rules_from_equations(equations: EquationSet | Iterable) -> list[RewriteRule]:
    return [RewriteRule(eq.name, eq.lhs, eq.rhs, True, {"source": "equation"})
            for eq in equations]


def kit_adjunction(graph: TwoGraph, pair: AdjointPair, names=None) -> list[RewriteRule]:
    """Snake rules ``(1 | n) ; (e | 1) -> 1`` on the right adjoint and
    ``(n | 1) ; (1 | e) -> 1`` on the left adjoint."""
    eqs = snake_equations(graph, pair, names)
    return [RewriteRule(e.name, e.lhs, e.rhs, True, {"kit": "adjunction"}) for e in eqs]


def kit_2adjunction(graph: TwoGraph, pair: AdjointPair, names) -> list[RewriteRule]:
    """The invertible triangle 3-cells of a 2-adjunction.

    The swallowtail equations relate traces, not diagrams; they are attached
    as metadata in the form ``(alpha | 1) ; (1 | beta^-1) = 1`` on the unit
    and its dual on the counit, and are not checked.
    """
    alpha, beta = names
    rules = kit_adjunction(graph, pair, (alpha, beta))
    swallowtail = (f"({alpha} . {pair.unit}) ; ({pair.unit} . {beta}^-1) = 1_{pair.unit}",
                   f"({beta} . {pair.counit}) ; ({pair.counit} . {alpha}^-1) = 1_{pair.counit}")
    return [RewriteRule(r.name, r.lhs, r.rhs, True,
                        {"kit": "2-adjunction", "swallowtail": swallowtail}) for r in rules]


def kit_lax_merge(pres: FunctorBoxPresentation) -> list[RewriteRule]:
    """Unitality orientations for merging boxes, toward fewer box segments.

    ``lax_unit_left`` removes an empty box created by ``n`` and merged into
    the box to its right; ``lax_unit_right`` is the mirror. Associativity of
    merging needs no rule: two ``e`` layers on disjoint junctions are
    exchange-equivalent.
    """
    up_snake, down_snake = (f"snake_{pres.pair.up}", f"snake_{pres.pair.down}")
    eqs = {e.name: e for e in snake_equations(pres.graph, pres.pair)}
    return [RewriteRule("lax_unit_left", eqs[up_snake].lhs, eqs[up_snake].rhs, True,
                        {"kit": "lax merge"}),
            RewriteRule("lax_unit_right", eqs[down_snake].lhs, eqs[down_snake].rhs, True,
                        {"kit": "lax merge"})]


def merge_adjacent_boxes(d: SlicedDiagram, junction: int = 0) -> SlicedDiagram:
    """Append a counit merging the ``junction``-th adjacent ``Fdown ; Fup`` pair."""
    from .presentations import BOX
    wires = d.codomain.wires
    spots = [i for i in range(len(wires) - 1)
             if wires[i].name == FDOWN and wires[i + 1].name == FUP]
    if junction >= len(spots):
        raise DiagramError(f"no box junction #{junction}")
    i = spots[junction]
    e = _gen_from_wires("e", BOX, BOX, (wires[i], wires[i + 1]), ())
    return SlicedDiagram.from_steps(d.domain, d.steps + ((i, e),))


def _gen_from_wires(name, src, tgt, dom, cod):
    from .diagram import Gen
    return Gen(name, src, tgt, tuple(dom), tuple(cod))


def internal_rules(graph: TwoGraph, p: Polygraph) -> list[RewriteRule]:
    """3-cells of the internal-diagram presentation, as rewrite rules.

    The counit 3-cell of ``n2 -| e1`` is named ``v_j`` (the source reuses
    ``v_i``).
    """
    pairs = (AdjointPair(TUBE_L, TUBE_R, "n1", "e1"), AdjointPair(TUBE_R, TUBE_L, "n2", "e2"))
    rules = kit_2adjunction(graph, pairs[0], ("alpha1", "beta1"))
    rules += kit_2adjunction(graph, pairs[1], ("alpha2", "beta2"))
    g = graph.gen
    empty_i, empty_g = OneCellPath(OUTSIDE), OneCellPath(INSIDE)
    lr = graph.path((TUBE_L, TUBE_R))
    rl = graph.path((TUBE_R, TUBE_L))

    def bubble(domain, first, second):
        return SlicedDiagram.from_steps(domain, [(0, g(first)), (0, g(second))])

    rules += [
        RewriteRule("u_i", bubble(empty_i, "n1", "e2"), identity(empty_i), False,
                    {"kit": "internal", "adjunction": "e2 -| n1"}),
        RewriteRule("v_i", identity(lr), bubble(lr, "e2", "n1"), False,
                    {"kit": "internal", "adjunction": "e2 -| n1"}),
        RewriteRule("u_j", identity(empty_g), bubble(empty_g, "n2", "e1"), False,
                    {"kit": "internal", "adjunction": "n2 -| e1"}),
        RewriteRule("v_j", bubble(rl, "e1", "n2"), identity(rl), False,
                    {"kit": "internal", "adjunction": "n2 -| e1"}),
    ]
    for obj in p.objects:
        tube = graph.path((TUBE_L, obj, TUBE_R))
        rules += [
            RewriteRule(f"c_{obj}", bubble(tube, cap_name(obj), cup_name(obj)),
                        identity(tube), False, {"kit": "internal", "adjunction": f"{obj} caps"}),
            RewriteRule(f"i_{obj}", identity(empty_i), bubble(empty_i, cup_name(obj), cap_name(obj)),
                        False, {"kit": "internal", "adjunction": f"{obj} caps"}),
        ]
    return rules


# matching

def _paths(domain: OneCellPath, steps: Sequence[Step]) -> list[OneCellPath]:
    return SlicedDiagram.from_steps(domain, steps).paths()


def _wires_at(domain: OneCellPath, steps: Sequence[Step], i: int) -> tuple:
    """The wires between layer ``i - 1`` and layer ``i``."""
    wires = domain.wires
    for o, g in steps[:i]:
        wires = wires[:o] + g.cod + wires[o + len(g.dom):]
    return wires


def _match_at(domain, steps, lhs: SlicedDiagram, i: int) -> int | None:
    """Wire offset at which ``lhs`` occupies layers ``i ..`` of ``steps``."""
    pattern = lhs.steps
    k = len(pattern)
    if i + k > len(steps):
        return None
    shift = steps[i][0] - pattern[0][0]
    if shift < 0:
        return None
    for j, (o, gen) in enumerate(pattern):
        so, sg = steps[i + j]
        if sg.name != gen.name or so != o + shift:
            return None
    wires = _wires_at(domain, steps, i)
    n = len(lhs.domain)
    if shift + n > len(wires) or wires[shift:shift + n] != lhs.domain.wires:
        return None
    cell = domain.start if shift == 0 else wires[shift - 1].tgt
    if cell != lhs.domain.start:
        return None
    return shift


def find_matches(d: SlicedDiagram, rule: RewriteRule, search_bound: int = DEFAULT_SEARCH_BOUND,
                 orientation: str = FORWARD, limit: int = REPRESENTATIVE_LIMIT) -> list[Occurrence]:
    """Occurrences of the rule's left side, sorted by (layer, offset).

    For each position only the first representative (in breadth-first
    exchange order) is kept.
    """
    lhs, _ = rule.oriented(orientation)
    if not lhs.layers:
        return []
    found: dict[tuple[int, int], Occurrence] = {}
    names = {g.name for _, g in lhs.steps}
    if not names <= {g.name for _, g in d.steps}:
        return []
    for rep in exchange_orbit(d.steps, search_bound, limit):
        for i in range(len(rep)):
            shift = _match_at(d.domain, rep, lhs, i)
            if shift is not None and (i, shift) not in found:
                found[i, shift] = Occurrence(i, shift, orientation, rep)
    return [found[k] for k in sorted(found)]


def _replace(domain, rep, lhs, rhs, layer, offset) -> SlicedDiagram:
    steps = (tuple(rep[:layer])
             + tuple((o + offset, g) for o, g in rhs.steps)
             + tuple(rep[layer + len(lhs):]))
    return normalize(SlicedDiagram.from_steps(domain, steps))


def apply_rule(d: SlicedDiagram, rule: RewriteRule, occurrence: Occurrence) -> SlicedDiagram:
    """Replace the matched left side by the right side; the result is normalised."""
    lhs, rhs = rule.oriented(occurrence.orientation)
    rep = occurrence.representative if occurrence.representative is not None else d.steps
    if occurrence.representative is not None and rep != d.steps:
        if normalize(SlicedDiagram.from_steps(d.domain, rep)) != normalize(d):
            raise StaleOccurrence("occurrence representative is not exchange-equivalent to d")
    paths = _paths(d.domain, rep)
    i, s = occurrence.layer, occurrence.offset
    if lhs.layers:
        if _match_at(d.domain, rep, lhs, i) != s:
            raise StaleOccurrence(f"{rule.name} does not match at layer {i}, offset {s}")
    else:
        if i > len(rep):
            raise StaleOccurrence(f"layer {i} is past the end of the diagram")
        path = paths[i]
        n = len(lhs.domain)
        if (path.wires[s:s + n] != lhs.domain.wires or s + n > len(path)
                or path.cell_at(s) != lhs.domain.start):
            raise StaleOccurrence(f"{rule.name}: boundary does not match at layer {i}, offset {s}")
    out = _replace(d.domain, rep, lhs, rhs, i, s)
    assert (out.domain, out.codomain) == (d.domain, d.codomain)
    return out


def _locate(d, rule, step: TraceStep, search_bound) -> Occurrence | None:
    lhs, _ = rule.oriented(step.orientation)
    if not lhs.layers:
        return Occurrence(step.layer, step.offset, step.orientation, d.steps)
    for occ in find_matches(d, rule, search_bound, step.orientation):
        if (occ.layer, occ.offset) == (step.layer, step.offset):
            return occ
    return None


@dataclass(frozen=True)
class TraceCheck:
    ok: bool
    intermediates: tuple[SlicedDiagram, ...]
    failed_step: int | None = None
    message: str = ""

    def __bool__(self):
        return self.ok


def validate_trace(trace: RewriteTrace, rules: Iterable[RewriteRule],
                   search_bound: int = DEFAULT_SEARCH_BOUND,
                   end: SlicedDiagram | None = None) -> TraceCheck:
    """Replay ``trace`` from the normal form of its start diagram."""
    table = {r.name: r for r in rules}
    current = normalize(trace.start)
    seen = [current]
    for k, step in enumerate(trace.steps):
        rule = table.get(step.rule)
        if rule is None:
            return TraceCheck(False, tuple(seen), k, f"step {k}: unknown rule {step.rule!r}")
        try:
            occ = _locate(current, rule, step, search_bound)
            if occ is None:
                raise StaleOccurrence(
                    f"{step.rule} ({step.orientation}) does not match at layer "
                    f"{step.layer}, offset {step.offset}")
            current = apply_rule(current, rule, occ)
        except (DiagramError, ValueError) as err:
            return TraceCheck(False, tuple(seen), k, f"step {k}: {err}")
        seen.append(current)
    if end is not None and normalize(end) != current:
        return TraceCheck(False, tuple(seen), len(trace.steps),
                          "trace does not end at the expected diagram")
    return TraceCheck(True, tuple(seen))


# search

def rewrite_moves(d: SlicedDiagram, rules: Sequence[RewriteRule], search_bound: int,
                  orientations=(FORWARD, BACKWARD)):
    """All single rewrite steps from ``d``, in a fixed order."""
    for rule in rules:
        for orientation in orientations:
            if orientation == BACKWARD and not rule.invertible:
                continue
            for occ in find_matches(d, rule, search_bound, orientation):
                yield TraceStep(rule.name, occ.layer, occ.offset, orientation), \
                    apply_rule(d, rule, occ)


def rewrite_to_fixpoint(d: SlicedDiagram, rules: Sequence[RewriteRule],
                        search_bound: int = DEFAULT_SEARCH_BOUND,
                        max_steps: int = 1000) -> tuple[SlicedDiagram, RewriteTrace]:
    """Apply the first forward match (leftmost, earliest) until none remains."""
    current = normalize(d)
    steps = []
    for _ in range(max_steps):
        move = next(rewrite_moves(current, rules, search_bound, (FORWARD,)), None)
        if move is None:
            break
        step, current = move
        steps.append(step)
    return current, RewriteTrace(normalize(d), tuple(steps))


@dataclass(frozen=True)
class Verdict:
    verdict: str
    trace: RewriteTrace | None = None
    witness: str | None = None

    def __str__(self):
        return self.verdict


def _search(start, goal, rules, depth, search_bound, node_limit):
    """Breadth-first rewriting from ``start``; the list of (step, diagram) reaching ``goal``."""
    parent: dict[SlicedDiagram, tuple | None] = {start: None}
    queue = deque([(start, 0)])
    found = start == goal
    while queue and not found:
        node, dist = queue.popleft()
        if dist >= depth:
            continue
        for step, nxt in rewrite_moves(node, rules, search_bound):
            if nxt in parent:
                continue
            parent[nxt] = (node, step)
            if nxt == goal:
                found = True
                break
            if len(parent) >= node_limit:
                queue.clear()
                break
            queue.append((nxt, dist + 1))
    if not found:
        return None
    path = []
    node = goal
    while parent[node] is not None:
        prev, step = parent[node]
        path.append((prev, step, node))
        node = prev
    return list(reversed(path))


def _insertions(d: SlicedDiagram, lhs: SlicedDiagram):
    """Every (layer, offset) where an empty left-hand side fits."""
    for i, path in enumerate(d.paths()):
        n = len(lhs.domain)
        for s in range(len(path) - n + 1):
            if path.wires[s:s + n] == lhs.domain.wires and path.cell_at(s) == lhs.domain.start:
                yield i, s


def _undo(after: SlicedDiagram, before: SlicedDiagram, rule: RewriteRule, orientation: str,
          search_bound: int) -> TraceStep:
    """The step that rewrites ``after`` back to ``before`` with the opposite orientation."""
    back = BACKWARD if orientation == FORWARD else FORWARD
    lhs, _ = rule.oriented(back)
    if lhs.layers:
        candidates = [(o.layer, o.offset, o) for o in find_matches(after, rule, search_bound, back)]
    else:
        candidates = [(i, s, Occurrence(i, s, back, after.steps)) for i, s in _insertions(after, lhs)]
    for i, s, occ in candidates:
        if apply_rule(after, rule, occ) == before:
            return TraceStep(rule.name, i, s, back)
    raise StaleOccurrence(f"cannot reverse a step of {rule.name}")


def bounded_eq(d1: SlicedDiagram, d2: SlicedDiagram, rules: Sequence[RewriteRule],
               depth: int | None = None, search_bound: int = DEFAULT_SEARCH_BOUND,
               witness: Callable[[SlicedDiagram, SlicedDiagram], str | None] | None = None,
               node_limit: int = 20000) -> Verdict:
    """Three-valued equality: equal (with a trace), distinct (with a witness) or unknown.

    The search runs from ``d1`` first. Rules whose matched side is an
    identity only fire by insertion, which a forward search never tries, so
    a failed search is repeated from ``d2`` and the path found is reversed
    step by step (only through invertible rules).
    """
    if (d1.domain, d1.codomain) != (d2.domain, d2.codomain):
        raise BoundaryMismatch("bounded_eq: diagrams have different boundaries")
    depth = default_depth() if depth is None else depth
    start, goal = normalize(d1), normalize(d2)
    path = _search(start, goal, rules, depth, search_bound, node_limit)
    if path is not None:
        return Verdict("equal", RewriteTrace(start, tuple(step for _, step, _ in path)))
    table = {r.name: r for r in rules}
    back = _search(goal, start, [r for r in rules if r.invertible], depth, search_bound, node_limit)
    if back is not None:
        steps = [_undo(after, before, table[step.rule], step.orientation, search_bound)
                 for before, step, after in reversed(back)]
        return Verdict("equal", RewriteTrace(start, tuple(steps)))
    if witness is not None:
        why = witness(d1, d2)
        if why:
            return Verdict("distinct", witness=why)
    return Verdict("unknown")


# rules of a parsed theory

def theory_rules(theory) -> list[RewriteRule]:
    """Every rule available in a theory: its equations plus the structural kits."""
    rules = rules_from_equations(theory.equations)
    pres = theory.presentation
    if isinstance(pres, FunctorBoxPresentation):
        rules += kit_adjunction(pres.graph, pres.pair)
        rules += kit_lax_merge(pres)
    elif theory.kind == "internal":
        rules += list(pres.rules)
    return rules
