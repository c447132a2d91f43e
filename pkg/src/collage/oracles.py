"""
Brute-force oracles, each compared against the fast path it checks.

* :func:`exchange_bfs` -- exchange classes by breadth-first search versus
  :func:`~collage.diagram.normalize`,
* :func:`coend_closure` -- union-find coends versus relation closure,
* :func:`hom_count` -- :func:`~collage.presentations.hom_enumerate` versus
  enumerating every layer sequence and deduplicating.

Each returns an :class:`OracleReport`; ``lines()`` is the deterministic
text the command line prints.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .diagram import OneCellPath, exchange_oracle, normalize
from .fincat.coend import coend, coend_oracle
from .fincat.instances import random_coend_instance
from .presentations import enumerate_layer_sequences, hom_enumerate
from .sig import TwoGraph

UNBOUNDED = 10**9


@dataclass
class OracleReport:
    name: str
    checked: int = 0
    disagreements: list = field(default_factory=list)
    details: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def lines(self) -> list[str]:
        head = f"{self.name}: {self.checked} checked, {len(self.disagreements)} disagreements"
        return [head] + [f"  {x}" for x in self.details] + [f"  MISMATCH {x}" for x in self.disagreements]


def small_paths(graph: TwoGraph, max_len: int) -> list[OneCellPath]:
    """Every composable path of at most ``max_len`` wires, empty paths included."""
    out = [OneCellPath(c) for c in graph.zero_cells]
    frontier = list(out)
    wires = sorted((graph.wire(g.name) for g in graph.one_generators), key=lambda w: w.name)
    for _ in range(max_len):
        frontier = [OneCellPath(p.start, p.wires + (w,)) for p in frontier for w in wires
                    if w.src == p.end]
        out += frontier
    return out


def exchange_bfs(graph: TwoGraph, max_layers: int = 4, max_domain: int = 2) -> OracleReport:
    """Exchange classes found by search must be exactly the classes of equal normal forms."""
    rep = OracleReport("exchange-bfs")
    for dom in small_paths(graph, max_domain):
        diagrams = enumerate_layer_sequences(graph, dom, max_layers)
        by_normal = defaultdict(set)
        for d in diagrams:
            by_normal[normalize(d)].add(d)
        seen = set()
        classes = 0
        for d in diagrams:
            if d in seen:
                continue
            orbit = exchange_oracle(d, UNBOUNDED)
            seen |= orbit
            classes += 1
            fast = by_normal[normalize(d)]
            if orbit != fast:
                rep.disagreements.append(f"{dom}: {d}")
        if classes != len(by_normal):
            rep.disagreements.append(f"{dom}: {classes} orbits but {len(by_normal)} normal forms")
        rep.checked += len(diagrams)
        rep.details.append(f"domain [{dom}]: {len(diagrams)} diagrams, {classes} classes")
    return rep


def coend_closure(seed: int, count: int = 100) -> OracleReport:
    rep = OracleReport("coend-closure")
    for s in range(seed, seed + count):
        args = random_coend_instance(s)
        fast, slow = coend(*args), coend_oracle(*args)
        rep.checked += 1
        rep.details.append(f"seed {s}: {len(fast)} classes")
        if fast.partition() != slow.partition():
            rep.disagreements.append(f"seed {s}")
    return rep


def hom_count(graph: TwoGraph, max_layers: int = 3, max_domain: int = 2) -> OracleReport:
    """Normal forms per hom-set, counted the fast way and the brute way."""
    rep = OracleReport("hom-count")
    for dom in small_paths(graph, max_domain):
        brute = defaultdict(set)
        for d in enumerate_layer_sequences(graph, dom, max_layers):
            brute[d.codomain].add(normalize(d))
        for cod in sorted(brute, key=lambda p: (p.start, p.names)):
            fast = hom_enumerate(graph, dom, cod, max_layers)
            rep.checked += 1
            if len(fast) != len(brute[cod]) or set(fast) != brute[cod]:
                rep.disagreements.append(f"[{dom}] -> [{cod}]: {len(fast)} vs {len(brute[cod])}")
        rep.details.append(f"domain [{dom}]: {len(brute)} codomains")
    return rep
