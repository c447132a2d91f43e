"""
Coends and other finite quotients, computed with union-find.

Every quotient here is "a finite set modulo the equivalence relation
generated by some pairs". :func:`quotient` does that with union-find and
:func:`closure_classes` does it by breadth-first search over the generating
pairs; the second is the oracle for the first.
"""

from __future__ import annotations

import json
from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable


def sort_key(x) -> str:
    """Total order on heterogeneous hashables, stable across runs."""
    return repr(x)


class UnionFind:
    def __init__(self, items: Iterable[Hashable] = ()):
        self.parent: dict = {}
        self.rank: dict = {}
        for x in items:
            self.add(x)

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x
            self.rank[x] = 0

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True


@dataclass(frozen=True)
class CoendResult:
    """A partition with canonical representatives (the least element of each class)."""
    classes: tuple[tuple, ...]
    representative: dict = field(compare=False, hash=False)
    witnesses: dict | None = field(default=None, compare=False, hash=False)

    def __len__(self):
        return len(self.classes)

    def rep(self, x):
        return self.representative[x]

    def same(self, a, b) -> bool:
        return self.representative[a] == self.representative[b]

    def partition(self) -> frozenset:
        return frozenset(frozenset(c) for c in self.classes)

    def to_json(self) -> str:
        return json.dumps([[sort_key(x) for x in c] for c in self.classes], ensure_ascii=False)


def _result(groups: Iterable[Iterable], witnesses=None) -> CoendResult:
    classes = sorted((tuple(sorted(g, key=sort_key)) for g in groups),
                     key=lambda c: sort_key(c[0]))
    rep = {x: c[0] for c in classes for x in c}
    return CoendResult(tuple(classes), rep, witnesses)


def quotient(elements: Iterable[Hashable], pairs: Iterable[tuple], keep_witnesses=False) -> CoendResult:
    """``elements`` modulo the equivalence generated by ``pairs``, by union-find."""
    elements = list(elements)
    uf = UnionFind(elements)
    used = [] if keep_witnesses else None
    for a, b in pairs:
        if a not in uf.parent or b not in uf.parent:
            raise KeyError(f"pair ({a!r}, {b!r}) leaves the element set")
        if uf.union(a, b) and used is not None:
            used.append((a, b))
    groups = defaultdict(list)
    for x in elements:
        groups[uf.find(x)].append(x)
    witnesses = None
    if used is not None:
        witnesses = {"spanning": used}
    return _result(groups.values(), witnesses)


def closure_classes(elements: Iterable[Hashable], pairs: Iterable[tuple]) -> CoendResult:
    """The same partition, by explicit symmetric closure and graph search."""
    elements = list(elements)
    adj = {x: set() for x in elements}
    for a, b in pairs:
        adj[a].add(b)
        adj[b].add(a)
    seen, groups = set(), []
    for x in sorted(elements, key=sort_key):
        if x in seen:
            continue
        comp, todo = [], deque([x])
        seen.add(x)
        while todo:
            y = todo.popleft()
            comp.append(y)
            for z in adj[y]:
                if z not in seen:
                    seen.add(z)
                    todo.append(z)
        groups.append(comp)
    return _result(groups)


def coend_relation(category, values: Callable, left: Callable, right: Callable):
    """Diagonal elements and generating pairs of a coend.

    ``values(a, b)`` lists the body ``P(a, b)``, contravariant in ``a``;
    ``left(m, x)`` acts with ``m : a -> b`` on ``x`` in ``P(b, a)`` giving an
    element of ``P(a, a)``, and ``right(x, m)`` gives one of ``P(b, b)``.
    """
    elements = [x for a in category.objects for x in values(a, a)]
    pairs = []
    for m in sorted(category.morphisms, key=sort_key):
        a, b = category.src(m), category.tgt(m)
        for x in values(b, a):
            pairs.append((left(m, x), right(x, m)))
    return elements, pairs


def coend(category, values: Callable, left: Callable, right: Callable,
          keep_witnesses=False) -> CoendResult:
    """``\\int^{a} P(a, a)``: the disjoint union of the diagonal modulo ``left(m, x) ~ right(x, m)``."""
    elements, pairs = coend_relation(category, values, left, right)
    return quotient(elements, pairs, keep_witnesses)


def coend_oracle(category, values: Callable, left: Callable, right: Callable) -> CoendResult:
    elements, pairs = coend_relation(category, values, left, right)
    return closure_classes(elements, pairs)
