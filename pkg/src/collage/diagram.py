"""
Sliced 2-cells of free 2-categories.

A diagram is a domain path followed by a list of layers; each layer applies
one 2-generator to a contiguous slice of the current path. Two diagrams are
equal in the free 2-category iff they are connected by exchange moves, and
:func:`normalize` picks a canonical member of each exchange class.

>>> X = Wire('a', 'X', 'X')
>>> f = Gen('f', 'X', 'X', (X,), (X,))
>>> d = SlicedDiagram.generator(f) >> SlicedDiagram.generator(f)
>>> len(d), d.codomain.names
(2, ('a',))
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


class DiagramError(ValueError):
    """Raised when a diagram is built from incompatible pieces."""


class BoundaryMismatch(DiagramError):
    def __init__(self, message, expected=None, found=None, position=None):
        super().__init__(message)
        self.expected = expected
        self.found = found
        self.position = position


class ZeroCellMismatch(DiagramError):
    pass


@dataclass(frozen=True)
class Wire:
    """A 1-generator ``name : src -> tgt``."""
    name: str
    src: str
    tgt: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Gen:
    """A 2-generator between two parallel paths from ``src`` to ``tgt``."""
    name: str
    src: str
    tgt: str
    dom: tuple[Wire, ...]
    cod: tuple[Wire, ...]
    kind: str = field(default="", compare=False)

    def __post_init__(self):
        for path in (self.dom, self.cod):
            _check_composable(self.src, path, self.tgt, self.name)
        # exchange search hashes generators millions of times
        object.__setattr__(self, "_hash", hash((self.name, self.src, self.tgt, self.dom, self.cod)))

    def __hash__(self):
        return self._hash

    def __str__(self):
        return self.name


def _check_composable(start, wires, end=None, what="path"):
    here = start
    for w in wires:
        if w.src != here:
            raise ZeroCellMismatch(
                f"{what}: wire {w.name} starts at {w.src}, expected {here}")
        here = w.tgt
    if end is not None and here != end:
        raise ZeroCellMismatch(f"{what}: path ends at {here}, expected {end}")
    return here


@dataclass(frozen=True)
class OneCellPath:
    """A composable sequence of wires; the empty path is the identity at ``start``."""
    start: str
    wires: tuple[Wire, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "wires", tuple(self.wires))
        _check_composable(self.start, self.wires)

    @property
    def end(self) -> str:
        return self.wires[-1].tgt if self.wires else self.start

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(w.name for w in self.wires)

    def cell_at(self, offset: int) -> str:
        """Zero-cell sitting just left of wire ``offset``."""
        return self.start if offset == 0 else self.wires[offset - 1].tgt

    def __len__(self):
        return len(self.wires)

    def __add__(self, other: OneCellPath) -> OneCellPath:
        if self.end != other.start:
            raise ZeroCellMismatch(
                f"cannot concatenate paths ending at {self.end} "
                f"and starting at {other.start}")
        return OneCellPath(self.start, self.wires + other.wires)

    def __str__(self):
        return ", ".join(self.names) if self.wires else f"@{self.start}"


@dataclass(frozen=True)
class Layer:
    left: tuple[Wire, ...]
    gen: Gen
    right: tuple[Wire, ...]

    @property
    def offset(self) -> int:
        return len(self.left)

    @property
    def input(self) -> tuple[Wire, ...]:
        return self.left + self.gen.dom + self.right

    @property
    def output(self) -> tuple[Wire, ...]:
        return self.left + self.gen.cod + self.right


def _apply(path: OneCellPath, offset: int, gen: Gen) -> tuple[Layer, OneCellPath]:
    """Place ``gen`` at ``offset`` of ``path``; return the layer and the new path."""
    wires = path.wires
    n = len(gen.dom)
    if offset < 0 or offset + n > len(wires):
        raise BoundaryMismatch(
            f"{gen.name} at offset {offset} overruns a path of length {len(wires)}",
            position=offset)
    if wires[offset:offset + n] != gen.dom:
        raise BoundaryMismatch(
            f"{gen.name} expects {', '.join(w.name for w in gen.dom) or 'nothing'} "
            f"at offset {offset}, found "
            f"{', '.join(w.name for w in wires[offset:offset + n]) or 'nothing'}",
            expected=gen.dom, found=wires[offset:offset + n], position=offset)
    if path.cell_at(offset) != gen.src:
        raise ZeroCellMismatch(
            f"{gen.name} lives at zero-cell {gen.src}, offset {offset} is at "
            f"{path.cell_at(offset)}")
    if path.cell_at(offset + n) != gen.tgt:
        raise ZeroCellMismatch(
            f"{gen.name} ends at zero-cell {gen.tgt}, offset {offset + n} is at "
            f"{path.cell_at(offset + n)}")
    left, right = wires[:offset], wires[offset + n:]
    return Layer(left, gen, right), OneCellPath(path.start, left + gen.cod + right)


@dataclass(frozen=True)
class SlicedDiagram:
    """A 2-cell as a boundary-matched sequence of layers."""
    domain: OneCellPath
    layers: tuple[Layer, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "layers", tuple(self.layers))
        path = self.domain
        for i, layer in enumerate(self.layers):
            if layer.input != path.wires:
                raise BoundaryMismatch(
                    f"layer {i} expects input "
                    f"[{', '.join(w.name for w in layer.input)}], previous output is "
                    f"[{', '.join(path.names)}]",
                    expected=layer.input, found=path.wires, position=i)
            _, path = _apply(path, layer.offset, layer.gen)
        object.__setattr__(self, "_codomain", path)
        object.__setattr__(self, "_steps", tuple((l.offset, l.gen) for l in self.layers))

    @classmethod
    def _checked(cls, domain, layers, codomain) -> SlicedDiagram:
        """Layers already matched against each other by ``_apply``."""
        d = object.__new__(cls)
        object.__setattr__(d, "domain", domain)
        object.__setattr__(d, "layers", layers)
        object.__setattr__(d, "_codomain", codomain)
        object.__setattr__(d, "_steps", tuple((l.offset, l.gen) for l in layers))
        return d

    # construction

    @staticmethod
    def from_steps(domain: OneCellPath, steps: Iterable[tuple[int, Gen]]) -> SlicedDiagram:
        """Build from ``(offset, generator)`` pairs applied in order."""
        layers, path = [], domain
        for offset, gen in steps:
            layer, path = _apply(path, offset, gen)
            layers.append(layer)
        return SlicedDiagram._checked(domain, tuple(layers), path)

    @staticmethod
    def generator(gen: Gen) -> SlicedDiagram:
        return SlicedDiagram.from_steps(OneCellPath(gen.src, gen.dom), [(0, gen)])

    # boundaries

    @property
    def codomain(self) -> OneCellPath:
        return self._codomain

    @property
    def source(self) -> str:
        return self.domain.start

    @property
    def target(self) -> str:
        return self.domain.end

    @property
    def steps(self) -> tuple[tuple[int, Gen], ...]:
        return self._steps

    def paths(self) -> list[OneCellPath]:
        """All intermediate paths, from domain to codomain."""
        out = [self.domain]
        for layer in self.layers:
            out.append(OneCellPath(self.domain.start, layer.output))
        return out

    def __len__(self):
        return len(self.layers)

    def __rshift__(self, other):
        return compose_vertical(self, other)

    def __matmul__(self, other):
        return tensor_horizontal(self, other)

    def __str__(self):
        from .syntax import format_diagram
        return format_diagram(self)


def identity(path: OneCellPath) -> SlicedDiagram:
    return SlicedDiagram(path, ())


def compose_vertical(d1: SlicedDiagram, d2: SlicedDiagram) -> SlicedDiagram:
    if d1.codomain != d2.domain:
        raise BoundaryMismatch(
            f"cannot compose: codomain [{d1.codomain}] differs from domain [{d2.domain}]",
            expected=d2.domain.wires, found=d1.codomain.wires)
    return SlicedDiagram(d1.domain, d1.layers + d2.layers)


def tensor_horizontal(d1: SlicedDiagram, d2: SlicedDiagram) -> SlicedDiagram:
    if d1.target != d2.source:
        raise ZeroCellMismatch(
            f"cannot tensor: left diagram ends at {d1.target}, right starts at {d2.source}")
    first = [Layer(l.left, l.gen, l.right + d2.domain.wires) for l in d1.layers]
    second = [Layer(d1.codomain.wires + l.left, l.gen, l.right) for l in d2.layers]
    return SlicedDiagram(d1.domain + d2.domain, tuple(first + second))


def whisker(left: OneCellPath, d: SlicedDiagram, right: OneCellPath) -> SlicedDiagram:
    return tensor_horizontal(tensor_horizontal(identity(left), d), identity(right))


# exchange moves

Step = tuple[int, Gen]


def exchange(lower: Step, upper: Step) -> tuple[Step, Step] | None:
    """Swap two adjacent layers acting on disjoint intervals, if allowed.

    Intervals are taken in the path between the two layers: the output of
    ``lower`` and the input of ``upper``. Two zero-width intervals at the same
    offset never exchange.
    """
    (o1, g1), (o2, g2) = lower, upper
    moved = _swap_offsets(o1, len(g1.dom), len(g1.cod), o2, len(g2.dom), len(g2.cod))
    return None if moved is None else ((moved[0], g2), (moved[1], g1))


def _swap_offsets(o1, a1, c1, o2, a2, c2) -> tuple[int, int] | None:
    """New offsets (upper first) after exchanging two layers, or None."""
    if c1 == 0 and a2 == 0 and o1 == o2:
        return None
    if o2 + a2 <= o1:
        return o2, o1 - a2 + c2
    if o2 >= o1 + c1:
        return o2 - c1 + a1, o1
    return None


def exchange_neighbours(steps: Sequence[Step]) -> Iterator[tuple[Step, ...]]:
    steps = tuple(steps)
    for i in range(len(steps) - 1):
        swapped = exchange(steps[i], steps[i + 1])
        if swapped is not None:
            yield steps[:i] + swapped + steps[i + 2:]


def exchange_oracle(d: SlicedDiagram, depth: int, limit: int | None = None) -> set[SlicedDiagram]:
    """All diagrams reachable from ``d`` by at most ``depth`` exchange moves."""
    return {SlicedDiagram.from_steps(d.domain, s)
            for s in exchange_orbit(d.steps, depth, limit)}


def exchange_orbit(steps: Sequence[Step], depth: int, limit: int | None = None) -> list[tuple[Step, ...]]:
    """Breadth-first exchange neighbourhood, in deterministic discovery order."""
    # search over (offset, generator index) so hashing never reaches the wires
    gens = list(dict.fromkeys(g for _, g in steps))
    index = {g: k for k, g in enumerate(gens)}
    widths = [(len(g.dom), len(g.cod)) for g in gens]

    def swap(lower, upper):
        (o1, k1), (o2, k2) = lower, upper
        moved = _swap_offsets(o1, *widths[k1], o2, *widths[k2])
        return None if moved is None else ((moved[0], k2), (moved[1], k1))

    start = tuple((o, index[g]) for o, g in steps)
    seen = {start: 0}
    order = [start]
    queue = deque([start])
    while queue:
        current = queue.popleft()
        if seen[current] >= depth or (limit is not None and len(order) >= limit):
            continue
        for i in range(len(current) - 1):
            swapped = swap(current[i], current[i + 1])
            if swapped is None:
                continue
            nxt = current[:i] + swapped + current[i + 2:]
            if nxt not in seen:
                seen[nxt] = seen[current] + 1
                order.append(nxt)
                if limit is not None and len(order) >= limit:
                    break
                queue.append(nxt)
    return [tuple((o, gens[k]) for o, k in rep) for rep in order]


# canonical form

def _key(step: Step) -> tuple[int, str]:
    return step[0], step[1].name


def _bubble(steps: tuple[Step, ...], k: int) -> tuple[Step, ...] | None:
    """Move layer ``k`` to the front by exchange moves, or None if blocked."""
    seq = list(steps)
    for j in range(k - 1, -1, -1):
        swapped = exchange(seq[j], seq[j + 1])
        if swapped is None:
            return None
        seq[j], seq[j + 1] = swapped
    return tuple(seq)


def _normal_steps(steps: tuple[Step, ...], memo: dict) -> tuple[Step, ...]:
    if len(steps) <= 1:
        return steps
    if steps in memo:
        return memo[steps]
    fronts = {}
    for k in range(len(steps)):
        moved = _bubble(steps, k)
        if moved is not None:
            fronts.setdefault(moved, None)
    best_key = min(_key(s[0]) for s in fronts)
    tied = [s for s in fronts if _key(s[0]) == best_key]
    results = [(s[0],) + _normal_steps(s[1:], memo) for s in tied]
    result = min(results, key=lambda r: [_key(x) for x in r])
    memo[steps] = result
    return result


def normalize(d: SlicedDiagram) -> SlicedDiagram:
    """Canonical representative of the exchange class of ``d``.

    The representative is the lexicographically least layer sequence, where a
    layer compares by offset and then by generator name.
    """
    steps = _normal_steps(d.steps, {})
    if steps == d.steps:
        return d
    return SlicedDiagram.from_steps(d.domain, steps)


def eq_free(d1: SlicedDiagram, d2: SlicedDiagram) -> bool:
    return d1.domain == d2.domain and normalize(d1) == normalize(d2)


# canonical JSON

def to_json(d: SlicedDiagram) -> dict:
    return {
        "domain": list(d.domain.names),
        "layers": [{"left": [w.name for w in l.left], "gen": l.gen.name,
                    "right": [w.name for w in l.right]} for l in d.layers],
    }


def from_json(data: dict, graph, start: str | None = None) -> SlicedDiagram:
    """Rebuild a diagram from :func:`to_json` output over a :class:`TwoGraph`."""
    wires = tuple(graph.wire(name) for name in data["domain"])
    if start is None:
        if not wires:
            raise DiagramError("empty domain needs an explicit start zero-cell")
        start = wires[0].src
    domain = OneCellPath(start, wires)
    layers = []
    for entry in data["layers"]:
        layers.append(Layer(tuple(graph.wire(n) for n in entry["left"]),
                            graph.gen(entry["gen"]),
                            tuple(graph.wire(n) for n in entry["right"])))
    return SlicedDiagram(domain, tuple(layers))
