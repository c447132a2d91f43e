"""
The shipped example corpus: ``.collage`` files and rewrite traces.

Trace files are JSON objects naming a corpus file, a theory and the two
end diagrams, with the steps in the format of
:meth:`collage.rewrite.RewriteTrace.to_json`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

FILES = {
    "shared_state": "Shared state between two processes; the race-condition derivation.",
    "semaphore": "Shared state with a lock on the central wire; the race is ill-typed.",
    "buffer": "A producer, a queue and a consumer: a third bimodular graph.",
    "functorbox": "Functor boxes over lax monoidal functors; merges, units and zig-zags.",
    "monoidal": "Two endomorphisms drawn side by side, in cyclic groups.",
    "comb": "A comb with a hole, drawn as internal diagrams in tubes.",
    "twograph": "A two-zero-cell 2-graph with a cup and a cap.",
}

BIMODULAR = ("shared_state", "semaphore", "buffer")


def _root():
    return resources.files(__name__)


def path(name: str):
    """The corpus file ``name`` (with or without the ``.collage`` suffix)."""
    stem = name[:-8] if name.endswith(".collage") else name
    if stem not in FILES:
        raise KeyError(f"no corpus file {name!r}")
    return _root() / f"{stem}.collage"


def source(name: str) -> str:
    return path(name).read_text(encoding="utf-8")


def load(name: str):
    from ..syntax import parse_file
    return parse_file(source(name))


def trace_names() -> list[str]:
    return sorted(p.name[:-11] for p in (_root() / "traces").iterdir()
                  if p.name.endswith(".trace.json"))


@dataclass
class CorpusTrace:
    name: str
    file: str
    theory: object
    lhs: object
    rhs: object
    trace: object
    description: str = ""


def load_trace_file(name: str) -> CorpusTrace:
    from ..rewrite import load_trace
    data = json.loads((_root() / "traces" / f"{name}.trace.json").read_text(encoding="utf-8"))
    doc = load(data["file"])
    theory = doc.theory(data["theory"])
    d1, d2 = theory.diagram(data["from"]), theory.diagram(data["to"])
    return CorpusTrace(name, data["file"], theory, d1, d2, load_trace(data["steps"], d1),
                       data.get("description", ""))


def index() -> str:
    """A plain-text listing, as printed by ``collage examples``."""
    lines = ["files:"]
    width = max(map(len, FILES))
    for name, text in FILES.items():
        lines.append(f"  {name + '.collage':<{width + 9}} {text}")
    lines.append("traces:")
    for name in trace_names():
        t = json.loads((_root() / "traces" / f"{name}.trace.json").read_text(encoding="utf-8"))
        lines.append(f"  {name:<{width + 9}} {t['theory']}.{t['from']} -> {t['theory']}.{t['to']}"
                     f" ({len(t['steps'])} steps)")
    return "\n".join(lines) + "\n"
