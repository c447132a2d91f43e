"""
Interchange and normal forms
============================

A sliced diagram is a list of layers. Two adjacent layers on disjoint wires
may swap; a diagram's normal form is the least member of its class. Here
the normal form is compared with a plain breadth-first search, and the
diagram is written out as SVG.
"""

import tempfile
from pathlib import Path

from collage import corpus, oracles
from collage.diagram import exchange_oracle, normalize
from collage.render import render
from collage.syntax import format_diagram

test = corpus.load("twograph").theory("Test")
graph = test.graph
d = graph.generator("f") @ graph.generator("f") @ graph.generator("cup")
orbit = exchange_oracle(d, 100)
print(len(orbit), "slicings of", format_diagram(d))
for x in sorted(orbit, key=lambda x: [(o, g.name) for o, g in x.steps]):
    mark = "*" if x == normalize(d) else " "
    print(mark, format_diagram(x))

###############################################################################
# The same check, exhaustively over small diagrams.

print("\n".join(oracles.exchange_bfs(graph, max_layers=3).lines()))

###############################################################################
# Rendering depends only on the diagram, so the file is reproducible.

out = Path(tempfile.gettempdir()) / "bubble.svg"
out.write_text(render(test.diagram("bubble"), "svg", graph.zero_cells), encoding="utf-8")
print("wrote", out)
