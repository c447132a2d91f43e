"""
Functor boxes and their zig-zags
================================

A box drawn around part of a diagram stands for a lax monoidal functor.
Its two walls are wires ``Fup`` and ``Fdown``; creating an empty box and
merging neighbouring boxes are the unit and counit of an adjunction, so
box-merging laws become snake equations.
"""

from collage import corpus
from collage.diagram import normalize
from collage.presentations import syn_functor_box
from collage.rewrite import kit_lax_merge, rewrite_to_fixpoint
from collage.semantics import eval_functor_box, interpretations_for
from collage.syntax import format_diagram

doc = corpus.load("functorbox")
boxes = doc.theory("Boxes")

###############################################################################
# Merging three boxes left-first or right-first gives the same diagram up to
# sliding layers past each other, so no rule is needed for associativity.

left, right = boxes.diagram("three_left"), boxes.diagram("three_right")
print(normalize(left) == normalize(right))

###############################################################################
# An empty box merged into a neighbour straightens in one snake step; three
# in a row take three.

rules = kit_lax_merge(syn_functor_box(boxes.signature))
for name in ("unit_left", "unit_right", "zigzag_up3", "zigzag_down3"):
    out, trace = rewrite_to_fixpoint(boxes.diagram(name), rules)
    print(f"{name}: {len(trace.steps)} steps -> {format_diagram(out)}")

###############################################################################
# Both shipped lax functors agree that the merges change nothing.

for interp in interpretations_for(doc, "Boxes"):
    vals = {n: eval_functor_box(boxes.diagram(n), boxes.signature, interp).value
            for n in ("three_left", "three_right", "unit_left", "box_x")}
    print(interp.name, vals)
