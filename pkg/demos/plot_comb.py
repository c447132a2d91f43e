"""
Plugging a process into a comb
==============================

A comb ``f : A -> M, B`` and ``h : M, C -> D`` has a hole from ``B`` to
``C``. Drawn with tubes, the hole is a cap followed by a cup, and the comb
evaluates to a point of a composite of pointed profunctors. Filling the
hole with ``g`` must agree with composing ``f ; (M (x) g) ; h`` directly.
"""

from itertools import product

from collage import corpus
from collage.fincat import models
from collage.semantics import comb_eval, evaluate, interpretations_for

doc = corpus.load("comb")
comb = doc.theory("Comb")

for interp in interpretations_for(doc, "Comb"):
    value = evaluate(comb, comb.diagram("comb"), interp)
    filled = evaluate(comb, comb.diagram("filled"), interp)
    print(f"{interp.name}: {len(value.classes())} classes, "
          f"plugged {value.plug([interp.mor('g')])}, filled {filled.point[2]}")

###############################################################################
# Over the two-element group every comb and every plug agree.

Z2 = models.delooping(2)
objects = dict.fromkeys("AMBCD", "*")
rows = []
for f, h, g in product(Z2.morphisms, repeat=3):
    r = comb_eval(f, h, g, Z2, objects)
    rows.append((f, h, g, r.direct, r.internal))
for row in rows:
    print("f=%s h=%s g=%s  direct %s  via tubes %s" % row)
