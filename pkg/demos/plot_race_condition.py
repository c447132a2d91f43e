"""
A race condition, derived and then forbidden
============================================

Two processes share one central object. Each reads it, increments the
value it read and writes it back. Read in the shared-state theory, the two
interleaved runs collapse: one increment is lost. Splitting the central
object into ``free`` and ``locked`` states makes the interleaving ill-typed.
"""

from collage import corpus
from collage.rewrite import bounded_eq, theory_rules, validate_trace
from collage.semantics import evaluate, interpretations_for
from collage.syntax import format_diagram

doc = corpus.load("shared_state")
shared = doc.theory("Shared")
race, lost = shared.diagram("race0"), shared.diagram("race4")
print("race0 =", format_diagram(race))
print("race4 =", format_diagram(lost))

###############################################################################
# Bounded rewriting finds a derivation from the race to the run where only
# the right increment survives. The trace replays step by step.

rules = theory_rules(shared)
verdict = bounded_eq(race, lost, rules)
print(verdict.verdict, [s.rule for s in verdict.trace.steps])
check = validate_trace(verdict.trace, rules, end=lost)
for k, d in enumerate(check.intermediates):
    print(f"  {k}: {format_diagram(d)}")

###############################################################################
# The shipped model evaluates both ends to the same residue, as it must.

(counter,) = interpretations_for(doc, "Shared")
print({n: evaluate(shared, shared.diagram(n), counter).value for n in ("race0", "race4")})

###############################################################################
# With a lock on the central wire the same composite no longer elaborates.

sem = corpus.load("semaphore").theory("Semaphore")
for diag in sem.check():
    print(diag)
