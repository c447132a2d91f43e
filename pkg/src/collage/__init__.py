"""
collage: string diagrams for bimodular categories, functor boxes and
internal diagrams, with a finite semantic backend.

Subpackages and modules:

=================  ==========================================================
``sig``            signatures: polygraphs, 2-graphs, bimodular graphs, boxes
``diagram``        sliced 2-cells, exchange moves and normal forms
``presentations``  collages, functor-box adjunctions, tubes, enumeration
``rewrite``        rewrite rules, traces and bounded equality search
``syntax``         the ``.collage`` text format
``fincat``         finite categories, profunctors, coends, promonads
``semantics``      evaluation of diagrams in finite models
``render``         SVG, dot and TikZ output
``oracles``        brute-force oracles for the fast paths
``cli``            the ``collage`` command
=================  ==========================================================
"""

from .diagram import (BoundaryMismatch, DiagramError, Gen, Layer, OneCellPath, SlicedDiagram,
                      Wire, compose_vertical, eq_free, exchange, exchange_oracle, identity,
                      normalize, tensor_horizontal, whisker)
from .sig import (BimodularGraph, Diagnostic, Edge, Equation, EquationSet, FunctorBoxSignature,
                  OneGen, Polygraph, TwoGraph, validate_signature)
from .presentations import (collage_of, chosen_graph, hom_enumerate, syn_functor_box,
                            syn_internal, typecheck_central, unit_iso_check)
from .rewrite import (RewriteRule, RewriteTrace, TraceStep, bounded_eq, find_matches,
                      apply_rule, validate_trace, theory_rules)
from .syntax import parse_file, parse_diagram, format_diagram, CollageSyntaxError

__version__ = "0.1.0"
