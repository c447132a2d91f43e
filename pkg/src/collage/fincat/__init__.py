"""Finite semantic backend: categories as tables, profunctors, coends, Kleisli promonads."""

from .category import (FinCategory, FinMonoidalCategory, FinLaxMonoidalFunctor, TableError,
                       SizeLimitExceeded, check_category, check_monoidal, check_lax,
                       MAX_MORPHISMS, MAX_OBJECTS)
from .bimodular import (FinBimodularCategory, FinBimodularProfunctor, check_bimodular,
                        check_profunctor, check_strength, hom_profunctor)
from .coend import (CoendResult, UnionFind, closure_classes, coend, coend_oracle, quotient,
                    sort_key)
from .profunctor import (CompositionMismatch, NotWellDefined, TensorQuotient,
                         compose_pointed_profunctors, composite_classes,
                         outer_strength_violations, tensor_bimodular_profunctors,
                         tensor_relation, check_equilibrators)
from .kleisli import KleisliCategory, kleisli_promonad, promonad_law_violations
from . import models

__all__ = [
    "FinCategory", "FinMonoidalCategory", "FinLaxMonoidalFunctor", "TableError",
    "SizeLimitExceeded", "check_category", "check_monoidal", "check_lax",
    "MAX_MORPHISMS", "MAX_OBJECTS",
    "FinBimodularCategory", "FinBimodularProfunctor", "check_bimodular", "check_profunctor",
    "check_strength", "hom_profunctor",
    "CoendResult", "UnionFind", "closure_classes", "coend", "coend_oracle", "quotient", "sort_key",
    "CompositionMismatch", "NotWellDefined", "TensorQuotient", "compose_pointed_profunctors",
    "composite_classes", "outer_strength_violations", "tensor_bimodular_profunctors",
    "tensor_relation", "check_equilibrators",
    "KleisliCategory", "kleisli_promonad", "promonad_law_violations", "models",
]
