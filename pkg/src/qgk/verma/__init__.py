"""Verma modules in rank <= 2: rewriting bases of U_q^-, contravariant Gram
matrices, the Shapovalov determinant, the Jantzen sum formula and baby Verma
modules at roots of unity."""

from .gram import (AtRoot, Deformed, GenericQ, GramEngine, GramReport, NumericQ, SymbolicZ,
                   contravariant_gram, simple_graded_dims)
from .growth import (BabyVermaReport, GrowthReport, InadmissibleOrder, baby_verma_head,
                     generic_graded_dims, growth_experiment)
from .rewrite import (HeightTooLarge, NegWord, NonConfluent, RewriteSystem, UnsupportedType,
                      build_rewrite_system, serre_relations)
from .shapovalov import (CrossCheck, DetFormula, JantzenCheck, det_formula_cross_check,
                         jantzen_sum_check, shapovalov_det_formula, shapovalov_factors)

__all__ = [
    "AtRoot", "BabyVermaReport", "CrossCheck", "Deformed", "DetFormula", "GenericQ",
    "GramEngine", "GramReport", "GrowthReport", "HeightTooLarge", "InadmissibleOrder",
    "JantzenCheck", "NegWord", "NonConfluent", "NumericQ", "RewriteSystem", "SymbolicZ",
    "UnsupportedType", "baby_verma_head", "build_rewrite_system", "contravariant_gram",
    "det_formula_cross_check", "generic_graded_dims", "growth_experiment",
    "jantzen_sum_check", "serre_relations", "shapovalov_det_formula", "shapovalov_factors",
    "simple_graded_dims",
]
