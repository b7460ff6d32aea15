"""Parametrized constructions: vertical opposites, duals, cofree T-objects, parametrized
functor categories, presheaves and the Yoneda embedding."""

from .finsets import arrow_target_fibration, fin_T_sets_category, slice_comparison, underline_fin_T_sets
from .internal_hom import (FormulaCheck, hom_formula_check, left_kan_slice, presheaf_internal_hom,
                           projection_formula_check, slice_restriction, yoneda_presheaf)
from .sections import (check_restrictions, cocartesian_sections, curry_compare, evaluation_at_identity,
                       fun_underline, right_kan_extend, sections_tcat, under)
from .tilde import (CartesianTransport, cofree_compare, evaluate_at_identity, fun_tilde,
                    identity_square_value, underline_objects, vertical_fiber)
from .vop import dualize, inversion, vop, vop_fiber_iso, vopvop_comparison
from .yoneda import (YonedaReport, max_vertical_hom, presheaf_tcat, yoneda, yoneda_check,
                     yoneda_representable)
