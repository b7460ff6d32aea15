"""Cocartesian fibrations over a finite base and the structure around them."""

from .cleavage import (Cleavage, RetractionReport, arrow_pullback, strong_pushforward,
                       unit_section, verify_retraction)
from .core import (EdgeTest, FibrationReport, TCat, TFunctor, classify_fibration,
                   compose_tfunctors, find_cocartesian_lift, identity_tfunctor,
                   is_cartesian_edge, is_cocartesian_edge, make_tcat, opfibration_witness)
from .standard import constant_tcat, empty_tcat, tcat_product, terminal_tcat
from .tfunctors import (TEquivalenceReport, enumerate_tfunctors, fun_T, is_cocartesian_T_fibration,
                        map_T, precompose, restrict_tcat, subcategory, t_equivalence_report,
                        tsubcategory_checks)


def fiber(C, V):
    return C.fiber(V)


def choose_cleavage(C):
    return C.cleavage().validate()
