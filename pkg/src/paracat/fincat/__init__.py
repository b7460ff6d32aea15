"""Finite categories, functors, natural transformations and equivalences."""

from .category import (DEFAULT_BUDGET, Budget, FinCat, SubCat, as_budget, flip,
                       from_tables, validate_category)
from .constructions import (all_marked, arrow_category, coproduct, coslice, discrete, empty,
                            fiber_product, finset, full_subcategory, indiscrete, lax_pullback, product_all,
                            one_object, ordinal, point, poset, product, projections, slice_over,
                            twisted_arrow, walking_arrow, walking_iso)
from .equivalence import (EquivalenceReport, equivalence_report, find_isomorphism,
                          fully_faithful_witness, is_isomorphism)
from .functor import (Functor, NatTrans, compose_functors, constant_functor, identity_functor,
                      inclusion)
from .search import (enumerate_functors, enumerate_nat_trans, evaluation, functor_category,
                     nat_trans)


def opposite(C):
    return C.op


def opposite_functor(F):
    return F.op
