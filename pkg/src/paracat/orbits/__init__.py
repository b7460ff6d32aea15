"""Finite groups, orbit categories, finite T-sets and the Galois example."""

from .galois import FiniteField, GaloisConfig, galois_vect
from .groups import (FinGroup, cyclic, fixed_point_count, orbit_category, permutation_group,
                     symmetric, trivial_group)
from .tsets import (FinTSet, TSetMap, compose_maps, coproduct_tsets, count_fin_T_set_maps,
                    discrete_T_space, hom_fin_T_sets, identity_map, orbit_decomposition,
                    orbit_of_map, presheaf_map, pullback_fin_T_sets, small_tsets, tset_presheaf,
                    verify_pullback)
