"""Basic TCats over a base ``S``."""

from ..fincat import Functor, empty, fiber_product, identity_functor, product
from .core import TFunctor, make_tcat


def terminal_tcat(S):
    """``*_T``: the identity of the base."""
    return make_tcat(identity_functor(S), cocartesian=lambda m: True, name="*_T")


def empty_tcat(S):
    E = empty()
    return make_tcat(Functor(E, S, [], {}), name="empty_T")


def constant_tcat(D, S, name=None):
    """``D x S -> S``; an edge is cocartesian exactly when its ``D`` part is invertible."""
    P = product(D, S)
    p = Functor(P, S, [b for _, b in P.data], lambda m: P.label(m)[1], name="pr")
    return make_tcat(p, cocartesian=lambda m: D.is_iso(P.label(m)[0]),
                     name=name or f"const({D.name})")


def tcat_product(C, D):
    """``C x_S D`` with its two projections as TFunctors."""
    P, p1, p2 = fiber_product(C.structure, D.structure)
    pr = C.structure * p1
    E = make_tcat(pr, cocartesian=lambda m: C.is_cocartesian(p1.fm(m)) and D.is_cocartesian(p2.fm(m)),
                  name=f"{C.name}x{D.name}")
    return E, TFunctor(E, C, p1), TFunctor(E, D, p2)
