"""Fiberwise opposites and duals of fibrations.

A morphism ``x -> y`` of ``vop(C)`` over ``f`` is a vertical morphism
``g: y -> f_! x`` (the cospan ``x -> f_! x <- y`` normalised by the chosen
lift).  Composition uses the coherence isomorphisms of the cleavage:
``(h, k) . (f, g) = (h f, gamma_{h,f,x} . h_!(g) . k)``.
"""

from ..errors import NotCartesianFibration
from ..fincat import FinCat, Functor
from ..fibration import TFunctor, classify_fibration, make_tcat


def vop(C, name=None):
    cl = C.cleavage()
    X, S = C.total, C.base

    def hom(i, j):
        out = []
        for f in S.hom(C.p(i), C.p(j)):
            fx = cl.push(i, f)
            out.extend((f, g) for g in X.hom(j, fx) if C.is_vertical(g))
        return out

    def compose(lg, lf, i, j, k):
        (f, g), (h, kk) = lf, lg
        return (S.compose(h, f),
                X.chain(cl.gamma(h, f, i), cl.push_mor(g, h), kk))

    def identity(i):
        return (S.identity(C.p(i)), X.identity(i))

    V = FinCat(X.objects, hom, compose, identity, name=name or f"vop({C.name})")
    p = Functor(V, S, C.structure.obj, lambda m: V.label(m)[0], name="p")
    out = make_tcat(p, cocartesian=lambda m: X.is_iso(V.label(m)[1]), name=V.name)
    out.source_tcat = C
    return out


def vop_fiber_iso(C, VC, V):
    """The identity-on-objects isomorphism ``op(C_V) -> fiber(vop C, V)``."""
    F, G = C.fiber(V), VC.fiber(V)
    Fo = F.op
    S = C.base
    idV = S.identity(V)

    def mor(m):
        g = F.to_parent((m[1], m[0], m[2]))
        return G.from_parent(VC.total.mor(G.embed[m[0]], G.embed[m[1]], (idV, g)))

    return Functor(Fo, G, range(len(F)), mor, name="op-fiber")


def vopvop_comparison(C, VVC=None):
    """``C -> vop(vop C)``: ``u = v . lift(x, f)`` goes to ``(f, (id, v . g_l))``.

    Here ``l = (f, g_l)`` is the chosen lift of ``f`` at ``x`` in ``vop C``.
    """
    VC = VVC.source_tcat if VVC is not None else vop(C)
    VVC = VVC or vop(VC)
    cl, vcl = C.cleavage(), VC.cleavage()
    X, S = C.total, C.base
    W = VC.total

    def mor(u):
        x, y = u[0], u[1]
        f = C.pm(u)
        v = cl.factor(cl.lift(x, f), u, S.identity(f[1]))
        ell = vcl.lift(x, f)
        g_l = W.label(ell)[1]
        inner = W.mor(y, ell[1], (S.identity(f[1]), X.compose(v, g_l)))
        return VVC.total.mor(x, y, (f, inner))

    F = Functor(X, VVC.total, range(len(X)), mor, name="vopvop")
    return TFunctor(C, VVC, F)


def inversion(C, VC=None):
    """For a T-space: ``u = v . lift(x, f)`` goes to ``(f, v^-1)`` in ``vop C``."""
    VC = VC or vop(C)
    cl = C.cleavage()
    X, S = C.total, C.base

    def mor(u):
        f = C.pm(u)
        v = cl.factor(cl.lift(u[0], f), u, S.identity(f[1]))
        return VC.total.mor(u[0], u[1], (f, X.inverse(v)))

    return TFunctor(C, VC, Functor(X, VC.total, range(len(X)), mor, name="inv"))


def dualize(q, name=None):
    """The cocartesian fibration over ``T.op`` classifying the same functor as the
    cartesian fibration ``q: D -> T``."""
    rep = classify_fibration(q)
    if not rep.cartesian_fibration:
        raise NotCartesianFibration("not a cartesian fibration",
                                    rep.witnesses.get("cartesian_fibration"))
    opt = make_tcat(q.op)
    return vop(opt, name=name or f"dual({q.source.name})")
