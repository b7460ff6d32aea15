"""Finite T-sets as a T-category, truncated by degree.

Over ``V`` sit the maps ``f: U -> V`` of finite T-sets.  For an orbit category
the degree of ``f`` is the size of its point fibers, ``sum |K| / |H_i|``;
pullback preserves it, so bounding the degree keeps cartesian lifts inside.
Other bases are truncated by the number of components.
"""

from ..fincat import FinCat, Functor, full_subcategory, is_isomorphism, slice_over
from ..orbits import FinTSet, TSetMap, compose_maps, hom_fin_T_sets, small_tsets
from .vop import dualize


def fin_T_sets_category(T, tsets, name=None):
    """The full subcategory of finite T-sets on ``tsets``; labels are ``(phi, fam)``."""
    tsets = list(tsets)

    def hom(i, j):
        return [(f.phi, f.fam) for f in hom_fin_T_sets(T, tsets[i], tsets[j])]

    def compose(lg, lf, i, j, k):
        g = TSetMap(tsets[j], tsets[k], *lg)
        f = TSetMap(tsets[i], tsets[j], *lf)
        h = compose_maps(g, f)
        return (h.phi, h.fam)

    def identity(i):
        U = tsets[i]
        return (tuple(range(len(U))), tuple(T.identity(c) for c in U.comps))

    F = FinCat([tuple(U.labels()) for U in tsets], hom, compose, identity,
               name=name or f"F_{T.name}")
    F.tsets = tsets
    return F


def degree(T, U, V):
    """Fiber size of any map ``U -> V`` with ``V`` an orbit; component count off orbit categories."""
    G = getattr(T, "group", None)
    if G is None:
        return len(U)
    K = len(T.subgroups[V])
    return sum(K // len(T.subgroups[c]) for c in U.comps)


def _over(T, V, bound):
    return [U for U in small_tsets(T, bound)
            if degree(T, U, V) <= bound and all(T.hom(c, V) for c in U.comps)]


def arrow_target_fibration(T, bound):
    """``T x_{F_T} O(F_T)`` truncated by degree, with its target projection to ``T``.

    Objects are ``(V, U, f: U -> V)``; a morphism is a square ``(a, b)`` with
    ``f' . a = b . f``.
    """
    objs = []
    for V in range(len(T)):
        for U in _over(T, V, bound):
            for f in hom_fin_T_sets(T, U, FinTSet(T, [V])):
                objs.append((V, U, f))
    point_sets = [FinTSet(T, [V]) for V in range(len(T))]

    def hom(i, j):
        V, U, f = objs[i]
        W, U2, f2 = objs[j]
        out = []
        for b in T.hom(V, W):
            bf = compose_maps(TSetMap(point_sets[V], point_sets[W], (0,), (b,)), f)
            for a in hom_fin_T_sets(T, U, U2):
                if compose_maps(f2, a) == bf:
                    out.append(((a.phi, a.fam), b))
        return out

    def compose(lg, lf, i, j, k):
        a = compose_maps(TSetMap(objs[j][1], objs[k][1], *lg[0]),
                         TSetMap(objs[i][1], objs[j][1], *lf[0]))
        return ((a.phi, a.fam), T.compose(lg[1], lf[1]))

    def identity(i):
        V, U, _ = objs[i]
        return ((tuple(range(len(U))), tuple(T.identity(c) for c in U.comps)), T.identity(V))

    E = FinCat([(T.objects[V], tuple(U.labels()), f.fam) for V, U, f in objs], hom, compose,
               identity, name=f"Ar(F_{T.name})")
    E.data = objs
    q = Functor(E, T, [V for V, _, _ in objs], lambda m: E.label(m)[1], name="t")
    return q


def underline_fin_T_sets(T, bound=2):
    """The T-category of finite T-sets: the dual of the target projection."""
    q = arrow_target_fibration(T, bound)
    out = dualize(q, name=f"F_{T.name}(deg<={bound})")
    out.arrows = q.source
    out.bound = bound
    return out


def slice_comparison(FT, V):
    """The fiber of ``FT = underline_fin_T_sets(T)`` over ``V`` against the slice of
    finite T-sets over ``V``, built separately and cut down to the same degree bound.

    Returns ``(functor, is an isomorphism)``.
    """
    T = FT.base.op
    E = FT.arrows
    fib = FT.fiber(V)
    cat = fin_T_sets_category(T, small_tsets(T, FT.bound))
    sl = slice_over(cat, cat.tsets.index(FinTSet(T, [V])))
    keep = [n for n, f in enumerate(sl.data) if degree(T, cat.tsets[f[0]], V) <= FT.bound]
    sub = full_subcategory(sl, keep)
    index = {}
    for n in range(len(sub)):
        f = sl.data[sub.embed[n]]
        index[(cat.tsets[f[0]], cat.label(f))] = n

    def obj(x):
        _, U, f = E.data[fib.embed[x]]
        return index[(U, (f.phi, f.fam))]

    def mor(m):
        g = FT.total.label(fib.to_parent(m))[1]
        i, j = obj(m[0]), obj(m[1])
        u = cat.mor(sl.data[sub.embed[i]][0], sl.data[sub.embed[j]][0], E.op.label(g)[0])
        return sub.mor(i, j, u)

    F = Functor(fib, sub, [obj(x) for x in range(len(fib))], mor, name="slice")
    return F, is_isomorphism(F)
