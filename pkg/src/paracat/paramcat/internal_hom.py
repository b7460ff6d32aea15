"""Presheaf T-objects: internal homs, slices and left Kan extension along a slice.

A presheaf T-object is a ``SetDiagram`` on ``T.op``.  The internal hom is
``F_T(X, Y)(V) = Nat(y_V x X, Y)``; its elements at ``V`` are stored on the
result as ``.elements_at[V]``.
"""

from dataclasses import dataclass, field

from ..fincat import flip, slice_over
from ..fincat.diagrams import SetDiagram, is_nat, nat_maps, product, representable, restrict, terminal


def yoneda_presheaf(T, V):
    """``Map_T(-, V)``; element ``k`` at ``U`` is ``T.hom(U, V)[k]``."""
    return representable(T.op, V)


def presheaf_internal_hom(T, X, Y, budget=None):
    elements = []
    index = []
    for V in range(len(T)):
        els = nat_maps(product(yoneda_presheaf(T, V), X), Y, budget=budget)
        elements.append(els)
        index.append({e: k for k, e in enumerate(els)})

    def act(m):
        # m: V -> W in T.op is g: W -> V in T; precompose with g . -
        V, W = m[0], m[1]
        g = flip(m)
        out = []
        for th in elements[V]:
            comps = []
            for U in range(len(T)):
                nx = X.sizes[U]
                row = []
                for h in T.hom(U, W):
                    k = T.compose(g, h)[2]
                    row.extend(th[U][k * nx + x] for x in range(nx))
                comps.append(tuple(row))
            out.append(index[W][tuple(comps)])
        return tuple(out)

    H = SetDiagram(T.op, [len(e) for e in elements], act)
    H.elements_at = elements
    return H


def slice_restriction(T, V, X):
    """``i_V^* X`` on the slice ``T / V``; returns ``(slice, presheaf)``."""
    sl = slice_over(T, V)
    return sl, restrict(X, sl.forget.op)


@dataclass
class FormulaCheck:
    ok: bool
    sizes: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def hom_formula_check(T, X, Y, budget=None):
    """``F_T(X, Y)(V) = Nat_{T/V}(i_V^* X, i_V^* Y)`` for every ``V``.

    The right side is enumerated on the slice; ``psi(theta)`` at ``(W, f)`` is
    ``x -> theta_W(f, x)``.  Checked: ``psi`` is a bijection and commutes with
    restriction along every ``g: W -> V``.
    """
    H = presheaf_internal_hom(T, X, Y, budget=budget)
    res = FormulaCheck(True)
    slices = {}
    for V in range(len(T)):
        sl, XV = slice_restriction(T, V, X)
        _, YV = slice_restriction(T, V, Y)
        rhs = nat_maps(XV, YV, budget=budget)
        slices[V] = (sl, rhs)
        psi = [_psi(T, sl, X, th) for th in H.elements_at[V]]
        res.sizes[V] = (len(psi), len(rhs))
        if len(set(psi)) != len(psi) or set(psi) != set(rhs):
            res.ok = False
            res.failures.append(("not a bijection", V))
    for m in T.morphisms():
        W, V = m[0], m[1]
        slV, _ = slices[V]
        slW, _ = slices[W]
        # (U, h) over W goes to (U, m . h) over V
        push = [slV.data_index[T.compose(m, h)] for h in slW.data]
        act = H.act(flip(m))
        for k, th in enumerate(H.elements_at[V]):
            a = _psi(T, slV, X, th)
            lhs = _psi(T, slW, X, H.elements_at[W][act[k]])
            if lhs != tuple(a[push[i]] for i in range(len(slW))):
                res.ok = False
                res.failures.append(("not natural", T.label(m), k))
                break
    return res


def _psi(T, sl, X, th):
    out = []
    for f in sl.data:
        W = f[0]
        nx = X.sizes[W]
        out.append(tuple(th[W][f[2] * nx + x] for x in range(nx)))
    return tuple(out)


def left_kan_slice(T, sl, P):
    """``i_!`` of a presheaf ``P`` on ``sl = T / V`` by colimits over the comma.

    An element at ``W`` is a class of ``(a, h: W -> i(a), x in P(a))`` under
    ``(a, h, P(u) x') ~ (a', u . h, x')`` for ``u: a -> a'``.  Returns the
    diagram with ``.classes[W]`` (representative triples) and ``.find(W, t)``.
    """
    trip = []
    for W in range(len(T)):
        row = []
        for a, f in enumerate(sl.data):
            for h in T.hom(W, f[0]):
                row.extend((a, h, x) for x in range(P.sizes[a]))
        trip.append(row)
    parent = [{t: t for t in row} for row in trip]

    def find(W, t):
        p = parent[W]
        while p[t] != t:
            p[t] = p[p[t]]
            t = p[t]
        return t

    for W in range(len(T)):
        for a in range(len(sl)):
            for a2 in range(len(sl)):
                for u in sl.hom(a, a2):
                    Pu = P.act(flip(u))
                    uT = sl.label(u)
                    for h in T.hom(W, sl.data[a][0]):
                        uh = T.compose(uT, h)
                        for x2 in range(P.sizes[a2]):
                            r1, r2 = find(W, (a, h, Pu[x2])), find(W, (a2, uh, x2))
                            if r1 != r2:
                                parent[W][max(r1, r2)] = min(r1, r2)
    classes = []
    pos = []
    for W in range(len(T)):
        reps = sorted({find(W, t) for t in trip[W]})
        classes.append(reps)
        pos.append({r: k for k, r in enumerate(reps)})

    def act(m):
        # m: W -> W' in T.op is k: W' -> W in T
        W, W2 = m[0], m[1]
        k = flip(m)
        return tuple(pos[W2][find(W2, (a, T.compose(h, k), x))] for a, h, x in classes[W])

    L = SetDiagram(T.op, [len(c) for c in classes], act)
    L.classes = classes
    L.find = lambda W, t: pos[W][find(W, t)]
    return L


def projection_formula_check(T, X, V):
    """``i_! i^* X = X x i_!(*)`` through the map ``[a, h, x] -> (X(h) x, [a, h, *])``,
    and ``i_!(*) = Map_T(-, V)`` through ``[(U, f), h, *] -> f . h``."""
    sl, XV = slice_restriction(T, V, X)
    L = left_kan_slice(T, sl, XV)
    one = left_kan_slice(T, sl, terminal(sl.op))
    rhs = product(X, one)
    res = FormulaCheck(True)
    comps = []
    for W in range(len(T)):
        row = []
        for a, h, x in L.classes[W]:
            xh = X.act(flip(h))[x]
            row.append(xh * one.sizes[W] + one.find(W, (a, h, 0)))
        comps.append(tuple(row))
    # well defined: every member of a class lands on its representative's image
    for W in range(len(T)):
        for a, f in enumerate(sl.data):
            for h in T.hom(W, f[0]):
                for x in range(XV.sizes[a]):
                    img = X.act(flip(h))[x] * one.sizes[W] + one.find(W, (a, h, 0))
                    if comps[W][L.find(W, (a, h, x))] != img:
                        res.ok = False
                        res.failures.append(("not well defined", W))
    bij = all(sorted(comps[W]) == list(range(rhs.sizes[W])) for W in range(len(T)))
    nat = is_nat(L, rhs, comps)
    rep = yoneda_presheaf(T, V)
    ycomps = [tuple(T.compose(sl.data[a], h)[2] for a, h, _ in one.classes[W])
              for W in range(len(T))]
    ybij = all(sorted(ycomps[W]) == list(range(rep.sizes[W])) for W in range(len(T)))
    ynat = is_nat(one, rep, ycomps)
    res.sizes = {W: (L.sizes[W], rhs.sizes[W]) for W in range(len(T))}
    for ok, what in ((bij, "not a bijection"), (nat, "not natural"),
                     (ybij, "unit not representable"), (ynat, "unit map not natural")):
        if not ok:
            res.ok = False
            res.failures.append(what)
    return res
