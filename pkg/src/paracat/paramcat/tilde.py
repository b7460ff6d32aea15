"""The pairing construction: functors between fibers of a cartesian and a
cocartesian fibration, assembled into a cocartesian fibration.

An object over ``s`` is a functor ``X_s -> Y_s``.  A morphism ``F -> G`` over
``eta: s -> t`` is a family ``alpha_x: F(eta^* x) -> G(x)`` of ``Y``-morphisms
over ``eta``, natural in ``x`` in ``X_t``; ``eta^*`` comes from the chosen
cartesian lifts of ``X``.  Composition inserts the coherence isomorphism
``kappa: (eta2 eta1)^* z -> eta1^* eta2^* z``.
"""

from ..errors import NotCartesianFibration
from ..fincat import (FinCat, Functor, SubCat, arrow_category, as_budget, enumerate_functors,
                      equivalence_report, flip, functor_category)
from ..fibration import classify_fibration, constant_tcat, fun_T, make_tcat


def vertical_fiber(p, s):
    S = p.target
    return SubCat(p.source, [x for x in range(len(p.source)) if p.obj[x] == s],
                  lambda m: S.is_identity(p.fm(m)), name=f"{p.source.name}_{S.objects[s]}")


class CartesianTransport:
    """Chosen cartesian lifts of ``p`` read off a cleavage of ``p.op``."""

    def __init__(self, p):
        self.p = p
        self.opcat = make_tcat(p.op)
        self.cl = self.opcat.cleavage()

    def restrict(self, eta, x):
        return self.cl.push(x, flip(eta))

    def lift(self, eta, x):
        """Cartesian ``eta^* x -> x``."""
        return flip(self.cl.lift(x, flip(eta)))

    def restrict_mor(self, eta, v):
        return flip(self.cl.push_mor(flip(v), flip(eta)))

    def kappa(self, eta1, eta2, z):
        """``(eta2 eta1)^* z -> eta1^* eta2^* z``."""
        return flip(self.cl.gamma(flip(eta1), flip(eta2), z))

    def factor(self, eta, x, h):
        """The vertical ``k`` with ``lift(eta, x) . k = h`` for ``h`` over ``eta``."""
        S = self.p.target
        e = self.lift(eta, x)
        return flip(self.cl.factor(flip(e), flip(h), S.identity(self.p.obj[h[0]])))


class FunctorData:
    """A functor ``X_s -> Y_s`` stored on parent indices."""

    def __init__(self, s, F, Xs, Ys):
        self.s = s
        self.F = F
        self.Xs, self.Ys = Xs, Ys
        self.obj = {Xs.embed[a]: Ys.embed[F.obj[a]] for a in range(len(Xs))}

    def mor(self, m):
        return self.Ys.to_parent(self.F.fm(self.Xs.from_parent(m)))


def fun_tilde(pX, Y, budget=None, name=None):
    """The TCat of fiberwise functors from the cartesian ``pX`` to the TCat ``Y``."""
    rep = classify_fibration(pX)
    if not rep.cartesian_fibration:
        raise NotCartesianFibration("first argument is not a cartesian fibration",
                                    rep.witnesses.get("cartesian_fibration"))
    limit = as_budget(budget).limit
    S = pX.target
    X, YX = pX.source, Y.total
    tr = CartesianTransport(pX)
    data = []
    for s in range(len(S)):
        Xs, Ys = vertical_fiber(pX, s), Y.fiber(s)
        for F in enumerate_functors(Xs, Ys, budget=limit):
            data.append(FunctorData(s, F, Xs, Ys))
    xs_over = [[x for x in range(len(X)) if pX.obj[x] == s] for s in range(len(S))]
    vert = [[m for a in xs_over[s] for b in xs_over[s] for m in X.hom(a, b)
             if S.is_identity(pX.fm(m)) and not X.is_identity(m)] for s in range(len(S))]

    def hom(i, j):
        F, G = data[i], data[j]
        out = []
        xs = xs_over[G.s]
        pos = {x: k for k, x in enumerate(xs)}
        for eta in S.hom(F.s, G.s):
            cands = [[a for a in YX.hom(F.obj[tr.restrict(eta, x)], G.obj[x]) if Y.pm(a) == eta]
                     for x in xs]
            checks = [[] for _ in xs]
            for v in vert[G.s]:
                checks[max(pos[v[0]], pos[v[1]])].append(v)
            alpha = [None] * len(xs)

            def rec(k):
                if k == len(xs):
                    out.append((eta, tuple(alpha)))
                    return
                for a in cands[k]:
                    alpha[k] = a
                    for v in checks[k]:
                        lhs = YX.compose(G.mor(v), alpha[pos[v[0]]])
                        rhs = YX.compose(alpha[pos[v[1]]], F.mor(tr.restrict_mor(eta, v)))
                        if lhs != rhs:
                            break
                    else:
                        rec(k + 1)
                alpha[k] = None

            rec(0)
        return out

    def compose(lg, lf, i, j, k):
        (eta1, alpha), (eta2, beta) = lf, lg
        F, G, H = data[i], data[j], data[k]
        xs_t, xs_u = xs_over[G.s], xs_over[H.s]
        pos_t = {x: n for n, x in enumerate(xs_t)}
        comps = []
        for n, z in enumerate(xs_u):
            y = tr.restrict(eta2, z)
            comps.append(YX.chain(beta[n], alpha[pos_t[y]], F.mor(tr.kappa(eta1, eta2, z))))
        return (S.compose(eta2, eta1), tuple(comps))

    def identity(i):
        F = data[i]
        return (S.identity(F.s), tuple(YX.identity(F.obj[x]) for x in xs_over[F.s]))

    T = FinCat([(S.objects[d.s], d.F.key) for d in data], hom, compose, identity,
               name=name or f"Fun~({X.name},{Y.name})")
    T.functor_data = data
    T.xs_over = xs_over
    T.transport = tr
    p = Functor(T, S, [d.s for d in data], lambda m: T.label(m)[0], name="r")
    out = make_tcat(p, cocartesian=lambda m: all(Y.is_cocartesian(a) for a in T.label(m)[1]),
                    name=T.name)
    out.pX, out.Y = pX, Y
    return out


def component(FT, m, x):
    """``alpha_x`` of a morphism of ``fun_tilde``."""
    j = m[1]
    xs = FT.total.xs_over[FT.total.functor_data[j].s]
    return FT.total.label(m)[1][xs.index(x)]


def underline_objects(D, T, budget=None):
    """``D_T``: the fiber over ``V`` is ``Fun(V / T^op, D)``."""
    S = T.op
    A = arrow_category(S)
    Y = constant_tcat(D, S)
    out = fun_tilde(A.source_functor, Y, budget=budget, name=f"{D.name}_T")
    out.arrows = A
    out.coefficients = D
    return out


def evaluate_at_identity(DT, i):
    """``Phi(id_V)`` for an object ``Phi`` of ``D_T`` over ``V``, as an object of ``D``."""
    d = DT.total.functor_data[i]
    A = DT.arrows
    Y = DT.Y
    y = d.obj[A.data_index[DT.base.identity(d.s)]]
    return Y.total.data[y][0]


def identity_square_value(DT, m):
    """The ``D``-morphism ``Phi(id_V) -> Psi(id_W)`` of a morphism ``Phi -> Psi`` over ``f``:
    the component at ``id_W`` after ``Phi`` applied to ``id_V -> f^* id_W``."""
    A, S = DT.arrows, DT.base
    Y = DT.Y
    tr = DT.total.transport
    f, _ = DT.total.label(m)
    F = DT.total.functor_data[m[0]]
    V, W = f[0], f[1]
    idV, idW = A.data_index[S.identity(V)], A.data_index[S.identity(W)]
    sq = A.mor(idV, idW, (f, f))
    k = tr.factor(f, idW, sq)
    alpha = component(DT, m, idW)
    total = Y.total.compose(alpha, F.mor(k))
    return Y.total.label(total)[0]


def cofree_compare(C, D, budget=None, DT=None):
    """``iota^*: fun_T(C, D_T) -> Fun(total C, D)``, evaluation at identity arrows.

    Returns ``(functor, EquivalenceReport)``.
    """
    DT = DT or underline_objects(D, C.base.op, budget=budget)
    lhs = fun_T(C, DT, budget=budget)
    rhs = functor_category(C.total, D, budget=budget)
    index = {F.key: i for i, F in enumerate(rhs.functors)}
    X = C.total
    ytot = DT.total

    def underlying(i):
        Phi = lhs.tfunctors[i].underlying
        obj = [evaluate_at_identity(DT, Phi.obj[c]) for c in range(len(X))]
        mor = {u: identity_square_value(DT, Phi.fm(u)) for u in X.morphisms()}
        return Functor(X, D, obj, mor)

    objs = [index[underlying(i).key] for i in range(len(lhs))]

    def mor(m):
        comps = lhs.label(m)
        out = []
        for c in range(len(X)):
            t = comps[c]
            d = ytot.functor_data[t[0]]
            idV = DT.arrows.data_index[DT.base.identity(d.s)]
            a = component(DT, t, idV)
            out.append(DT.Y.total.label(a)[0])
        return rhs.mor(objs[m[0]], objs[m[1]], tuple(out))

    F = Functor(lhs, rhs, objs, mor, name="iota*")
    return F, equivalence_report(F)
