"""T-presheaves and the parametrized Yoneda embedding.

``P(C) = Fun_T(vop C, FinSet_T)`` with ``FinSet`` cut to sets of size at most
``n``.  Over ``V`` the shape of ``P(C)`` is ``A_V = {V} -> vop C``.  For ``X``
over ``V`` let ``h_X = Hom_{A_V}((X, id_V), -)``; its value at ``(y, e)`` is
the set of vertical maps ``y -> e_! X``.  ``j(X)`` is the cofree transpose of
``h_X``: at ``a`` it is the T-object ``g -> h_X(g_! a)``.
"""

from dataclasses import dataclass, field

from ..errors import BoundTooSmall
from ..fincat import Functor, finset, fully_faithful_witness
from ..fincat.diagrams import representable, restrict
from ..fibration import TFunctor, make_tcat
from .sections import fun_underline
from .tilde import evaluate_at_identity, underline_objects, vertical_fiber
from .vop import vop


def max_vertical_hom(C):
    best = 0
    for V in range(len(C.base)):
        F = C.fiber(V)
        for a in range(len(F)):
            for b in range(len(F)):
                best = max(best, len(F.hom(a, b)))
    return best


def presheaf_tcat(C, n=3, budget=None):
    """``P(C)``; raises ``BoundTooSmall`` when a vertical hom-set exceeds ``n``."""
    need = max_vertical_hom(C)
    if need > n:
        raise BoundTooSmall(f"vertical hom-sets of {C.name} reach {need} > {n}")
    DT = underline_objects(finset(n), C.base.op, budget=budget)
    VC = vop(C)
    P = fun_underline(VC, DT, budget=budget, name=f"P({C.name})")
    P.bound = n
    P.vop = VC
    P.presheaf_of = C
    P.shape_tcats = [make_tcat(A.proj, cocartesian=A.marked, check=False)
                     for A in P.total.shapes]
    return P


class Transpose:
    """Cofree transposes of set-valued functors on the shapes of ``P``."""

    def __init__(self, P):
        self.P = P
        self.DT = P.target_tcat
        self.S = P.base
        self.fs = finset(P.bound)
        self.Y = self.DT.Y
        self.ar = self.DT.arrows
        self.fibers = {}

    def _fibers(self, W):
        r = self.fibers.get(W)
        if r is None:
            r = self.fibers[W] = (vertical_fiber(self.DT.pX, W), self.Y.fiber(W))
        return r

    def object(self, V, h, a):
        """``h-hat(a)`` as an object of ``DT``; ``h`` is a diagram on the shape over ``V``."""
        S, fs = self.S, self.fs
        A, tc = self.P.total.shapes[V], self.P.shape_tcats[V]
        cl = tc.cleavage()
        W = A.proj.obj[a]
        Xs, Ys = self._fibers(W)
        prod = self.Y.total
        obj = []
        for x in Xs.embed:
            g = self.ar.data[x]
            size = h.sizes[cl.push(a, g)]
            if size > self.P.bound:
                raise BoundTooSmall(f"a value of size {size} exceeds {self.P.bound}")
            obj.append(Ys.back[prod.pair_index[(size, W)]])

        def mor(m):
            u = Xs.to_parent(m)
            g, g2 = self.ar.data[u[0]], self.ar.data[u[1]]
            v = self.ar.label(u)[1]
            k = cl.factor(cl.lift(a, g), cl.lift(a, g2), v)
            src, dst = h.sizes[k[0]], h.sizes[k[1]]
            lab = fs.mor(src, dst, h.act(k))
            i, j = prod.pair_index[(src, W)], prod.pair_index[(dst, W)]
            return Ys.from_parent(prod.mor(i, j, (lab, S.identity(W))))

        F = Functor(Xs, Ys, obj, mor)
        return self.DT.total.index((S.objects[W], F.key))

    def vertical(self, V, h1, h2, beta, a, i, j):
        """The vertical ``DT``-morphism ``h1-hat(a) -> h2-hat(a)`` with components ``beta``."""
        S = self.S
        A, tc = self.P.total.shapes[V], self.P.shape_tcats[V]
        cl = tc.cleavage()
        W = A.proj.obj[a]
        prod = self.Y.total
        comps = []
        for x in self.DT.total.xs_over[W]:
            b = cl.push(a, self.ar.data[x])
            src, dst = h1.sizes[b], h2.sizes[b]
            lab = (self.fs.mor(src, dst, tuple(beta[b])), S.identity(W))
            comps.append(prod.mor(prod.pair_index[(src, W)], prod.pair_index[(dst, W)], lab))
        return self.DT.total.mor(i, j, (S.identity(W), tuple(comps)))

    def functor(self, V, h):
        """``h-hat``: shape over ``V`` -> total of ``DT``."""
        A = self.P.total.shapes[V]
        obj = [self.object(V, h, a) for a in range(len(A))]

        def mor(m):
            return self.transport(V, h, m, obj)

        return Functor(A, self.DT.total, obj, mor)

    def transport(self, V, h, m, obj):
        """``h-hat(m)`` for ``m: a -> a'`` over ``eta``: the component at an arrow ``g'``
        out of ``p(a')`` is ``h`` of the factorisation of ``lift(a', g') . m`` through
        ``lift(a, k)``, where ``k -> g'`` is the chosen cartesian square over ``eta``."""
        S = self.S
        A, tc = self.P.total.shapes[V], self.P.shape_tcats[V]
        cl = tc.cleavage()
        tr = self.DT.total.transport
        eta = A.proj.fm(m)
        a, a2 = m[0], m[1]
        prod = self.Y.total
        comps = []
        for x in self.DT.total.xs_over[eta[1]]:
            k_idx = tr.restrict(eta, x)
            k, g2 = self.ar.data[k_idx], self.ar.data[x]
            sq = tr.lift(eta, x)
            v = self.ar.label(sq)[1]
            t = cl.factor(cl.lift(a, k), A.compose(cl.lift(a2, g2), m), v)
            src, dst = h.sizes[t[0]], h.sizes[t[1]]
            lab = (self.fs.mor(src, dst, tuple(h.act(t))), eta)
            comps.append(prod.mor(prod.pair_index[(src, eta[0])],
                                  prod.pair_index[(dst, eta[1])], lab))
        return self.DT.total.mor(obj[a], obj[a2], (eta, tuple(comps)))


def _unit_object(P, X):
    V = P.presheaf_of.p(X)
    A = P.total.shapes[V]
    return A.triple_index[(0, X, P.base.identity(V))]


def yoneda_representable(P, X):
    """``h_X`` as a set-valued diagram on the shape over ``p(X)``."""
    V = P.presheaf_of.p(X)
    return representable(P.total.shapes[V], _unit_object(P, X))


@dataclass
class YonedaReport:
    fully_faithful: bool
    fiberwise: dict
    formula_checked: int = 0
    formula_failures: list = field(default_factory=list)

    @property
    def ok(self):
        return self.fully_faithful and not self.formula_failures

    def __bool__(self):
        return self.ok


def yoneda(C, P=None, n=3, budget=None):
    """The T-functor ``j: C -> P(C)``.

    On ``u: X -> Y`` over ``eta: V -> W`` the component at ``a = (y, e)`` over ``W``
    is the transpose of ``h_X(eta^* a) -> h_Y(a)``, sending a vertical
    ``g: y -> (e eta)_! X`` to ``e_!(u') . gamma^-1 . g`` where ``u = u' . lift(X, eta)``.
    """
    P = P or presheaf_tcat(C, n=n, budget=budget)
    tp = Transpose(P)
    X, S = C.total, C.base
    VC = P.vop
    vcl = C.cleavage()
    PX = P.total
    hs = [yoneda_representable(P, x) for x in range(len(X))]
    hats = [tp.functor(C.p(x), hs[x]) for x in range(len(X))]
    obj = [PX.section_index[(C.p(x), hats[x].key)] for x in range(len(X))]

    def mor(u):
        x, y = u[0], u[1]
        eta = C.pm(u)
        V, W = eta[0], eta[1]
        ubar = vcl.factor(vcl.lift(x, eta), u, S.identity(W))
        AV, AW = PX.shapes[V], PX.shapes[W]
        R = PX.restrict(eta)
        pulled = restrict(hs[x], R)
        ptid = AW.left.source.identity(0)
        beta = []
        for b in range(len(AW)):
            _, z, e = AW.data[b]
            row = []
            for k in range(pulled.sizes[b]):
                lab = AV.label(AV.hom(_unit_object(P, x), R.obj[b])[k])[1]
                g = VC.total.label(lab)[1]
                g2 = X.chain(vcl.push_mor(ubar, e), X.inverse(vcl.gamma(e, eta, x)), g)
                target = AW.mor(_unit_object(P, y), b, (ptid, VC.total.mor(y, z, (e, g2))))
                row.append(target[2])
            beta.append(tuple(row))
        hatx_pulled = hats[x] * R
        comps = []
        for b in range(len(AW)):
            comps.append(tp.vertical(W, pulled, hs[y], beta, b, hatx_pulled.obj[b],
                                     hats[y].obj[b]))
        return PX.mor(obj[x], obj[y], (eta, tuple(comps)))

    j = TFunctor(C, P, Functor(X, PX, obj, mor, name="j"))
    j.transpose = tp
    j.representables = hs
    return j


def yoneda_check(C, n=3, budget=None, formula=True):
    """Fully faithfulness of ``j`` on every fiber, and ``|F(X)| = |Hom(j X, F)|``
    for every ``X`` and every ``F`` of ``P(C)`` over ``p(X)``."""
    P = presheaf_tcat(C, n=n, budget=budget)
    j = yoneda(C, P)
    j.validate()
    fib = {}
    for V in range(len(C.base)):
        fib[V] = fully_faithful_witness(j.fiber_functor(V))
    glob = fully_faithful_witness(j.underlying)
    ff = glob is None and all(w is None for w in fib.values())
    rep = YonedaReport(ff, fib)
    if formula:
        PX = P.total
        DT = P.target_tcat
        for x in range(len(C.total)):
            V = C.p(x)
            a = _unit_object(P, x)
            jx = j.underlying.obj[x]
            for F in P.objects_over(V):
                size = evaluate_at_identity(DT, PX.sections[F].F.obj[a])
                n_maps = sum(1 for m in PX.hom(jx, F) if P.is_vertical(m))
                rep.formula_checked += 1
                if n_maps != size:
                    rep.formula_failures.append((x, F, n_maps, size))
    return P, j, rep
