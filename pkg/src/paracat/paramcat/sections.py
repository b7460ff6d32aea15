"""TCats of sections: parametrized functor categories and right Kan extensions.

Both are instances of one pattern.  Over each base object ``s`` sits a shape
category ``A_s`` with a projection to the base of a TCat ``D`` and a set of
marked morphisms; a base morphism ``eta: s -> t`` acts by a strict restriction
functor ``eta^*: A_t -> A_s``.  An object over ``s`` is a functor
``A_s -> total(D)`` over the base of ``D`` carrying marked morphisms to
cocartesian edges.  A morphism ``Phi -> Psi`` over ``eta`` is a natural
transformation ``Phi . eta^* => Psi`` with vertical components.
"""

from ..errors import NotOpfibration, TargetMismatch, ValidationError
from ..fincat import (Functor, FinCat, all_marked, as_budget, enumerate_functors,
                      enumerate_nat_trans, equivalence_report, lax_pullback, point)
from ..fibration import (TFunctor, fun_T, make_tcat, t_equivalence_report, tcat_product,
                         terminal_tcat)


class Section:
    """An object of a sections TCat: a functor ``A_s -> total(D)``."""

    def __init__(self, s, F):
        self.s = s
        self.F = F


def sections_tcat(S, shapes, restriction, D, budget=None, name=None):
    """``shapes[s]`` is ``A_s`` carrying ``.proj`` (to ``D.base``) and ``.marked``;
    ``restriction(eta)`` is the functor ``A_t -> A_s``."""
    limit = as_budget(budget).limit
    DX = D.total
    over = {}
    for y in range(len(DX)):
        over.setdefault(D.p(y), []).append(y)
    data = []
    for s in range(len(S)):
        A = shapes[s]

        def cands(a, A=A):
            return over.get(A.proj.obj[a], [])

        def ok(m, y, A=A):
            if D.pm(y) != A.proj.fm(m):
                return False
            return not A.marked(m) or D.is_cocartesian(y)

        for F in enumerate_functors(A, DX, obj_candidates=cands, mor_ok=ok, budget=limit):
            data.append(Section(s, F))

    index = {(d.s, d.F.key): n for n, d in enumerate(data)}
    restr = {}

    def restrict(eta):
        R = restr.get(eta)
        if R is None:
            R = restr[eta] = restriction(eta)
        return R

    pulled = {}

    def pullback(i, eta):
        key = (i, eta)
        G = pulled.get(key)
        if G is None:
            G = pulled[key] = data[i].F * restrict(eta)
        return G

    def vertical(a, t):
        return D.is_vertical(t)

    def hom(i, j):
        out = []
        for eta in S.hom(data[i].s, data[j].s):
            for th in enumerate_nat_trans(pullback(i, eta), data[j].F, comp_ok=vertical,
                                          budget=limit):
                out.append((eta, th))
        return out

    def compose(lg, lf, i, j, k):
        (eta1, th1), (eta2, th2) = lf, lg
        R = restrict(eta2)
        return (S.compose(eta2, eta1),
                tuple(DX.compose(b, th1[R.obj[a]]) for a, b in enumerate(th2)))

    def identity(i):
        d = data[i]
        return (S.identity(d.s), tuple(DX.identity(y) for y in d.F.obj))

    T = FinCat([(S.objects[d.s], d.F.key) for d in data], hom, compose, identity,
               name=name or "Sec")
    T.sections = data
    T.section_index = index
    T.shapes = shapes
    T.restrict = restrict
    def lift(i, eta):
        G = pullback(i, eta)
        j = index.get((eta[1], G.key))
        if j is None:
            return None
        return T.mor(i, j, (eta, tuple(DX.identity(y) for y in G.obj)))

    # the lift of eta at Phi is the identity onto Phi . eta^*, so it exists
    # exactly when Phi . eta^* is again a section
    for i, d in enumerate(data):
        for eta in S.out_of(d.s):
            if (eta[1], pullback(i, eta).key) not in index:
                raise NotOpfibration(f"restriction along {S.label(eta)!r} leaves the sections",
                                     (i, eta))
    p = Functor(T, S, [d.s for d in data], lambda m: T.label(m)[0], name="r")
    out = make_tcat(p, cocartesian=lambda m: all(DX.is_iso(t) for t in T.label(m)[1]),
                    check=False, name=T.name, lift=lift)
    out.target_tcat = D
    return out


def check_restrictions(S, shapes, restriction):
    """Strictness of the restriction functors: ``(g f)^* = f^* g^*``, ``id^* = id``."""
    for f in S.morphisms():
        R = restriction(f)
        R.validate()
        if R.source is not shapes[f[1]] or R.target is not shapes[f[0]]:
            raise ValidationError(f"restriction along {S.label(f)!r} has the wrong ends")
        if S.is_identity(f) and (R.obj != tuple(range(len(shapes[f[0]]))) or
                                 any(R.fm(m) != m for m in shapes[f[0]].morphisms())):
            raise ValidationError("restriction along an identity is not the identity")
    for f in S.morphisms():
        for g in S.out_of(f[1]):
            lhs = restriction(S.compose(g, f))
            rhs = restriction(f) * restriction(g)
            if lhs.key != rhs.key:
                raise ValidationError(f"restriction is not strict at {S.label(g)!r}, {S.label(f)!r}")


def under(p, V, marked=None):
    """The comma ``{V} -> p``: objects ``(0, y, e: V -> p(y))`` with ``.proj = p . right``.

    The point factor is fully marked; ``marked`` marks the other factor.
    """
    S = p.target
    pt = point()
    L = lax_pullback(Functor(pt, S, [V], {}, name=f"{{{S.objects[V]}}}"), p,
                     all_marked, marked or all_marked)
    L.name = f"{S.objects[V]}/{p.source.name}"
    L.proj = p * L.right
    return L


def comma_restriction(shapes, S):
    """``eta^*: (0, y, e) -> (0, y, e . eta)``, identity on morphism labels."""

    def restriction(eta):
        LV, LW = shapes[eta[0]], shapes[eta[1]]
        obj = [LV.triple_index[(0, y, S.compose(e, eta))] for _, y, e in LW.data]
        return Functor(LW, LV, obj, lambda m: LV.mor(obj[m[0]], obj[m[1]], LW.label(m)),
                       name=f"{S.label(eta)}^*")

    return restriction


def fun_underline(C, D, budget=None, name=None):
    """The parametrized functor category ``Fun_T(C, D)``."""
    if C.base is not D.base:
        raise TargetMismatch("TCats over different bases")
    S = C.base
    shapes = [under(C.structure, V, C.is_cocartesian) for V in range(len(S))]
    out = sections_tcat(S, shapes, comma_restriction(shapes, S), D, budget=budget,
                        name=name or f"Fun_T({C.name},{D.name})")
    out.source_tcat = C
    return out


def right_kan_extend(i, D, budget=None, name=None):
    """Right Kan extension of ``D`` (over ``U.op``) along ``i: U -> T``; over ``T.op``.

    Over ``t`` the shape is the comma ``{t} -> i.op`` with every morphism marked,
    so objects are cocartesian sections of ``D`` over it.
    """
    if D.base is not i.source.op:
        raise TargetMismatch("D must live over the opposite of the source of i")
    S = i.target.op
    io = i.op
    shapes = [under(io, t) for t in range(len(S))]
    for A in shapes:
        A.marked = all_marked
    out = sections_tcat(S, shapes, comma_restriction(shapes, S), D, budget=budget,
                        name=name or f"RKE({D.name})")
    out.along = i
    return out


def _section_index(TC):
    return TC.section_index


def evaluation_at_identity(R, D):
    """``R -> D`` for ``R = right_kan_extend(id, D)``: evaluate at ``(t, id_t)``.

    A morphism over ``eta: s -> t`` goes to ``theta_(t, id) . Phi(w)`` where
    ``w: (s, id_s) -> (t, eta)`` is the comma morphism with label ``eta``.
    """
    S = R.base
    X = R.total
    DX = D.total
    shapes = R.total.shapes

    def at_id(t):
        return shapes[t].triple_index[(0, t, S.identity(t))]

    def obj(n):
        d = X.sections[n]
        return d.F.obj[at_id(d.s)]

    def mor(m):
        eta, th = X.label(m)
        s, t = eta[0], eta[1]
        d = X.sections[m[0]]
        A = shapes[s]
        w = A.mor(at_id(s), A.triple_index[(0, t, eta)], (A.left.source.identity(0), eta))
        return DX.compose(th[at_id(t)], d.F.fm(w))

    F = Functor(X, DX, [obj(n) for n in range(len(X))], mor, name="ev")
    return TFunctor(R, D, F)


def _curry_point(FD, j, d):
    """``Phi(d, id_s)`` for the object ``j`` of ``FD = Fun_T(D, E)``."""
    sec = FD.total.sections[j]
    A = FD.total.shapes[sec.s]
    return sec.F, A, A.triple_index[(0, d, FD.base.identity(sec.s))]


def _curried_functor(C, L, R, FD, V, Phi_obj, Phi_mor):
    """The functor ``A^{CxD}_V -> total(E)`` obtained from ``Phi: A^C_V -> total(FD)``.

    ``(c, d, e)`` goes to ``Phi(c, e)(d, id)``; a morphism ``(u, w)`` over ``g``
    goes to ``theta_(d', id) . Phi(c, e)(w)`` where ``theta = Phi(u)`` and
    ``w: (d, id) -> (d', g)``.
    """
    AC, ACD = L.total.shapes[V], R.total.shapes[V]
    P = R.source_tcat.total
    ptid = ACD.left.source.identity(0)
    EX = FD.target_tcat.total

    def obj(a):
        _, k, e = ACD.data[a]
        c, d = P.data[k]
        F, _, b = _curry_point(FD, Phi_obj(AC.triple_index[(0, c, e)]), d)
        return F.obj[b]

    def mor(m):
        (_, k, e), (_, k2, e2) = ACD.data[m[0]], ACD.data[m[1]]
        c, d = P.data[k]
        c2, d2 = P.data[k2]
        u, w = P.label(ACD.label(m)[1])
        g = C.pm(u)
        a, a2 = AC.triple_index[(0, c, e)], AC.triple_index[(0, c2, e2)]
        _, th = FD.total.label(Phi_mor(AC.mor(a, a2, (ptid, u))))
        F, AD, b = _curry_point(FD, Phi_obj(a), d)
        _, _, b2 = _curry_point(FD, Phi_obj(a2), d2)
        wm = AD.mor(b, AD.triple_index[(0, d2, g)], (ptid, w))
        return EX.compose(th[b2], F.fm(wm))

    return [obj(a) for a in range(len(ACD))], mor


def curry_compare(C, D, E, budget=None, global_check=True):
    """Evaluation ``Fun_T(C, Fun_T(D, E)) -> Fun_T(C x D, E)``.

    Returns ``(TFunctor, TEquivalenceReport, global report)``; the global
    report compares the categories of T-functors ``C -> Fun_T(D, E)`` and
    ``C x D -> E`` through the same formula, or is ``None`` when skipped.
    """
    FD = fun_underline(D, E, budget=budget)
    L = fun_underline(C, FD, budget=budget)
    CDt, _, _ = tcat_product(C, D)
    R = fun_underline(CDt, E, budget=budget)
    index = _section_index(R.total)
    LX, RX = L.total, R.total
    P = CDt.total

    def image(n):
        sec = LX.sections[n]
        objs, mor = _curried_functor(C, L, R, FD, sec.s, sec.F.obj.__getitem__, sec.F.fm)
        return Functor(RX.shapes[sec.s], E.total, objs, mor)

    objs = [index[(LX.sections[n].s, image(n).key)] for n in range(len(LX))]

    def mor(m):
        eta, th = LX.label(m)
        W = eta[1]
        AC, ACD = LX.shapes[W], RX.shapes[W]
        target = LX.sections[m[1]].F
        comps = []
        for _, k, e in ACD.data:
            c, d = P.data[k]
            a = AC.triple_index[(0, c, e)]
            _, beta = FD.total.label(th[a])
            _, _, b = _curry_point(FD, target.obj[a], d)
            comps.append(beta[b])
        return RX.mor(objs[m[0]], objs[m[1]], (eta, tuple(comps)))

    Fu = TFunctor(L, R, Functor(LX, RX, objs, mor, name="curry"))
    rep = t_equivalence_report(Fu)
    glob = curry_global(C, D, E, FD, CDt, budget) if global_check else None
    return Fu, rep, glob


def curry_global(C, D, E, FD, CDt, budget=None):
    """The comparison on categories of T-functors.

    A T-functor ``F: C -> Fun_T(D, E)`` goes to ``(c, d) -> F(c)(d, id)``; this
    is the previous formula with ``A^C`` replaced by ``total(C)``.
    """
    lhs = fun_T(C, FD, budget=budget)
    rhs = fun_T(CDt, E, budget=budget)
    index = {K.underlying.key: n for n, K in enumerate(rhs.tfunctors)}
    P = CDt.total
    EX = E.total

    def image(n):
        F = lhs.tfunctors[n].underlying

        def obj(k):
            c, d = P.data[k]
            G, _, b = _curry_point(FD, F.obj[c], d)
            return G.obj[b]

        def mor(m):
            c, d = P.data[m[0]]
            c2, d2 = P.data[m[1]]
            u, w = P.label(m)
            g = C.pm(u)
            _, th = FD.total.label(F.fm(u))
            G, AD, b = _curry_point(FD, F.obj[c], d)
            _, _, b2 = _curry_point(FD, F.obj[c2], d2)
            ptid = AD.left.source.identity(0)
            wm = AD.mor(b, AD.triple_index[(0, d2, g)], (ptid, w))
            return EX.compose(th[b2], G.fm(wm))

        return Functor(P, EX, [obj(k) for k in range(len(P))], mor)

    objs = [index[image(n).key] for n in range(len(lhs))]

    def mor(m):
        comps = lhs.label(m)
        out = []
        for k in range(len(P)):
            c, d = P.data[k]
            _, beta = FD.total.label(comps[c])
            _, _, b = _curry_point(FD, lhs.tfunctors[m[1]].underlying.obj[c], d)
            out.append(beta[b])
        return rhs.mor(objs[m[0]], objs[m[1]], tuple(out))

    F = Functor(lhs, rhs, objs, mor, name="curry")
    return equivalence_report(F)


def cocartesian_sections(C, budget=None):
    """``fun_T(*_T, C)``, with the evaluation at an initial base object when one exists.

    Returns ``(category, comparison functor or None, EquivalenceReport or None)``.
    """
    S = C.base
    pt = terminal_tcat(S)
    F = fun_T(pt, C, budget=budget)
    V = initial_object(S)
    if V is None:
        return F, None, None
    Cv = C.fiber(V)

    def mor(m):
        return Cv.from_parent(F.label(m)[V])

    ev = Functor(F, Cv, [Cv.back[K.underlying.obj[V]] for K in F.tfunctors], mor, name="ev")
    return F, ev, equivalence_report(ev)


def initial_object(S):
    for V in range(len(S)):
        if all(len(S.hom(V, W)) == 1 for W in range(len(S))):
            return V
    return None
