"""Chosen cocartesian lifts, their coherence isomorphisms, and the strong pushforward."""

from dataclasses import dataclass, field

from ..errors import NotOpfibration, ValidationError
from ..fincat import Functor, NatTrans, arrow_category, fiber_product, full_subcategory
from ..fincat.equivalence import fully_faithful_witness
from .core import find_cocartesian_lift


class Cleavage:
    """Identity-normalised choice of cocartesian lifts for a TCat.

    A lift over a non-identity is the first cocartesian morphism in canonical
    order.  ``gamma(g, f, x)`` is the vertical isomorphism
    ``g_! f_! x -> (g f)_! x`` forced by the universal property.
    """

    def __init__(self, C):
        self.tcat = C
        self.total = C.total
        self.base = C.base
        self._lift = {}
        self._gamma = {}
        self._factor = {}

    def lift(self, x, f):
        key = (x, f)
        e = self._lift.get(key)
        if e is None:
            if f[0] != self.tcat.p(x):
                raise ValueError(f"{f} does not start at p({x})")
            if self.base.is_identity(f):
                e = self.total.identity(x)
            else:
                if self.tcat.lift_fn is not None:
                    e = self.tcat.lift_fn(x, f)
                else:
                    e = find_cocartesian_lift(self.tcat.structure, x, f, self.tcat.is_cocartesian)
                if e is None:
                    raise NotOpfibration(f"no cocartesian lift of {f} at {x}", (x, f))
            self._lift[key] = e
        return e

    def push(self, x, f):
        return self.lift(x, f)[1]

    def factor(self, e, h, g):
        """The unique ``k`` with ``k . e = h`` and ``p(k) = g``."""
        key = (e, h, g)
        k = self._factor.get(key)
        if k is None:
            X, C = self.total, self.tcat
            for cand in X.hom(e[1], h[1]):
                if C.pm(cand) == g and X.compose(cand, e) == h:
                    k = cand
                    break
            else:
                raise ValidationError(f"{h} does not factor through {e} over {g}")
            self._factor[key] = k
        return k

    def push_mor(self, u, f):
        """``f_! u`` for a vertical ``u: x -> x'`` over the source of ``f``."""
        X = self.total
        return self.factor(self.lift(u[0], f), X.compose(self.lift(u[1], f), u),
                           self.base.identity(f[1]))

    def gamma(self, g, f, x):
        key = (g, f, x)
        k = self._gamma.get(key)
        if k is None:
            X, S = self.total, self.base
            e = X.compose(self.lift(self.push(x, f), g), self.lift(x, f))
            k = self.factor(e, self.lift(x, S.compose(g, f)), S.identity(g[1]))
            self._gamma[key] = k
        return k

    def validate(self):
        X, S, C = self.total, self.base, self.tcat
        for x in range(len(X)):
            for f in S.out_of(C.p(x)):
                e = self.lift(x, f)
                if not C.is_cocartesian(e):
                    raise ValidationError(f"chosen lift {e} is not cocartesian")
                if S.is_identity(f) and e != X.identity(x):
                    raise ValidationError("lift of an identity is not an identity")
        for x, f, g, h in self.triples():
            if not X.is_iso(self.gamma(g, f, x)):
                raise ValidationError(f"gamma at {(g, f, x)} is not invertible")
            lhs = X.compose(self.gamma(h, S.compose(g, f), x),
                            self.push_mor(self.gamma(g, f, x), h))
            rhs = X.compose(self.gamma(S.compose(h, g), f, x),
                            self.gamma(h, g, self.push(x, f)))
            if lhs != rhs:
                raise ValidationError(f"cocycle condition fails at {(h, g, f, x)}")
        return self

    def triples(self):
        X, S = self.total, self.base
        for x in range(len(X)):
            for f in S.out_of(self.tcat.p(x)):
                for g in S.out_of(f[1]):
                    for h in S.out_of(g[1]):
                        yield x, f, g, h

    def is_split(self):
        X = self.total
        return all(X.is_identity(self.gamma(g, f, x)) for x, f, g, _ in self.triples())


def arrow_pullback(C):
    """``total x_base O(base)`` along the source projection; objects ``(x, f)``."""
    A = arrow_category(C.base)
    P, pr_total, pr_arrow = fiber_product(C.structure, A.source_functor)
    P.arrows = A
    return P, pr_total, pr_arrow


def strong_pushforward(C, cl=None):
    """``P(x, f) = f_! x``, with morphisms supplied by the universal property."""
    cl = cl or C.cleavage()
    P, _, _ = arrow_pullback(C)
    A = P.arrows
    X = C.total

    def obj(i):
        x, a = P.data[i]
        return cl.push(x, A.data[a])

    def mor(m):
        u, sq = P.label(m)
        x, a = P.data[m[0]]
        x2, a2 = P.data[m[1]]
        f, f2 = A.data[a], A.data[a2]
        b = A.label(sq)[1]
        return cl.factor(cl.lift(x, f), X.compose(cl.lift(x2, f2), u), b)

    F = Functor(P, X, [obj(i) for i in range(len(P))], mor, name="P")
    F.domain_data = P
    return F


def unit_section(C, P):
    """``x -> (x, id)``, ``u -> (u, (p u, p u))``."""
    A = P.arrows
    S = C.base

    def obj(x):
        return P.pair_index[(x, A.data_index[S.identity(C.p(x))])]

    def mor(u):
        i, j = obj(u[0]), obj(u[1])
        pu = C.pm(u)
        sq = A.mor(A.data_index[S.identity(pu[0])], A.data_index[S.identity(pu[1])], (pu, pu))
        return P.mor(i, j, (u, sq))

    return Functor(C.total, P, [obj(x) for x in range(len(C.total))], mor, name="iota")


@dataclass
class RetractionReport:
    comparison_surjective: bool
    comparison_fully_faithful: bool
    section_retraction: bool
    homotopy_natural: bool
    homotopy_marked: bool
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return (self.comparison_surjective and self.comparison_fully_faithful
                and self.section_retraction and self.homotopy_natural and self.homotopy_marked)

    def __bool__(self):
        return self.ok


def verify_retraction(C, cl=None):
    """The 1-truncated retraction statement for the strong pushforward.

    (a) cocartesian arrows of the total category map onto ``total x_base O(base)``
    by a surjective, fully faithful functor; (b) ``P . iota = id``; (c) the
    components ``(lift(x, f), (f, id))`` form a natural transformation
    ``id => iota . P`` whose components are marked and sent by ``P`` to identities.
    """
    cl = cl or C.cleavage()
    X, S = C.total, C.base
    failures = []
    Pf = strong_pushforward(C, cl)
    Pf.validate()
    P = Pf.source
    A = P.arrows

    OX = arrow_category(X)
    cocart = [i for i, e in enumerate(OX.data) if C.is_cocartesian(e)]
    Ocart = full_subcategory(OX, cocart)

    def cobj(i):
        e = OX.data[Ocart.embed[i]]
        return P.pair_index[(e[0], A.data_index[C.pm(e)])]

    def cmor(m):
        u, v = Ocart.label(m)
        sq = A.mor(A.data_index[C.pm(OX.data[Ocart.embed[m[0]]])],
                   A.data_index[C.pm(OX.data[Ocart.embed[m[1]]])], (C.pm(u), C.pm(v)))
        return P.mor(cobj(m[0]), cobj(m[1]), (u, sq))

    comp = Functor(Ocart, P, [cobj(i) for i in range(len(Ocart))], cmor, name="comparison")
    comp.validate()
    surj = set(comp.obj) == set(range(len(P)))
    if not surj:
        failures.append(("comparison misses", sorted(set(range(len(P))) - set(comp.obj))[0]))
    ffw = fully_faithful_witness(comp)
    if ffw is not None:
        failures.append(("comparison", ffw))

    iota = unit_section(C, P)
    iota.validate()
    PI = Pf * iota
    retraction = all(PI.obj[x] == x for x in range(len(X))) and all(
        PI.fm(m) == m for m in X.morphisms())
    if not retraction:
        failures.append(("P . iota != id", None))

    IP = iota * Pf

    def component(i):
        x, a = P.data[i]
        f = A.data[a]
        e = cl.lift(x, f)
        t = f[1]
        sq = A.mor(a, A.data_index[S.identity(t)], (f, S.identity(t)))
        return P.mor(i, IP.obj[i], (e, sq))

    from ..fincat import identity_functor
    eta = NatTrans(identity_functor(P), IP, [component(i) for i in range(len(P))])
    try:
        eta.validate()
        natural = True
    except ValidationError as exc:
        natural = False
        failures.append(("homotopy", str(exc)))
    marked = True
    for i, c in enumerate(eta.components):
        e, sq = P.label(c)
        far = A.label(sq)[1]
        if not (C.is_cocartesian(e) and S.is_iso(far) and X.is_iso(Pf.fm(c))):
            marked = False
            failures.append(("unmarked component", i))
            break
    return RetractionReport(surj, ffw is None, retraction, natural, marked, failures)
