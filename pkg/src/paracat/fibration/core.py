"""Cocartesian edges, fibration classification, TCats and fibers."""

from dataclasses import dataclass, field

from ..errors import NotOpfibration, TargetMismatch, ValidationError
from ..fincat import Functor, SubCat, flip, identity_functor


@dataclass
class EdgeTest:
    ok: bool
    witness: object = None

    def __bool__(self):
        return self.ok


def is_cocartesian_edge(p, e):
    """Unique factorisation test for ``e: x -> y`` against ``p``.

    On failure the witness is ``(h, g, candidates)``: a morphism ``h`` out of
    ``x``, a base morphism ``g`` with ``g . p(e) = p(h)``, and the list of
    ``k`` with ``k . e = h`` over ``g`` (empty or with several entries).
    """
    X, S = p.source, p.target
    x, y = e[0], e[1]
    pe = p.fm(e)
    for z in range(len(X)):
        counts = {}
        for k in X.hom(y, z):
            counts.setdefault((X.compose(k, e), p.fm(k)), []).append(k)
        hs = X.hom(x, z)
        if not hs:
            continue
        for g in S.hom(pe[1], p.obj[z]):
            gpe = S.compose(g, pe)
            for h in hs:
                if p.fm(h) != gpe:
                    continue
                ks = counts.get((h, g), [])
                if len(ks) != 1:
                    return EdgeTest(False, (h, g, ks))
    return EdgeTest(True)


def is_cartesian_edge(p, e):
    r = is_cocartesian_edge(p.op, flip(e))
    if not r.ok:
        h, g, ks = r.witness
        return EdgeTest(False, (flip(h), flip(g), [flip(k) for k in ks]))
    return r


def find_cocartesian_lift(p, x, f, test=None):
    """First morphism out of ``x`` over ``f`` that passes ``test`` (default: cocartesian)."""
    X = p.source
    if test is None:
        def test(e):
            return is_cocartesian_edge(p, e).ok
    for y in range(len(X)):
        if p.obj[y] != f[1]:
            continue
        for e in X.hom(x, y):
            if p.fm(e) == f and test(e):
                return e
    return None


def opfibration_witness(p, test=None):
    """``None`` if ``p`` is an opfibration, else an unliftable ``(x, f)``."""
    X, S = p.source, p.target
    for x in range(len(X)):
        for f in S.out_of(p.obj[x]):
            if S.is_identity(f):
                continue
            if find_cocartesian_lift(p, x, f, test) is None:
                return (x, f)
    return None


@dataclass
class FibrationReport:
    opfibration: bool
    cartesian_fibration: bool
    left_fibration: bool
    right_fibration: bool
    witnesses: dict = field(default_factory=dict)


def classify_fibration(p):
    X = p.source
    w = {}
    op = opfibration_witness(p)
    if op is not None:
        w["opfibration"] = op
    cart = opfibration_witness(p.op)
    if cart is not None:
        w["cartesian_fibration"] = cart
    left = op is None
    if left:
        for m in X.morphisms():
            t = is_cocartesian_edge(p, m)
            if not t.ok:
                w["left_fibration"] = (m, t.witness)
                left = False
                break
    else:
        w["left_fibration"] = op
    right = cart is None
    if right:
        for m in X.morphisms():
            t = is_cartesian_edge(p, m)
            if not t.ok:
                w["right_fibration"] = (m, t.witness)
                right = False
                break
    else:
        w["right_fibration"] = cart
    return FibrationReport(op is None, cart is None, left, right, w)


class TCat:
    """A cocartesian fibration ``structure: total -> base``.

    ``cocartesian`` may supply a structural predicate for cocartesian edges
    (constructions know theirs); otherwise each edge is tested on demand.
    ``lift(x, f)`` may supply the chosen cocartesian lifts.  ``cocart_edges``
    materialises the full set.
    """

    def __init__(self, structure, cocartesian=None, name=None, lift=None):
        self.structure = structure
        self.total = structure.source
        self.base = structure.target
        self._pred = cocartesian
        self.lift_fn = lift
        self._cocart = {}
        self._cocart_all = None
        self._cleavage = None
        self._fibers = {}
        self.name = name or self.total.name

    def __repr__(self):
        return f"<TCat {self.name} over {self.base.name}: {len(self.total)} objects>"

    def p(self, x):
        return self.structure.obj[x]

    def pm(self, m):
        return self.structure.fm(m)

    def is_cocartesian(self, m):
        r = self._cocart.get(m)
        if r is None:
            if self._pred is not None:
                r = bool(self._pred(m))
            else:
                r = is_cocartesian_edge(self.structure, m).ok
            self._cocart[m] = r
        return r

    @property
    def cocart_edges(self):
        if self._cocart_all is None:
            self._cocart_all = frozenset(m for m in self.total.morphisms() if self.is_cocartesian(m))
        return self._cocart_all

    def is_vertical(self, m):
        return self.base.is_identity(self.pm(m))

    def objects_over(self, V):
        return [x for x in range(len(self.total)) if self.structure.obj[x] == V]

    def fiber(self, V):
        F = self._fibers.get(V)
        if F is None:
            if not 0 <= V < len(self.base):
                raise ValidationError(f"{V} is not a base object")
            F = SubCat(self.total, self.objects_over(V), self.is_vertical,
                       name=f"{self.name}_{self.base.objects[V]}")
            self._fibers[V] = F
        return F

    def cleavage(self):
        if self._cleavage is None:
            from .cleavage import Cleavage
            self._cleavage = Cleavage(self)
        return self._cleavage

    def is_space(self):
        return all(self.is_cocartesian(m) for m in self.total.morphisms())

    def lift_witness(self):
        """Like ``opfibration_witness``, through the supplied lifts when there are any."""
        if self.lift_fn is None:
            return opfibration_witness(self.structure, self.is_cocartesian)
        X, S = self.total, self.base
        for x in range(len(X)):
            for f in S.out_of(self.p(x)):
                if S.is_identity(f):
                    continue
                e = self.lift_fn(x, f)
                if e is None or e[0] != x or self.pm(e) != f or not self.is_cocartesian(e):
                    return (x, f)
        return None

    def validate(self, full=True):
        """Check the opfibration property and that the cached cocartesian set is right."""
        self.structure.validate()
        w = opfibration_witness(self.structure, self.is_cocartesian)
        if w is not None:
            raise NotOpfibration(f"no cocartesian lift of {w[1]} at {self.total.objects[w[0]]!r}", w)
        if full:
            for m in self.total.morphisms():
                if self.is_cocartesian(m) != is_cocartesian_edge(self.structure, m).ok:
                    raise ValidationError(f"cocartesian marking wrong at {self.total.label(m)!r}")
        X = self.total
        for x in range(len(X)):
            if not self.is_cocartesian(X.identity(x)):
                raise ValidationError("an identity is not cocartesian")
        return self


def make_tcat(p, cocartesian=None, check=True, name=None, lift=None):
    """Wrap ``p`` as a TCat, raising ``NotOpfibration`` with an unliftable ``(x, f)``."""
    C = TCat(p, cocartesian, name=name, lift=lift)
    if check:
        w = C.lift_witness()
        if w is not None:
            raise NotOpfibration(
                f"no cocartesian lift of {p.target.label(w[1])!r} at {p.source.objects[w[0]]!r}", w)
    return C


class TFunctor:
    def __init__(self, source, target, underlying):
        if source.base is not target.base:
            raise TargetMismatch("TCats over different bases")
        self.source = source
        self.target = target
        self.underlying = underlying

    def validate(self):
        F = self.underlying
        F.validate()
        C, D = self.source, self.target
        for x in range(len(C.total)):
            if D.p(F.obj[x]) != C.p(x):
                raise ValidationError(f"object {C.total.objects[x]!r} moves in the base")
        for m in C.total.morphisms():
            if D.pm(F.fm(m)) != C.pm(m):
                raise ValidationError(f"morphism {C.total.label(m)!r} moves in the base")
            if C.is_cocartesian(m) and not D.is_cocartesian(F.fm(m)):
                raise ValidationError(f"cocartesian edge {C.total.label(m)!r} not preserved")
        return self

    def fiber_functor(self, V):
        Cv, Dv = self.source.fiber(V), self.target.fiber(V)
        F = self.underlying
        return Functor(Cv, Dv, [Dv.back[F.obj[x]] for x in Cv.embed],
                       lambda m: Dv.from_parent(F.fm(Cv.to_parent(m))), name=f"F_{V}")


def identity_tfunctor(C):
    return TFunctor(C, C, identity_functor(C.total))


def compose_tfunctors(G, F):
    return TFunctor(F.source, G.target, G.underlying * F.underlying)
