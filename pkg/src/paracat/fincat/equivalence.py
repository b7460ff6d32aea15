"""Equivalence and isomorphism tests with explicit witnesses."""

from dataclasses import dataclass

from .functor import Functor, NatTrans
from .search import enumerate_functors


@dataclass
class EquivalenceReport:
    fully_faithful: bool
    essentially_surjective: bool
    counterexample: object = None
    inverse: Functor = None
    unit: NatTrans = None
    counit: NatTrans = None

    @property
    def is_equivalence(self):
        return self.fully_faithful and self.essentially_surjective

    def __bool__(self):
        return self.is_equivalence


def fully_faithful_witness(F):
    """``None`` if ``F`` is fully faithful, else a counterexample tuple."""
    C, D = F.source, F.target
    for a in range(len(C)):
        for b in range(len(C)):
            imgs = [F.fm(m) for m in C.hom(a, b)]
            seen = {}
            for m, y in zip(C.hom(a, b), imgs):
                if y in seen:
                    return ("not faithful", seen[y], m)
                seen[y] = m
            target = D.hom(F.obj[a], F.obj[b])
            if len(imgs) != len(target):
                missing = next(u for u in target if u not in seen)
                return ("not full", a, b, missing)
    return None


def equivalence_report(F, witnesses=True):
    """Decide whether ``F`` is an equivalence; build a validated quasi-inverse."""
    C, D = F.source, F.target
    cex = fully_faithful_witness(F)
    ff = cex is None
    phi = []
    for d in range(len(D)):
        hit = None
        for c in range(len(C)):
            for u in D.hom(F.obj[c], d):
                if D.is_iso(u):
                    hit = (c, u)
                    break
            if hit:
                break
        if hit is None:
            return EquivalenceReport(ff, False, cex or ("not essentially surjective", d))
        phi.append(hit)
    if not ff or not witnesses:
        return EquivalenceReport(ff, True, cex)

    pre = {}

    def preimage(a, b, u):
        tab = pre.get((a, b))
        if tab is None:
            tab = {F.fm(m): m for m in C.hom(a, b)}
            pre[(a, b)] = tab
        return tab[u]

    inv_phi = [D.inverse(u) for _, u in phi]

    def g_mor(u):
        d, e = u[0], u[1]
        w = D.chain(inv_phi[e], u, phi[d][1])
        return preimage(phi[d][0], phi[e][0], w)

    G = Functor(D, C, [c for c, _ in phi], g_mor, name="quasi-inverse")
    G.validate()
    unit = NatTrans(_identity(C), G * F,
                    [preimage(c, phi[F.obj[c]][0], inv_phi[F.obj[c]]) for c in range(len(C))])
    counit = NatTrans(F * G, _identity(D), [u for _, u in phi])
    unit.validate()
    counit.validate()
    assert unit.is_iso() and counit.is_iso()
    return EquivalenceReport(True, True, None, G, unit, counit)


def _identity(C):
    return Functor(C, C, range(len(C)), lambda m: m, name=f"id_{C.name}")


def is_isomorphism(F):
    C, D = F.source, F.target
    return (len(C) == len(D) and len(set(F.obj)) == len(D)
            and fully_faithful_witness(F) is None)


def find_isomorphism(C, D, budget=None):
    """An isomorphism ``C -> D`` or ``None``."""
    if len(C) != len(D) or C.n_morphisms() != D.n_morphisms():
        return None
    loops_c = [len(C.hom(x, x)) for x in range(len(C))]
    loops_d = [len(D.hom(y, y)) for y in range(len(D))]
    deg_c = [_degree(C, x) for x in range(len(C))]
    deg_d = [_degree(D, y) for y in range(len(D))]
    if sorted(deg_c) != sorted(deg_d):
        return None

    def cands(x):
        return [y for y in range(len(D)) if deg_d[y] == deg_c[x] and loops_d[y] == loops_c[x]]

    for F in enumerate_functors(C, D, obj_candidates=cands, budget=budget, injective=True):
        if fully_faithful_witness(F) is None:
            return F
    return None


def _degree(C, x):
    n = len(C)
    return (sum(len(C.hom(x, y)) for y in range(n)), sum(len(C.hom(y, x)) for y in range(n)),
            len(C.hom(x, x)))
