"""Formal finite T-sets: a finite index set with an object of ``T`` per index.

A map ``(I, X) -> (J, Y)`` is an index map ``phi`` with a family of
``T``-morphisms ``X_i -> Y_phi(i)``.
"""

import itertools
import math
from dataclasses import dataclass

from ..errors import NotOrbital, SizeBudgetExceeded, ValidationError
from ..fincat import as_budget
from ..fincat.diagrams import SetDiagram, components, coproduct, representable


@dataclass(frozen=True)
class FinTSet:
    cat: object
    comps: tuple

    def __post_init__(self):
        object.__setattr__(self, "comps", tuple(self.comps))
        for c in self.comps:
            if not 0 <= c < len(self.cat):
                raise ValidationError(f"component {c} is not an object of {self.cat.name}")

    def __len__(self):
        return len(self.comps)

    def __eq__(self, other):
        return isinstance(other, FinTSet) and self.cat is other.cat and self.comps == other.comps

    def __hash__(self):
        return hash(self.comps)

    @classmethod
    def of(cls, cat, labels):
        return cls(cat, [cat.index(x) for x in labels])

    def labels(self):
        return [self.cat.objects[c] for c in self.comps]


@dataclass(frozen=True)
class TSetMap:
    src: FinTSet
    dst: FinTSet
    phi: tuple
    fam: tuple

    def validate(self):
        T = self.src.cat
        if len(self.phi) != len(self.src) or len(self.fam) != len(self.src):
            raise ValidationError("index map has the wrong length")
        for i, (j, f) in enumerate(zip(self.phi, self.fam)):
            if f[0] != self.src.comps[i] or f[1] != self.dst.comps[j]:
                raise ValidationError(f"component {i} has the wrong endpoints")
            if f[2] >= len(T.hom(f[0], f[1])):
                raise ValidationError(f"component {i} is not a morphism")
        return self


def identity_map(A):
    T = A.cat
    return TSetMap(A, A, tuple(range(len(A))), tuple(T.identity(c) for c in A.comps))


def compose_maps(g, f):
    T = f.src.cat
    return TSetMap(f.src, g.dst, tuple(g.phi[j] for j in f.phi),
                   tuple(T.compose(g.fam[j], fj) for j, fj in zip(f.phi, f.fam)))


def count_fin_T_set_maps(T, A, B):
    """The mapping-set formula: product over ``j`` of the sum over ``i`` of ``|Hom(A_j, B_i)|``."""
    return math.prod(sum(len(T.hom(a, b)) for b in B.comps) for a in A.comps)


def hom_fin_T_sets(T, A, B, budget=None):
    """All maps ``A -> B`` in canonical order."""
    n = count_fin_T_set_maps(T, A, B)
    limit = as_budget(budget).limit
    if n > limit:
        raise SizeBudgetExceeded(f"{n} maps exceed the budget of {limit}", limit)
    options = [[(i, f) for i, b in enumerate(B.comps) for f in T.hom(a, b)] for a in A.comps]
    return [TSetMap(A, B, tuple(i for i, _ in ch), tuple(f for _, f in ch))
            for ch in itertools.product(*options)]


def orbit_decomposition(U):
    """The representable summands of ``U``, one per index."""
    return [FinTSet(U.cat, [c]) for c in U.comps]


def orbit_of_map(f):
    return f.phi


def coproduct_tsets(*Us):
    return FinTSet(Us[0].cat, [c for U in Us for c in U.comps])


def tset_presheaf(U):
    """``V -> Hom(V, U)`` as a ``SetDiagram`` on ``T.op``.

    Element ``(i, k)`` at ``V`` (the ``k``-th morphism ``V -> U_i``) is encoded
    by its position in the concatenation over ``i``.
    """
    T = U.cat
    if not U.comps:
        return SetDiagram(T.op, [0] * len(T), lambda m: ())
    return coproduct(*(representable(T.op, c) for c in U.comps))


def _decode(U, v, x):
    """Element ``x`` of ``tset_presheaf(U)`` at ``v`` as ``(i, T-morphism v -> U_i)``."""
    T = U.cat
    for i, c in enumerate(U.comps):
        h = T.hom(v, c)
        if x < len(h):
            return i, h[x]
        x -= len(h)
    raise IndexError(x)


def _encode(U, i, f):
    T = U.cat
    return sum(len(T.hom(f[0], c)) for c in U.comps[:i]) + f[2]


def presheaf_map(f):
    """The components of the natural map induced by ``f`` on presheaves."""
    T = f.src.cat
    comps = []
    for v in range(len(T)):
        row = []
        for x in range(sum(len(T.hom(v, c)) for c in f.src.comps)):
            i, u = _decode(f.src, v, x)
            row.append(_encode(f.dst, f.phi[i], T.compose(f.fam[i], u)))
        comps.append(tuple(row))
    return tuple(comps)


def pullback_fin_T_sets(T, f, g):
    """Pullback of ``f: A -> C`` and ``g: B -> C``; returns ``(P, p1, p2)``.

    Orbit categories use the double-coset formula.  Other ``T`` go through the
    pointwise presheaf pullback, which is a finite T-set exactly when each
    connected component of its category of elements is representable.
    """
    if getattr(T, "group", None) is not None:
        return _pullback_orbit(T, f, g)
    return _pullback_general(T, f, g)


def _pullback_general(T, f, g):
    A, B = f.src, g.src
    fa, gb = presheaf_map(f), presheaf_map(g)
    PA, PB = tset_presheaf(A), tset_presheaf(B)
    elems = [[(x, y) for x in range(PA.sizes[v]) for y in range(PB.sizes[v]) if fa[v][x] == gb[v][y]]
             for v in range(len(T))]
    pos = [{e: k for k, e in enumerate(row)} for row in elems]

    def act(m):
        a, b = PA.act(m), PB.act(m)
        return tuple(pos[m[1]][(a[x], b[y])] for x, y in elems[m[0]])

    Q = SetDiagram(T.op, [len(r) for r in elems], act)
    comps, fam1, fam2, phi1, phi2 = [], [], [], [], []
    for comp in components(Q):
        gen = _generator(T, Q, comp)
        if gen is None:
            raise NotOrbital(
                f"the pullback over {T.name} is not a finite coproduct of representables",
                cospan=(f, g))
        w, q = gen
        x, y = elems[w][q]
        i, a = _decode(A, w, x)
        j, b = _decode(B, w, y)
        comps.append(w)
        phi1.append(i)
        fam1.append(a)
        phi2.append(j)
        fam2.append(b)
    P = FinTSet(T, comps)
    return P, TSetMap(P, A, tuple(phi1), tuple(fam1)), TSetMap(P, B, tuple(phi2), tuple(fam2))


def _generator(T, Q, comp):
    """An element ``q`` at ``w`` with ``Hom(-, w) -> Q`` an iso onto the component."""
    members = set(comp)
    for w, q in comp:
        hit = set()
        ok = True
        for v in range(len(T)):
            for u in T.hom(v, w):
                e = (v, Q.act((u[1], u[0], u[2]))[q])
                if e in hit:
                    ok = False
                    break
                hit.add(e)
            if not ok:
                break
        if ok and hit == members:
            return w, q
    return None


def _pullback_orbit(T, f, g):
    G, Hs = T.group, T.subgroups
    A, B = f.src, g.src
    index = {H: k for k, H in enumerate(Hs)}
    comps, phi1, fam1, phi2, fam2 = [], [], [], [], []
    for ja, ha in enumerate(A.comps):
        for jb, hb in enumerate(B.comps):
            if f.phi[ja] != g.phi[jb]:
                continue
            H, L = Hs[ha], Hs[hb]
            K = Hs[f.dst.comps[f.phi[ja]]]
            a = G.index(T.label(f.fam[ja]))
            b = G.index(T.label(g.fam[jb]))
            target = G.coset_rep(a, K)
            ys = sorted({G.coset_rep(y, L) for y in range(len(G))
                         if G.coset_rep(G.mul(y, b), K) == target})
            seen = set()
            for y in ys:
                if y in seen:
                    continue
                orbit = {G.coset_rep(G.mul(h, y), L) for h in H}
                seen |= orbit
                conj = frozenset(G.mul(G.mul(y, l), G.inv[y]) for l in L)
                S = index[H & conj]
                comps.append(S)
                phi1.append(ja)
                fam1.append(T.mor(S, ha, G.elements[G.coset_rep(G.unit, H)]))
                phi2.append(jb)
                fam2.append(T.mor(S, hb, G.elements[G.coset_rep(y, L)]))
    P = FinTSet(T, comps)
    return P, TSetMap(P, A, tuple(phi1), tuple(fam1)), TSetMap(P, B, tuple(phi2), tuple(fam2))


def verify_pullback(T, f, g, cone, test_sets):
    """Check the universal property of ``cone = (P, p1, p2)`` against each test T-set."""
    P, p1, p2 = cone
    if compose_maps(f, p1) != compose_maps(g, p2):
        return False
    for Z in test_sets:
        fac = {}
        for u in hom_fin_T_sets(T, Z, P):
            fac.setdefault((compose_maps(p1, u), compose_maps(p2, u)), []).append(u)
        for a in hom_fin_T_sets(T, Z, f.src):
            fa = compose_maps(f, a)
            for b in hom_fin_T_sets(T, Z, g.src):
                if compose_maps(g, b) == fa and len(fac.get((a, b), ())) != 1:
                    return False
    return True


def small_tsets(T, max_components):
    """All T-sets with nondecreasing components, up to the given size."""
    out = []
    for k in range(max_components + 1):
        out.extend(FinTSet(T, c) for c in itertools.combinations_with_replacement(range(len(T)), k))
    return out


def discrete_T_space(T, U):
    """The category of elements of ``V -> Hom(V, U)`` over ``T.op``, as a TCat."""
    from ..fibration import make_tcat
    from ..fincat.diagrams import elements_category
    E = elements_category(tset_presheaf(U))
    E.name = f"disc({'+'.join(map(str, U.labels()))})"
    return make_tcat(E.projection)
