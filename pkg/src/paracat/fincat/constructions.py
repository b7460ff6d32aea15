"""Standard finite categories and constructions on them.

Derived categories keep the structural data behind each object in ``.data``
(a list parallel to ``objects``) and label morphisms by morphism triples of
their ingredients, so callers never have to parse labels.
"""

import itertools

from .category import FinCat
from .functor import Functor


def point():
    return FinCat(["*"], lambda i, j: ["id"], lambda lg, lf, i, j, k: "id", lambda i: "id",
                  name="pt")


def empty():
    return FinCat([], lambda i, j: [], None, None, name="empty")


def discrete(labels):
    return FinCat(list(labels), lambda i, j: ["id"] if i == j else [],
                  lambda lg, lf, i, j, k: "id", lambda i: "id", name="disc")


def ordinal(n):
    """The poset ``0 < 1 < ... < n-1``; ``ordinal(2)`` is the walking arrow ``[1]``."""
    return FinCat(list(range(n)), lambda i, j: [f"{i}<={j}"] if i <= j else [],
                  lambda lg, lf, i, j, k: f"{i}<={k}", lambda i: f"{i}<={i}", name=f"[{n - 1}]")


def walking_arrow():
    return ordinal(2)


def indiscrete(n):
    """``n`` objects, exactly one morphism between any two."""
    return FinCat(list(range(n)), lambda i, j: [f"{i}->{j}"],
                  lambda lg, lf, i, j, k: f"{i}->{k}", lambda i: f"{i}->{i}", name=f"codisc{n}")


def walking_iso():
    C = indiscrete(2)
    C.name = "iso"
    return C


def poset(elements, leq, name="P"):
    elements = list(elements)
    return FinCat(elements,
                  lambda i, j: ["<="] if leq(elements[i], elements[j]) else [],
                  lambda lg, lf, i, j, k: "<=", lambda i: "<=", name=name)


def finset(n):
    """Skeleton of finite sets of size at most ``n``; a map ``a -> b`` is a tuple."""
    return FinCat(list(range(n + 1)),
                  lambda a, b: list(itertools.product(range(b), repeat=a)),
                  lambda g, f, i, j, k: tuple(g[x] for x in f),
                  lambda a: tuple(range(a)), name=f"FinSet<={n}")


def one_object(elements, mult, unit, name="BM"):
    """The one-object category of a finite monoid."""
    return FinCat(["*"], lambda i, j: list(elements), lambda g, f, i, j, k: mult(g, f),
                  lambda i: unit, name=name)


def product(C, D):
    pairs = [(a, b) for a in range(len(C)) for b in range(len(D))]

    def hom(i, j):
        (a, b), (c, d) = pairs[i], pairs[j]
        return [(f, g) for f in C.hom(a, c) for g in D.hom(b, d)]

    P = FinCat([(C.objects[a], D.objects[b]) for a, b in pairs], hom,
               lambda lg, lf, i, j, k: (C.compose(lg[0], lf[0]), D.compose(lg[1], lf[1])),
               lambda i: (C.identity(pairs[i][0]), D.identity(pairs[i][1])),
               name=f"{C.name}x{D.name}")
    P.data = pairs
    P.pair_index = {p: i for i, p in enumerate(pairs)}
    return P


def projections(P, C, D):
    p1 = Functor(P, C, [a for a, _ in P.data], lambda m: P.label(m)[0], name="pr1")
    p2 = Functor(P, D, [b for _, b in P.data], lambda m: P.label(m)[1], name="pr2")
    return p1, p2


def fiber_product(F, G):
    """Strict pullback of ``F: M -> S`` and ``G: N -> S`` with its projections."""
    M, N = F.source, G.source
    pairs = [(a, b) for a in range(len(M)) for b in range(len(N)) if F.obj[a] == G.obj[b]]

    def hom(i, j):
        (a, b), (c, d) = pairs[i], pairs[j]
        return [(f, g) for f in M.hom(a, c) for g in N.hom(b, d) if F.fm(f) == G.fm(g)]

    P = FinCat([(M.objects[a], N.objects[b]) for a, b in pairs], hom,
               lambda lg, lf, i, j, k: (M.compose(lg[0], lf[0]), N.compose(lg[1], lf[1])),
               lambda i: (M.identity(pairs[i][0]), N.identity(pairs[i][1])),
               name=f"{M.name}x_S{N.name}")
    P.data = pairs
    P.pair_index = {p: i for i, p in enumerate(pairs)}
    p1 = Functor(P, M, [a for a, _ in pairs], lambda m: P.label(m)[0], name="pr1")
    p2 = Functor(P, N, [b for _, b in pairs], lambda m: P.label(m)[1], name="pr2")
    return P, p1, p2


def lax_pullback(F, G, mark_left=None, mark_right=None):
    """Objects ``(x, y, e: F x -> G y)``; morphisms ``(u, v)`` with ``G v . e = e' . F u``.

    ``mark_left`` / ``mark_right`` are predicates on morphisms of the two
    sources.  A morphism ``(u, v)`` is marked when both components are marked;
    ``None`` marks only the identities of that side (pass ``all_marked`` to mark
    everything).  Returns the category; ``.marked(m)``, ``.data`` (index
    triples), ``.triple_index``, ``.left`` and ``.right`` hang off it.
    """
    M, N, S = F.source, G.source, F.target
    triples = [(x, y, e) for x in range(len(M)) for y in range(len(N))
               for e in S.hom(F.obj[x], G.obj[y])]

    def hom(i, j):
        x, y, e = triples[i]
        x2, y2, e2 = triples[j]
        out = []
        for u in M.hom(x, x2):
            fu = S.compose(e2, F.fm(u))
            for v in N.hom(y, y2):
                if S.compose(G.fm(v), e) == fu:
                    out.append((u, v))
        return out

    L = FinCat([(M.objects[x], N.objects[y], S.label(e)) for x, y, e in triples], hom,
               lambda lg, lf, i, j, k: (M.compose(lg[0], lf[0]), N.compose(lg[1], lf[1])),
               lambda i: (M.identity(triples[i][0]), N.identity(triples[i][1])),
               name=f"{M.name}(->){N.name}")
    L.data = triples
    L.triple_index = {t: i for i, t in enumerate(triples)}
    ml = mark_left or M.is_identity
    mr = mark_right or N.is_identity

    def marked(m):
        u, v = L.label(m)
        return ml(u) and mr(v)

    L.marked = marked
    L.left = Functor(L, M, [t[0] for t in triples], lambda m: L.label(m)[0], name="left")
    L.right = Functor(L, N, [t[1] for t in triples], lambda m: L.label(m)[1], name="right")
    return L


def all_marked(m):
    return True


def slice_over(C, x):
    """``C / x``: objects ``(a, f: a -> x)``, morphisms ``u`` with ``f' . u = f``."""
    data = [f for a in range(len(C)) for f in C.hom(a, x)]

    def hom(i, j):
        f, f2 = data[i], data[j]
        return [u for u in C.hom(f[0], f2[0]) if C.compose(f2, u) == f]

    S = FinCat([(C.objects[f[0]], C.label(f)) for f in data], hom,
               lambda lg, lf, i, j, k: C.compose(lg, lf),
               lambda i: C.identity(data[i][0]), name=f"{C.name}/{C.objects[x]}")
    S.data = data
    S.data_index = {f: i for i, f in enumerate(data)}
    S.forget = Functor(S, C, [f[0] for f in data], S.label, name="forget")
    return S


def coslice(C, x):
    """``x / C``: objects ``(b, f: x -> b)``, morphisms ``v`` with ``v . f = f'``."""
    data = [f for b in range(len(C)) for f in C.hom(x, b)]

    def hom(i, j):
        f, f2 = data[i], data[j]
        return [v for v in C.hom(f[1], f2[1]) if C.compose(v, f) == f2]

    S = FinCat([(C.objects[f[1]], C.label(f)) for f in data], hom,
               lambda lg, lf, i, j, k: C.compose(lg, lf),
               lambda i: C.identity(data[i][1]), name=f"{C.objects[x]}/{C.name}")
    S.data = data
    S.data_index = {f: i for i, f in enumerate(data)}
    S.forget = Functor(S, C, [f[1] for f in data], S.label, name="forget")
    return S


def arrow_category(C):
    """Objects are morphisms of ``C``; a morphism ``f -> f'`` is a square ``(a, b)``
    with ``b . f = f' . a``.  ``.source_functor`` and ``.target_functor`` project.
    """
    data = list(C.morphisms())

    def hom(i, j):
        f, f2 = data[i], data[j]
        return [(a, b) for a in C.hom(f[0], f2[0]) for b in C.hom(f[1], f2[1])
                if C.compose(b, f) == C.compose(f2, a)]

    A = FinCat([(C.objects[f[0]], C.objects[f[1]], C.label(f)) for f in data], hom,
               lambda lg, lf, i, j, k: (C.compose(lg[0], lf[0]), C.compose(lg[1], lf[1])),
               lambda i: (C.identity(data[i][0]), C.identity(data[i][1])),
               name=f"Ar({C.name})")
    A.data = data
    A.data_index = {f: i for i, f in enumerate(data)}
    A.source_functor = Functor(A, C, [f[0] for f in data], lambda m: A.label(m)[0], name="s")
    A.target_functor = Functor(A, C, [f[1] for f in data], lambda m: A.label(m)[1], name="t")
    return A


def twisted_arrow(C):
    """Objects are morphisms ``f: a -> b``; a morphism ``f -> f'`` is ``(u: a' -> a, v: b -> b')``
    with ``f' = v . f . u``.  ``.projection`` goes to ``C^op x C``.
    """
    data = list(C.morphisms())

    def hom(i, j):
        f, f2 = data[i], data[j]
        return [(u, v) for u in C.hom(f2[0], f[0]) for v in C.hom(f[1], f2[1])
                if C.chain(v, f, u) == f2]

    T = FinCat([(C.objects[f[0]], C.objects[f[1]], C.label(f)) for f in data], hom,
               lambda lg, lf, i, j, k: (C.compose(lf[0], lg[0]), C.compose(lg[1], lf[1])),
               lambda i: (C.identity(data[i][0]), C.identity(data[i][1])),
               name=f"Tw({C.name})")
    T.data = data
    P = product(C.op, C)
    T.projection = Functor(
        T, P, [P.pair_index[(f[0], f[1])] for f in data],
        lambda m: _pair_mor(P, m, T), name="proj")
    return T


def _pair_mor(P, m, T):
    u, v = T.label(m)
    f, f2 = T.data[m[0]], T.data[m[1]]
    i = P.pair_index[(f[0], f[1])]
    j = P.pair_index[(f2[0], f2[1])]
    return P.mor(i, j, ((u[1], u[0], u[2]), v))


def coproduct(*cats):
    """Disjoint union; objects are ``(k, x)``."""
    data = [(k, x) for k, C in enumerate(cats) for x in range(len(C))]

    def hom(i, j):
        (k, x), (l, y) = data[i], data[j]
        return list(cats[k].hom(x, y)) if k == l else []

    U = FinCat([(k, cats[k].objects[x]) for k, x in data], hom,
               lambda lg, lf, i, j, k: cats[data[i][0]].compose(lg, lf),
               lambda i: cats[data[i][0]].identity(data[i][1]), name="+".join(c.name for c in cats))
    U.data = data
    return U


def full_subcategory(C, objects, name=None):
    from .category import SubCat
    return SubCat(C, sorted(objects), None, name=name)


def product_all(cats):
    """Product of a list of categories; objects and labels are tuples, ``()`` is the point."""
    data = list(itertools.product(*(range(len(C)) for C in cats)))

    def hom(i, j):
        return list(itertools.product(*(C.hom(a, b) for C, a, b in zip(cats, data[i], data[j]))))

    P = FinCat([tuple(C.objects[a] for C, a in zip(cats, t)) for t in data], hom,
               lambda lg, lf, i, j, k: tuple(C.compose(g, f) for C, g, f in zip(cats, lg, lf)),
               lambda i: tuple(C.identity(a) for C, a in zip(cats, data[i])),
               name="x".join(C.name for C in cats) or "pt")
    P.data = data
    P.tuple_index = {t: i for i, t in enumerate(data)}
    return P
