"""Set-valued functors with explicit finite sets.

``SetDiagram(C, sizes, maps)`` is a functor ``C -> FinSet``: the value at ``x``
is ``range(sizes[x])`` and ``maps[m]`` is a tuple giving the action of
morphism ``m``.  A presheaf on ``T`` is a ``SetDiagram`` on ``T.op``.
"""

from ..errors import InvalidFunctor
from .category import FinCat, as_budget
from .functor import Functor


class _Stop(Exception):
    pass


class SetDiagram:
    def __init__(self, cat, sizes, maps):
        self.cat = cat
        self.sizes = tuple(sizes)
        self._fn = maps if callable(maps) else None
        self._maps = {} if callable(maps) else dict(maps)

    def __repr__(self):
        return f"<SetDiagram on {self.cat.name}: sizes {list(self.sizes)}>"

    def act(self, m):
        r = self._maps.get(m)
        if r is None:
            if self._fn is not None:
                r = tuple(self._fn(m))
                self._maps[m] = r
            elif self.cat.is_identity(m):
                r = tuple(range(self.sizes[m[0]]))
        return r

    def freeze(self):
        """Materialise every morphism action."""
        return SetDiagram(self.cat, self.sizes, {m: tuple(self.act(m)) for m in self.cat.morphisms()})

    def validate(self):
        C = self.cat
        for m in C.morphisms():
            a = self.act(m)
            if a is None or len(a) != self.sizes[m[0]] or any(not 0 <= v < self.sizes[m[1]] for v in a):
                raise InvalidFunctor(f"bad action of {C.label(m)!r}")
        for x in range(len(C)):
            if tuple(self.act(C.identity(x))) != tuple(range(self.sizes[x])):
                raise InvalidFunctor(f"identity at {C.objects[x]!r} acts nontrivially")
        for f in C.morphisms():
            af = self.act(f)
            for g in C.out_of(f[1]):
                ag = self.act(g)
                agf = self.act(C.compose(g, f))
                if any(agf[v] != ag[af[v]] for v in range(len(af))):
                    raise InvalidFunctor(f"{C.label(g)!r} . {C.label(f)!r} acts wrongly")
        return self

    def key(self):
        return (self.sizes, tuple(tuple(self.act(m)) for m in self.cat.morphisms()))

    def __eq__(self, other):
        return isinstance(other, SetDiagram) and self.cat is other.cat and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def elements(self):
        return [(x, v) for x in range(len(self.cat)) for v in range(self.sizes[x])]

    def as_functor(self, fs):
        """The same diagram as a functor into the skeleton ``fs = finset(n)``."""
        C = self.cat
        return Functor(C, fs, self.sizes,
                       lambda m: fs.mor(self.sizes[m[0]], self.sizes[m[1]], tuple(self.act(m))))

    @classmethod
    def from_functor(cls, F):
        """Inverse of ``as_functor``."""
        return cls(F.source, F.obj, lambda m: F.target.label(F.fm(m)))


def representable(C, x):
    """``hom(x, -)`` as a ``SetDiagram`` on ``C``; element ``k`` of the value at ``y`` is ``C.hom(x, y)[k]``."""
    sizes = [len(C.hom(x, y)) for y in range(len(C))]

    def act(m):
        return tuple(C.compose(m, f)[2] for f in C.hom(x, m[0]))

    return SetDiagram(C, sizes, act)


def terminal(C):
    return SetDiagram(C, [1] * len(C), lambda m: (0,))


def coproduct(*ds):
    C = ds[0].cat
    offs = []
    for x in range(len(C)):
        o, acc = [], 0
        for d in ds:
            o.append(acc)
            acc += d.sizes[x]
        offs.append(o)
    sizes = [sum(d.sizes[x] for d in ds) for x in range(len(C))]

    def act(m):
        out = []
        for k, d in enumerate(ds):
            out.extend(offs[m[1]][k] + v for v in d.act(m))
        return tuple(out)

    return SetDiagram(C, sizes, act)


def product(a, b):
    """Pointwise product; the pair ``(u, v)`` is encoded as ``u * b.sizes[x] + v``."""
    C = a.cat
    sizes = [a.sizes[x] * b.sizes[x] for x in range(len(C))]

    def act(m):
        fa, fb = a.act(m), b.act(m)
        nb = b.sizes[m[1]]
        return tuple(fa[u] * nb + fb[v] for u in range(a.sizes[m[0]]) for v in range(b.sizes[m[0]]))

    return SetDiagram(C, sizes, act)


def components(d):
    """Connected components of the category of elements, in canonical order."""
    C = d.cat
    parent = {e: e for e in d.elements()}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for m in C.morphisms():
        a = d.act(m)
        for v in range(d.sizes[m[0]]):
            r1, r2 = find((m[0], v)), find((m[1], a[v]))
            if r1 != r2:
                parent[max(r1, r2)] = min(r1, r2)
    groups = {}
    for e in d.elements():
        groups.setdefault(find(e), []).append(e)
    return [groups[k] for k in sorted(groups)]


def is_nat(d1, d2, comps):
    C = d1.cat
    for m in C.morphisms():
        a1, a2 = d1.act(m), d2.act(m)
        cx, cy = comps[m[0]], comps[m[1]]
        for v in range(d1.sizes[m[0]]):
            if cy[a1[v]] != a2[cx[v]]:
                return False
    return True


def nat_maps(d1, d2, budget=None, limit=None):
    """All natural maps ``d1 => d2`` as tuples of component tuples.

    Backtracking over elements with forward propagation along the action.
    """
    budget = as_budget(budget)
    C = d1.cat
    elems = d1.elements()
    outgoing = {e: [] for e in elems}
    for m in C.morphisms():
        if C.is_identity(m):
            continue
        a = d1.act(m)
        for v in range(d1.sizes[m[0]]):
            outgoing[(m[0], v)].append((m, (m[1], a[v])))
    val = {}
    out = []

    def assign(e, w, trail):
        stack = [(e, w)]
        while stack:
            e, w = stack.pop()
            if e in val:
                if val[e] != w:
                    return False
                continue
            val[e] = w
            trail.append(e)
            for m, e2 in outgoing[e]:
                stack.append((e2, d2.act(m)[w]))
        return True

    def rec(k):
        while k < len(elems) and elems[k] in val:
            k += 1
        if k == len(elems):
            out.append(tuple(tuple(val[(x, v)] for v in range(d1.sizes[x])) for x in range(len(C))))
            if limit is not None and len(out) >= limit:
                raise _Stop
            return
        x = elems[k][0]
        for w in range(d2.sizes[x]):
            budget.tick()
            trail = []
            if assign(elems[k], w, trail):
                rec(k + 1)
            for e in trail:
                del val[e]

    try:
        rec(0)
    except _Stop:
        pass
    return out


def restrict(d, F):
    """``d . F`` for a functor ``F`` into ``d.cat``."""
    return SetDiagram(F.source, [d.sizes[y] for y in F.obj], lambda m: d.act(F.fm(m)))


def diagram_category(C, n, budget=None):
    """``Fun(C, FinSet<=n)`` with objects ``SetDiagram`` instances (``.diagrams``)."""
    from .constructions import finset
    from .search import functor_category
    fs = finset(n)
    FC = functor_category(C, fs, budget=budget)
    FC.diagrams = [SetDiagram.from_functor(F) for F in FC.functors]
    return FC


def all_diagrams(C, n, budget=None):
    from .constructions import finset
    from .search import enumerate_functors
    return [SetDiagram.from_functor(F) for F in enumerate_functors(C, finset(n), budget=budget)]


def elements_category(d):
    """Category of elements with its projection to ``d.cat``; objects are ``(x, v)``."""
    C = d.cat
    els = d.elements()
    idx = {e: i for i, e in enumerate(els)}

    def hom(i, j):
        (x, v), (y, w) = els[i], els[j]
        return [m for m in C.hom(x, y) if d.act(m)[v] == w]

    E = FinCat([(C.objects[x], v) for x, v in els], hom,
               lambda lg, lf, i, j, k: C.compose(lg, lf),
               lambda i: C.identity(els[i][0]), name=f"el({C.name})")
    E.data = els
    E.data_index = idx
    E.projection = Functor(E, C, [x for x, _ in els], E.label, name="proj")
    return E
