"""Finite categories with lazily materialised hom-sets.

A morphism is the triple ``(src, dst, k)``: the ``k``-th element of
``hom(src, dst)``.  Hom-sets come from a callback returning morphism labels,
so a derived category (say, diagrams in ``FinSet``) only pays for the
hom-sets an algorithm actually touches.  Morphism triples are canonical, they
do not depend on the order in which hom-sets were first requested.
"""

from collections import defaultdict

from ..errors import (BadIdentity, MissingComposite, NonAssociative,
                      SizeBudgetExceeded, UnknownObject, ValidationError)

DEFAULT_BUDGET = 10**6


class Budget:
    """Counter for candidate assignments made by a search."""

    def __init__(self, limit=None):
        self.limit = DEFAULT_BUDGET if limit is None else int(limit)
        self.used = 0

    def tick(self, n=1):
        self.used += n
        if self.used > self.limit:
            raise SizeBudgetExceeded(
                f"enumeration budget of {self.limit} candidate assignments exceeded",
                self.limit)


def as_budget(budget):
    if isinstance(budget, Budget):
        return budget
    return Budget(budget)


def flip(m):
    return (m[1], m[0], m[2])


class FinCat:
    """A finite category.

    ``hom(i, j)`` is a callable returning the labels of the morphisms
    ``objects[i] -> objects[j]``; ``compose(lg, lf, i, j, k)`` returns the label
    of ``g . f`` for ``f: i -> j`` and ``g: j -> k``; ``identity(i)`` returns
    the label of the identity at ``i``.  Labels must be hashable and unique
    within each hom-set.
    """

    def __init__(self, objects, hom, compose, identity, name=None):
        self.objects = tuple(objects)
        self._index = {}
        for i, o in enumerate(self.objects):
            if o in self._index:
                raise ValidationError(f"duplicate object id {o!r}")
            self._index[o] = i
        self._hom_fn = hom
        self._comp_fn = compose
        self._id_fn = identity
        self._labels = {}
        self._homs = {}
        self._pos = {}
        self._comp = {}
        self._ids = {}
        self._inv = {}
        self._out = {}
        self._op = None
        self.name = name or "C"

    def __len__(self):
        return len(self.objects)

    def __repr__(self):
        return f"<FinCat {self.name}: {len(self)} objects>"

    # -- objects ---------------------------------------------------------

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise UnknownObject(f"{label!r} is not an object of {self.name}") from None

    def has_object(self, label):
        return label in self._index

    # -- hom-sets --------------------------------------------------------

    def hom_labels(self, i, j):
        labs = self._labels.get((i, j))
        if labs is None:
            labs = tuple(self._hom_fn(i, j))
            self._labels[(i, j)] = labs
        return labs

    def hom(self, i, j):
        h = self._homs.get((i, j))
        if h is None:
            h = tuple((i, j, k) for k in range(len(self.hom_labels(i, j))))
            self._homs[(i, j)] = h
        return h

    def _posmap(self, i, j):
        pm = self._pos.get((i, j))
        if pm is None:
            labs = self.hom_labels(i, j)
            pm = {lab: k for k, lab in enumerate(labs)}
            if len(pm) != len(labs):
                raise ValidationError(
                    f"duplicate morphism label in hom({self.objects[i]!r}, {self.objects[j]!r})")
            self._pos[(i, j)] = pm
        return pm

    def label(self, m):
        return self.hom_labels(m[0], m[1])[m[2]]

    def mor(self, i, j, label):
        k = self._posmap(i, j).get(label)
        if k is None:
            raise ValidationError(
                f"{label!r} is not a morphism {self.objects[i]!r} -> {self.objects[j]!r}")
        return (i, j, k)

    def find_mor(self, i, j, label):
        k = self._posmap(i, j).get(label)
        return None if k is None else (i, j, k)

    def identity(self, i):
        m = self._ids.get(i)
        if m is None:
            lab = self._id_fn(i)
            k = self._posmap(i, i).get(lab)
            if k is None:
                raise BadIdentity(f"identity {lab!r} of {self.objects[i]!r} is not an endomorphism",
                                  (lab,))
            m = (i, i, k)
            self._ids[i] = m
        return m

    def is_identity(self, m):
        return m[0] == m[1] and self.identity(m[0]) == m

    def compose(self, g, f):
        """``g . f``."""
        r = self._comp.get((g, f))
        if r is None:
            if g[0] != f[1]:
                raise ValueError(f"not composable: {g} after {f}")
            i, j, k = f[0], f[1], g[1]
            lab = self._comp_fn(self.label(g), self.label(f), i, j, k)
            p = self._posmap(i, k).get(lab)
            if p is None:
                raise MissingComposite(
                    f"composite {self.label(g)!r} . {self.label(f)!r} = {lab!r} is not a morphism "
                    f"{self.objects[i]!r} -> {self.objects[k]!r}",
                    (self.label(g), self.label(f), lab))
            r = (i, k, p)
            self._comp[(g, f)] = r
        return r

    def chain(self, *ms):
        """``ms[0] . ms[1] . ... . ms[-1]``."""
        r = ms[-1]
        for g in reversed(ms[:-1]):
            r = self.compose(g, r)
        return r

    # -- global views ----------------------------------------------------

    def morphisms(self):
        n = len(self)
        for i in range(n):
            for j in range(n):
                yield from self.hom(i, j)

    def n_morphisms(self):
        return sum(len(self.hom_labels(i, j)) for i in range(len(self)) for j in range(len(self)))

    def out_of(self, i):
        r = self._out.get(i)
        if r is None:
            r = tuple(m for j in range(len(self)) for m in self.hom(i, j))
            self._out[i] = r
        return r

    def inverse(self, m):
        if m in self._inv:
            return self._inv[m]
        inv = None
        a, b = m[0], m[1]
        ida, idb = self.identity(a), self.identity(b)
        for n in self.hom(b, a):
            if self.compose(n, m) == ida and self.compose(m, n) == idb:
                inv = n
                break
        self._inv[m] = inv
        return inv

    def is_iso(self, m):
        return self.inverse(m) is not None

    def validate(self):
        """Check identities, closure and associativity; raise on the first failure."""
        n = len(self)
        for i in range(n):
            self.identity(i)
        mors = list(self.morphisms())
        for f in mors:
            if self.compose(self.identity(f[1]), f) != f or self.compose(f, self.identity(f[0])) != f:
                raise BadIdentity(f"unit law fails for {self.label(f)!r}", (self.label(f),))
        for f in mors:
            for g in self.out_of(f[1]):
                self.compose(g, f)
        for f in mors:
            for g in self.out_of(f[1]):
                gf = self.compose(g, f)
                for h in self.out_of(g[1]):
                    if self.compose(h, gf) != self.compose(self.compose(h, g), f):
                        raise NonAssociative(
                            f"(h.g).f != h.(g.f) for h={self.label(h)!r}, g={self.label(g)!r}, "
                            f"f={self.label(f)!r}",
                            (self.label(h), self.label(g), self.label(f)))
        return self

    def presentation(self):
        """Canonical nested tuple; equal presentations mean identical categories."""
        n = len(self)
        homs = tuple((i, j, self.hom_labels(i, j)) for i in range(n) for j in range(n)
                     if self.hom_labels(i, j))
        comp = tuple((g, f, self.compose(g, f)) for f in self.morphisms() for g in self.out_of(f[1]))
        ids = tuple(self.identity(i) for i in range(n))
        return (self.objects, homs, ids, comp)

    def hom_counts(self):
        n = len(self)
        return [[len(self.hom_labels(i, j)) for j in range(n)] for i in range(n)]

    @property
    def op(self):
        if self._op is None:
            self._op = _Opposite(self)
        return self._op


class _Opposite(FinCat):
    def __init__(self, C):
        super().__init__(C.objects, lambda i, j: C.hom_labels(j, i), None,
                         lambda i: C.label(C.identity(i)), name=f"{C.name}^op")
        self._base = C
        self._op = C

    def compose(self, g, f):
        r = self._comp.get((g, f))
        if r is None:
            if g[0] != f[1]:
                raise ValueError(f"not composable: {g} after {f}")
            r = flip(self._base.compose(flip(f), flip(g)))
            self._comp[(g, f)] = r
        return r

    def identity(self, i):
        return self._base.identity(i)


class SubCat(FinCat):
    """Subcategory of ``parent`` on the given parent object indices.

    ``keep(m)`` selects parent morphisms; the caller is responsible for closure
    (``validate`` will catch a non-closed selection).
    """

    def __init__(self, parent, objects, keep=None, name=None):
        self.parent = parent
        self.embed = tuple(objects)
        self.back = {p: s for s, p in enumerate(self.embed)}
        self._keep = keep

        def hom(i, j):
            P, Q = self.embed[i], self.embed[j]
            labs = parent.hom_labels(P, Q)
            if keep is None:
                return labs
            return [lab for m, lab in zip(parent.hom(P, Q), labs) if keep(m)]

        super().__init__([parent.objects[p] for p in self.embed], hom, None,
                         lambda i: parent.label(parent.identity(self.embed[i])),
                         name=name or f"sub({parent.name})")

    def to_parent(self, m):
        P, Q = self.embed[m[0]], self.embed[m[1]]
        if self._keep is None:
            return (P, Q, m[2])
        return self.parent.mor(P, Q, self.label(m))

    def from_parent(self, pm):
        i, j = self.back[pm[0]], self.back[pm[1]]
        if self._keep is None:
            return (i, j, pm[2])
        return self.mor(i, j, self.parent.label(pm))

    def contains(self, pm):
        if pm[0] not in self.back or pm[1] not in self.back:
            return False
        return self._keep is None or self._keep(pm)

    def compose(self, g, f):
        r = self._comp.get((g, f))
        if r is None:
            if g[0] != f[1]:
                raise ValueError(f"not composable: {g} after {f}")
            pm = self.parent.compose(self.to_parent(g), self.to_parent(f))
            if not self.contains(pm):
                raise MissingComposite(
                    f"subcategory not closed: {self.label(g)!r} . {self.label(f)!r} leaves it",
                    (self.label(g), self.label(f), self.parent.label(pm)))
            r = self.from_parent(pm)
            self._comp[(g, f)] = r
        return r

    def identity(self, i):
        m = self._ids.get(i)
        if m is None:
            pm = self.parent.identity(self.embed[i])
            if not self.contains(pm):
                raise BadIdentity(f"identity of {self.objects[i]!r} missing from subcategory")
            m = self.from_parent(pm)
            self._ids[i] = m
        return m


def from_tables(objects, morphisms, identities, composition, name=None):
    """Eager category from explicit lists.

    ``morphisms`` is a list of ``(id, src, dst)``, ``identities`` maps object id
    to morphism id and ``composition`` maps ``(g, f)`` to ``g . f`` for
    composable non-identity pairs.  Composites with identities are implicit.
    """
    objects = list(objects)
    idx = {o: i for i, o in enumerate(objects)}
    homs = defaultdict(list)
    ends = {}
    for mid, s, d in morphisms:
        if mid in ends:
            raise ValidationError(f"duplicate morphism id {mid!r}")
        if s not in idx or d not in idx:
            raise ValidationError(f"morphism {mid!r} has unknown endpoint")
        ends[mid] = (s, d)
        homs[(idx[s], idx[d])].append(mid)
    id_set = set(identities.values())
    comp = dict(composition)

    def compose(lg, lf, i, j, k):
        if lf in id_set and identities.get(objects[i]) == lf:
            return lg
        if lg in id_set and identities.get(objects[k]) == lg:
            return lf
        try:
            return comp[(lg, lf)]
        except KeyError:
            raise MissingComposite(f"no composite given for {lg!r} . {lf!r}", (lg, lf, None)) from None

    def identity(i):
        try:
            return identities[objects[i]]
        except KeyError:
            raise BadIdentity(f"object {objects[i]!r} has no identity", (objects[i],)) from None

    return FinCat(objects, lambda i, j: homs.get((i, j), ()), compose, identity, name=name)


def validate_category(raw, name=None):
    """Build and fully validate a category from a raw description.

    ``raw`` has keys ``objects``, ``morphisms`` (``[id, src, dst]`` triples),
    ``identities`` (object -> morphism id) and ``composition``
    (``[g, f, g.f]`` triples).  Objects and morphisms are put in lexicographic
    order of their ids.
    """
    objects = sorted(raw.get("objects", []), key=str)
    if len(set(objects)) != len(objects):
        raise ValidationError("duplicate object ids")
    mors = sorted((tuple(m) for m in raw.get("morphisms", [])), key=lambda m: str(m[0]))
    ends = {}
    for mid, s, d in mors:
        if mid in ends:
            raise ValidationError(f"duplicate morphism id {mid!r}")
        ends[mid] = (s, d)
    identities = dict(raw.get("identities", {}))
    for o in objects:
        e = identities.get(o)
        if e is None or ends.get(e) != (o, o):
            raise BadIdentity(f"object {o!r} lacks an identity endomorphism", (o, e))
    id_of = {e: o for o, e in identities.items()}
    comp = {}
    for g, f, h in raw.get("composition", []):
        if g not in ends or f not in ends or h not in ends:
            raise MissingComposite(f"composition triple {[g, f, h]} names an unknown morphism", (g, f, h))
        if ends[f][1] != ends[g][0]:
            raise MissingComposite(f"composition triple {[g, f, h]}: {g!r} and {f!r} are not composable",
                                   (g, f, h))
        if ends[h] != (ends[f][0], ends[g][1]):
            raise MissingComposite(f"composition triple {[g, f, h]}: {h!r} has the wrong endpoints",
                                   (g, f, h))
        if f in id_of and h != g or g in id_of and h != f:
            raise BadIdentity(f"composition triple {[g, f, h]} contradicts the unit law", (g, f, h))
        if (g, f) in comp and comp[(g, f)] != h:
            raise MissingComposite(f"two composites given for {g!r} . {f!r}", (g, f, h))
        comp[(g, f)] = h
    for f, (a, b) in ends.items():
        if f in id_of:
            continue
        for g, (c, d) in ends.items():
            if g in id_of or c != b:
                continue
            if (g, f) not in comp:
                raise MissingComposite(f"missing composite {g!r} . {f!r}", (g, f, None))
    C = from_tables(objects, mors, identities, comp, name=name)
    return C.validate()
