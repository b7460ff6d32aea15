"""Functors and natural transformations between finite categories."""

from ..errors import InvalidFunctor, InvalidNatTrans
from .category import flip


class Functor:
    """A functor given by object images (target indices) and a morphism map.

    ``mor`` is either a dict from source morphisms to target morphisms or a
    callable; images of identities may be omitted from a dict.
    """

    def __init__(self, source, target, obj, mor, name=None):
        self.source = source
        self.target = target
        self.obj = tuple(obj)
        if callable(mor):
            self._fn = mor
            self._mor = {}
        else:
            self._fn = None
            self._mor = dict(mor)
        self._key = None
        self.name = name or "F"

    def __repr__(self):
        return f"<Functor {self.name}: {self.source.name} -> {self.target.name}>"

    def fo(self, x):
        return self.obj[x]

    def fm(self, m):
        r = self._mor.get(m)
        if r is None:
            if self._fn is not None:
                r = self._fn(m)
            elif m[0] == m[1] and self.source.identity(m[0]) == m:
                r = self.target.identity(self.obj[m[0]])
            else:
                raise InvalidFunctor(f"{self.name} has no image for {m}")
            self._mor[m] = r
        return r

    @property
    def key(self):
        if self._key is None:
            self._key = (self.obj, tuple(self.fm(m) for m in self.source.morphisms()))
        return self._key

    def __eq__(self, other):
        return isinstance(other, Functor) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def validate(self):
        C, D = self.source, self.target
        if len(self.obj) != len(C):
            raise InvalidFunctor(f"{self.name}: {len(self.obj)} object images for {len(C)} objects")
        for x, y in enumerate(self.obj):
            if not 0 <= y < len(D):
                raise InvalidFunctor(f"{self.name}: image of {C.objects[x]!r} out of range")
        for m in C.morphisms():
            r = self.fm(m)
            if r[0] != self.obj[m[0]] or r[1] != self.obj[m[1]] or r[2] >= len(D.hom(r[0], r[1])):
                raise InvalidFunctor(f"{self.name}: image of {C.label(m)!r} has wrong endpoints")
        for x in range(len(C)):
            if self.fm(C.identity(x)) != D.identity(self.obj[x]):
                raise InvalidFunctor(f"{self.name} does not preserve the identity of {C.objects[x]!r}")
        for f in C.morphisms():
            for g in C.out_of(f[1]):
                if self.fm(C.compose(g, f)) != D.compose(self.fm(g), self.fm(f)):
                    raise InvalidFunctor(
                        f"{self.name} does not preserve {C.label(g)!r} . {C.label(f)!r}")
        return self

    def __mul__(self, other):
        """``self * other`` is the composite ``self . other``."""
        return compose_functors(self, other)

    @property
    def op(self):
        return Functor(self.source.op, self.target.op, self.obj,
                       lambda m: flip(self.fm(flip(m))), name=f"{self.name}^op")

    def is_faithful_on(self, a, b):
        imgs = [self.fm(m) for m in self.source.hom(a, b)]
        return len(set(imgs)) == len(imgs)


def compose_functors(G, F):
    return Functor(F.source, G.target, [G.obj[y] for y in F.obj],
                   lambda m: G.fm(F.fm(m)), name=f"{G.name}.{F.name}")


def identity_functor(C):
    return Functor(C, C, range(len(C)), lambda m: m, name=f"id_{C.name}")


def inclusion(sub):
    """Inclusion of a ``SubCat`` into its parent."""
    return Functor(sub, sub.parent, sub.embed, sub.to_parent, name="incl")


def constant_functor(C, D, y):
    e = D.identity(y)
    return Functor(C, D, [y] * len(C), lambda m: e, name="const")


class NatTrans:
    """``source => target`` with ``components[x]`` a morphism of the common target category."""

    def __init__(self, source, target, components):
        self.source = source
        self.target = target
        self.components = tuple(components)

    def __getitem__(self, x):
        return self.components[x]

    def __eq__(self, other):
        return isinstance(other, NatTrans) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def validate(self):
        F, G = self.source, self.target
        C, D = F.source, F.target
        if len(self.components) != len(C):
            raise InvalidNatTrans("wrong number of components")
        for x, t in enumerate(self.components):
            if t[0] != F.obj[x] or t[1] != G.obj[x]:
                raise InvalidNatTrans(f"component at {C.objects[x]!r} has wrong endpoints")
        for m in C.morphisms():
            a, b = m[0], m[1]
            if D.compose(G.fm(m), self.components[a]) != D.compose(self.components[b], F.fm(m)):
                raise InvalidNatTrans(f"naturality fails at {C.label(m)!r}")
        return self

    def is_iso(self):
        D = self.source.target
        return all(D.is_iso(t) for t in self.components)
