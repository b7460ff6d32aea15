"""Finite groups and their orbit categories."""

import itertools

from ..errors import ValidationError
from ..fincat import FinCat


class FinGroup:
    """A finite group given by element labels and a multiplication table.

    ``table[a][b]`` is the index of ``elements[a] * elements[b]``.
    """

    def __init__(self, elements, table, name="G", cyclic_names=False):
        self.elements = tuple(elements)
        self.table = tuple(tuple(row) for row in table)
        self.name = name
        self.cyclic_names = cyclic_names
        self._index = {e: i for i, e in enumerate(self.elements)}
        self._subgroups = None
        self.validate()
        self.unit = next(e for e in range(len(self))
                         if all(self.table[e][a] == a for a in range(len(self))))
        self.inv = tuple(next(b for b in range(len(self)) if self.table[a][b] == self.unit)
                         for a in range(len(self)))

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"<FinGroup {self.name} of order {len(self)}>"

    def index(self, label):
        return self._index[label]

    def mul(self, a, b):
        return self.table[a][b]

    def validate(self):
        n = len(self.elements)
        if len(self._index) != n:
            raise ValidationError("duplicate group elements")
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise ValidationError("multiplication table has the wrong shape")
        if any(not 0 <= v < n for r in self.table for v in r):
            raise ValidationError("multiplication table is not closed")
        t = self.table
        for a, b, c in itertools.product(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise ValidationError(f"not associative at {self.elements[a]!r}, "
                                      f"{self.elements[b]!r}, {self.elements[c]!r}")
        units = [e for e in range(n) if all(t[e][a] == a and t[a][e] == a for a in range(n))]
        if not units:
            raise ValidationError("no identity element")
        for a in range(n):
            if not any(t[a][b] == units[0] and t[b][a] == units[0] for b in range(n)):
                raise ValidationError(f"{self.elements[a]!r} has no inverse")
        return self

    def closure(self, gens):
        H = {self.unit}
        frontier = list(H)
        gens = list(gens)
        while frontier:
            new = []
            for h in frontier:
                for g in gens:
                    x = self.table[h][g]
                    if x not in H:
                        H.add(x)
                        new.append(x)
            frontier = new
        return frozenset(H)

    def subgroups(self):
        """All subgroups as frozensets of element indices, ordered by (order, elements)."""
        if self._subgroups is None:
            found = {self.closure([])}
            frontier = list(found)
            while frontier:
                new = []
                for H in frontier:
                    for g in range(len(self)):
                        if g not in H:
                            K = self.closure(list(H) + [g])
                            if K not in found:
                                found.add(K)
                                new.append(K)
                frontier = new
            self._subgroups = sorted(found, key=lambda H: (len(H), sorted(H)))
        return self._subgroups

    def conjugate(self, g, H):
        """``g^-1 H g``."""
        gi = self.inv[g]
        return frozenset(self.table[self.table[gi][h]][g] for h in H)

    def coset_rep(self, g, K):
        """Minimal index in the left coset ``gK``."""
        return min(self.table[g][k] for k in K)

    def left_cosets(self, K):
        return sorted({self.coset_rep(g, K) for g in range(len(self))})

    def subgroup_name(self, H):
        if len(H) == 1:
            return "e"
        if len(H) == len(self):
            return self.name
        if self.cyclic_names:
            return f"C{len(H)}"
        gens = [g for g in sorted(H) if self.closure([g]) == H]
        if gens:
            return f"<{self.elements[gens[0]]}>"
        return f"H{self.subgroups().index(H)}"


def cyclic(n, name=None):
    return FinGroup(range(n), [[(a + b) % n for b in range(n)] for a in range(n)],
                    name=name or f"C{n}", cyclic_names=True)


def trivial_group():
    return cyclic(1, name="e")


def permutation_group(gens, degree, name="G"):
    """Closure of the given permutations (tuples); product ``p*q`` is ``p . q``."""
    ident = tuple(range(degree))
    elems = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for p in frontier:
            for g in gens:
                q = tuple(p[g[x]] for x in range(degree))
                if q not in elems:
                    elems.add(q)
                    new.append(q)
        frontier = new
    elems = sorted(elems)
    idx = {e: i for i, e in enumerate(elems)}
    table = [[idx[tuple(p[q[x]] for x in range(degree))] for q in elems] for p in elems]
    return FinGroup(elems, table, name=name)


def symmetric(n):
    gens = []
    if n > 1:
        gens.append(tuple([1, 0] + list(range(2, n))))
        gens.append(tuple(list(range(1, n)) + [0]))
    return permutation_group(gens, n, name=f"S{n}")


def orbit_category(G):
    """``O_G``: one object ``G/H`` per subgroup ``H``; a morphism ``G/H -> G/K`` is a
    coset ``gK`` with ``g^-1 H g`` inside ``K``, labelled by its minimal representative.
    Composition: ``gK`` then ``g'L`` is ``g g' L``.
    """
    Hs = G.subgroups()

    def hom(i, j):
        H, K = Hs[i], Hs[j]
        reps = sorted({G.coset_rep(g, K) for g in range(len(G)) if G.conjugate(g, H) <= K})
        return [G.elements[g] for g in reps]

    def compose(lg, lf, i, j, k):
        return G.elements[G.coset_rep(G.mul(G.index(lf), G.index(lg)), Hs[k])]

    def identity(i):
        return G.elements[G.coset_rep(G.unit, Hs[i])]

    O = FinCat([f"{G.name}/{G.subgroup_name(H)}" for H in Hs], hom, compose, identity,
               name=f"O_{G.name}")
    O.group = G
    O.subgroups = Hs
    return O


def fixed_point_count(G, H, K):
    """``|(G/K)^H|``: cosets ``xK`` with ``h x K = x K`` for all ``h`` in ``H``."""
    count = 0
    for x in G.left_cosets(K):
        if all(G.coset_rep(G.mul(h, x), K) == x for h in H):
            count += 1
    return count
