"""Vector spaces over the subfields of a finite field extension, fibred over
the orbit category of its Galois group.

For ``E = F_{p^n}`` the Galois group is cyclic of order ``n``, generated by
Frobenius, and the subfields are ``F_{p^k}`` for ``k | n`` with fixing group
generated by Frobenius to the ``k``.  An object is a pair ``(L, L^d)``; a
morphism ``(L, X) -> (L', X')`` is an embedding ``L -> L'`` (a power of
Frobenius restricted to ``L``) together with an ``L'``-linear map
``X (x) L' -> X'``, written as a matrix over ``L'``.
"""

import itertools
from dataclasses import dataclass

from ..errors import BudgetExceeded, ValidationError
from ..fincat import FinCat, Functor
from .groups import cyclic, orbit_category


@dataclass(frozen=True)
class GaloisConfig:
    p: int = 2
    n: int = 2
    d: int = 1
    budget: int = 200_000

    def __post_init__(self):
        if self.p < 2 or any(self.p % q == 0 for q in range(2, self.p)):
            raise ValidationError(f"{self.p} is not prime")
        if self.n < 1 or self.d < 0:
            raise ValidationError("need n >= 1 and d >= 0")


class FiniteField:
    """``F_{p^n}`` with elements ``0 .. p^n - 1`` read as base-``p`` coefficient vectors."""

    def __init__(self, p, n):
        self.p, self.n, self.q = p, n, p ** n
        self.modulus = _irreducible(p, n)
        q = self.q
        self.add = [[self._from(self._poly_add(self._to(a), self._to(b))) for b in range(q)]
                    for a in range(q)]
        self.mul = [[self._from(self._poly_mulmod(self._to(a), self._to(b))) for b in range(q)]
                    for a in range(q)]
        self.frob = [self.power(a, p) for a in range(q)]
        self.validate()

    def _to(self, a):
        return [(a // self.p ** i) % self.p for i in range(self.n)]

    def _from(self, c):
        return sum(int(v) * self.p ** i for i, v in enumerate(c))

    def _poly_add(self, a, b):
        return [(x + y) % self.p for x, y in zip(a, b)]

    def _poly_mulmod(self, a, b):
        prod = [0] * (2 * self.n)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % self.p
        m = self.modulus
        for deg in range(2 * self.n - 1, self.n - 1, -1):
            c = prod[deg]
            if c:
                for i in range(self.n + 1):
                    prod[deg - self.n + i] = (prod[deg - self.n + i] - c * m[i]) % self.p
        return prod[:self.n]

    def power(self, a, k):
        r = 1
        for _ in range(k):
            r = self.mul[r][a]
        return r

    def frobenius(self, a, i):
        for _ in range(i % self.n):
            a = self.frob[a]
        return a

    def subfield(self, k):
        """Elements fixed by Frobenius to the ``k``: the copy of ``F_{p^k}``."""
        return [a for a in range(self.q) if self.frobenius(a, k) == a]

    def validate(self):
        q = self.q
        for a in range(q):
            if self.add[0][a] != a or self.mul[1][a] != a:
                raise ValidationError("field units are wrong")
            if a and not any(self.mul[a][b] == 1 for b in range(q)):
                raise ValidationError("nonzero element without inverse")
        for a, b, c in itertools.product(range(q), repeat=3):
            if self.mul[a][self.add[b][c]] != self.add[self.mul[a][b]][self.mul[a][c]]:
                raise ValidationError("distributivity fails")
        return self


def _irreducible(p, n):
    """Lexicographically first monic irreducible polynomial of degree ``n`` (coefficients low to high)."""
    if n == 1:
        return [0, 1]
    for tail in itertools.product(range(p), repeat=n):
        f = list(tail) + [1]
        if all(_remainder(f, g, p) != [0] * len(g[:-1]) for k in range(1, n // 2 + 1)
               for g in _monic(p, k)):
            return f
    raise ValidationError("no irreducible polynomial found")


def _monic(p, k):
    for tail in itertools.product(range(p), repeat=k):
        yield list(tail) + [1]


def _remainder(f, g, p):
    r = list(f)
    dg = len(g) - 1
    for deg in range(len(r) - 1, dg - 1, -1):
        c = r[deg]
        if c:
            for i in range(dg + 1):
                r[deg - dg + i] = (r[deg - dg + i] - c * g[i]) % p
    return r[:dg]


def _matrices(elems, rows, cols):
    return [tuple(tuple(v[r * cols:(r + 1) * cols]) for r in range(rows))
            for v in itertools.product(elems, repeat=rows * cols)]


def galois_vect(cfg=None):
    """The TCat of bounded-dimension vector spaces over subfields, over ``O_Gal^op``."""
    from ..fibration import make_tcat
    cfg = cfg or GaloisConfig()
    p, n, d = cfg.p, cfg.n, cfg.d
    if p ** n * max(d, 1) > 64:
        raise BudgetExceeded(f"p^n*d = {p ** n * max(d, 1)} is beyond the demo bound 64", 64)
    degrees = [k for k in range(1, n + 1) if n % k == 0]
    total = sum(k * (p ** k2) ** (a * b)
                for k in degrees for k2 in degrees if k2 % k == 0
                for a in range(d + 1) for b in range(d + 1))
    if total > cfg.budget:
        raise BudgetExceeded(f"{total} morphisms exceed the budget of {cfg.budget}", cfg.budget)
    E = FiniteField(p, n)
    sub = {k: E.subfield(k) for k in degrees}
    G = cyclic(n, name="Gal")
    O = orbit_category(G)
    S = O.op
    fix = {k: frozenset(range(0, n, k)) for k in degrees}
    obj_of_field = {k: O.subgroups.index(fix[k]) for k in degrees}
    data = [(k, a) for k in degrees for a in range(d + 1)]

    def hom(i, j):
        (k, a), (k2, b) = data[i], data[j]
        if k2 % k:
            return []
        return [(s, M) for s in range(k) for M in _matrices(sub[k2], b, a)]

    def apply(s, M):
        return tuple(tuple(E.frobenius(x, s) for x in row) for row in M)

    def matmul(A, B, rows, inner, cols):
        out = []
        for r in range(rows):
            row = []
            for c in range(cols):
                acc = 0
                for t in range(inner):
                    acc = E.add[acc][E.mul[A[r][t]][B[t][c]]]
                row.append(acc)
            out.append(tuple(row))
        return tuple(out)

    def compose(lg, lf, i, j, k):
        (s1, M1), (s2, M2) = lf, lg
        a, b, c = data[i][1], data[j][1], data[k][1]
        return ((s1 + s2) % data[i][0], matmul(M2, apply(s2, M1), c, b, a))

    def identity(i):
        a = data[i][1]
        return (0, tuple(tuple(1 if r == c else 0 for c in range(a)) for r in range(a)))

    C = FinCat([(f"F{p ** k}", a) for k, a in data], hom, compose, identity,
               name=f"Vect(F{p ** n}/F{p}, d<={d})")
    C.data = data
    C.field = E

    def structure(m):
        (k, _), (k2, _) = data[m[0]], data[m[1]]
        s, _M = C.label(m)
        lab = G.elements[G.coset_rep(s, fix[k])]
        return S.mor(obj_of_field[k], obj_of_field[k2], lab)

    p_C = Functor(C, S, [obj_of_field[k] for k, _ in data], structure, name="structure")
    return make_tcat(p_C)
