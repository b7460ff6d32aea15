"""Brute-force oracles that share no code with the library's search routines.

Groups are read only through their multiplication tables and categories only
through ``hom``, ``compose`` and ``morphisms``.
"""

import itertools


def left_cosets(G, K):
    """Left cosets ``gK`` as frozensets, in a fixed order."""
    t = G.table
    found = {frozenset(t[g][k] for k in K) for g in range(len(G))}
    return sorted(found, key=sorted)


def equivariant_maps(G, H, K):
    """Number of G-maps ``G/H -> G/K``.

    A candidate is the image ``xK`` of ``eH``.  It extends to ``gH -> g x K``;
    we check that this is well defined on every coset and equivariant.
    """
    t = G.table
    src = left_cosets(G, H)
    dst = left_cosets(G, K)
    where = {g: c for c in dst for g in c}
    count = 0
    for xK in dst:
        x = min(xK)
        f = {}
        ok = True
        for g in range(len(G)):
            gH = frozenset(t[g][h] for h in H)
            img = where[t[g][x]]
            if f.setdefault(gH, img) != img:
                ok = False
                break
        if not ok or len(f) != len(src):
            continue
        for g in range(len(G)):
            for c in src:
                gc = frozenset(t[g][y] for y in c)
                if where[t[g][min(f[c])]] != f[gc]:
                    ok = False
        count += ok
    return count


def hom_presheaf(T, comps):
    """``c -> coproduct_i T(c, comps[i])`` as explicit sets and restriction tables.

    Returns ``(elements, restrict)``: ``elements[c]`` lists ``(i, f)`` and
    ``restrict[m]`` for ``m: d -> c`` maps positions at ``c`` to positions at ``d``.
    """
    elements = [[(i, f) for i, b in enumerate(comps) for f in T.hom(c, b)] for c in range(len(T))]
    pos = [{e: k for k, e in enumerate(es)} for es in elements]
    restrict = {}
    for m in T.morphisms():
        d, c = m[0], m[1]
        restrict[m] = [pos[d][(i, T.compose(f, m))] for i, f in elements[c]]
    return elements, restrict


def count_natural(T, X, Y):
    """Natural maps between presheaves ``(elements, restrict)`` on ``T``.

    Elements are split into connected pieces with a private union-find; each
    piece is solved by backtracking with forward propagation and the counts
    multiply.
    """
    ex, rx = X
    ey, ry = Y
    nodes = [(c, x) for c in range(len(T)) for x in range(len(ex[c]))]
    parent = {v: v for v in nodes}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    edges = {v: [] for v in nodes}
    for m, tab in rx.items():
        d, c = m[0], m[1]
        for x, y in enumerate(tab):
            edges[(c, x)].append((m, (d, y)))
            a, b = find((c, x)), find((d, y))
            if a != b:
                parent[a] = b
    pieces = {}
    for v in nodes:
        pieces.setdefault(find(v), []).append(v)

    def reach(v):
        seen, todo = {v}, [v]
        while todo:
            for _, w in edges[todo.pop()]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen)

    total = 1
    for piece in pieces.values():
        order = sorted(piece, key=lambda v: -reach(v))

        def solve(k, val):
            while k < len(order) and order[k] in val:
                k += 1
            if k == len(order):
                return 1
            v = order[k]
            n = 0
            for choice in range(len(ey[v[0]])):
                trial = dict(val)
                if propagate(v, choice, trial):
                    n += solve(k + 1, trial)
            return n

        def propagate(v, choice, val):
            val[v] = choice
            todo = [v]
            while todo:
                u = todo.pop()
                for m, w in edges[u]:
                    want = ry[m][val[u]]
                    if w in val:
                        if val[w] != want:
                            return False
                    else:
                        val[w] = want
                        todo.append(w)
            return True

        total *= solve(0, {})
        if total == 0:
            return 0
    return total


def brute_natural(T, X, Y):
    """Try every family of functions; only for tiny presheaves."""
    ex, rx = X
    ey, ry = Y
    fams = itertools.product(*(itertools.product(range(len(ey[c])), repeat=len(ex[c]))
                               for c in range(len(T))))
    return sum(all(th[m[0]][y] == ry[m][th[m[1]][x]] for m, tab in rx.items()
                   for x, y in enumerate(tab))
               for th in fams)
