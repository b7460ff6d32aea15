"""Backtracking enumeration of functors and natural transformations."""

from .category import FinCat, as_budget
from .functor import Functor, NatTrans


class _Stop(Exception):
    pass


def _functor_plan(C):
    plan = getattr(C, "_functor_plan", None)
    if plan is not None:
        return plan
    n = len(C)
    nonid = [m for m in C.morphisms() if not C.is_identity(m)]
    order = []
    for x in range(n):
        order.append(("o", x))
        ms = sorted((m for m in nonid if max(m[0], m[1]) == x), key=lambda m: (min(m[0], m[1]), m))
        order.extend(("m", m) for m in ms)
    vpos = {}
    for v, (kind, x) in enumerate(order):
        vpos[(kind, x)] = v
    for x in range(n):
        vpos[("m", C.identity(x))] = vpos[("o", x)]
    checks = [[] for _ in order]
    forced = {}
    for f in nonid:
        for g in C.out_of(f[1]):
            if C.is_identity(g):
                continue
            h = C.compose(g, f)
            vg, vf, vh = vpos[("m", g)], vpos[("m", f)], vpos[("m", h)]
            last = max(vg, vf, vh)
            if vh == last and vh > max(vg, vf) and not C.is_identity(h) and h not in forced:
                forced[h] = (g, f)
                continue
            checks[last].append((g, f, h))
    plan = (order, checks, forced)
    C._functor_plan = plan
    return plan


def enumerate_functors(C, D, obj_candidates=None, mor_ok=None, budget=None,
                       injective=False, limit=None):
    """All functors ``C -> D`` in canonical order.

    ``obj_candidates(x)`` restricts the images of object ``x``;
    ``mor_ok(m, y)`` filters the image ``y`` of a non-identity morphism ``m``.
    """
    budget = as_budget(budget)
    order, checks, forced = _functor_plan(C)
    n = len(C)
    oimg = [None] * n
    mimg = {}
    used = set()
    out = []
    comp = D.compose
    nv = len(order)

    def rec(v):
        if v == nv:
            out.append(Functor(C, D, tuple(oimg), dict(mimg)))
            if limit is not None and len(out) >= limit:
                raise _Stop
            return
        kind, x = order[v]
        chk = checks[v]
        if kind == "o":
            cands = range(len(D)) if obj_candidates is None else obj_candidates(x)
            idx = C.identity(x)
            for y in cands:
                if injective and y in used:
                    continue
                budget.tick()
                oimg[x] = y
                mimg[idx] = D.identity(y)
                if injective:
                    used.add(y)
                rec(v + 1)
                if injective:
                    used.discard(y)
            oimg[x] = None
            mimg.pop(idx, None)
        else:
            fg = forced.get(x)
            if fg is not None:
                cands = (comp(mimg[fg[0]], mimg[fg[1]]),)
            else:
                cands = D.hom(oimg[x[0]], oimg[x[1]])
            for y in cands:
                budget.tick()
                if mor_ok is not None and not mor_ok(x, y):
                    continue
                mimg[x] = y
                for g, f, h in chk:
                    if comp(mimg[g], mimg[f]) != mimg[h]:
                        break
                else:
                    rec(v + 1)
            mimg.pop(x, None)

    try:
        rec(0)
    except _Stop:
        pass
    return out


def _nat_plan(C):
    plan = getattr(C, "_nat_plan", None)
    if plan is None:
        plan = [[] for _ in range(len(C))]
        for m in C.morphisms():
            if not C.is_identity(m):
                plan[max(m[0], m[1])].append(m)
        C._nat_plan = plan
    return plan


def enumerate_nat_trans(F, G, comp_ok=None, budget=None, limit=None):
    """Component tuples of all natural transformations ``F => G``."""
    budget = as_budget(budget)
    C, D = F.source, F.target
    n = len(C)
    checks = _nat_plan(C)
    comps = [None] * n
    out = []
    comp = D.compose

    def rec(a):
        if a == n:
            out.append(tuple(comps))
            if limit is not None and len(out) >= limit:
                raise _Stop
            return
        for t in D.hom(F.obj[a], G.obj[a]):
            if comp_ok is not None and not comp_ok(a, t):
                continue
            budget.tick()
            comps[a] = t
            for m in checks[a]:
                if comp(G.fm(m), comps[m[0]]) != comp(comps[m[1]], F.fm(m)):
                    break
            else:
                rec(a + 1)
        comps[a] = None

    try:
        rec(0)
    except _Stop:
        pass
    return out


def nat_trans(F, G, budget=None):
    return [NatTrans(F, G, c) for c in enumerate_nat_trans(F, G, budget=budget)]


def functor_category(C, D, functors=None, budget=None, name=None):
    """``Fun(C, D)``; objects are functor keys, morphisms component tuples.

    ``functors`` may restrict to a full subcategory.  The list is kept as
    ``.functors`` on the result.
    """
    limit = as_budget(budget).limit
    fs = enumerate_functors(C, D, budget=limit) if functors is None else list(functors)
    n = len(C)

    def hom(i, j):
        return enumerate_nat_trans(fs[i], fs[j], budget=limit)

    def compose(lg, lf, i, j, k):
        return tuple(D.compose(a, b) for a, b in zip(lg, lf))

    def identity(i):
        return tuple(D.identity(fs[i].obj[x]) for x in range(n))

    cat = FinCat([F.key for F in fs], hom, compose, identity,
                 name=name or f"Fun({C.name},{D.name})")
    cat.functors = fs
    cat.domain = C
    cat.codomain = D
    return cat


def evaluation(FC, x):
    """Evaluation at object ``x`` of the domain, ``Fun(C, D) -> D``."""
    D = FC.codomain
    return Functor(FC, D, [F.obj[x] for F in FC.functors],
                   lambda m: FC.label(m)[x], name=f"ev_{x}")
