"""Theorem checkers over the bundled instances.

Every checker returns a ``CheckResult``.  ``sizes`` maps an instance name to
the sizes of the categories compared; ``witnesses`` lists the failing
instances with whatever counterexample the underlying test produced.
"""

import random
import time
from dataclasses import dataclass, field

from . import fixtures as fx
from .fincat import Functor, equivalence_report, full_subcategory, is_isomorphism, product_all
from .fincat.diagrams import all_diagrams
from .fibration import fun_T, precompose, t_equivalence_report, tsubcategory_checks, verify_retraction
from .orbits import compose_maps, hom_fin_T_sets, pullback_fin_T_sets, small_tsets, verify_pullback
from .orbits.tsets import _encode
from .paramcat.finsets import slice_comparison, underline_fin_T_sets
from .paramcat.internal_hom import hom_formula_check, projection_formula_check
from .paramcat.sections import curry_compare
from .paramcat.tilde import cofree_compare
from .paramcat.vop import inversion, vop, vop_fiber_iso, vopvop_comparison
from .paramcat.yoneda import yoneda_check


@dataclass
class CheckResult:
    check: str
    passed: bool
    witnesses: list = field(default_factory=list)
    sizes: dict = field(default_factory=dict)
    wall_time: float = 0.0

    def to_dict(self, timings=False):
        d = {"check": self.check, "passed": self.passed,
             "witnesses": [[str(w) for w in ws] for ws in self.witnesses],
             "sizes": {k: list(v) for k, v in sorted(self.sizes.items())}}
        if timings:
            d["wall_time"] = round(self.wall_time, 3)
        return d


class _Run:
    def __init__(self, check):
        self.res = CheckResult(check, True)
        self.t0 = time.perf_counter()

    def record(self, instance, ok, sizes=(), witness=None):
        self.res.sizes[instance] = tuple(sizes)
        if not ok:
            self.res.passed = False
            self.res.witnesses.append((instance, witness))

    def done(self):
        self.res.wall_time = time.perf_counter() - self.t0
        return self.res


COFREE_SOURCES = ("empty", "terminal", "const[1]", "disc(C2/C2)", "disc(C2/e)")
COEFFICIENTS = ("point", "[1]", "iso")


def _instances(tcats, names):
    if tcats:
        return dict(tcats)
    return {n: fx.fixture(n) for n in names}


def check_th78(budget=None, tcats=None, **_):
    run = _Run("th7.8")
    for c, C in _instances(tcats, COFREE_SOURCES).items():
        for d in COEFFICIENTS:
            F, rep = cofree_compare(C, fx.coefficient(d), budget=budget)
            run.record(f"{c}|{d}", rep.is_equivalence, (len(F.source), len(F.target)),
                       rep.counterexample)
    return run.done()


def check_th97(budget=None, **_):
    run = _Run("th9.7")
    names = ("terminal", "const[1]")
    for c in names:
        for d in names:
            for e in names:
                Fu, rep, glob = curry_compare(fx.fixture(c), fx.fixture(d), fx.fixture(e),
                                              budget=budget)
                Fu.validate()
                run.record(f"{c}|{d}|{e}", rep.is_equivalence and glob.is_equivalence,
                           (len(Fu.source.total), len(Fu.target.total)),
                           rep.failing if not rep else glob.counterexample)
    return run.done()


YONEDA_SOURCES = ("terminal", "disc(C2/C2)", "disc(C2/e)")
_yoneda_cache = {}


def _yoneda(C, n, budget):
    key = (id(C), n, budget)
    if key not in _yoneda_cache:
        _yoneda_cache[key] = (C, yoneda_check(C, n=n, budget=budget))
    return _yoneda_cache[key][1]


def check_th104(budget=None, card_bound=3, tcats=None, **_):
    run = _Run("th10.4")
    for c, C in _instances(tcats, YONEDA_SOURCES).items():
        P, j, rep = _yoneda(C, card_bound, budget or 10**8)
        bad = {V: w for V, w in rep.fiberwise.items() if w is not None}
        run.record(c, rep.fully_faithful, (len(j.source.total), len(P.total)), bad or None)
    return run.done()


def check_pr103(budget=None, card_bound=3, tcats=None, **_):
    run = _Run("pr10.3")
    for c, C in _instances(tcats, YONEDA_SOURCES).items():
        P, j, rep = _yoneda(C, card_bound, budget or 10**8)
        run.record(c, rep.formula_checked > 0 and not rep.formula_failures,
                   (rep.formula_checked, len(P.total)), rep.formula_failures[:3])
    return run.done()


def orbit_evaluation(U, C, fun=None, budget=None):
    """``fun_T(disc U, C) -> prod_i C_{U_i}``: evaluate at the generator of each orbit.

    Returns ``(functor, product category)``.
    """
    from .orbits import discrete_T_space
    T = U.cat
    D = discrete_T_space(T, U)
    fun = fun or fun_T(D, C, budget=budget)
    E = D.total
    gens = [E.data_index[(c, _encode(U, i, T.identity(c)))] for i, c in enumerate(U.comps)]
    fibers = [C.fiber(c) for c in U.comps]
    P = product_all(fibers)

    def obj(n):
        K = fun.tfunctors[n].underlying
        return P.tuple_index[tuple(Fb.back[K.obj[g]] for Fb, g in zip(fibers, gens))]

    def mor(m):
        comps = fun.label(m)
        lab = tuple(Fb.from_parent(comps[g]) for Fb, g in zip(fibers, gens))
        return P.mor(obj(m[0]), obj(m[1]), lab)

    return Functor(fun, P, [obj(n) for n in range(len(fun))], mor, name="ev"), P


LM212_TARGETS = ("terminal", "const[1]", "const(iso)", "disc(C2/e)", "vop(const[1])", "[1]_T")


def check_lm212(budget=None, tcats=None, max_orbits=3, **_):
    run = _Run("lm2.12")
    for c, C in _instances(tcats, LM212_TARGETS).items():
        for U in small_tsets(C.base.op, max_orbits):
            F, P = orbit_evaluation(U, C, budget=budget)
            F.validate()
            rep = equivalence_report(F)
            run.record(f"{'+'.join(U.labels()) or '0'}|{c}", rep.is_equivalence,
                       (len(F.source), len(P)), rep.counterexample)
    return run.done()


def check_lm63(tcats=None, **_):
    run = _Run("lm6.3")
    for n, C in _instances(tcats, fx.FIXTURE_NAMES).items():
        rep = verify_retraction(C)
        run.record(n, rep.comparison_surjective and rep.comparison_fully_faithful,
                   (len(C.total),), rep.failures)
    return run.done()


def check_pr62(tcats=None, **_):
    run = _Run("pr6.2")
    for n, C in _instances(tcats, fx.FIXTURE_NAMES).items():
        rep = verify_retraction(C)
        run.record(n, rep.section_retraction and rep.homotopy_natural and rep.homotopy_marked,
                   (len(C.total),), rep.failures)
    return run.done()


def presheaf_instances(T, count=20, seed=0):
    """``count`` seeded random pairs of set-valued T-objects with values of size at most 3."""
    ds = all_diagrams(T.op, 3)
    rng = random.Random(seed)
    return ds, [(rng.choice(ds), rng.choice(ds)) for _ in range(count)]


def coefficient_systems(T):
    """Set-valued T-objects with one point at ``C2/C2`` and two at ``C2/e``."""
    want = [2 if "/e" in str(o) else 1 for o in T.objects]
    return [d for d in all_diagrams(T.op, 2) if list(d.sizes) == want]


def _presheaf_cases(count, seed, presheaves=None):
    """``(name, T, X, Y)`` cases: given presheaves pairwise, else the seeded random ones
    over ``O_C2`` and ``[1]`` plus the coefficient systems over ``O_C2``."""
    from .fincat import walking_arrow
    if presheaves:
        items = sorted(presheaves.items())
        return [(f"{a}|{b}", X.base, X, Y) for a, X in items for b, Y in items if X.base is Y.base]
    out = []
    for tname, T in (("O_C2", fx.o_c2()), ("[1]", walking_arrow())):
        _, pairs = presheaf_instances(T, count, seed)
        out.extend((f"{tname}#{k}", T, X, Y) for k, (X, Y) in enumerate(pairs))
    T = fx.o_c2()
    cs = coefficient_systems(T)
    out.extend((f"O_C2:coef{a}|{b}", T, X, Y) for a, X in enumerate(cs) for b, Y in enumerate(cs))
    return out


def check_lm79(count=20, seed=0, presheaves=None, **_):
    run = _Run("lm7.9")
    for name, T, X, _ in _presheaf_cases(count, seed, presheaves):
        for V in range(len(T)):
            r = projection_formula_check(T, X, V)
            run.record(f"{name}@{T.objects[V]}", r.ok, [n for s in r.sizes.values() for n in s],
                       r.failures)
    return run.done()


def check_pr711(count=20, seed=0, presheaves=None, **_):
    run = _Run("pr7.11")
    for name, T, X, Y in _presheaf_cases(count, seed, presheaves):
        r = hom_formula_check(T, X, Y)
        run.record(name, r.ok, [n for s in r.sizes.values() for n in s], r.failures)
    return run.done()


def _subcategory_presentations(C, limit=24, seed=0):
    """Full subcategories on object subsets (all, or a seeded sample) and the fibers."""
    n = len(C.total)
    out = [("all", list(range(n)), None)]
    if n <= 4:
        subsets = [[x for x in range(n) if mask >> x & 1] for mask in range(1, 2**n - 1)]
    else:
        rng = random.Random(seed)
        subsets = [sorted(rng.sample(range(n), rng.randint(1, n - 1))) for _ in range(limit)]
    out.extend((f"full{s}", s, None) for s in subsets)
    for V in range(len(C.base)):
        objs = C.objects_over(V)
        if objs:
            out.append((f"fiber{V}", objs, C.is_vertical))
    return out


def check_lm44(tcats=None, **_):
    run = _Run("lm4.4")
    for n, C in _instances(tcats, fx.FIXTURE_NAMES).items():
        for label, objs, keep in _subcategory_presentations(C):
            rep = tsubcategory_checks(C, objs, keep)
            ok = rep.lm44_agrees and rep.lm43_agrees and rep.lm45_agrees is not False
            run.record(f"{n}:{label}", ok, (len(objs),), rep.witnesses)
    return run.done()


def _equivalences():
    return [
        ("vopvop(const[1])", vopvop_comparison(fx.fixture("const[1]"))),
        ("vopvop(const(iso))", vopvop_comparison(fx.fixture("const(iso)"))),
        ("inv(disc(C2/e))", inversion(fx.fixture("disc(C2/e)"))),
        ("inv(disc(C2/e+C2/C2))", inversion(fx.fixture("disc(C2/e+C2/C2)"))),
    ]


def check_pr911(budget=None, **_):
    run = _Run("pr9.11-1")
    for name, F in _equivalences():
        F.validate()
        teq = t_equivalence_report(F)
        for e in ("terminal", "const[1]", "const(iso)"):
            E = fx.fixture(e)
            tgt = fun_T(F.target, E, budget=budget)
            src = fun_T(F.source, E, budget=budget)
            Fs = precompose(F, tgt, src)
            Fs.validate()
            rep = equivalence_report(Fs)
            run.record(f"{name}|{e}", teq.is_equivalence and rep.is_equivalence,
                       (len(tgt), len(src)), teq.failing if not teq else rep.counterexample)
    return run.done()


def check_df31(tcats=None, **_):
    run = _Run("df3.1")
    for n, C in _instances(tcats, fx.FIXTURE_NAMES).items():
        VC = vop(C)
        fib = all(is_isomorphism(vop_fiber_iso(C, VC, V)) for V in range(len(C.base)))
        F = vopvop_comparison(C)
        F.validate()
        teq = t_equivalence_report(F)
        run.record(n, fib and teq.is_equivalence, (len(C.total), len(VC.total)),
                   None if fib else "fiber")
    return run.done()


def check_ex214(bound=2, **_):
    run = _Run("ex2.14")
    T = fx.o_c2()
    FT = underline_fin_T_sets(T, bound=bound)
    FT.validate(full=True)
    for V in range(len(T)):
        F, iso = slice_comparison(FT, V)
        run.record(f"slice@{T.objects[V]}", iso, (len(F.source), len(F.target)))
    e, top = fx.tset("C2/e"), fx.tset("C2/C2")
    f = hom_fin_T_sets(T, e, top)[0]
    cone = pullback_fin_T_sets(T, f, f)
    P = cone[0]
    ok = sorted(P.labels()) == ["C2/e", "C2/e"] and compose_maps(f, cone[1]) == compose_maps(f, cone[2])
    ok = ok and verify_pullback(T, f, f, cone, small_tsets(T, 2))
    run.record("C2/e x_{C2/C2} C2/e", ok, (len(P),), P.labels())
    return run.done()


CHECKS = {
    "th7.8": check_th78,
    "th9.7": check_th97,
    "th10.4": check_th104,
    "pr10.3": check_pr103,
    "lm2.12": check_lm212,
    "lm6.3": check_lm63,
    "pr6.2": check_pr62,
    "lm7.9": check_lm79,
    "pr7.11": check_pr711,
    "lm4.4": check_lm44,
    "pr9.11-1": check_pr911,
    "df3.1": check_df31,
    "ex2.14": check_ex214,
}


def run_checks(ids=None, **params):
    """Run the named checks (all by default) in canonical order of id."""
    ids = sorted(ids or CHECKS)
    return [CHECKS[i](**params) for i in ids]
