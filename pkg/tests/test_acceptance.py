"""The twelve acceptance criteria, each under its time limit.

Run with pytest (a summary line per criterion is printed at the end) or
directly with ``python3 tests/test_acceptance.py``.
"""

import os
import random
import subprocess
import sys
import time
from concurrent.futures import ThreadPoolExecutor


from paracat.checks import run_checks
from paracat.cli import BUILD_TARGETS
from paracat.orbits import (FinTSet, count_fin_T_set_maps, cyclic, fixed_point_count, hom_fin_T_sets,
                            orbit_category, symmetric)

sys.path.insert(0, os.path.dirname(__file__))
from oracles import count_natural, equivariant_maps, hom_presheaf  # noqa: E402

RESULTS = []


def criterion(number, title, limit):
    def wrap(fn):
        def test():
            t0 = time.perf_counter()
            ok, detail = False, ""
            try:
                ok, detail = fn()
            except Exception as exc:
                detail = f"{type(exc).__name__}: {exc}"
            dt = time.perf_counter() - t0
            within = dt < limit
            RESULTS.append((number, title, ok and within, dt, limit, detail))
            assert ok, detail
            assert within, f"{dt:.1f}s exceeds {limit}s"
        test.__name__ = fn.__name__
        return test
    return wrap


def checks_pass(*ids):
    res = run_checks(list(ids))
    detail = "; ".join(f"{r.check}: {len(r.sizes)} instances"
                       + (f", failing {[w[0] for w in r.witnesses]}" if r.witnesses else "")
                       for r in res)
    return all(r.passed for r in res), detail, res


@criterion(1, "orbit categories of C2, C3, S3 against equivariant maps", 1)
def test_orbit_oracle():
    n = 0
    for G in (cyclic(2), cyclic(3), symmetric(3)):
        O = orbit_category(G)
        Hs = G.subgroups()
        for i, H in enumerate(Hs):
            for j, K in enumerate(Hs):
                want = equivariant_maps(G, H, K)
                if len(O.hom(i, j)) != want or fixed_point_count(G, H, K) != want:
                    return False, f"{G.name}: {O.objects[i]} -> {O.objects[j]}"
                n += 1
    return True, f"{n} hom-sets"


def random_tset(rng, T, k):
    return FinTSet(T, sorted(rng.randrange(len(T)) for _ in range(k)))


@criterion(2, "mapping-set formula against natural transformation counts", 10)
def test_mapping_formula():
    rng = random.Random(0)
    checked = 0
    while checked < 60:
        T = orbit_category(cyclic(2)) if checked % 2 else orbit_category(symmetric(3))
        a = rng.randint(1, 6)
        A, B = random_tset(rng, T, a), random_tset(rng, T, rng.randint(1, 12 - a))
        if count_fin_T_set_maps(T, A, B) > 20000:
            continue
        maps = hom_fin_T_sets(T, A, B)
        want = count_natural(T, hom_presheaf(T, A.comps), hom_presheaf(T, B.comps))
        if len(maps) != want or len(set(maps)) != want:
            return False, f"{A.labels()} -> {B.labels()}: {len(maps)} != {want}"
        checked += 1
    return True, f"{checked} instances"


@criterion(3, "retraction for the strong pushforward", 30)
def test_retraction():
    ok, detail, res = checks_pass("lm6.3", "pr6.2")
    names = set(res[0].sizes)
    enough = len(names) >= 10 and "galois(2,2,1)" in names
    return ok and enough, detail


@criterion(4, "fibers of the vertical opposite and vop vop", 30)
def test_vop():
    return checks_pass("df3.1")[:2]


@criterion(5, "cofree T-objects", 120)
def test_cofree():
    return checks_pass("th7.8")[:2]


@criterion(6, "T-functors out of a discrete T-space", 60)
def test_discrete_evaluation():
    return checks_pass("lm2.12")[:2]


@criterion(7, "currying", 300)
def test_currying():
    ok, detail, res = checks_pass("th9.7")
    return ok and len(res[0].sizes) == 8, detail


@criterion(8, "Yoneda embedding and the pointwise mapping formula", 300)
def test_yoneda():
    return checks_pass("th10.4", "pr10.3")[:2]


@criterion(9, "projection and internal-hom formulas", 60)
def test_presheaf_formulas():
    ok, detail, res = checks_pass("lm7.9", "pr7.11")
    per_base = {t: sum(1 for k in res[1].sizes if k.startswith(t + "#")) for t in ("O_C2", "[1]")}
    return ok and min(per_base.values()) >= 20, f"{detail}; {per_base}"


@criterion(10, "slices of finite T-sets and the double coset pullback", 30)
def test_fin_t_sets():
    return checks_pass("ex2.14")[:2]


@criterion(11, "precomposition with a T-equivalence", 60)
def test_precomposition():
    return checks_pass("pr9.11-1")[:2]


def _cli(args, seed):
    env = dict(os.environ, PYTHONHASHSEED=str(seed))
    return subprocess.run([sys.executable, "-m", "paracat", *args], capture_output=True,
                          env=env, check=False).stdout


@criterion(12, "determinism of serialized outputs across two runs", 600)
def test_determinism():
    jobs = [["check", "all"]] + [["build", t] for t in BUILD_TARGETS]
    runs = [(a, seed) for seed in (1, 2) for a in jobs]
    with ThreadPoolExecutor(max_workers=os.cpu_count() or 2) as pool:
        outs = list(pool.map(lambda r: _cli(*r), runs))
    first, second = outs[:len(jobs)], outs[len(jobs):]
    bad = [" ".join(a) for a, x, y in zip(jobs, first, second) if x != y or not x]
    return not bad, f"{len(jobs)} outputs compared" + (f", differing: {bad}" if bad else "")


def summary_lines():
    return [f"criterion {n:2d} {'PASS' if ok else 'FAIL'} {dt:7.2f}s (limit {lim}s) {title}: {detail}"
            for n, title, ok, dt, lim, detail in sorted(RESULTS)]


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        try:
            t()
        except AssertionError:
            pass
    print("\n".join(summary_lines()))
    sys.exit(0 if all(r[2] for r in RESULTS) else 1)
