"""T-functors into cofree T-objects, and currying against parametrized functor categories."""

from paracat import fixtures as fx
from paracat.paramcat import cofree_compare, curry_compare

for c in ("terminal", "disc(C2/e)"):
    for d in ("point", "[1]", "iso"):
        F, rep = cofree_compare(fx.fixture(c), fx.coefficient(d))
        print(f"Fun_T({c}, {d}_T) -> Fun({c} total, {d}): {len(F.source)} vs {len(F.target)} objects, "
              f"equivalence {rep.is_equivalence}")

a = fx.fixture("const[1]")
Fu, rep, glob = curry_compare(a, a, a)
print(f"\nFun_T(C, Fun_T(C, C)) -> Fun_T(C x C, C) for C = const[1]: "
      f"{len(Fu.source.total)} vs {len(Fu.target.total)} objects, "
      f"fiberwise {rep.is_equivalence}, global {glob.is_equivalence}")
