"""Set-valued T-objects: the internal hom, the projection formula and the Yoneda embedding."""

import random

from paracat import fixtures as fx
from paracat.fincat.diagrams import all_diagrams
from paracat.paramcat import (hom_formula_check, presheaf_internal_hom, projection_formula_check,
                              yoneda_check)

T = fx.o_c2()
ds = all_diagrams(T.op, 2)
rng = random.Random(1)
X, Y = rng.choice(ds), rng.choice(ds)
H = presheaf_internal_hom(T, X, Y)
print(f"X sizes {list(X.sizes)}, Y sizes {list(Y.sizes)}, internal hom sizes {list(H.sizes)}")
print(f"internal hom formula holds: {hom_formula_check(T, X, Y).ok}")
print(f"projection formula holds at every orbit: "
      f"{all(projection_formula_check(T, X, V).ok for V in range(len(T)))}")

for name in ("terminal", "disc(C2/e)"):
    P, j, rep = yoneda_check(fx.fixture(name), n=2)
    print(f"Yoneda for {name}: {len(P.total)} presheaves with values <= 2, "
          f"fully faithful {rep.fully_faithful}, mapping formula on {rep.formula_checked} pairs, "
          f"{len(rep.formula_failures)} failures")
