"""The vertical opposite flips each fiber and keeps the cocartesian transport."""

from paracat import fixtures as fx
from paracat.fibration import t_equivalence_report
from paracat.paramcat import vop, vopvop_comparison

for name in ("const[1]", "[1]_T", "dual(source)"):
    C = fx.fixture(name)
    VC = vop(C)
    print(f"{name}: total {len(C.total)} objects over {C.base.name}")
    for V in range(len(C.base)):
        print(f"  over {C.base.objects[V]}: hom counts {C.fiber(V).hom_counts()} "
              f"-> {VC.fiber(V).hom_counts()}")
    rep = t_equivalence_report(vopvop_comparison(C))
    print(f"  C -> vop(vop C) is a T-equivalence: {rep.is_equivalence}")
