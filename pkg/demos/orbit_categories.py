"""Orbit categories of small groups and maps of finite T-sets between them."""

from paracat.orbits import (FinTSet, count_fin_T_set_maps, cyclic, fixed_point_count, hom_fin_T_sets,
                            orbit_category, pullback_fin_T_sets, symmetric)


def show(G):
    O = orbit_category(G)
    print(f"{O.name}: {len(O)} orbits")
    width = max(len(str(o)) for o in O.objects)
    for i, a in enumerate(O.objects):
        row = " ".join(f"{len(O.hom(i, j)):2d}" for j in range(len(O)))
        print(f"  {a:>{width}}  {row}")
    Hs = G.subgroups()
    assert all(len(O.hom(i, j)) == fixed_point_count(G, H, K)
               for i, H in enumerate(Hs) for j, K in enumerate(Hs))
    return O


for G in (cyclic(2), cyclic(3), symmetric(3)):
    show(G)

# a map of finite T-sets is an index map plus one orbit map per component
T = orbit_category(cyclic(2))
A = FinTSet.of(T, ["C2/e", "C2/C2"])
B = FinTSet.of(T, ["C2/e", "C2/e", "C2/C2"])
print(f"\nmaps {A.labels()} -> {B.labels()}: formula {count_fin_T_set_maps(T, A, B)}, "
      f"enumerated {len(hom_fin_T_sets(T, A, B))}")

# the free orbit pulled back over the point splits by double cosets
e, pt = FinTSet.of(T, ["C2/e"]), FinTSet.of(T, ["C2/C2"])
f = hom_fin_T_sets(T, e, pt)[0]
P, _, _ = pullback_fin_T_sets(T, f, f)
print(f"C2/e x_(C2/C2) C2/e = {' + '.join(P.labels())}")
