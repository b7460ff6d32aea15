"""Vector spaces over the subfields of F4 as a TCat over the Galois orbit category."""

from paracat.fibration import verify_retraction
from paracat.orbits import GaloisConfig, galois_vect

C = galois_vect(GaloisConfig(p=2, n=2, d=1))
C.validate()
print(f"{C.total.name} over {C.base.name}")
for V in range(len(C.base)):
    F = C.fiber(V)
    print(f"  over {C.base.objects[V]}: objects {list(F.objects)}, hom counts {F.hom_counts()}")
print(f"cocartesian edges: {len(C.cocart_edges)} of {C.total.n_morphisms()}")
print(f"strong pushforward retraction holds: {verify_retraction(C).ok}")
