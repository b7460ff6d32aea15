import pytest
from hypothesis import given, settings, strategies as st

from paracat.errors import BudgetExceeded, ValidationError
from paracat.orbits import (FinGroup, FinTSet, FiniteField, GaloisConfig, TSetMap, compose_maps,
                            count_fin_T_set_maps, cyclic, discrete_T_space, fixed_point_count,
                            galois_vect, hom_fin_T_sets, identity_map, orbit_category,
                            pullback_fin_T_sets, small_tsets, symmetric, verify_pullback)
from paracat.orbits.tsets import _pullback_general

from oracles import count_natural, equivariant_maps, hom_presheaf

GROUPS = [cyclic(2), cyclic(3), cyclic(4), symmetric(3)]


@pytest.mark.parametrize("G", GROUPS, ids=lambda G: G.name)
def test_orbit_category_matches_equivariant_maps(G):
    O = orbit_category(G)
    O.validate()
    Hs = G.subgroups()
    for i, H in enumerate(Hs):
        for j, K in enumerate(Hs):
            n = equivariant_maps(G, H, K)
            assert len(O.hom(i, j)) == n == fixed_point_count(G, H, K)


def test_subgroup_counts():
    assert [len(G.subgroups()) for G in GROUPS] == [2, 2, 3, 6]
    assert orbit_category(cyclic(2)).objects == ("C2/e", "C2/C2")


def test_bad_group_table_is_rejected():
    with pytest.raises(ValidationError):
        FinGroup([0, 1], [[0, 1], [0, 1]])


def test_automorphisms_of_free_orbit_are_the_group():
    for G in GROUPS:
        O = orbit_category(G)
        assert len(O.hom(0, 0)) == len(G)
        assert all(O.is_iso(m) for m in O.hom(0, 0))


def tsets(T, k):
    return st.lists(st.integers(0, len(T) - 1), min_size=0, max_size=k).map(
        lambda cs: FinTSet(T, sorted(cs)))


O_C2 = orbit_category(cyclic(2))
O_S3 = orbit_category(symmetric(3))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_mapping_formula_against_natural_transformations(data):
    T = data.draw(st.sampled_from([O_C2, O_S3]))
    A = data.draw(tsets(T, 3))
    B = data.draw(tsets(T, 3))
    n = count_natural(T, hom_presheaf(T, A.comps), hom_presheaf(T, B.comps))
    assert count_fin_T_set_maps(T, A, B) == n
    if n <= 2000:
        assert len(hom_fin_T_sets(T, A, B)) == n


def test_hom_budget():
    T = O_S3
    A = FinTSet(T, [0] * 4)
    with pytest.raises(BudgetExceeded):
        hom_fin_T_sets(T, A, A, budget=100)


def test_identity_and_composition_of_maps():
    T = O_C2
    A = FinTSet.of(T, ["C2/e", "C2/C2"])
    maps = hom_fin_T_sets(T, A, A)
    for f in maps:
        f.validate()
        assert compose_maps(f, identity_map(A)) == f == compose_maps(identity_map(A), f)
    for f in maps:
        for g in maps:
            for h in maps:
                assert compose_maps(h, compose_maps(g, f)) == compose_maps(compose_maps(h, g), f)


def test_double_coset_pullback_of_free_orbits():
    T = O_C2
    e, pt = FinTSet.of(T, ["C2/e"]), FinTSet.of(T, ["C2/C2"])
    f = hom_fin_T_sets(T, e, pt)[0]
    P, p1, p2 = pullback_fin_T_sets(T, f, f)
    assert P.labels() == ["C2/e", "C2/e"]
    assert verify_pullback(T, f, f, (P, p1, p2), small_tsets(T, 2))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_pullback_routes_agree(data):
    T = data.draw(st.sampled_from([O_C2, orbit_category(cyclic(3))]))
    C = data.draw(tsets(T, 2).filter(len))
    A = data.draw(tsets(T, 2))
    B = data.draw(tsets(T, 2))
    fs, gs = hom_fin_T_sets(T, A, C), hom_fin_T_sets(T, B, C)
    if not fs or not gs:
        return
    f = data.draw(st.sampled_from(fs))
    g = data.draw(st.sampled_from(gs))
    cone = pullback_fin_T_sets(T, f, g)
    other = _pullback_general(T, f, g)
    assert sorted(cone[0].comps) == sorted(other[0].comps)
    assert verify_pullback(T, f, g, cone, small_tsets(T, 1))


def test_non_pullback_cone_is_rejected():
    T = O_C2
    e, pt = FinTSet.of(T, ["C2/e"]), FinTSet.of(T, ["C2/C2"])
    f = hom_fin_T_sets(T, e, pt)[0]
    P = FinTSet.of(T, ["C2/e"])
    p = identity_map(P)
    assert not verify_pullback(T, f, f, (P, p, p), small_tsets(T, 1))


def test_tset_map_validation():
    T = O_C2
    A = FinTSet.of(T, ["C2/C2"])
    B = FinTSet.of(T, ["C2/e"])
    with pytest.raises(ValidationError):
        TSetMap(A, B, (0,), (T.identity(0),)).validate()


def test_discrete_space_fibers():
    T = O_C2
    D = discrete_T_space(T, FinTSet.of(T, ["C2/e", "C2/C2"]))
    D.validate()
    assert D.is_space
    assert [len(D.objects_over(V)) for V in range(len(T))] == [3, 1]


def test_finite_field_and_galois_fixture():
    E = FiniteField(2, 2)
    assert E.q == 4 and len(E.subfield(1)) == 2
    assert all(E.frobenius(a, 2) == a for a in range(4))
    C = galois_vect(GaloisConfig(2, 2, 1))
    C.validate()
    assert len(C.total) == 4
    with pytest.raises(ValidationError):
        GaloisConfig(4, 1, 1)
    with pytest.raises(BudgetExceeded):
        galois_vect(GaloisConfig(2, 7, 1))
    with pytest.raises(BudgetExceeded):
        galois_vect(GaloisConfig(2, 2, 1, budget=10))
