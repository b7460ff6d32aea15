import pytest
from hypothesis import given, settings, strategies as st

from paracat.errors import BadIdentity, MissingComposite, NonAssociative, ValidationError
from paracat.fincat import (Functor, coproduct, discrete, enumerate_functors, equivalence_report,
                            evaluation, finset, full_subcategory, functor_category, inclusion,
                            indiscrete, ordinal, point, product, product_all, slice_over,
                            validate_category, walking_arrow, walking_iso)
from paracat.fincat.diagrams import SetDiagram, nat_maps, representable

from oracles import brute_natural


def raw_arrow():
    return {"objects": ["a", "b"], "morphisms": [["1a", "a", "a"], ["1b", "b", "b"], ["f", "a", "b"]],
            "identities": {"a": "1a", "b": "1b"}, "composition": []}


def test_ordinal_hom_sizes():
    C = ordinal(4)
    assert C.hom_counts() == [[1 if i <= j else 0 for j in range(4)] for i in range(4)]
    C.validate()


def test_validate_category_accepts_arrow():
    C = validate_category(raw_arrow())
    assert len(C) == 2 and C.n_morphisms() == 3


def test_missing_composite_is_reported():
    raw = raw_arrow()
    raw["objects"].append("c")
    raw["morphisms"] += [["1c", "c", "c"], ["g", "b", "c"]]
    raw["identities"]["c"] = "1c"
    with pytest.raises(MissingComposite) as exc:
        validate_category(raw)
    assert exc.value.triple == ("g", "f", None)


def test_bad_identity_is_reported():
    raw = raw_arrow()
    raw["identities"]["a"] = "f"
    with pytest.raises(BadIdentity):
        validate_category(raw)


def test_non_associative_monoid_is_rejected():
    # (x.x).x = y.x = x but x.(x.x) = x.y = y
    raw = {"objects": ["*"], "morphisms": [["e", "*", "*"], ["x", "*", "*"], ["y", "*", "*"]],
           "identities": {"*": "e"},
           "composition": [["x", "x", "y"], ["y", "x", "x"], ["x", "y", "y"], ["y", "y", "e"]]}
    with pytest.raises(NonAssociative):
        validate_category(raw)


def test_opposite_is_involutive():
    C = finset(2)
    assert C.op.op.hom_counts() == C.hom_counts()
    assert C.op.hom_counts() == [list(r) for r in zip(*C.hom_counts())]
    C.op.validate()


def test_functor_counts_between_ordinals():
    # monotone maps [n] -> [m]
    assert len(enumerate_functors(ordinal(2), ordinal(3))) == 6
    assert len(enumerate_functors(ordinal(3), ordinal(2))) == 4
    assert len(enumerate_functors(walking_iso(), ordinal(2))) == 2


def test_functor_category_of_arrow_into_arrow():
    FC = functor_category(walking_arrow(), walking_arrow())
    assert len(FC) == 3
    FC.validate()
    ev = evaluation(FC, 0)
    ev.validate()


def test_iso_and_point_are_equivalent():
    F = Functor(walking_iso(), point(), [0, 0], lambda m: (0, 0, 0))
    F.validate()
    assert equivalence_report(F).is_equivalence
    G = Functor(walking_arrow(), point(), [0, 0], lambda m: (0, 0, 0))
    assert not equivalence_report(G).fully_faithful


def test_inclusion_of_full_subcategory_is_fully_faithful():
    C = indiscrete(3)
    i = inclusion(full_subcategory(C, [0]))
    assert equivalence_report(i).is_equivalence


def test_slice_over_terminal_is_whole_category():
    C = ordinal(3)
    assert len(slice_over(C, 2)) == 3
    assert len(slice_over(C, 0)) == 1


def test_products_and_coproducts():
    P = product(walking_arrow(), walking_iso())
    assert len(P) == 4 and P.n_morphisms() == 3 * 4
    P.validate()
    S = coproduct(walking_arrow(), discrete("xy"))
    assert len(S) == 4 and S.n_morphisms() == 5
    Q = product_all([walking_arrow(), walking_arrow(), walking_arrow()])
    assert len(Q) == 8 and Q.n_morphisms() == 27
    assert len(product_all([])) == 1


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=2, max_size=2), st.lists(st.integers(0, 2), min_size=2, max_size=2),
       st.data())
def test_nat_maps_match_brute_force(sa, sb, data):
    C = walking_arrow()
    f = data.draw(st.lists(st.integers(0, max(sa[1] - 1, 0)), min_size=sa[0], max_size=sa[0]))
    g = data.draw(st.lists(st.integers(0, max(sb[1] - 1, 0)), min_size=sb[0], max_size=sb[0]))
    if (sa[0] and not sa[1]) or (sb[0] and not sb[1]):
        return
    arrow = C.hom(0, 1)[0]
    X = SetDiagram(C, sa, {arrow: tuple(f)})
    Y = SetDiagram(C, sb, {arrow: tuple(g)})
    # a covariant diagram is a presheaf on C.op
    rx = {m: list(X.act(m)) for m in C.morphisms()}
    ry = {m: list(Y.act(m)) for m in C.morphisms()}
    ex = [list(range(n)) for n in sa]
    ey = [list(range(n)) for n in sb]
    flipped_x = {(m[1], m[0], m[2]): t for m, t in rx.items()}
    flipped_y = {(m[1], m[0], m[2]): t for m, t in ry.items()}
    assert len(nat_maps(X, Y)) == brute_natural(C, (ex, flipped_x), (ey, flipped_y))


def test_representable_sizes():
    C = finset(2)
    y = representable(C, 2)
    assert list(y.sizes) == [len(C.hom(2, j)) for j in range(len(C))]
    y.validate()


def test_duplicate_objects_rejected():
    with pytest.raises(ValidationError):
        validate_category({"objects": ["a", "a"]})
