import pytest

from paracat import fixtures as fx
from paracat.errors import NotASubcategory, NotOpfibration, ValidationError
from paracat.fibration import (TCat, classify_fibration, enumerate_tfunctors, fun_T, identity_tfunctor,
                               is_cocartesian_T_fibration, make_tcat, restrict_tcat, subcategory,
                               t_equivalence_report, tsubcategory_checks, verify_retraction)
from paracat.fibration.cleavage import Cleavage
from paracat.fincat import arrow_category, full_subcategory, inclusion, walking_arrow


@pytest.mark.parametrize("name", fx.FIXTURE_NAMES)
def test_fixtures_validate(name):
    C = fx.fixture(name)
    C.validate(full=True)
    C.cleavage().validate()


FIBERS = {
    "empty": [0, 0], "terminal": [1, 1], "const[1]": [2, 2], "const(iso)": [2, 2],
    "disc(C2/C2)": [1, 1], "disc(C2/e)": [2, 0], "disc(C2/e+C2/C2)": [3, 1],
    "vop(const[1])": [2, 2], "[1]_T": [2, 3], "dual(source)": [3, 1], "disc(C2/e)xconst[1]": [4, 0],
}


@pytest.mark.parametrize("name", sorted(FIBERS))
def test_fiber_sizes(name):
    C = fx.fixture(name)
    assert [len(C.fiber(V)) for V in range(len(C.base))] == FIBERS[name]


def test_non_opfibration_is_rejected():
    i = inclusion(full_subcategory(walking_arrow(), [0]))
    with pytest.raises(NotOpfibration) as exc:
        make_tcat(i)
    assert exc.value.witness[0] == 0
    assert not classify_fibration(i).opfibration


def test_wrong_cocartesian_marking_is_rejected():
    C = fx.fixture("const[1]")
    bad = TCat(C.structure, cocartesian=lambda m: True)
    with pytest.raises(ValidationError):
        bad.validate(full=True)


def test_classification_of_arrow_projections():
    A = arrow_category(walking_arrow())
    rep = classify_fibration(A.target_functor)
    assert rep.opfibration
    rep = classify_fibration(A.source_functor)
    assert rep.cartesian_fibration


@pytest.mark.parametrize("name", fx.FIXTURE_NAMES)
def test_retraction(name):
    rep = verify_retraction(fx.fixture(name))
    assert rep.ok, rep.failures


def test_cleavage_coherence_on_fixtures():
    for name in ("const[1]", "[1]_T", "galois(2,2,1)"):
        cl = Cleavage(fx.fixture(name))
        cl.validate()


def test_identity_is_a_t_equivalence():
    for name in ("terminal", "const[1]", "[1]_T"):
        assert t_equivalence_report(identity_tfunctor(fx.fixture(name))).is_equivalence


def test_collapse_is_not_a_t_equivalence():
    C, D = fx.fixture("const[1]"), fx.fixture("terminal")
    F = next(F for F in enumerate_tfunctors(C, D))
    rep = t_equivalence_report(F)
    assert not rep.is_equivalence and rep.failing == 0


def test_fun_t_counts():
    C, D = fx.fixture("terminal"), fx.fixture("const[1]")
    # T-functors from the terminal TCat pick a cocartesian section
    F = fun_T(C, D)
    F.validate()
    assert len(F) == 2
    assert len(fun_T(fx.fixture("empty"), D)) == 1


def test_tsubcategory_predicates_agree():
    C = fx.fixture("[1]_T")
    X = C.total
    for k in range(1 << len(X)):
        objs = [x for x in range(len(X)) if k >> x & 1]
        rep = tsubcategory_checks(C, objs)
        assert rep.lm43_agrees and rep.lm44_agrees
        if rep.lm45_agrees is not None:
            assert rep.lm45_agrees


def test_non_subcategory_is_rejected():
    C = fx.fixture("const[1]")
    X = C.total
    mors = [m for m in X.morphisms() if not X.is_identity(m)]
    h = next(X.compose(g, f) for f in mors for g in X.out_of(f[1])
             if not X.is_identity(g) and X.compose(g, f) not in (f, g))
    with pytest.raises(NotASubcategory):
        subcategory(C, range(len(X)), keep=lambda m: m != h)


def test_restrict_tcat_needs_closure():
    C = fx.fixture("disc(C2/e+C2/C2)")
    over = [[x for x in range(len(C.total)) if C.p(x) == V] for V in range(2)]
    assert len(restrict_tcat(C, over[0]).total) == 3
    with pytest.raises(NotOpfibration):
        restrict_tcat(C, over[1])


def test_cocartesian_t_fibration_report():
    C = fx.fixture("const[1]")
    F = identity_tfunctor(C)
    assert is_cocartesian_T_fibration(F)
