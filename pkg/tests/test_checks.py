from paracat import fixtures as fx
from paracat.checks import CHECKS, check_lm44, check_lm63, orbit_evaluation, run_checks
from paracat.fincat import equivalence_report

FAST = ["df3.1", "ex2.14", "lm4.4", "lm6.3", "lm7.9", "pr6.2", "pr7.11", "pr9.11-1", "th9.7"]


def test_fast_checks_pass():
    for r in run_checks(FAST):
        assert r.passed, (r.check, r.witnesses)
        assert r.sizes


def test_results_serialize_without_timings():
    r = check_lm63(tcats={"terminal": fx.fixture("terminal")})
    d = r.to_dict()
    assert d == {"check": "lm6.3", "passed": True, "witnesses": [], "sizes": {"terminal": [2]}}
    assert "wall_time" in r.to_dict(timings=True)


def test_every_check_is_registered():
    assert sorted(CHECKS) == sorted(FAST + ["lm2.12", "pr10.3", "th10.4", "th7.8"])


def test_subcategory_check_covers_fibers():
    r = check_lm44(tcats={"[1]_T": fx.fixture("[1]_T")})
    assert r.passed and any(k.startswith("[1]_T:fiber") for k in r.sizes)


def test_orbit_evaluation_on_two_orbits():
    U = fx.tset("C2/e", "C2/C2")
    F, P = orbit_evaluation(U, fx.fixture("const[1]"))
    F.validate()
    assert len(P) == 4 and equivalence_report(F).is_equivalence
