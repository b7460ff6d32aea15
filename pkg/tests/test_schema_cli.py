import json
import os

import pytest

from paracat import fixtures as fx
from paracat import schema
from paracat.cli import BUILD_TARGETS, bundled, main
from paracat.dot import export_dot
from paracat.errors import ParseError, ValidationError
from paracat.orbits import GaloisConfig, symmetric

DATA = os.path.dirname(bundled("group_c2.json"))


@pytest.mark.parametrize("name", fx.FIXTURE_NAMES)
def test_tcat_round_trip_is_byte_identical(name):
    text = schema.dump(fx.fixture(name))
    back = schema.load(schema.loads(text))
    assert schema.dump(back) == text
    back.validate(full=True)


def test_group_and_orbit_round_trip():
    from paracat.orbits import orbit_category
    for v in (symmetric(3), orbit_category(symmetric(3)), GaloisConfig(2, 2, 1), fx.tset("C2/e", "C2/C2")):
        text = schema.dump(v)
        assert schema.dump(schema.load(schema.loads(text))) == text


def test_bundle_is_up_to_date():
    for name, doc in fx.bundle().items():
        with open(os.path.join(DATA, name)) as fh:
            assert fh.read() == schema.dumps(doc), name


def test_parse_errors():
    with pytest.raises(ParseError):
        schema.loads("{not json")
    with pytest.raises(ParseError):
        schema.loads(json.dumps({"schema_version": 99, "kind": "category"}))


def test_tampered_cocartesian_set_is_rejected():
    doc = schema.to_dict(fx.fixture("const[1]"))
    doc["cocartesian"] = doc["cocartesian"][:1]
    with pytest.raises(ValidationError):
        schema.load(doc)


def test_broken_composition_is_rejected():
    doc = schema.to_dict(fx.o_c2())
    doc["composition"] = doc["composition"][1:]
    with pytest.raises(ValidationError):
        schema.load(doc)


def test_dot_export():
    text = export_dot(fx.o_c2())
    assert text.count("->") == 4 and text.startswith('digraph "O_C2"')
    t = export_dot(fx.fixture("const[1]"), suppress_identities=True)
    assert t.count("subgraph cluster_") == 2 and "color=red" in t
    assert export_dot(fx.fixture("const[1]")) == export_dot(fx.fixture("const[1]"))


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("target", BUILD_TARGETS)
def test_build_targets(capsys, target):
    code, out, _ = run(capsys, "build", target)
    assert code == 0
    doc = schema.loads(out)
    assert doc["kind"] in schema.KINDS


def test_validate_and_export(capsys, tmp_path):
    assert run(capsys, "validate", bundled("tcat_galois_2_2_1.json"))[0] == 0
    code, out, _ = run(capsys, "export", "structured", bundled("tcat_const_1.json"))
    with open(bundled("tcat_const_1.json")) as fh:
        assert code == 0 and out == fh.read()
    code, out, _ = run(capsys, "export", "dot", bundled("group_c2.json").replace("group_c2", "tcat_terminal"))
    assert code == 0 and "digraph" in out
    dest = tmp_path / "o.json"
    assert run(capsys, "build", "orbit-cat", "--out", str(dest))[0] == 0
    assert schema.loads(dest.read_text())["kind"] == "category"


def test_cli_exit_codes(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run(capsys, "validate", str(bad))[0] == 2
    doc = schema.to_dict(fx.o_c2())
    doc["composition"] = doc["composition"][1:]
    broken = tmp_path / "broken.json"
    broken.write_text(json.dumps(doc))
    code, _, err = run(capsys, "validate", str(broken))
    assert code == 3 and "witness" in err
    assert run(capsys, "build", "fun-underline", "--budget", "10")[0] == 4
    assert run(capsys, "check", "nonsense")[0] == 3
    assert run(capsys, "export", "dot", bundled("group_c2.json"))[0] == 3


def test_check_command(capsys):
    code, out, err = run(capsys, "check", "lm6.3", bundled("manifest_constant.json"))
    assert code == 0 and "PASS" in err
    doc = schema.loads(out)
    assert doc["results"][0]["passed"] and "wall_time" not in doc["results"][0]
    code, out2, _ = run(capsys, "check", "lm6.3", bundled("manifest_constant.json"))
    assert out2 == out
    code, out3, _ = run(capsys, "check", "pr7.11", bundled("manifest_presheaves.json"), "--timings")
    assert code == 0 and "wall_time" in schema.loads(out3)["results"][0]


def test_failing_check_exits_one(capsys, monkeypatch):
    from paracat import checks, cli
    failing = checks.CheckResult("lm6.3", False, [("inst", ("witness", 1))], {"inst": (1,)})
    monkeypatch.setitem(cli.CHECKS, "lm6.3", lambda **_: failing)
    monkeypatch.setattr(cli, "run_checks", lambda ids, **p: [cli.CHECKS[i](**p) for i in ids])
    code, out, err = run(capsys, "check", "lm6.3")
    assert code == 1 and "FAIL" in err and "witness" in err
    assert schema.loads(out)["results"][0]["witnesses"] == [["inst", "('witness', 1)"]]
