import json

from catsset.cli import main
from catsset.library import boolean_or, zmonoid
from catsset.skew import skew_from_strict


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enumerate_dim2(capsys):
    code, out, _ = run(capsys, "enumerate", "--dim", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 6 and lines[-1] == "count: 5"


def test_enumerate_nondegenerate_dim4(capsys):
    code, out, _ = run(capsys, "enumerate", "--dim", "4", "--nondegenerate")
    assert code == 0
    assert out.strip().splitlines()[-1] == "count: 9"


def test_enumerate_dim0(capsys):
    code, out, _ = run(capsys, "enumerate", "--dim", "0")
    assert code == 0
    assert out.strip().splitlines() == ["UD", "count: 1"]


def test_enumerate_forms(capsys):
    code, out, _ = run(capsys, "enumerate", "--dim", "2", "--as", "relation", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 5 and "[[0,1]," in "".join(doc["items"]).replace(" ", "")
    code, out, _ = run(capsys, "enumerate", "--dim", "3", "--as", "motzkin")
    assert code == 0
    assert out.strip().splitlines()[-1] == "count: 4"


def test_enumerate_cap_exceeded(capsys):
    code, _, err = run(capsys, "enumerate", "--dim", "11")
    assert code == 3
    assert "cap" in err


def test_cap_override_via_config(tmp_path, capsys):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"caps": {"dyck": 11}}))
    code, out, _ = run(capsys, "enumerate", "--dim", "11", "--config", str(config))
    assert code == 0
    assert out.strip().splitlines()[-1] == "count: 208012"


def test_word_commands(capsys):
    code, out, _ = run(capsys, "face", "UUDUDD", "--index", "1")
    assert (code, out.strip()) == (0, "UDUD")
    code, out, _ = run(capsys, "degeneracy", "UDUD", "--index", "0")
    assert (code, out.strip()) == (0, "UUDDUD")
    code, out, _ = run(capsys, "decompose", "UUDDUD", "--json")
    doc = json.loads(out)
    assert doc["core"] == "UDUD" and doc["image"] == [0, 0, 1]
    code, out, _ = run(capsys, "motzkin", "--from-dyck", "UUDUDD")
    assert (code, out.strip()) == (0, "UD")
    code, out, _ = run(capsys, "motzkin", "--to-dyck", "CC")
    assert (code, out.strip()) == (0, "UDUDUD")


def test_word_command_errors(capsys):
    code, _, err = run(capsys, "face", "UDDU", "--index", "0")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "face", "UUDD", "--index", "5")
    assert code == 2
    code, _, err = run(capsys, "motzkin", "--from-dyck", "UUDD")
    assert code == 2 and "degenerate" in err.lower()


def test_verify_binomial(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "binomial", "--max-n", "12")
    assert code == 0
    assert "pass" in out


def test_verify_coskeletal(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "coskeletal", "--max-dim", "5")
    assert code == 0
    assert "not-1-coskeletal" in out


def test_verify_coskeletal_spec_bounds(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "coskeletal", "--r", "2", "--max-dim", "6"
    )
    assert code == 0


def test_verify_false_claim_exits_one(capsys):
    # dimension-1 boundaries have two fillers, so 0-coskeletality fails
    code, out, _ = run(
        capsys, "verify", "--suite", "coskeletal", "--r", "0", "--max-dim", "4"
    )
    assert code == 1
    assert "FAIL" in out


def test_relation_cap(capsys):
    code, _, err = run(capsys, "enumerate", "--dim", "8", "--as", "relation")
    assert code == 3
    assert "relation cap" in err


def test_verify_nerve_iso_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "nerve-iso", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    assert any("1 isomorphism" in c["detail"] for c in doc["checks"])


def test_verify_identities_small(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "identities", "--max-dim", "5")
    assert code == 0


def test_verify_motzkin(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "motzkin", "--max-n", "6")
    assert code == 0


def test_classify_files(tmp_path, capsys):
    two = tmp_path / "two.json"
    two.write_text(boolean_or().to_json_text())
    code, out, _ = run(capsys, "classify", str(two))
    assert code == 0
    lines = out.strip().splitlines()
    assert "count: 2" in lines
    assert lines[-1] == "three-way agreement: true"


def test_classify_shipped_examples(capsys):
    code, out, _ = run(capsys, "classify", "docs/examples/chain3-max.json")
    assert code == 0
    assert "count: 3" in out


def test_classify_malformed_file(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"kind": "strict_monoidal", "schema_version": 1}))
    code, _, err = run(capsys, "classify", str(bad))
    assert code == 2
    assert "objects" in err


def test_skew_check_pass(tmp_path, capsys):
    data = tmp_path / "skew.json"
    data.write_text(json.dumps(skew_from_strict(boolean_or()).to_json_dict()))
    code, out, _ = run(capsys, "skew", "check", str(data))
    assert code == 0
    assert "A9: pass" in out


def test_skew_check_kappa_failure(tmp_path, capsys):
    data = tmp_path / "kappa-z.json"
    data.write_text(json.dumps(skew_from_strict(zmonoid(), kappa="z").to_json_dict()))
    code, out, _ = run(capsys, "skew", "check", str(data))
    assert code == 1
    assert "A5: FAIL" in out
    assert "equivalence consistent: true" in out


def test_skew_sweep(capsys):
    code, out, _ = run(capsys, "skew", "sweep", "--carrier", "chain2")
    assert code == 0
    assert "equivalence holds for all: true" in out
    code, out, _ = run(capsys, "skew", "sweep", "--carrier", "zmonoid", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["equivalence_holds"] and doc["candidates"] == 64


def test_skew_sweep_budget(capsys):
    code, _, err = run(capsys, "skew", "sweep", "--carrier", "chain4")
    assert code == 3


def test_skew_unknown_carrier(capsys):
    code, _, err = run(capsys, "skew", "sweep", "--carrier", "mystery")
    assert code == 2


def test_outputs_are_deterministic(capsys):
    first = run(capsys, "enumerate", "--dim", "3", "--json")
    second = run(capsys, "enumerate", "--dim", "3", "--json")
    assert first == second
    first = run(capsys, "verify", "--suite", "binomial", "--json")
    second = run(capsys, "verify", "--suite", "binomial", "--json")
    assert first == second
