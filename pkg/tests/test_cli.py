import json

import pytest

from liecoh.cli import DEFAULT_SEED, RunConfig, _build_family, main
from liecoh.errors import BadInput, UnknownFamily
from liecoh.lie_algebra import algebra_to_json, heisenberg


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_profile_table(capsys):
    code, out, err = run(capsys, "profile", "--family", "heisenberg", "--m", "2")
    assert code == 0 and err == ""
    assert out.startswith("heisenberg(m=2)  dim 5\n")
    assert "profile: 1 4 5 5 4 1" in out
    header = out.splitlines()[1]
    assert header.split() == ["degree", "cochain_dim", "rank_below", "rank", "betti"]


def test_profile_csv(capsys):
    code, out, _ = run(
        capsys, "profile", "--family", "heisenberg", "--m", "2", "--format", "csv"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "degree,cochain_dim,rank_below,rank,betti"
    assert lines[2] == "1,5,0,1,4"
    assert len(lines) == 7


def test_profile_json_fields(capsys):
    code, out, _ = run(
        capsys, "profile", "--family", "diamond", "--lambda", "1", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["command"] == "profile"
    assert doc["dim"] == 4
    assert doc["betti"] == [1, 1, 0, 1, 1]
    assert doc["algebra"]["dim"] == 4
    assert doc["ranks"][-1] == 0


def test_betti_plain_number(capsys):
    code, out, _ = run(
        capsys, "betti", "--family", "diamond", "--lambda", "1", "--degree", "2"
    )
    assert code == 0
    assert out == "0\n"


def test_betti_csv_and_json(capsys):
    code, out, _ = run(
        capsys,
        "betti", "--family", "aff", "--degree", "1", "--format", "csv",
    )
    assert code == 0
    assert out == "degree,betti\n1,1\n"
    code, out, _ = run(
        capsys,
        "betti", "--family", "aff", "--degree", "1", "--format", "json",
    )
    assert json.loads(out)["betti"] == 1


def test_cocycles_aff(capsys):
    code, out, _ = run(
        capsys, "cocycles", "--family", "aff", "--degree", "1"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "aff  degree 1  b_1 = 1"
    assert lines[1] == "  [X]"


def test_cocycles_heisenberg_uses_labels(capsys):
    code, out, _ = run(
        capsys, "cocycles", "--family", "heisenberg", "--m", "1", "--degree", "1"
    )
    assert code == 0
    assert "b_1 = 2" in out
    assert "[X1]" in out and "[X2]" in out and "[Z]" not in out


def test_export_matrix_golden(capsys):
    code, out, _ = run(
        capsys,
        "export-matrix", "--family", "heisenberg", "--m", "1", "--degree", "1",
    )
    assert code == 0
    assert out == "% 1 3 3\n2 0 -1\n"


def test_export_matrix_format_flag_is_ignored_gracefully(capsys):
    # coordinate text is the only sensible layout; the flag exists for
    # interface uniformity
    code, out, _ = run(
        capsys,
        "export-matrix", "--family", "heisenberg", "--m", "1", "--degree", "1",
        "--format", "json",
    )
    assert code == 0
    assert out.startswith("% 1 3 3")


def test_diamond_b2_with_classes(capsys):
    code, out, _ = run(
        capsys,
        "diamond-b2",
        "--lambda", "1", "--lambda", "1", "--lambda", "-1", "--lambda", "2",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "b2 = 9"
    assert lines[1] == "class 1: rep 1, p=2, q=1, n_1=3"
    assert lines[2] == "class 2: rep 2, p=1, q=0, n_2=1"


def test_diamond_b2_zero_parameter_goes_through_engine(capsys):
    code, out, _ = run(capsys, "diamond-b2", "--lambda", "0")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "b2 = 6"
    assert "zero parameter" in lines[1]
    code, out, _ = run(capsys, "diamond-b2", "--lambda", "1", "--lambda", "0")
    assert out.splitlines()[0] == "b2 = 3"


def test_diamond_b2_json(capsys):
    code, out, _ = run(
        capsys, "diamond-b2", "--lambda", "i", "--lambda", "-i", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["b2"] == 3
    assert doc["lambda"] == ["i", "-i"]
    assert doc["classes"][0]["size"] == 2


def test_lambda_values_with_leading_dash(capsys):
    # both spellings of a negative parameter must work
    code, out, _ = run(capsys, "diamond-b2", "--lambda", "-1/2", "--lambda", "1/2")
    assert code == 0 and out.splitlines()[0] == "b2 = 3"
    code, out, _ = run(capsys, "diamond-b2", "--lambda=-1/2", "--lambda=1/2")
    assert code == 0 and out.splitlines()[0] == "b2 = 3"


def test_verify_default_sweep(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert f"(seed {DEFAULT_SEED})" in out
    assert out.splitlines()[-1].startswith("ok: ")


def test_verify_seed_precedence(capsys, monkeypatch):
    monkeypatch.setenv("LIECOH_SEED", "4242")
    code, out, _ = run(capsys, "verify")
    assert code == 0 and "(seed 4242)" in out
    code, out, _ = run(capsys, "verify", "--seed", "7")
    assert code == 0 and "(seed 7)" in out
    monkeypatch.setenv("LIECOH_SEED", "not-a-number")
    code, _, err = run(capsys, "verify")
    assert code == 2 and "LIECOH_SEED" in err


def test_verify_is_deterministic(capsys):
    code1, out1, _ = run(capsys, "verify", "--seed", "123")
    code2, out2, _ = run(capsys, "verify", "--seed", "123")
    assert code1 == code2 == 0
    assert out1 == out2


def test_profile_json_round_trips_through_verify(capsys, tmp_path):
    path = tmp_path / "profile.json"
    code, out, _ = run(
        capsys,
        "profile", "--family", "heisenberg", "--m", "2",
        "--format", "json", "--output", str(path),
    )
    assert code == 0 and out == ""
    code, out, _ = run(capsys, "verify", "--input", str(path))
    assert code == 0
    assert out.startswith("ok: ")


def test_verify_catches_tampered_profile(capsys, tmp_path):
    path = tmp_path / "profile.json"
    run(
        capsys,
        "profile", "--family", "heisenberg", "--m", "1",
        "--format", "json", "--output", str(path),
    )
    doc = json.loads(path.read_text())
    doc["betti"][2] += 1
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", "--input", str(path))
    assert code == 1
    assert out.startswith("MISMATCH")
    # tampering the rank vector alone is also caught
    doc = json.loads(path.read_text())
    doc["betti"][2] -= 1
    doc["ranks"][1] += 1
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", "--input", str(path))
    assert code == 1 and "ranks" in out


def test_algebra_json_input(capsys, tmp_path):
    path = tmp_path / "algebra.json"
    path.write_text(json.dumps(algebra_to_json(heisenberg(2))))
    code, out, _ = run(
        capsys, "betti", "--input", str(path), "--degree", "2"
    )
    assert code == 0 and out == "5\n"
    code, out, _ = run(capsys, "profile", "--input", str(path))
    assert code == 0 and "profile: 1 4 5 5 4 1" in out


def test_output_file_matches_stdout(capsys, tmp_path):
    code, out, _ = run(capsys, "profile", "--family", "aff")
    path = tmp_path / "out.txt"
    code2, out2, _ = run(
        capsys, "profile", "--family", "aff", "--output", str(path)
    )
    assert code == code2 == 0
    assert out2 == ""
    assert path.read_text() == out


def test_error_exit_codes(capsys, tmp_path):
    # both sources
    code, _, err = run(
        capsys, "profile", "--family", "aff", "--input", "x.json"
    )
    assert code == 2 and "exactly one" in err
    # neither source
    code, _, err = run(capsys, "profile")
    assert code == 2 and "exactly one" in err
    # malformed scalar
    code, _, err = run(capsys, "diamond-b2", "--lambda", "1.5")
    assert code == 2 and "error:" in err
    # missing family parameter
    code, _, err = run(capsys, "profile", "--family", "heisenberg")
    assert code == 2 and "--m" in err
    # missing file
    code, _, err = run(capsys, "betti", "--input", str(tmp_path / "no.json"), "--degree", "0")
    assert code == 2 and "cannot read" in err
    # invalid JSON
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "betti", "--input", str(bad), "--degree", "0")
    assert code == 2 and "not valid JSON" in err
    # structurally bad algebra
    bad.write_text(json.dumps({"dim": 2, "brackets": [{"i": 0, "j": 5, "coeffs": {}}]}))
    code, _, err = run(capsys, "profile", "--input", str(bad))
    assert code == 2
    # degree out of range
    code, _, err = run(capsys, "betti", "--family", "aff", "--degree", "7")
    assert code == 2
    # verify --input on a non-profile document
    other = tmp_path / "other.json"
    other.write_text(json.dumps({"dim": 2}))
    code, _, err = run(capsys, "verify", "--input", str(other))
    assert code == 2 and "profile document" in err
    # unwritable output path
    code, _, err = run(
        capsys,
        "profile", "--family", "aff",
        "--output", str(tmp_path / "missing" / "out.txt"),
    )
    assert code == 2 and "cannot write" in err


def test_unknown_family_guard():
    config = RunConfig(command="profile", family="nonsense")
    with pytest.raises(UnknownFamily):
        _build_family(config)
    with pytest.raises(BadInput):
        _build_family(RunConfig(command="profile", family="diamond"))


def test_aff_ext_dimension_guard(capsys):
    code, _, err = run(capsys, "profile", "--family", "aff-ext", "--n", "1")
    assert code == 2 and "aff-ext" in err
    code, out, _ = run(capsys, "profile", "--family", "aff-ext", "--n", "2")
    assert code == 0 and "profile: 1 1 0" in out


def test_heisenberg_ext_family_bounds(capsys):
    code, _, err = run(
        capsys, "profile", "--family", "heisenberg-ext", "--m", "1", "--n", "2"
    )
    assert code == 2
    code, out, _ = run(
        capsys, "profile", "--family", "heisenberg-ext", "--m", "1", "--n", "5"
    )
    assert code == 0 and "profile: 1 4 7 7 4 1" in out
