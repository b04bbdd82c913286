import copy
import json
import os

from mhopf.cli import main
from mhopf.specfile import load_path

SPECS = os.path.join(os.path.dirname(__file__), os.pardir, "specs")


def spec(name):
    return os.path.join(SPECS, name)


def rows(data):
    return {json.dumps(r) for r in data}


def test_verify_z2_passes(capsys):
    assert main(["verify", spec("z2_pair.json")]) == 0
    out = capsys.readouterr().out
    assert "[FAIL]" not in out and "summary:" in out


def test_verify_int_group_window_4(capsys):
    assert main(["verify", "--window", "4", spec("int_group.json")]) == 0
    assert "[FAIL]" not in capsys.readouterr().out


def test_broken_coassociativity_exit_1(tmp_path, capsys):
    data = json.load(open(spec("z2_pair.json")))
    bad = copy.deepcopy(data)
    # T1(δ_1⊗δ_0) should be δ_1⊗δ_0; send it to δ_0⊗δ_0 instead
    bad["A"]["T1"] = [r if r[:2] != [1, 0] else [1, 0, 0, 0, "1"] for r in data["A"]["T1"]]
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(bad))
    assert main(["verify", str(p)]) == 1
    out = capsys.readouterr().out
    assert "[FAIL]" in out and "witness:" in out


def test_parse_error_exit_2(tmp_path, capsys):
    p = tmp_path / "broken.json"
    p.write_text("{not json")
    assert main(["verify", str(p)]) == 2
    assert "parse error" in capsys.readouterr().err
    assert main(["verify", str(tmp_path / "missing.json")]) == 2


def test_bad_scalar_exit_2(tmp_path):
    data = json.load(open(spec("z2_pair.json")))
    data["pairing"][0][-1] = "one"
    p = tmp_path / "s.json"
    p.write_text(json.dumps(data))
    assert main(["verify", str(p)]) == 2


def test_usage_error_exit_2(capsys):
    assert main(["frobnicate"]) == 2
    assert main(["verify", "--window", "0", "Z2"]) == 2


def test_env_default_window(monkeypatch, capsys):
    monkeypatch.setenv("MHOPF_DEFAULT_WINDOW", "3")
    assert main(["verify", spec("int_group.json")]) == 0
    assert "[window=3," in capsys.readouterr().out
    monkeypatch.setenv("MHOPF_DEFAULT_WINDOW", "x")
    assert main(["verify", spec("int_group.json")]) == 2


def test_double_s3_matches_oracle(tmp_path):
    out = tmp_path / "d.json"
    assert main(["double", spec("s3_pair.json"), "--out", str(out)]) == 0
    got = json.load(open(out))["mha"]
    oracle = json.load(open(spec("s3_double_oracle.json")))
    assert len(got["basis"]) == 36
    assert rows(got["mul"]) == rows(oracle["mul"])
    assert rows(got["counit"]) == rows(oracle["counit"])


def test_double_round_trip(tmp_path, capsys):
    out = tmp_path / "d.json"
    assert main(["double", spec("z2_pair.json"), "--out", str(out)]) == 0
    assert main(["verify", str(out)]) == 0
    D = load_path(str(out))
    assert D.labels() == [(a, b) for a in (0, 1) for b in (0, 1)]


def test_double_z2_counit(tmp_path):
    out = tmp_path / "d.json"
    assert main(["double", "Z2", "--out", str(out)]) == 0
    got = json.load(open(out))["mha"]
    assert len(got["basis"]) == 4
    assert rows(got["counit"]) == rows([[[0, 0], "1"], [[0, 1], "1"]])


def test_double_csv(tmp_path):
    out = tmp_path / "d.csv"
    assert main(["double", "Z2", "--format", "csv", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "map,labels...,coeff"
    assert any(l.startswith("counit,") for l in lines)


def test_report_deterministic(tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    for p in (a, b):
        assert main(["report", "--seed", "4", "--sample", "40", "S3", "--out", str(p)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_report_lists_star_conditions_and_note(capsys):
    assert main(["report", spec("z2_pair.json")]) == 0
    out = capsys.readouterr().out
    stars = [l for l in out.splitlines() if "star condition" in l]
    assert len(stars) == 2 and all(l.startswith("[PASS]") for l in stars)
    assert "note: ambiguous index" in out and "b_3" in out


def test_report_json(capsys):
    assert main(["report", "--no-double", "--format", "json", "Z2"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["ok"] is True
