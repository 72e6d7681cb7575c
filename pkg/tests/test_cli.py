"""Command-line interface: outputs, determinism, exit codes."""

import json

import pytest

from alcovepaths import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_qbg_table(capsys):
    code, out, _ = run(capsys, "qbg", "--type", "A2")
    assert code == 0
    assert out == "vertices: 6\nbruhat edges: 8\nquantum edges: 7\n"


def test_qbg_json(capsys):
    code, out, _ = run(capsys, "qbg", "--type", "A1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["vertices"] == ["1", "e"]
    assert len(data["edges"]) == 2


def test_qbg_dot(capsys):
    code, out, _ = run(capsys, "qbg", "--type", "A1", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph qbg {")


def test_beta_table(capsys):
    code, out, _ = run(capsys, "beta", "--type", "C2", "--index", "2")
    assert code == 0
    assert out.splitlines() == [
        "[0, -1] + 1*delta",
        "[-1, -2] + 2*delta",
        "[-1, -1] + 1*delta",
        "[-1, -2] + 1*delta",
    ]


def test_beta_index_out_of_range(capsys):
    code, _, err = run(capsys, "beta", "--type", "C2", "--index", "5")
    assert code == 2
    assert "out of range" in err


def test_paths_table_counts(capsys):
    code, out, _ = run(capsys, "paths", "--type", "G2", "--weight", "-1,0")
    assert code == 0
    assert out.strip().splitlines()[-1] == "total: 15"
    code, out, _ = run(capsys, "paths", "--type", "G2", "--weight", "0,-1")
    assert code == 0
    assert out.strip().splitlines()[-1] == "total: 7"


def test_paths_csv(capsys):
    code, out, _ = run(capsys, "paths", "--type", "A1", "--weight", "-1",
                       "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "folds,quantum_folds,end_weight,end_dir,qwt_degree"
    assert len(lines) == 3


def test_paths_explicit_word(capsys):
    # the affine word 0 in rank one has exactly two folded paths
    code, out, _ = run(capsys, "paths", "--type", "A1", "--word", "0",
                       "--format", "json")
    assert code == 0
    assert len(json.loads(out)) == 2


def test_paths_need_weight_or_word(capsys):
    code, _, err = run(capsys, "paths", "--type", "A2")
    assert code == 2
    assert "need --weight or --word" in err


def test_emac_table_and_eval(capsys):
    code, out, _ = run(capsys, "emac", "--type", "A1", "--weight", "-1")
    assert code == 0
    assert out.strip() == "x1^-1 + x1^1"
    code, out, _ = run(capsys, "emac", "--type", "A1", "--weight", "-1",
                       "--spec", "infinity")
    assert code == 0
    assert out.strip() == "x1^-1 + x1^1*q^1"
    code, out, _ = run(capsys, "emac", "--type", "A2", "--weight", "-1,-1",
                       "--eval", "1,1")
    assert code == 0
    assert out.strip() == "9"


def test_emac_both_reports(capsys):
    code, out, _ = run(capsys, "emac", "--type", "A2", "--weight", "-1,0",
                       "--spec", "both")
    assert code == 0
    payload = json.loads(out)
    assert payload["routes_agree"] is True


def test_emac_rejects_dominant(capsys):
    code, _, err = run(capsys, "emac", "--type", "A2", "--weight", "1,0")
    assert code == 2
    assert "anti-dominant" in err


def test_char_and_dims(capsys):
    code, out, _ = run(capsys, "dims", "--type", "G2", "--weight", "-1,0")
    assert code == 0
    assert out.strip() == "15"
    code, out, _ = run(capsys, "char", "--type", "A1", "--weight", "-1",
                       "--sigma", "1", "--format", "json")
    assert code == 0
    assert json.loads(out) == [
        {"x": [-1], "q": 1, "c": 1}, {"x": [1], "q": 0, "c": 1},
    ]


def test_bad_type_is_parse_error(capsys):
    code, _, err = run(capsys, "qbg", "--type", "Z9")
    assert code == 2
    assert "bad --type" in err


def test_bad_weight_length(capsys):
    code, _, err = run(capsys, "emac", "--type", "A2", "--weight", "-1")
    assert code == 2
    assert "expected 2" in err


def test_unknown_flag_is_parse_error(capsys):
    code, _, _ = run(capsys, "qbg", "--type", "A2", "--bogus")
    assert code == 2


def test_group_cap_exit_code(capsys, monkeypatch):
    from alcovepaths import weylgroup as wg
    monkeypatch.setattr(wg, "GROUP_SIZE_CAP", 4)
    code, _, err = run(capsys, "qbg", "--type", "A3")
    assert code == 3
    assert "cap" in err


def test_verify_fast_subset(capsys):
    code, out, _ = run(capsys, "verify", "--suites", "shift,beta")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["failures"] == []


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suites", "nope")
    assert code == 2
    assert "unknown suite" in err


def test_output_determinism(capsys):
    a = run(capsys, "emac", "--type", "C2", "--weight", "-1,0", "--format", "json")
    b = run(capsys, "emac", "--type", "C2", "--weight", "-1,0", "--format", "json")
    assert a == b
    # worker count must not affect the bytes
    c = run(capsys, "paths", "--type", "C2", "--weight", "-1,0",
            "--format", "json", "--workers", "4")
    d = run(capsys, "paths", "--type", "C2", "--weight", "-1,0",
            "--format", "json", "--workers", "1")
    assert c == d


def test_cache_dir_roundtrip(capsys, tmp_path):
    code, out1, _ = run(capsys, "qbg", "--type", "A2", "--cache-dir",
                        str(tmp_path))
    assert code == 0
    assert (tmp_path / "qbg_A2.json").exists()
    code, out2, _ = run(capsys, "qbg", "--type", "A2", "--cache-dir",
                        str(tmp_path))
    assert out1 == out2
