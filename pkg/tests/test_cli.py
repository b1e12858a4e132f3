import json

import pytest

from chromabounds.cli import build_parser, main
from chromabounds.harness import CHECKS, read_jsonl
from chromabounds.poly import IntPolynomial
from chromabounds.roots import RootSet


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_poly_cycle4(capsys):
    code, out, _ = run(capsys, "poly", "--family", "cycle", "--n", "4")
    assert code == 0
    assert "coeffs: [0, -3, 6, -4, 1]" in out


@pytest.mark.parametrize("method", ["dc", "ie", "bc"])
def test_poly_json_round_trip(capsys, method):
    code, out, _ = run(capsys, "poly", "--graph6", "D~{", "--method", method, "--format", "json")
    assert code == 0
    d = json.loads(out)
    p = IntPolynomial.from_dict(d)
    assert p.degree == 5 and p.lead == 1


def test_poly_csv(capsys):
    code, out, _ = run(capsys, "poly", "--edges", "0-1,1-2", "--n", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["power,coeff", "0,0", "1,1", "2,-2", "3,1"]


def test_verify_thm15_k4(capsys):
    code, out, _ = run(capsys, "verify", "--check", "thm15", "--family", "complete", "--n", "4", "--k", "2")
    assert code == 0
    assert out.strip() == "thm15: pass"


def test_verify_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "--checks", "lemma22,shameful,thm33", "--family", "cycle",
                       "--n", "5", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert [r["check"] for r in d["reports"]] == ["lemma22", "shameful", "thm33"]
    for r in d["reports"]:
        assert set(r) == {"check", "graph6", "parameters", "verdict", "witness", "wall_time"}


def test_scan_writes_report(capsys, tmp_path):
    out_path = tmp_path / "report.jsonl"
    summary = tmp_path / "summary.csv"
    code, out, _ = run(capsys, "scan", "--generated", "5", "--connected", "--checks", "lemma22,thm13",
                       "--out", str(out_path), "--summary", str(summary))
    assert code == 0
    reports = read_jsonl(out_path)
    assert len(reports) == 2 * 728
    assert "lemma22: pass=728 fail=0 skip=0" in out
    assert summary.read_text().startswith("check,pass,fail,skip")


def test_roots_json(capsys):
    code, out, _ = run(capsys, "roots", "--family", "cycle", "--n", "4", "--format", "json")
    assert code == 0
    d = json.loads(out)
    rs = RootSet.from_dict(d)
    assert rs.rho == pytest.approx(3 ** 0.5, abs=1e-12)
    assert d["rho_upper_bound"] == pytest.approx(3.81 * 2)


def test_coeffs(capsys):
    code, out, _ = run(capsys, "coeffs", "--family", "complete", "--n", "4", "--count", "3", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["c"][:2] == ["-6", "-7"]
    assert d["lemma22_delta_c1"] == "0" and d["lemma22_delta_c2"] == "0"


def test_epsilon(capsys):
    code, out, _ = run(capsys, "epsilon", "--family", "complete", "--n", "3", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["epsilon_mean_subgraph"] == "7/6" and d["agree"]
    code, out, _ = run(capsys, "epsilon", "--family", "path", "--n", "3", "--x", "-0.5", "--format", "json")
    assert code == 0 and json.loads(out)["x"] == "-1/2"


def test_catalog_encode_decode(capsys):
    code, out, _ = run(capsys, "catalog", "--encode", "0-1,1-2", "--n", "3")
    assert code == 0
    g6 = out.strip()
    code, out, _ = run(capsys, "catalog", "--decode", g6, "--format", "json")
    assert json.loads(out) == {"n": 3, "edges": [[0, 1], [1, 2]]}
    code, out, _ = run(capsys, "catalog", "--generated", "3")
    assert code == 0 and len(out.split()) == 8


def test_big_integers_printed_in_full(capsys):
    code, out, _ = run(capsys, "verify", "--check", "thm13", "--family", "complete", "--n", "7",
                       "--format", "json")
    assert code == 0
    w = json.loads(out)["reports"][0]["witness"]
    assert w["lhs_digits"].isdigit() and "e" not in w["lhs_digits"]


@pytest.mark.parametrize("argv", [
    ["poly", "--graph6", "C~~"],
    ["poly", "--graph6", "\x7f"],
    ["epsilon", "--family", "path", "--n", "3", "--x", "1/0"],
    ["epsilon", "--family", "path", "--n", "3", "--x", "abc"],
    ["poly", "--family", "cycle"],
    ["poly", "--family", "cycle", "--n", "4", "--graph6", "C~"],
    ["poly", "--bogus"],
    ["verify", "--check", "nope", "--family", "cycle", "--n", "4"],
    ["scan", "--graph6-file", "/nonexistent/x.g6"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_malformed_catalog_line(capsys, tmp_path):
    path = tmp_path / "bad.g6"
    path.write_text("A_\nB?!\n")
    code, _, err = run(capsys, "scan", "--graph6-file", str(path))
    assert code == 2 and "line 2" in err


def test_k_below_two_is_usage_error(capsys):
    code, _, _ = run(capsys, "verify", "--check", "thm15", "--family", "cycle", "--n", "4", "--k", "1")
    assert code == 2


def test_failing_verdict_exits_1(capsys, monkeypatch):
    from chromabounds import harness
    monkeypatch.setitem(harness.CHECKS, "lemma22", lambda g, params, seed: ("fail", {"why": "forced"}))
    code, out, _ = run(capsys, "verify", "--check", "lemma22", "--family", "cycle", "--n", "4")
    assert code == 1 and "forced" in out


def test_help_lists_every_check(capsys):
    texts = [build_parser().format_help()]
    for sub in ("verify", "scan"):
        assert main([sub, "--help"]) == 0
        texts.append(capsys.readouterr().out)
    for text in texts:
        for check in CHECKS:
            assert check in text


def test_seed_env_matches_flag(capsys, monkeypatch):
    argv = ["verify", "--check", "oracle_eq", "--family", "cycle", "--n", "5", "--orderings", "3",
            "--format", "json"]
    monkeypatch.setenv("CHROMABOUNDS_SEED", "99")
    _, a, _ = run(capsys, *argv)
    monkeypatch.delenv("CHROMABOUNDS_SEED")
    _, b, _ = run(capsys, *argv, "--seed", "99")
    strip = lambda s: [dict(r, wall_time=0) for r in json.loads(s)["reports"]]
    assert strip(a) == strip(b)
