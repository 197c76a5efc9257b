"""End-to-end tests for the command line interface."""

import json

import pytest

from mbch.bch import bch_recursive
from mbch.cli import main
from mbch.freelie import LieSeries
from mbch.series import InexactDivision
from mbch.tilde import TildeElement, hausdorff_tilde


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_metabelian_csv_golden(capsys):
    rc, out, err = run(capsys, "metabelian", "--degree", "4", "--format", "csv")
    assert rc == 0
    assert err == ""
    assert out == "k,l,c\n0,0,1/2\n0,1,-1/12\n1,0,1/12\n1,1,-1/24\n"


def test_metabelian_text_shows_table_and_h(capsys):
    rc, out, _ = run(capsys, "metabelian", "--degree", "4")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "X + Y + 1/2 [XY] - 1/12 [YXY] + 1/12 [X^2Y] - 1/24 [XYXY]"
    assert lines[1] == "h(x,y) = 1/2 - 1/12 y + 1/12 x - 1/24 x y"


def test_metabelian_json_has_element_and_h(capsys):
    rc, out, _ = run(capsys, "metabelian", "--degree", "5", "--format", "json")
    assert rc == 0
    data = json.loads(out)
    assert data["element"]["X"] == "1"
    terms = {(t["k"], t["l"]): t["c"] for t in data["element"]["terms"]}
    assert terms[(0, 0)] == "1/2"
    assert terms[(1, 2)] == "1/180"
    assert {(t["i"], t["j"]) for t in data["h"]["terms"]} >= {(0, 0), (1, 1)}


def test_bch_json_roundtrip(capsys):
    rc, out, _ = run(capsys, "bch", "--degree", "6", "--format", "json")
    assert rc == 0
    assert LieSeries.from_json_dict(json.loads(out)) == bch_recursive(6)


def test_bch_methods_agree(capsys):
    outputs = []
    for method in ("recursive", "dynkin", "oracle"):
        rc, out, _ = run(capsys, "bch", "--degree", "5", "--method", method,
                         "--format", "json")
        assert rc == 0
        outputs.append(out)
    assert outputs[0] == outputs[1] == outputs[2]


def test_bch_csv_classical_rows(capsys):
    rc, out, _ = run(capsys, "bch", "--degree", "4", "--format", "csv")
    assert rc == 0
    assert out.splitlines()[0] == "degree,word,c"
    assert "2,XY,1/2" in out
    assert "3,XXY,1/12" in out
    assert "4,XXYY,1/24" in out


def test_goldberg_csv_golden(capsys):
    rc, out, _ = run(capsys, "goldberg", "--degree", "4", "--format", "csv")
    assert rc == 0
    assert out == "i,j,c\n1,1,1/2\n1,2,1/12\n2,1,1/12\n2,2,1/24\n"


def test_zassenhaus_per_degree_text(capsys):
    rc, out, _ = run(capsys, "zassenhaus", "--degree", "4", "--per-degree")
    assert rc == 0
    assert out.splitlines() == [
        "C_2 = -1/2 [XY]",
        "C_3 = 1/3 [YXY] + 1/6 [X^2Y]",
        "C_4 = -1/8 [Y^2XY] - 1/8 [XYXY] - 1/24 [X^3Y]",
    ]


def test_zassenhaus_plain_equals_sum_of_factors(capsys):
    rc, table, _ = run(capsys, "zassenhaus", "--degree", "5", "--format", "csv")
    assert rc == 0
    rc, per, _ = run(capsys, "zassenhaus", "--degree", "5", "--per-degree",
                     "--format", "csv")
    assert rc == 0
    stripped = {line[2:] for line in per.splitlines()[1:]}
    assert stripped == set(table.splitlines()[1:])


def test_kv_solve_text_reports_verified(capsys):
    rc, out, _ = run(capsys, "kv-solve", "--degree", "6")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0].startswith("1/4 Y + 1/12 [XY]")
    assert lines[1] == "verified: yes"


def test_kv_solve_accepts_a_and_g(capsys):
    g = json.dumps(
        {"truncation": 3,
         "terms": [{"i": 0, "j": 1, "c": "1"}, {"i": 1, "j": 0, "c": "1"}]}
    )
    rc, out, _ = run(capsys, "kv-solve", "--degree", "6", "--a", "1/3",
                     "--g", g, "--format", "json")
    assert rc == 0
    data = json.loads(out)
    assert data["verified"] is True
    assert data["element"]["X"] == "1/3"


def test_deeper_json_roundtrip(capsys):
    rc, out, _ = run(capsys, "deeper", "--degree", "7", "--format", "json")
    assert rc == 0
    assert TildeElement.from_json_dict(json.loads(out)) == hausdorff_tilde(7)


def test_deeper_csv_has_kind_column(capsys):
    rc, out, _ = run(capsys, "deeper", "--degree", "5", "--format", "csv")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "kind,k,l,m,n,c"
    assert "linear,,,0,0,-1/2" in lines
    assert "quadratic,0,1,0,0,1/120" in lines


def test_verify_all_passes(capsys):
    rc, out, _ = run(capsys, "verify", "--suite", "all", "--degree", "6")
    assert rc == 0
    lines = out.splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].endswith("checks passed")


def test_verify_json_structure(capsys):
    rc, out, _ = run(capsys, "verify", "--suite", "kv", "--degree", "5",
                     "--format", "json")
    assert rc == 0
    data = json.loads(out)
    assert data["passed"] is True
    assert all(c["passed"] for c in data["checks"])


def test_verify_failure_exits_1(capsys, monkeypatch):
    monkeypatch.setattr(
        "mbch.cli.run_suite", lambda suite, degree: [("broken", False, "boom")]
    )
    rc, out, _ = run(capsys, "verify", "--degree", "4")
    assert rc == 1
    assert "FAIL broken: boom" in out


def test_output_flag_writes_file(capsys, tmp_path):
    target = tmp_path / "series.json"
    rc, out, _ = run(capsys, "bch", "--degree", "4", "--format", "json",
                     "--output", str(target))
    assert rc == 0
    assert out == ""
    text = target.read_text()
    assert text.endswith("\n")
    assert json.loads(text)["truncation"] == 4


def test_byte_identical_reruns(capsys):
    first = run(capsys, "deeper", "--degree", "6", "--format", "json")
    second = run(capsys, "deeper", "--degree", "6", "--format", "json")
    assert first == second


def test_usage_errors_exit_2(capsys):
    cases = [
        ("bch", "--method", "closed"),
        ("bch", "--degree", "0"),
        ("bch", "--method", "dynkin", "--degree", "13"),
        ("goldberg", "--degree", "1"),
        ("kv-solve", "--degree", "4", "--a", "x"),
        ("kv-solve", "--degree", "4", "--g", "{not json"),
        ("verify", "--degree", "2"),
    ]
    for argv in cases:
        rc, out, err = run(capsys, *argv)
        assert rc == 2, argv
        assert out == ""
        assert "error" in err


def test_antisymmetry_violation_is_usage_error(capsys):
    g = json.dumps({"truncation": 2, "terms": [{"i": 0, "j": 1, "c": "1"}]})
    rc, _, err = run(capsys, "kv-solve", "--degree", "4", "--g", g)
    assert rc == 2
    assert "antisymmetry" in err


def test_unknown_flag_and_missing_command(capsys):
    rc, _, _ = run(capsys, "bch", "--nope")
    assert rc == 2
    rc, _, _ = run(capsys)
    assert rc == 2


def test_help_exits_0(capsys):
    assert run(capsys, "--help")[0] == 0


def test_env_var_overrides_cap(capsys, monkeypatch):
    monkeypatch.setenv("MBCH_DEGREE_CAP", "5")
    rc, _, err = run(capsys, "bch", "--degree", "6")
    assert rc == 2
    assert "cap 5" in err
    monkeypatch.setenv("MBCH_DEGREE_CAP", "junk")
    rc, _, err = run(capsys, "bch", "--degree", "6")
    assert rc == 2
    assert "MBCH_DEGREE_CAP" in err


def test_inexact_division_exits_3(capsys, monkeypatch):
    def boom(truncation):
        raise InexactDivision("inexact division")

    monkeypatch.setattr("mbch.cli.hausdorff_closed", boom)
    rc, out, err = run(capsys, "metabelian", "--degree", "4")
    assert rc == 3
    assert out == ""
    assert "divisibility" in err
