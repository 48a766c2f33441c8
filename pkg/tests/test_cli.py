"""End-to-end tests for the command-line interface."""

import json

import pytest

from lambdafact.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table_derangement_csv(capsys):
    code, out, _ = run(capsys, "table", "derangement", "0..5")
    assert code == 0
    values = [line.split(",")[2] for line in out.strip().splitlines()]
    assert values == ["1", "0", "1", "2", "9", "44"]


def test_table_lambda_factorial(capsys):
    code, out, _ = run(capsys, "table", "lambda-factorial", "3")
    assert code == 0
    assert out.strip() == "lambda-factorial,3,λ^3 + 3λ + 2"


def test_table_q(capsys):
    code, out, _ = run(capsys, "table", "q", "1", "1")
    assert code == 0
    assert out.strip() == "q,1,1,λμ + λ^2 + 1"


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "bell", "0..3", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert rows[3] == {"family": "bell", "n": 3, "value": "u^3 + 3u^2 + u"}


def test_table_stirling_rows(capsys):
    code, out, _ = run(capsys, "table", "stirling2", "4", "0..4")
    assert code == 0
    values = [line.split(",")[3] for line in out.strip().splitlines()]
    assert values == ["0", "1", "7", "6", "1"]


def test_table_unknown_family_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["table", "nonsense", "3"])
    assert exc.value.code == 2


def test_table_bad_range(capsys):
    code, _, err = run(capsys, "table", "derangement", "5..2")
    assert code == 2
    assert "range" in err


def test_table_index_cap(capsys):
    code, _, err = run(capsys, "table", "derangement", "0..80")
    assert code == 2
    assert "--unsafe" in err
    code, out, _ = run(capsys, "table", "factorial", "60..60", "--unsafe")
    assert code == 0
    assert out.strip().endswith(str(__import__("math").factorial(60)))


def test_verify_stream_and_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "thm1.1", "--n-max", "10")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 11
    for line in lines:
        payload = json.loads(line)
        assert payload["verdict"] == "pass"
        assert payload["residual"] == "0"


def test_verify_unknown_id(capsys):
    code, _, err = run(capsys, "verify", "bogus")
    assert code == 2
    assert "unknown identity" in err


def test_verify_multiple_ids(capsys):
    code, out, _ = run(capsys, "verify", "riordan", "sunxu", "--n-max", "4")
    assert code == 0
    seen = {json.loads(line)["id"] for line in out.strip().splitlines()}
    assert seen == {"riordan", "sunxu"}


def test_series_tree(capsys):
    code, out, _ = run(capsys, "series", "tree", "--order", "4")
    assert code == 0
    assert out.strip() == "x + x^2 + 3/2 x^3 + 8/3 x^4 + O(x^5)"


def test_series_abel_rhs_factorials(capsys):
    code, out, _ = run(
        capsys, "series", "abel-rhs", "--a", "factorial", "--lambda", "1",
        "--order", "3",
    )
    assert code == 0
    assert out.strip() == "1 + x + 2x^2 + 6x^3 + O(x^4)"


def test_series_egf_f_json(capsys):
    code, out, _ = run(
        capsys, "series", "egf-f", "--order", "3", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["var"] == "t"
    assert payload["coefficients"][0] == "1"
    assert payload["coefficients"][1] == "λ"


def test_series_order_cap(capsys):
    code, _, err = run(capsys, "series", "tree", "--order", "13")
    assert code == 2
    assert "--unsafe" in err
    code, out, _ = run(capsys, "series", "tree", "--order", "13", "--unsafe")
    assert code == 0
    assert "x^13" in out


def test_series_env_default_order(capsys, monkeypatch):
    monkeypatch.setenv("LAMBDAFACT_ORDER", "2")
    code, out, _ = run(capsys, "series", "tree")
    assert code == 0
    assert out.strip() == "x + x^2 + O(x^3)"


def test_bijection_census(capsys):
    code, out, _ = run(capsys, "bijection", "2", "2")
    assert code == 0
    assert "64 objects, round-trip OK" in out
    assert "total 64 = (2+2)^3" in out
    assert "MISMATCH" not in out


def test_bijection_single_object(capsys):
    code, out, _ = run(capsys, "bijection", "0", "1")
    assert code == 0
    assert "1 objects, round-trip OK" in out


def test_bijection_with_sigma(capsys):
    code, out, _ = run(capsys, "bijection", "1", "1", "--sigma", "1,1,3", "--dot")
    assert code == 0
    assert "round trip: OK" in out
    assert "digraph sigma" in out
    assert "digraph pair" in out


def test_bijection_invalid_sigma(capsys):
    code, _, err = run(capsys, "bijection", "2", "2", "--sigma", "1,1,3,5,5")
    assert code == 2
    assert "error" in err


def test_bijection_cutoff_requires_unsafe(capsys):
    code, _, err = run(capsys, "bijection", "5", "2")
    assert code == 2
    assert "--unsafe" in err
