from os.path import dirname, join
from unittest.mock import patch

import pytest
import tomlkit

from kslimit.cli import main
from kslimit.const import ExitCode
from kslimit.problem import load_problem
from kslimit.verify import CheckResult, SuiteResult

FIXTURES = join(dirname(__file__), "fixtures")


def test_analyze_file(capsys: pytest.CaptureFixture[str]) -> None:
    code = main(["analyze", join(FIXTURES, "ex_iii_3.toml")])
    assert code == ExitCode.OK
    data = tomlkit.parse(capsys.readouterr().out).unwrap()
    assert data["kuga_satake"]["d"] == 8
    assert data["zeta"]["coefficients"][2] == "N*[B]*(L-1)^4*81*T^3"


def test_analyze_example_with_overrides(capsys: pytest.CaptureFixture[str]) -> None:
    code = main(
        ["analyze", "--example", "II:4", "--zeta-terms", "2", "--neron-components", "3"]
    )
    assert code == ExitCode.OK
    data = tomlkit.parse(capsys.readouterr().out).unwrap()
    assert data["zeta"]["coefficients"] == ["3*[B]*(L-1)^4*1*T^1", "3*[B]*(L-1)^4*16*T^2"]


def test_analyze_text_format(capsys: pytest.CaptureFixture[str]) -> None:
    code = main(["analyze", "--example", "EX-I.3", "--format", "text"])
    assert code == ExitCode.OK
    assert capsys.readouterr().out.startswith("EX-I.3: type I, rank 3")


def test_analyze_invalid_structure(capsys: pytest.CaptureFixture[str]) -> None:
    code = main(["analyze", join(FIXTURES, "bad_cubic.toml")])
    assert code == ExitCode.FAILED
    data = tomlkit.parse(capsys.readouterr().out).unwrap()
    assert data["axioms"]["nilpotent"]["status"] == "fail"


def test_analyze_bad_syntax(capsys: pytest.CaptureFixture[str]) -> None:
    code = main(["analyze", join(FIXTURES, "bad_syntax.toml")])
    assert code == ExitCode.ERROR
    assert "Invalid TOML" in capsys.readouterr().err


def test_analyze_worst_exit_code_wins(capsys: pytest.CaptureFixture[str]) -> None:
    code = main(["analyze", join(FIXTURES, "bad_cubic.toml"), "--example", "EX-III.3"])
    assert code == ExitCode.FAILED


def test_analyze_needs_input(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["analyze"]) == ExitCode.ERROR


def test_analyze_out_needs_single_input(tmp_path, capsys) -> None:
    out = str(tmp_path / "report.toml")
    code = main(["analyze", "--example", "EX-I.3", "--example", "EX-III.3", "--out", out])
    assert code == ExitCode.ERROR


def test_analyze_writes_report(tmp_path) -> None:
    out = tmp_path / "report.toml"
    assert main(["analyze", "--example", "EX-III.3", "--out", str(out)]) == ExitCode.OK
    assert tomlkit.parse(out.read_text()).unwrap()["structure"]["type"] == "III"


def test_unknown_example(capsys: pytest.CaptureFixture[str]) -> None:
    code = main(["example", "EX-IV.9"])
    assert code == ExitCode.ERROR
    err = capsys.readouterr().err
    assert "Unknown example EX-IV.9" in err
    assert "EX-II.4" in err


def test_example_round_trip(tmp_path) -> None:
    """A written example analyzes cleanly."""
    out = tmp_path / "ex.toml"
    assert main(["example", "EX-II.4", "--out", str(out)]) == ExitCode.OK
    assert load_problem(str(out)).name == "EX-II.4"
    assert main(["analyze", str(out), "--out", str(tmp_path / "r.toml")]) == ExitCode.OK


def test_verify(capsys: pytest.CaptureFixture[str]) -> None:
    async def fake_suite(scope, seed, naive_monodromy):
        assert seed == 7
        assert naive_monodromy
        return SuiteResult([CheckResult("x", scope, True)])

    with patch("kslimit.cli.run_suite", side_effect=fake_suite):
        code = main(["verify", "--seed", "7", "--scope", "ks", "--naive-monodromy"])
    assert code == ExitCode.OK
    assert "1/1 checks passed" in capsys.readouterr().out


def test_verify_failure() -> None:
    async def fake_suite(scope, seed, naive_monodromy):
        return SuiteResult([CheckResult("x", scope, False, "bad")])

    with patch("kslimit.cli.run_suite", side_effect=fake_suite):
        assert main(["verify"]) == ExitCode.FAILED


def test_rejects_bad_zeta_terms(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["analyze", "--example", "EX-I.3", "--zeta-terms", "0"]) == ExitCode.ERROR
