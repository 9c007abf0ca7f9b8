import json
import subprocess
import sys

import pytest

from eulergas.cli import Report, ReportEntry, run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_sequence_command(capsys):
    code, out, _ = call(capsys, "sequence", "--id", "igppf4", "--len", "12")
    assert code == 0 and out.strip() == "1,1,1,2,3,4,5,7,10,13,16,21"


def test_count_command(capsys):
    code, out, _ = call(capsys, "count", "--n", "7", "--constraint", "prime-to-3")
    assert code == 0 and out.strip() == "9"
    code, out, _ = call(capsys, "count", "--n", "7", "--constraint", "prime-to-3", "--format", "json")
    assert json.loads(out) == {"constraint": "prime-to-3", "n": 7, "count": 9}


def test_expand_forms(capsys):
    _, out, _ = call(capsys, "expand", "--product", "1/(1-x^k)", "--order", "6")
    assert out.strip() == "1,1,2,3,5,7,11"
    _, out, _ = call(capsys, "expand", "--product", "1+x^(2k-1)", "--product", "1/(1-x^(2k))",
                     "--order", "6")
    assert out.strip() == "1,1,1,2,3,4,5"
    _, out, _ = call(capsys, "expand", "--product", "theta4_inv", "--order", "4")
    assert out.strip() == "1,2,4,8,14"
    _, out, _ = call(capsys, "expand", "--product", "euler_distinct_odd", "--order", "5")
    assert out.strip() == "1,1,1,2,2,3"


def test_arith_command(capsys):
    code, out, _ = call(capsys, "arith", "--fn", "two_nu", "--n", "20")
    assert code == 0 and out.strip() == "4"


def test_verify_exit_codes(capsys):
    code, out, _ = call(capsys, "verify", "--id", "euler_distinct_odd", "--order", "500")
    assert code == 0 and out.startswith("match")
    code, out, _ = call(capsys, "verify", "--id", "two_modular", "--reading", "min")
    assert code == 1 and "first_diff n=9 left=12 right=13 (claim)" in out
    code, _, _ = call(capsys, "verify", "--id", "two_modular", "--reading", "min", "--lenient")
    assert code == 0
    code, _, _ = call(capsys, "verify", "--id", "two_modular")
    assert code == 0


def test_usage_errors(capsys):
    code, _, err = call(capsys, "frobnicate")
    assert code == 2 and "usage" in err
    code, _, err = call(capsys, "verify", "--id", "nothing")
    assert code == 2 and "unknown identity" in err
    code, _, _ = call(capsys, "count", "--n", "3")
    assert code == 2
    code, _, _ = call(capsys, "verify", "--id", "lebesgue", "--strict", "--lenient")
    assert code == 2
    code, _, err = call(capsys, "count", "--n", "3", "--constraint", "bogus")
    assert code == 2 and "bogus" in err


def test_help_exits_zero(capsys):
    code, out, _ = call(capsys, "--help")
    assert code == 0 and "verify-all" in out


def test_text_output_is_deterministic(capsys):
    argv = ("verify-all", "--order-scale", "0.2", "--threads", "3")
    code1, out1, _ = call(capsys, *argv)
    code2, out2, _ = call(capsys, *argv)
    assert code1 == code2 == 0 and out1 == out2
    lines = out1.strip().splitlines()
    assert len(lines) == 98 and lines[-1] == "97 checks, 97 match, 0 mismatch"


def test_verify_all_min_reading_fails(capsys):
    code, out, _ = call(capsys, "verify-all", "--order-scale", "0.3", "--reading", "min")
    assert code == 1 and "mismatch identities:two_modular" in out
    code, _, _ = call(capsys, "verify-all", "--order-scale", "0.3", "--reading", "min",
                      "--lenient")
    assert code == 0


def test_json_report_roundtrip(capsys):
    code, out, _ = call(capsys, "dirichlet", "--id", "d57", "--s", "3", "--limit", "500",
                        "--format", "json")
    assert code == 0
    report = Report.from_json(out)
    assert report.to_json() == out.rstrip("\n")
    (entry,) = report.entries
    assert entry.module == "dirichlet" and entry.params == {"limit": 500, "s": 3}


def test_report_roundtrip_with_mismatch():
    r = Report(timestamp="2000-01-01T00:00:00+00:00")
    r.add(ReportEntry("identities", "x", {"order": 3}, "mismatch", [2, 1, 3], None, 1.5, True))
    r.add(ReportEntry("analytic", "y", {}, "match", None, 1e-17, 0.1))
    again = Report.from_json(r.to_json())
    assert again == r and again.to_json() == r.to_json()
    assert r.exit_code() == 1 and r.exit_code(lenient=True) == 0


@pytest.mark.parametrize("check", ["mellin", "theta", "hagis", "hyperbolic", "parastat"])
def test_analytic_checks_pass(capsys, check):
    code, out, _ = call(capsys, "analytic", "--check", check)
    assert code == 0, out


def test_hagis_report_names_the_closer_constant(capsys):
    _, out, _ = call(capsys, "analytic", "--check", "hagis", "--s", "2", "--n", "4000")
    assert "closer to standard" in out


def test_mellin_single_s(capsys):
    code, out, _ = call(capsys, "analytic", "--check", "mellin", "--s", "2", "--format", "json")
    (entry,) = json.loads(out)["entries"]
    assert code == 0 and entry["residual"] < 1e-6


@pytest.mark.parametrize("check", ["det-vs-ssyt", "littlewood"])
def test_schur_checks(capsys, check):
    code, out, _ = call(capsys, "schur", "--check", check, "--m", "2", "--s", "2")
    assert code == 0, out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "eulergas", "sequence", "--id", "theta_ratio2",
                           "--len", "6"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "1,2,2,4,6,8"
