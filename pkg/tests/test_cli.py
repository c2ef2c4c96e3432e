import json
import subprocess
import sys

import pytest

from knutson.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gb_and_initial(capsys):
    code, out, _ = run(capsys, "gb", "x1*x3 - x2^2, x2")
    assert code == 0 and out.split() == ["x2", "x1*x3"]
    code, out, _ = run(capsys, "initial", "x1*x3 - x2^2", "--order", "grevlex")
    assert code == 0 and "x2^2" in out


def test_parse_error_offset(capsys):
    code, _, err = run(capsys, "gb", "x1*x3-x2^2)")
    assert code == 2
    assert "offset 11" in err


def test_member_and_equal_exit_codes(capsys):
    assert run(capsys, "member", "x1*x3", "x1*x3 - x2^2, x2")[0] == 0
    assert run(capsys, "member", "x1", "x1*x3 - x2^2, x2")[0] == 1
    assert run(capsys, "equal", "x1*x3 - x2^2, x2", "x2, x1*x3")[0] == 0
    assert run(capsys, "equal", "x1", "x2", "--vars", "2")[0] == 1


def test_ideal_operations(capsys):
    code, out, _ = run(capsys, "intersect", "x1, x2", "x2, x3")
    assert code == 0 and out.split() == ["x2", "x1*x3"]
    code, out, _ = run(capsys, "colon", "x1*x2*x3 - x2^3", "x1*x3 - x2^2")
    assert code == 0 and out.split() == ["x2"]
    code, out, _ = run(capsys, "sum", "x1", "x2")
    assert code == 0 and out.split() == ["x2", "x1"]
    code, out, _ = run(capsys, "hilbert", "x1*x3 - x2^2")
    assert code == 0 and "multiplicity=2" in out


def test_usage_errors(capsys):
    assert run(capsys, "gb", "x1^2", "--order", "deglex")[0] == 2
    assert run(capsys, "gb", "x1", "--char", "4")[0] == 2
    assert run(capsys, "gb", "1")[0] == 2  # no variables to infer
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_closure_report(capsys, tmp_path):
    out_file = tmp_path / "family.json"
    code, out, _ = run(capsys, "knutson-closure", "--seed", "x1*x2*x3 - x2^3",
                       "--out", str(out_file))
    assert code == 0 and "checks passed: True" in out
    report = json.loads(out_file.read_text())
    assert len(report["members"]) == 8 and report["complete"]
    assert report["checks"]["passed"]
    assert report["members"][0]["provenance"]["operation"] == "seed"


def test_closure_cap_writes_partial_report(capsys, tmp_path):
    out_file = tmp_path / "partial.json"
    code, _, err = run(capsys, "knutson-closure", "--seed", "x1*x2*x3 - x2^3",
                       "--max-members", "3", "--out", str(out_file))
    assert code == 3 and "more than 3 members" in err
    report = json.loads(out_file.read_text())
    assert len(report["members"]) == 3 and not report["complete"]


def test_closure_rejects_bad_seed(capsys):
    code, _, err = run(capsys, "knutson-closure", "--seed", "x1^2 + x2")
    assert code == 2 and "not squarefree" in err


def test_modp_scan(capsys):
    code, out, _ = run(capsys, "modp", "scan", "--ideal", "2*x1 - x2", "--upto", "50",
                       "--expect-bad", "2")
    assert code == 0 and "bad primes: [2]" in out
    assert run(capsys, "modp", "scan", "--ideal", "2*x1 - x2", "--upto", "50",
               "--expect-bad", "3")[0] == 1


def test_hankel_verify(capsys):
    code, out, _ = run(capsys, "hankel", "verify", "--m", "2", "--shape", "square")
    assert code == 0 and "FAIL" not in out


def test_suite_guard(capsys):
    code, _, err = run(capsys, "suite", "hankel-square", "--m", "99")
    assert code == 2 and "desk-scale" in err


def test_suite_json_is_byte_identical(tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        proc = subprocess.run([sys.executable, "-m", "knutson", "suite", "hankel-square",
                               "--m", "2", "--out", str(p)], capture_output=True)
        assert proc.returncode == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    report = json.loads(paths[0].read_text())
    assert report["passed"] and all(c["passed"] for c in report["checks"])
