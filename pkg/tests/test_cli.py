from __future__ import annotations

import json
import subprocess
import sys

import pytest

from cycsieve.cli import EXIT_FALSE, EXIT_OK, EXIT_USAGE, main, parse_composition, parse_permutation


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_necklaces_text(capsys):
    code, out, _ = run(capsys, "necklaces", "3,4")
    assert code == EXIT_OK
    assert "C(alpha; q) = 1 + q^2 + q^3 + q^4 + q^6" in out
    assert "necklaces 5, bracelets 4, asymmetric 1" in out


def test_necklaces_json(capsys):
    code, out, _ = run(capsys, "necklaces", "3,4", "--json")
    data = json.loads(out)
    assert code == EXIT_OK and data["verdict"]
    assert data["polynomial"] == ["1", "0", "1", "1", "1", "0", "1"]
    assert (data["necklaces"], data["bracelets"], data["value_at_minus_one"]) == (5, 4, 3)


@pytest.mark.parametrize("alpha", ["1,1", "2,2", "x,3", "", "4,-1"])
def test_necklaces_usage_errors(capsys, alpha):
    code, _, err = run(capsys, "necklaces", alpha)
    assert code == EXIT_USAGE and "error" in err


def test_zero_parts_dropped_with_note(capsys):
    assert parse_composition("3,0,4") == (3, 4)
    assert "zero parts dropped" in capsys.readouterr().err


def test_compact_permutation_fallback():
    tau = parse_permutation("(1)(2408)(3795)(6)", 10)
    assert tau(2) == 4 and tau(10) == 8


def test_csp_check_reflection_on_young(capsys):
    code, out, _ = run(capsys, "csp-check", "--tau", "(1 6)(2 5)(3 4)", "--young", "3,4")
    assert code == EXIT_OK and "CSP verdict: True" in out


def test_csp_check_false_verdict_exit_code(capsys):
    code, out, _ = run(capsys, "csp-check", "--counterexample")
    assert code == EXIT_FALSE
    assert "cycle type (4, 4, 2)" in out and "CSP verdict: False" in out


def test_csp_check_non_free_action(capsys):
    # H contains the full rotation group, so Y(q) = X(q)/[n]_q is not a polynomial
    code, _, err = run(capsys, "csp-check", "--tau", "(1 7)(2 6)(3 5)", "--n", "8",
                       "--gen", "(1 2 3 4 5 6 7 8)")
    assert code == EXIT_USAGE and "error" in err


def test_csp_check_bad_input(capsys):
    code, _, err = run(capsys, "csp-check", "--tau", "(1 2", "--young", "3,4")
    assert code == EXIT_USAGE
    code, _, err = run(capsys, "csp-check", "--young", "3,4")
    assert code == EXIT_USAGE and "--tau" in err


def test_schroder_and_parity(capsys):
    code, out, _ = run(capsys, "schroder", "--bound", "6")
    assert code == EXIT_OK and out.strip().endswith("all pass")
    code, out, _ = run(capsys, "schroder", "--bound", "1", "--json")
    assert code == EXIT_OK and json.loads(out)["rows"] == []
    code, out, _ = run(capsys, "parity-sweep", "--bound", "9")
    assert code == EXIT_OK and "all parity-unimodal" in out


def test_molien(capsys):
    code, out, _ = run(capsys, "molien", "--young", "3,5", "--m", "2", "--json")
    data = json.loads(out)
    assert code == EXIT_OK and data["root_of_unity"]["equal"]
    assert data["invariant_dimensions"][:3] == [1, 2, 5]
    code, _, err = run(capsys, "molien", "--young", "2,2", "--m", "2")
    assert code == EXIT_USAGE


def test_nc_check(capsys):
    code, out, _ = run(capsys, "nc-check", "5", "2")
    assert code == EXIT_OK and "Y_k(q) = 1 + q^2" in out
    code, _, err = run(capsys, "nc-check", "5", "1")
    assert code == EXIT_USAGE and "NonFreeAction" in err


def test_bad_global_flags(capsys):
    code, _, _ = run(capsys, "schroder", "--jobs", "0")
    assert code == EXIT_USAGE


def test_json_identical_across_job_counts(capsys):
    _, one, _ = run(capsys, "schroder", "--bound", "8", "--json", "--jobs", "1")
    _, two, _ = run(capsys, "schroder", "--bound", "8", "--json", "--jobs", "2")
    assert one == two


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cycsieve", "nc-check", "7", "3"],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == EXIT_OK, proc.stderr
