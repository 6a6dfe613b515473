"""Command-line interface: golden stdout, JSON payloads, exit codes."""

import json

import pytest

from motzkin_autocount import cli

MOTZKIN_LINE = "1,1,2,4,9,21,51,127,323,835,2188"


def test_seq_unrestricted(run_cli):
    rc, out, err = run_cli("seq", "--N", "10")
    assert (rc, err) == (0, "")
    assert out == MOTZKIN_LINE + "\n"


def test_seq_run_avoidance(run_cli):
    rc, out, _ = run_cli("seq", "--C", "{1}", "--D", "{1}", "--E", "{1}",
                         "--N", "11")
    assert rc == 0
    assert out == "1,0,1,1,2,1,5,4,12,13,34,38\n"


def test_seq_odd_heights(run_cli):
    rc, out, _ = run_cli("seq", "--A", "{2*r+1}", "--B", "{2*r+1}", "--N", "11")
    assert rc == 0
    assert out == "1,1,1,1,2,6,16,36,73,145,301,661\n"


def test_seq_dyck_reduction(run_cli):
    rc, out, _ = run_cli("seq", "--E", "{r+1}", "--N", "30")
    assert rc == 0
    values = [int(v) for v in out.strip().split(",")]
    assert values[0::2] == [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796,
                            58786, 208012, 742900, 2674440, 9694845]
    assert set(values[1::2]) == {0}


def test_seq_json_payload(run_cli):
    rc, out, _ = run_cli("seq", "--N", "6", "--format", "json")
    assert rc == 0
    payload = json.loads(out)
    assert payload["schema"] == "motzkin-autocount/1"
    assert payload["command"] == "seq"
    assert payload["values"] == [1, 1, 2, 4, 9, 21, 51]
    assert payload["spec"]["peaks"] == "{}"


def test_seq_rejects_height_zero_with_pointer(run_cli):
    rc, out, err = run_cli("seq", "--A", "{0}", "--N", "5")
    assert rc == 1
    assert out == ""
    assert err.startswith("error:")
    assert "fab" in err


def test_seq_rejects_negative_length(run_cli):
    rc, _, err = run_cli("seq", "--N", "-3")
    assert rc == 1 and err.startswith("error:")


def test_oracle_counts(run_cli):
    rc, out, _ = run_cli("oracle", "--N", "10")
    assert rc == 0
    assert out == MOTZKIN_LINE + "\n"


def test_oracle_path_listing(run_cli):
    rc, out, _ = run_cli("oracle", "--N", "5", "--A", "{2*r+1}",
                         "--B", "{2*r+1}", "--paths")
    assert rc == 0
    assert out.splitlines() == ["UUDDF", "UUDFD", "UUFDD", "UFUDD",
                                "FUUDD", "FFFFF"]


def test_oracle_json_paths(run_cli):
    rc, out, _ = run_cli("oracle", "--N", "2", "--paths", "--format", "json")
    payload = json.loads(out)
    assert (rc, payload["paths"]) == (0, ["UD", "FF"])


def test_oracle_respects_the_guard(run_cli, monkeypatch):
    monkeypatch.setenv("MOTZKIN_ORACLE_GUARD", "8")
    rc, _, err = run_cli("oracle", "--N", "25")
    assert rc == 1
    assert "MOTZKIN_ORACLE_GUARD" in err


def test_guess_motzkin(run_cli):
    rc, out, _ = run_cli("guess", "--N", "30", "--maxp", "2", "--maxx", "2")
    assert rc == 0
    assert out == "x^2*P^2 + (x-1)*P + 1\n"


def test_guess_run_spec_cubic(run_cli):
    rc, out, _ = run_cli("guess", "--D", "{1}", "--E", "{1}", "--N", "40",
                         "--maxp", "3", "--maxx", "6")
    assert rc == 0
    assert out == ("x^6*P^3 + (x^6-x^5+x^4-x^3+x^2)*P^2"
                   " + (-x^4+x^3-x^2+x-1)*P + x^2 - x + 1\n")


def test_guess_not_found_exit_code(run_cli):
    rc, out, _ = run_cli("guess", "--C", "{1,2,3}", "--N", "30",
                         "--maxp", "2", "--maxx", "2")
    assert rc == 3
    assert out == "NOT_FOUND\n"


def test_guess_insufficient_terms(run_cli):
    rc, _, err = run_cli("guess", "--N", "6", "--maxp", "4", "--maxx", "4")
    assert rc == 1
    assert "need at least" in err


def test_fab_default_is_motzkin(run_cli):
    rc, out, _ = run_cli("fab")
    assert rc == 0
    assert out == "x^2*P^2 + (x-1)*P + 1\n"


def test_fab_finite_sets_json(run_cli, fab_goldens):
    _, _, want, _ = fab_goldens["finite_14_13"]
    rc, out, _ = run_cli("fab", "--A", "{1,4}", "--B", "{1,3}",
                         "--format", "json")
    assert rc == 0
    payload = json.loads(out)
    assert payload["schema"] == "motzkin-autocount/1"
    assert payload["spec"]["peaks"] == "{1,4}"
    assert payload["polynomial"]["text"] == want
    assert payload["polynomial"]["terms"][-1]["coeff"] == "1"


def test_fcde_quintic(run_cli, fcde_goldens):
    _, _, want, _ = fcde_goldens["up_123"]
    rc, out, _ = run_cli("fcde", "--C", "{1,2,3}")
    assert rc == 0
    assert out == want + "\n"


def test_fcde_progression_sets(run_cli, fcde_goldens):
    _, _, want, _ = fcde_goldens["up_odd_flat_even"]
    rc, out, _ = run_cli("fcde", "--C", "{2*r+1}", "--E", "{2*r+2}")
    assert rc == 0
    assert out == want + "\n"


def test_verify_unrestricted(run_cli):
    rc, out, _ = run_cli("verify", "--N", "10")
    assert (rc, out) == (0, "PASS,PASS\n")


def test_verify_odd_heights(run_cli):
    rc, out, _ = run_cli("verify", "--A", "{2*r+1}", "--B", "{2*r+1}",
                         "--N", "12")
    assert (rc, out) == (0, "PASS,PASS\n")


def test_verify_run_lengths(run_cli):
    rc, out, _ = run_cli("verify", "--C", "{1}", "--D", "{1}", "--E", "{1}",
                         "--N", "12")
    assert (rc, out) == (0, "PASS,PASS\n")


def test_verify_mixed_spec_skips_the_symbolic_check(run_cli):
    rc, out, _ = run_cli("verify", "--A", "{1}", "--C", "{2}", "--N", "8")
    assert (rc, out) == (0, "PASS,SKIP\n")


def test_verify_reports_internal_inconsistency(run_cli, monkeypatch):
    monkeypatch.setattr(cli, "series_vanishes", lambda *a, **k: False)
    rc, out, _ = run_cli("verify", "--N", "6")
    assert rc == 2
    assert out == "PASS,FAIL\n"


def test_verify_json_check_names(run_cli):
    rc, out, _ = run_cli("verify", "--N", "6", "--format", "json")
    payload = json.loads(out)
    assert rc == 0
    assert payload["checks"] == {"dp_vs_oracle": "PASS",
                                 "symbolic_series": "PASS"}


def test_help_and_usage_exit_codes(run_cli, capsys):
    assert cli.main(["--help"]) == 0
    capsys.readouterr()
    assert cli.main([]) == 1
    capsys.readouterr()
    assert cli.main(["frobnicate"]) == 1
    capsys.readouterr()
    rc, _, _ = run_cli("seq", "--A", "{oops}", "--N", "3")
    assert rc == 1
