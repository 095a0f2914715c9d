"""Exit-status contract and byte-deterministic output of the command line."""

import subprocess
import sys

import pytest

from braidcover import cli, words


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_surface_text_output(capsys):
    code, out, err = run_cli(capsys, "surface", "--d", "4", "--n", "3")
    assert code == 0
    assert out == "b=1 g=3 rank=6\n"
    assert err == ""


def test_surface_structured_output(capsys):
    code, out, _ = run_cli(capsys, "surface", "--d", "4", "--n", "3",
                           "--output-mode", "structured")
    assert code == 0
    assert out == "d=4 n=3 b=1 g=3 rank=6\n"


def test_tables_match_the_published_rows(capsys):
    code, out, _ = run_cli(capsys, "tables", "--d", "4", "--n-max", "8",
                           "--output-mode", "structured")
    assert code == 0
    b_row = [line.split()[2] for line in out.splitlines()]
    g_row = [line.split()[3] for line in out.splitlines()]
    assert b_row == ["b=1", "b=2", "b=1", "b=4", "b=1", "b=2", "b=1", "b=4"]
    assert g_row == ["g=0", "g=1", "g=3", "g=3", "g=6", "g=7", "g=9", "g=9"]


def test_lift_prints_edge_images_in_order(capsys):
    code, out, _ = run_cli(capsys, "lift", "--d", "3", "--n", "2", "--i", "1")
    assert code == 0
    assert out.splitlines() == [
        "e[0,1] -> e[0,1]*e[1,2]",
        "e[0,2] -> e[0,2]*e[1,3]",
        "e[0,3] -> e[0,3]*e[1,1]",
        "e[1,1] -> e[1,2]^-1",
        "e[1,2] -> e[1,3]^-1",
        "e[1,3] -> e[1,1]^-1",
        "e[2,1] -> e[1,1]*e[2,1]",
        "e[2,2] -> e[1,2]*e[2,2]",
        "e[2,3] -> e[1,3]*e[2,3]",
    ]


def test_dehn_prints_the_twist_table(capsys):
    code, out, _ = run_cli(capsys, "dehn", "--d", "3", "--n", "2", "--i", "1",
                           "--j", "2", "--output-mode", "structured")
    assert code == 0
    assert "edge=e[1,1] image=e[1,2]^-1*e[1,1]*e[1,2]^-1" in out.splitlines()


def test_aut_prints_generator_images(capsys):
    code, out, _ = run_cli(capsys, "aut", "--d", "3", "--n", "2", "--i", "1")
    assert code == 0
    assert out.splitlines() == ["x[1,1] -> x[1,2]^-1", "x[1,2] -> x[1,2]*x[1,1]"]


def test_eval_of_a_cancelling_word_prints_the_identity(capsys):
    code, out, _ = run_cli(capsys, "eval", "--d", "3", "--n", "2", "--word", "1 -1")
    assert code == 0
    assert out.splitlines() == ["x[1,1] -> x[1,1]", "x[1,2] -> x[1,2]"]


def test_matrix_output(capsys):
    code, out, _ = run_cli(capsys, "matrix", "--d", "3", "--n", "2", "--word", "1")
    assert code == 0
    assert [line.split() for line in out.splitlines()] == [["0", "-1"], ["1", "1"]]


def test_verify_all_passes_with_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "verify", "--d", "3", "--n", "4", "--suite", "all")
    assert code == 0
    lines = out.splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].endswith("checks passed")


def test_verify_structured_records(capsys):
    code, out, _ = run_cli(capsys, "verify", "--d", "2", "--n", "3",
                           "--suite", "relations", "--output-mode", "structured")
    assert code == 0
    for line in out.splitlines():
        assert line.startswith("check=") and "status=pass" in line


def test_output_is_byte_identical_across_runs(capsys):
    first = run_cli(capsys, "verify", "--d", "4", "--n", "3", "--suite", "all")
    second = run_cli(capsys, "verify", "--d", "4", "--n", "3", "--suite", "all")
    assert first == second


def test_range_violation_names_the_parameter(capsys):
    code, out, err = run_cli(capsys, "aut", "--d", "3", "--n", "3", "--i", "7")
    assert code == 2
    assert out == ""
    assert "i" in err and "7" in err


def test_bad_braid_word_is_a_usage_error(capsys):
    code, _, err = run_cli(capsys, "eval", "--d", "3", "--n", "3", "--word", "1 spam")
    assert code == 2
    assert "error:" in err


def test_missing_flags_exit_with_usage_status(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["surface", "--d", "4"])
    assert exc.value.code == 2


def test_unknown_command_exits_with_usage_status(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["spectacle"])
    assert exc.value.code == 2


def test_budget_exhaustion_is_a_runtime_failure(capsys, monkeypatch):
    monkeypatch.setattr(words, "LETTER_BUDGET", 4)
    code, _, err = run_cli(capsys, "eval", "--d", "5", "--n", "5",
                           "--word", "1 2 3 4 1 2 3 4")
    assert code == 1
    assert "budget" in err


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "braidcover.cli", "surface", "--d", "5", "--n", "5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "b=5 g=6 rank=16\n"
