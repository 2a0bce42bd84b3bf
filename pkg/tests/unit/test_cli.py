# tests/unit/test_cli.py
# CLI de punta a punta con run(argv): salida en stdout y códigos de salida.
import json

import pytest

from app.main import EXIT_FAILS, EXIT_OK, EXIT_USAGE, build_parser, exit_code, run
from app.models import VerdictEnum


def test_01_count_prints_one_json_document(capsys):
    code = run(["count", "--q", "3", "--ell", "1", "--k", "1", "--class", "0"])
    out = capsys.readouterr().out.strip().splitlines()
    assert code == EXIT_OK
    assert len(out) == 1
    doc = json.loads(out[0])
    assert doc["counts"] == [1, 1, 1] and doc["class"] == [0]


def test_02_count_without_class_lists_every_class(capsys):
    assert run(["count", "--q", "3", "--ell", "1", "--d", "2"]) == EXIT_OK
    docs = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert [d["class"] for d in docs] == [[0], [1], [2]]


def test_03_aj_single_method_prints_bare_value(capsys):
    assert run(["aj", "--p", "2", "--j", "2", "--u", "4", "--w", "1/2", "--method", "perm"]) == EXIT_OK
    assert capsys.readouterr().out == "4\n"


def test_04_usage_errors_exit_with_three(capsys):
    assert run(["count", "--q", "3"]) == EXIT_USAGE
    assert run(["count", "--q", "3", "--ell", "1", "--k", "1", "--precision", "64"]) == EXIT_USAGE
    assert run(["count", "--q", "6", "--ell", "1", "--k", "1"]) == EXIT_USAGE
    assert run(["count", "--q", "5", "--ell", "2", "--k", "3", "--bruteforce", "--budget", "10"]) == EXIT_USAGE
    assert "❌" in capsys.readouterr().err


def test_05_help_exits_cleanly(capsys):
    assert run(["--help"]) == EXIT_OK
    assert "rsdist" in capsys.readouterr().out


def test_06_verdicts_drive_the_exit_code(capsys):
    assert run(["region", "thm7", "--p", "2", "--q", "32", "--k", "15", "--ell", "1", "--branch", "b"]) == EXIT_OK
    assert run(["region", "thm7", "--p", "2", "--q", "32", "--k", "28", "--ell", "1", "--branch", "b"]) == EXIT_FAILS
    docs = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert [d["verdict"] for d in docs] == ["holds", "fails"]


def test_07_margins_match_expectations(capsys):
    assert run(["margins"]) == EXIT_OK
    docs = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert len(docs) == 17
    assert {d["params"]["case"] for d in docs if d["verdict"] == "fails"} == {"2a-bottom"}


def test_08_output_file(tmp_path, capsys):
    target = tmp_path / "figure.csv"
    assert run(["figure", "--primes", "2", "--step", "1/10", "--out", str(target)]) == EXIT_OK
    assert capsys.readouterr().out == ""
    lines = target.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "p,c,f_lo,f_hi,sign" and len(lines) == 10


@pytest.mark.parametrize(
    "statuses,code",
    [
        ([], 0),
        ([VerdictEnum.holds], 0),
        ([VerdictEnum.unknown, VerdictEnum.holds], 2),
        ([VerdictEnum.unknown, VerdictEnum.fails], 1),
    ],
)
def test_09_exit_code_precedence(statuses, code):
    assert exit_code(statuses) == code


def test_10_every_subcommand_is_registered():
    choices = build_parser()._subparsers._group_actions[0].choices
    for name in ("field-info", "distance", "nfr", "count", "wj", "moments", "distribution",
                 "scan-deepholes", "aj", "bound", "pbound", "compare-liwan", "region",
                 "margins", "figure", "verify-all"):
        assert name in choices


def test_11_constants_by_prime_report_coverage(capsys):
    assert run(["region", "thm23", "--p", "3"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["q0"] == 81
    assert doc["coverage"] == [
        {"c": "1/27", "cases": ["1b", "2b"], "certified": ["1b", "2b"]},
        {"c": "7/10", "cases": ["2b"], "certified": ["2b"]},
    ]
