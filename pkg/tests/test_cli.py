"""Tests for the command-line interface: schemas, exit codes, determinism."""

from __future__ import annotations

import json
import subprocess
import sys

from hybridseq import HybridNumber
from hybridseq.cli import main

EXPECTED_TABLE = """\
×       1       i       ε       h
1       1       i       ε       h
i       i       -1      1-h     ε+i
ε       ε       1+h     0       -ε
h       h       -(ε+i)  ε       1
"""


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTable:
    def test_golden_output(self, capsys):
        code, out, _ = run_cli(capsys, "table")
        assert code == 0
        assert out == EXPECTED_TABLE

    def test_cells(self, capsys):
        _, out, _ = run_cli(capsys, "table")
        rows = [line.split() for line in out.splitlines()]
        grid = {(row[0], col): cell for row in rows[1:] for col, cell in zip(rows[0][1:], row[1:])}
        assert grid[("i", "ε")] == "1-h"
        assert grid[("ε", "ε")] == "0"
        assert grid[("h", "i")] == "-(ε+i)"


class TestSeq:
    def test_hybrid_lines(self, capsys):
        code, out, _ = run_cli(
            capsys, "seq", "--p", "1", "--q", "1", "--a", "0", "--b", "1",
            "--from", "0", "--to", "1", "--kind", "hybrid",
        )
        assert code == 0
        lines = [json.loads(line) for line in out.splitlines()]
        assert lines == [
            {"n": 0, "hybrid": {"s": "0", "i": "1", "e": "1", "h": "2"}},
            {"n": 1, "hybrid": {"s": "1", "i": "1", "e": "2", "h": "3"}},
        ]

    def test_scalar_zero(self, capsys):
        code, out, _ = run_cli(
            capsys, "seq", "--p", "1", "--q", "1", "--from", "0", "--to", "0",
            "--kind", "scalar",
        )
        assert code == 0
        assert out.strip() == '{"n":0,"value":"0"}'

    def test_negative_range_and_rational_values(self, capsys):
        code, out, _ = run_cli(
            capsys, "seq", "--p", "1", "--q", "2", "--kind", "scalar",
            "--from", "-2", "--to", "0", "--seq", "fib",
        )
        assert code == 0
        values = [json.loads(line)["value"] for line in out.splitlines()]
        assert values == ["-1/4", "1/2", "0"]

    def test_bad_range_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "seq", "--p", "1", "--q", "1", "--from", "3", "--to", "1")
        assert code == 2
        assert "error" in err

    def test_round_trip(self, capsys):
        _, out, _ = run_cli(capsys, "seq", "--p", "2", "--q", "-1", "--from", "0", "--to", "5")
        for line in out.splitlines():
            payload = json.loads(line)
            z = HybridNumber.from_json_dict(payload["hybrid"])
            assert z.to_json_dict() == payload["hybrid"]

    def test_csv(self, capsys):
        code, out, _ = run_cli(
            capsys, "seq", "--p", "1", "--q", "1", "--from", "0", "--to", "1", "--format", "csv",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n,s,i,e,h"
        assert lines[1] == "0,0,1,1,2"


class TestBinet:
    def test_method_tag_and_agreement(self, capsys):
        code, out, _ = run_cli(
            capsys, "binet", "--p", "1", "--q", "1", "--from", "-3", "--to", "8"
        )
        assert code == 0
        for line in out.splitlines():
            assert json.loads(line)["method"] == "binet"

    def test_q_zero_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "binet", "--p", "1", "--q", "0", "--from", "0", "--to", "1")
        assert code == 2
        assert "nonzero" in err


class TestChar:
    def test_null_class(self, capsys):
        code, out, _ = run_cli(capsys, "char", "0,0,1,0")
        assert code == 0
        assert json.loads(out) == {"character": "0", "norm_value": 0.0, "norm_class": "null"}

    def test_real_unit(self, capsys):
        _, out, _ = run_cli(capsys, "char", "1,0,0,0")
        assert json.loads(out) == {"character": "1", "norm_value": 1.0, "norm_class": "positive"}

    def test_negative_class(self, capsys):
        _, out, _ = run_cli(capsys, "char", "0,2,1,1")
        assert json.loads(out) == {"character": "-1", "norm_value": 1.0, "norm_class": "negative"}

    def test_rational_components(self, capsys):
        _, out, _ = run_cli(capsys, "char", "1/2,0,0,0")
        assert json.loads(out)["character"] == "1/4"

    def test_parse_failure(self, capsys):
        code, _, err = run_cli(capsys, "char", "1,2,3")
        assert code == 2 and "error" in err
        code, _, err = run_cli(capsys, "char", "a,b,c,d")
        assert code == 2


class TestExpand:
    def test_matches_sequence(self, capsys):
        code, out, _ = run_cli(
            capsys, "expand", "--p", "1", "--q", "1", "--terms", "8"
        )
        assert code == 0
        lines = [json.loads(line) for line in out.splitlines()]
        assert len(lines) == 9
        assert all(line["matches_seq"] for line in lines)
        assert lines[5]["coeff"] == {"s": "5", "i": "8", "e": "13", "h": "21"}


class TestVerify:
    def test_single_suite_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "cassini")
        assert code == 0
        lines = out.splitlines()
        summary = json.loads(lines[-1])["summary"]
        assert summary["suite"] == "cassini"
        assert summary["all_authoritative_pass"] is True
        assert summary["verdicts"]["all-fail"] == 0

    def test_audit_includes_variants(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--suite", "diag-commutator", "--audit"
        )
        assert code == 0
        cases = [json.loads(line) for line in out.splitlines()[:-1]]
        flagged = [c for c in cases if c["verdict"] == "printed-fails-variant-passes"]
        assert flagged
        sample = flagged[0]
        labels = {v["label"]: v for v in sample["variants"]}
        assert not labels["printed"]["pass"]
        assert labels["sign-corrected"]["pass"] and labels["sign-corrected"]["authoritative"]
        assert "lhs" in sample

    def test_missing_grid_file(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--grid", "/nonexistent/grid.txt")
        assert code == 2 and "error" in err

    def test_grid_file(self, capsys, tmp_path):
        grid = tmp_path / "grid.txt"
        grid.write_text("p=1\nq=1\nab=0:1\nnmax=3\nrmax=2\n")
        code, out, _ = run_cli(capsys, "verify", "--suite", "catalan", "--grid", str(grid))
        assert code == 0
        summary = json.loads(out.splitlines()[-1])["summary"]
        # m in [0,3] with r <= min(m,2) gives 9 cases, plus 5*3 extended probes
        assert summary["cases"] == 9 + 15

    def test_bad_grid_config(self, capsys, tmp_path):
        grid = tmp_path / "grid.txt"
        grid.write_text("q=0\n")
        code, _, err = run_cli(capsys, "verify", "--grid", str(grid))
        assert code == 2

    def test_unknown_suite(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--suite", "fermat")
        assert code == 2

    def test_csv_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--suite", "adjacent-commutator", "--format", "csv"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "identity,p,q,a,b,indices,extended,verdict,lhs_s,lhs_i,lhs_e,lhs_h"
        assert all(line.split(",")[0] == "adjacent-commutator" for line in lines[1:])

    def test_determinism_double_invocation(self, capsys):
        _, first, _ = run_cli(capsys, "verify", "--suite", "square-difference", "--audit")
        _, second, _ = run_cli(capsys, "verify", "--suite", "square-difference", "--audit")
        assert first == second


class TestEntryPoint:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "hybridseq", "seq", "--p", "1", "--q", "1",
             "--from", "0", "--to", "0", "--kind", "scalar"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.strip() == '{"n":0,"value":"0"}'

    def test_missing_subcommand_is_usage_error(self):
        proc = subprocess.run(
            [sys.executable, "-m", "hybridseq"], capture_output=True, text=True
        )
        assert proc.returncode == 2
