"""End-to-end CLI tests: flags, output schema, exit codes, determinism."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from rigchar.cli import enum_document, parse_enum_document
from rigchar.core import Params

DATA = Path(__file__).parent / "data"


def run_cli(*args, expect: int = 0):
    proc = subprocess.run(
        [sys.executable, "-m", "rigchar", *args],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == expect, (proc.returncode, proc.stderr)
    return proc


class TestEnum:
    def test_k1_all_ones_golden(self):
        proc = run_cli(
            "enum", "--k", "1", "--l1", "1", "--l2", "1", "--l3", "1",
            "--M", "1", "--N", "1",
        )
        assert proc.stdout == (DATA / "enum_k1_all_ones.json").read_text()
        doc = json.loads(proc.stdout)
        counts = {(p["m"], p["n"]): p["count"] for p in doc["pieces"]}
        assert counts == {(0, 0): 1, (1, 1): 1}

    def test_initial_condition_single_element(self):
        proc = run_cli(
            "enum", "--k", "2", "--l1", "2", "--l2", "2", "--l3", "0",
            "--M", "0", "--N", "0",
        )
        doc = json.loads(proc.stdout)
        assert len(doc["pieces"]) == 1
        piece = doc["pieces"][0]
        assert (piece["m"], piece["n"], piece["count"]) == (0, 0, 1)

    def test_empty_output_still_succeeds(self):
        proc = run_cli(
            "enum", "--k", "1", "--l1", "0", "--l2", "0", "--l3", "0",
            "--M", "0", "--N", "0",
        )
        assert json.loads(proc.stdout)["pieces"] == []

    def test_round_trips_through_parser(self):
        p = Params(2, 2, 1, 1, 1, 1)
        doc = enum_document(p)
        parsed = json.loads(json.dumps(doc))
        q, pieces = parse_enum_document(parsed)
        assert q == p
        from rigchar.riggedsets import enumerate_R

        for (m, n), elems in pieces.items():
            assert tuple(elems) == enumerate_R(p, m, n).elements

    def test_invalid_labels_exit_2(self):
        run_cli(
            "enum", "--k", "1", "--l1", "2", "--l2", "0", "--l3", "0",
            "--M", "0", "--N", "0", expect=2,
        )

    def test_jobs_do_not_change_output(self):
        base = [
            "enum", "--k", "2", "--l1", "2", "--l2", "2", "--l3", "1",
            "--M", "2", "--N", "1",
        ]
        one = run_cli(*base, "--jobs", "1")
        many = run_cli(*base, "--jobs", "3")
        assert one.stdout == many.stdout

    def test_jobs_env_var_respected(self):
        import os

        base = [
            sys.executable, "-m", "rigchar",
            "enum", "--k", "2", "--l1", "2", "--l2", "2", "--l3", "1",
            "--M", "1", "--N", "1",
        ]
        env = dict(os.environ, RIGCHAR_JOBS="2")
        with_env = subprocess.run(base, capture_output=True, text=True, env=env)
        plain = subprocess.run(base, capture_output=True, text=True)
        assert with_env.returncode == 0
        assert with_env.stdout == plain.stdout

    def test_text_format(self):
        proc = run_cli(
            "enum", "--k", "1", "--l1", "1", "--l2", "1", "--l3", "1",
            "--M", "1", "--N", "1", "--format", "text",
        )
        lines = proc.stdout.splitlines()
        assert lines[0] == "piece m=0 n=0 count=1"
        assert lines[2] == "piece m=1 n=1 count=1"
        assert "degree=1" in lines[3]


class TestChar:
    def test_text_golden(self):
        proc = run_cli(
            "char", "--k", "1", "--l1", "1", "--l2", "1", "--M", "1", "--N", "1",
            "--format", "text",
        )
        assert proc.stdout == (DATA / "char_k1_l1_1_l2_1_M1_N1.txt").read_text()

    def test_k2_golden(self):
        proc = run_cli(
            "char", "--k", "2", "--l1", "2", "--l2", "1", "--M", "1", "--N", "1",
            "--format", "text",
        )
        assert proc.stdout == (DATA / "char_k2_l1_2_l2_1_M1_N1.txt").read_text()

    def test_k3_golden(self):
        proc = run_cli(
            "char", "--k", "3", "--l1", "2", "--l2", "3", "--M", "1", "--N", "1",
            "--format", "text",
        )
        assert proc.stdout == (DATA / "char_k3_l1_2_l2_3_M1_N1.txt").read_text()

    def test_rejects_l3_flag(self):
        run_cli(
            "char", "--k", "1", "--l1", "1", "--l2", "1", "--l3", "1",
            "--M", "1", "--N", "1", expect=2,
        )

    def test_bruteforce_with_min_l3_matches_char(self):
        closed = run_cli(
            "char", "--k", "2", "--l1", "1", "--l2", "2", "--M", "1", "--N", "1",
            "--format", "text",
        )
        brute = run_cli(
            "char-bruteforce", "--k", "2", "--l1", "1", "--l2", "2", "--l3", "1",
            "--M", "1", "--N", "1", "--format", "text",
        )
        assert closed.stdout == brute.stdout

    def test_bruteforce_golden_with_strict_l3(self):
        proc = run_cli(
            "char-bruteforce", "--k", "2", "--l1", "2", "--l2", "1", "--l3", "0",
            "--M", "1", "--N", "1", "--format", "text",
        )
        assert proc.stdout == (
            DATA / "charbf_k2_l1_2_l2_1_l3_0_M1_N1.txt"
        ).read_text()

    def test_json_terms(self):
        proc = run_cli(
            "char", "--k", "1", "--l1", "1", "--l2", "1", "--M", "1", "--N", "1",
        )
        doc = json.loads(proc.stdout)
        assert doc["terms"] == [
            {"z1": 0, "z2": 0, "q": 0, "coeff": 1},
            {"z1": 1, "z2": 1, "q": 1, "coeff": 1},
        ]


class TestSl2Char:
    def test_golden_value(self):
        proc = run_cli(
            "sl2-char", "--k", "1", "--l", "0", "--M", "0", "--N", "0",
            "--format", "text",
        )
        assert proc.stdout == (DATA / "sl2_k1_l0_M0_N0.txt").read_text()
        poly = proc.stdout.strip()
        assert poly == "1"

    def test_k2_golden(self):
        proc = run_cli(
            "sl2-char", "--k", "2", "--l", "1", "--M", "1", "--N", "1",
            "--format", "text",
        )
        assert proc.stdout == (DATA / "sl2_k2_l1_M1_N1.txt").read_text()


class TestVerify:
    def test_recursion_small_grid_passes(self):
        proc = run_cli(
            "verify", "recursion", "--max-k", "2", "--max-weight", "3",
            "--max-M", "1", "--max-N", "1",
        )
        doc = json.loads(proc.stdout)
        assert doc["status"] == "pass"
        assert doc["points"] > 0

    def test_fermionic_small_grid_passes(self):
        proc = run_cli(
            "verify", "fermionic", "--max-k", "2", "--max-M", "1", "--max-N", "1",
        )
        assert json.loads(proc.stdout)["status"] == "pass"

    def test_missing_weight_bound_exit_2(self):
        run_cli(
            "verify", "recursion", "--max-k", "1", "--max-M", "1", "--max-N", "1",
            expect=2,
        )

    def test_unknown_check_exit_2(self):
        run_cli(
            "verify", "nonsense", "--max-k", "1", "--max-M", "1", "--max-N", "1",
            expect=2,
        )

    def test_corrupted_tau_yields_counterexample(self):
        proc = run_cli(
            "verify", "recursion", "--max-k", "2", "--max-weight", "3",
            "--max-M", "1", "--max-N", "1", "--inject-tau-skew", "1",
            expect=1,
        )
        doc = json.loads(proc.stdout)
        assert doc["status"] == "fail"
        ce = doc["counterexample"]
        assert ce["detail"]["lhs"] != ce["detail"]["rhs"]
        assert "params" in ce["context"]

    def test_jobs_do_not_change_output(self):
        base = [
            "verify", "lower-decomp", "--max-k", "2", "--max-weight", "3",
            "--max-M", "1", "--max-N", "1",
        ]
        one = run_cli(*base, "--jobs", "1")
        many = run_cli(*base, "--jobs", "3")
        assert one.stdout == many.stdout
        assert json.loads(one.stdout)["status"] == "pass"

    @pytest.mark.parametrize(
        "what", ["upper-decomp", "bijection", "char-recursion"]
    )
    def test_remaining_checks_pass(self, what):
        args = ["verify", what, "--max-k", "2", "--max-M", "1", "--max-N", "1"]
        if what != "char-recursion":
            args += ["--max-weight", "3"]
        proc = run_cli(*args)
        assert json.loads(proc.stdout)["status"] == "pass"

    def test_progress_stays_on_stderr(self):
        proc = run_cli(
            "verify", "recursion", "--max-k", "2", "--max-weight", "4",
            "--max-M", "1", "--max-N", "2",
        )
        assert "progress" not in proc.stdout


class TestOutputFile:
    def test_output_flag_writes_file(self, tmp_path):
        out = tmp_path / "char.txt"
        run_cli(
            "char", "--k", "1", "--l1", "1", "--l2", "1", "--M", "1", "--N", "1",
            "--format", "text", "--output", str(out),
        )
        assert out.read_text() == "1 + z1*z2*q\n"
