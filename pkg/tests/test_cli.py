import json
import subprocess
import sys

import pytest

from orient_turan.cli import main, parse_pattern
from orient_turan.d6 import digraph6_encode
from orient_turan.errors import ParseError
from orient_turan.graphs import random_oriented_graph, transitive_tournament


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestPatternSpecs:
    def test_tt(self):
        assert parse_pattern(["tt4"]).order == 4

    def test_kst(self):
        p = parse_pattern(["kst", "2", "3"])
        assert p.order == 5 and p.is_antidirected

    def test_d6(self):
        spec = "d6:" + digraph6_encode(transitive_tournament(3))
        assert parse_pattern([spec]).order == 3

    def test_rejects_garbage(self):
        for bad in (["ttx"], ["kst", "2"], ["??"], ["kst", "a", "b"]):
            with pytest.raises(ParseError):
                parse_pattern(bad)


class TestConstruct:
    def test_tt_text(self, capsys):
        code, out, _ = run_cli(capsys, "construct", "tt", "2", "--format", "text")
        assert code == 0
        assert out == "&A" + chr(79) + "\n"

    def test_turan_count(self, capsys):
        code, out, _ = run_cli(capsys, "construct", "turan-count", "6", "3", "--format", "text")
        assert code == 0 and out.strip() == "12"

    def test_blowup(self, capsys):
        code, out, _ = run_cli(
            capsys, "construct", "cycle", "3", "--format", "text"
        )
        base = out.strip()
        code, out, _ = run_cli(
            capsys, "construct", "blowup", base, "2", "2", "2", "--format", "text"
        )
        assert code == 0
        from orient_turan.d6 import digraph6_decode

        g = digraph6_decode(out.strip())
        assert g.n == 6 and g.arc_count == 12

    def test_bad_arity_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "construct", "tt", "--format", "text")
        assert code == 2
        assert json.loads(err)["error"] == "ParseError"


class TestCountProfile:
    def test_count_roundtrip(self, tmp_path, capsys):
        path = tmp_path / "graphs.d6"
        graphs = [transitive_tournament(5), random_oriented_graph(6, 0.5, 3)]
        path.write_text("".join(digraph6_encode(g) + "\n" for g in graphs))
        code, out, _ = run_cli(capsys, "count", "--input", str(path), "--pattern", "tt3")
        assert code == 0
        payload = json.loads(out)
        assert payload["results"][0]["count"] == 10

    def test_profile(self, tmp_path, capsys):
        path = tmp_path / "one.d6"
        path.write_text(digraph6_encode(transitive_tournament(5)) + "\n")
        code, out, _ = run_cli(capsys, "profile", "--input", str(path), "--rmax", "5")
        payload = json.loads(out)
        assert payload["results"][0]["counts"] == [5, 10, 10, 5, 1]

    def test_missing_file(self, capsys):
        code, _, err = run_cli(capsys, "count", "--input", "/nonexistent", "--pattern", "tt3")
        assert code == 2

    def test_malformed_d6_file(self, tmp_path, capsys):
        path = tmp_path / "bad.d6"
        path.write_text("&B\n")
        code, _, err = run_cli(capsys, "count", "--input", str(path), "--pattern", "tt3")
        assert code == 2
        record = json.loads(err)
        assert record["error"] == "ParseError" and "offset" in record


class TestExoAndZ:
    def test_exo_value(self, capsys):
        code, out, _ = run_cli(capsys, "exo", "--n", "6", "--pattern", "tt3")
        assert code == 0
        payload = json.loads(out)
        assert payload["value"] == 12
        assert payload["exact"] is True
        assert payload["elapsed_seconds"] is None

    def test_exo_budget_exhaustion_exit_code(self, capsys):
        code, out, _ = run_cli(
            capsys, "exo", "--n", "6", "--pattern", "tt3", "--node-budget", "20"
        )
        assert code == 3
        assert json.loads(out)["exact"] is False

    def test_z_value(self, capsys):
        code, out, _ = run_cli(capsys, "z", "--pattern", "tt3", "--kmax", "4")
        assert code == 0
        payload = json.loads(out)
        assert payload["value"] == 4
        assert payload["per_k"] == {"2": False, "3": False, "4": True}
        assert "3" in payload["counterexamples"]


class TestVerifyCommand:
    def test_p31a_exit_zero(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "p31a")
        assert code == 0
        payload = json.loads(out)
        assert payload["theorem"] == "P3.1a" and payload["violations"] == []

    def test_p21_text_format(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "p21", "--format", "text")
        assert code == 0
        assert out.startswith("P2.1: OK")

    def test_t16_reports(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "t16", "--n", "4")
        assert code == 0
        payload = json.loads(out)
        assert [p["theorem"] for p in payload] == ["T1.6", "P3.1b"]

    def test_supersat_small(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "supersat", "--samples", "50")
        assert code == 0

    def test_omm_small_sample_finds_violations(self, capsys):
        # the copy-ratio sweep legitimately finds counterexamples, so the
        # exit code signals violations
        code, out, _ = run_cli(capsys, "verify", "omm", "--samples", "400")
        assert code == 1
        payload = json.loads(out)
        assert payload["parameters"]["violation_total"] > 0

    def test_determinism_byte_identical(self, capsys):
        _, first, _ = run_cli(capsys, "verify", "supersat", "--samples", "60", "--seed", "9")
        _, second, _ = run_cli(capsys, "verify", "supersat", "--samples", "60", "--seed", "9")
        assert first == second

    def test_workers_do_not_change_output(self, capsys):
        _, serial, _ = run_cli(
            capsys, "verify", "t19", "--samples", "300", "--seed", "4", "--workers", "1"
        )
        _, parallel, _ = run_cli(
            capsys, "verify", "t19", "--samples", "300", "--seed", "4", "--workers", "3"
        )
        assert serial == parallel


class TestGen:
    def test_small_stream(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "--n", "2", "--format", "text")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 3
        from orient_turan.d6 import digraph6_decode

        for line in lines:
            digraph6_decode(line).validate()

    def test_arc_filter(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "--n", "3", "--arcs", "3")
        assert len(out.strip().splitlines()) == 8

    def test_budget_guard(self, capsys):
        code, _, err = run_cli(capsys, "gen", "--n", "7")
        assert code == 3
        assert json.loads(err)["error"] == "BudgetError"

    def test_limit_overrides_guard(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "--n", "7", "--limit", "5")
        assert code == 0
        assert len(out.strip().splitlines()) == 5

    def test_output_file(self, tmp_path, capsys):
        path = tmp_path / "out.d6"
        code, out, _ = run_cli(capsys, "gen", "--n", "2", "--output", str(path))
        assert code == 0 and out == ""
        assert len(path.read_text().strip().splitlines()) == 3


class TestProcessLevel:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "orient_turan.cli", "construct", "turan-count", "5", "3",
             "--format", "text"],
            capture_output=True,
            text=True,
            timeout=120,
        )
        assert proc.returncode == 0
        assert proc.stdout.strip() == "8"

    def test_usage_error_exit_two(self):
        proc = subprocess.run(
            [sys.executable, "-m", "orient_turan.cli", "frobnicate"],
            capture_output=True,
            text=True,
            timeout=120,
        )
        assert proc.returncode == 2
