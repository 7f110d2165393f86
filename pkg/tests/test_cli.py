"""Tests for the command-line surface and its exit-code contract."""

import json

from src.cli.main import _search_config, build_parser, run_cli
from tests.oracles import brute_universe


class TestCheck:
    def test_obstructed_exit_code(self, capsys):
        """Test an obstructed space exits 10."""
        assert run_cli(["check", "(3,-17)(5,17)(7,17)"]) == 10
        out = capsys.readouterr().out
        assert "H 17" in out
        assert "verdict obstructed" in out

    def test_not_obstructed(self, capsys):
        assert run_cli(["check", "(5,-2)(3,-1)(4,3)"]) == 0
        out = capsys.readouterr().out
        assert "H 1" in out
        assert "H1 0" in out
        assert "torque_profile 2" in out
        assert "label_to_input 1:2 2:3 3:1" in out

    def test_two_fibres_is_usage_error(self, capsys):
        assert run_cli(["check", "(5,-2)(3,-1)"]) == 2
        assert "error" in capsys.readouterr().err

    def test_json(self, capsys):
        assert run_cli(["check", "(3,-17)(5,17)(7,17)", "--json"]) == 10
        payload = json.loads(capsys.readouterr().out)
        assert payload["h"] == 17
        assert payload["obstructed"] is True
        assert payload["form"] == "(3,-17)(5,17)(7,17)"
        assert payload["h1_invariant_factors"] == [17]
        assert payload["input_positions"] == [1, 2, 3]

    def test_json_is_stable(self, capsys):
        run_cli(["check", "(2,-3)(3,1)(7,9)", "--json"])
        first = capsys.readouterr().out
        run_cli(["check", "(2,-3)(3,1)(7,9)", "--json"])
        assert capsys.readouterr().out == first


class TestDrill:
    def test_headline(self, capsys):
        """Test the knot in L(15,4) with every case excluded."""
        assert run_cli(["drill", "(5,-2)(3,-1)(4,3)", "--fibre", "3", "--linking", "0"]) == 0
        assert capsys.readouterr().out.strip() == (
            "ambient L(15,4); summands L(5,3) # L(3,2); "
            "klein:false torus:false cable:false ball:false"
        )

    def test_linking_one(self, capsys):
        assert run_cli(["drill", "(5,-2)(3,-1)(4,3)", "--fibre", "3", "--linking", "1"]) == 0
        assert capsys.readouterr().out.startswith("ambient L(19,4);")

    def test_linking_two(self, capsys):
        assert run_cli(["drill", "(5,-2)(3,-1)(4,3)", "--fibre", "3", "--linking", "2"]) == 0
        assert capsys.readouterr().out.startswith("ambient L(31,4);")

    def test_unsolvable_exit_code(self, capsys):
        """Test linking data with no solution exits 3."""
        code = run_cli(["drill", "(3,-17)(5,17)(7,17)", "--fibre", "1", "--linking", "0"])
        assert code == 3
        assert "error" in capsys.readouterr().err

    def test_negative_sign(self, capsys):
        code = run_cli(
            ["drill", "(3,-17)(5,17)(7,17)", "--fibre", "2", "--linking", "1", "--sign", "-"]
        )
        assert code == 3

    def test_json(self, capsys):
        run_cli(["drill", "(5,-2)(3,-1)(4,3)", "--fibre", "3", "--linking", "0", "--json"])
        payload = json.loads(capsys.readouterr().out)
        assert payload["q"] == 15
        assert payload["cases"] == {"ball": False, "klein": False, "torus": False, "cable": False}


class TestTwist:
    def test_exceptional(self, capsys):
        code = run_cli(["twist", "(5,-2)(3,-1)(4,3)", "--fibre", "3", "--q", "15", "--t", "1"])
        assert code == 0
        out = capsys.readouterr().out
        assert "form (5,-2)(3,-1)(19,14)" in out
        assert "|H1| 1" in out

    def test_ordinary(self, capsys):
        code = run_cli(["twist", "(2,-3)(3,1)(7,9)", "--ordinary", "--n", "1", "--t", "1"])
        assert code == 0
        out = capsys.readouterr().out
        assert "H -32" in out
        assert "|H1| 32" in out

    def test_missing_q(self, capsys):
        assert run_cli(["twist", "(5,-2)(3,-1)(4,3)", "--fibre", "3", "--t", "1"]) == 2


class TestSearch:
    def test_writes_census(self, tmp_path, capsys):
        out_dir = tmp_path / "census"
        assert run_cli(["search", "--max-p", "3", "--max-h", "10", "--out", str(out_dir)]) == 0
        out = capsys.readouterr().out
        assert f"examined {len(brute_universe(3, 10))}" in out
        assert (out_dir / "summary.json").exists()
        assert (out_dir / "obstructed.jsonl").exists()

    def test_no_small_spaces(self, capsys):
        assert run_cli(["search", "--max-p", "1"]) == 2

    def test_sweep_csv(self, tmp_path, capsys):
        code = run_cli(["search", "--max-p", "3,4", "--max-h", "10,20", "--format", "csv"])
        assert code == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "max_multiplicity,max_abs_h,total_examined,total_obstructed"
        assert len(lines) == 5

    def test_json_summary(self, tmp_path, capsys):
        code = run_cli(
            ["search", "--max-p", "4", "--max-h", "20", "--out", str(tmp_path), "--format", "json"]
        )
        assert code == 0
        summary = json.loads(capsys.readouterr().out)
        assert summary["config"]["max_multiplicity"] == 4

    def test_json_is_stable(self, tmp_path, capsys):
        """Test repeated runs print the same document; run id and timing stay in summary.json."""
        argv = ["search", "--max-p", "4", "--max-h", "20", "--json"]
        run_cli([*argv, "--out", str(tmp_path / "first")])
        first = capsys.readouterr().out
        run_cli([*argv, "--out", str(tmp_path / "second")])
        assert capsys.readouterr().out == first
        assert "run_id" not in json.loads(first)
        assert json.loads((tmp_path / "first" / "summary.json").read_text())["run_id"]

    def test_metrics_file(self, tmp_path, monkeypatch, capsys):
        metrics = tmp_path / "census.prom"
        monkeypatch.setenv("SEIFCALC_METRICS_FILE", str(metrics))
        run_cli(["search", "--max-p", "3", "--max-h", "10", "--out", str(tmp_path / "c")])
        assert "census_forms_examined_total" in metrics.read_text()

    def test_env_overrides_workers(self, monkeypatch):
        """Test SEIFCALC_WORKERS wins over --workers."""
        monkeypatch.setenv("SEIFCALC_WORKERS", "3")
        args = build_parser().parse_args(["search", "--workers", "1"])
        assert _search_config(args, 3, 10).worker_count == 3

    def test_flag_used_without_env(self, monkeypatch):
        monkeypatch.delenv("SEIFCALC_WORKERS", raising=False)
        args = build_parser().parse_args(["search", "--workers", "2"])
        assert _search_config(args, 3, 10).worker_count == 2


class TestDinv:
    def test_lens_space(self, capsys):
        assert run_cli(["dinv", "5", "1"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines == ["0 1", "1 1/5", "2 -1/5", "3 -1/5", "4 1/5"]

    def test_obstruction_verdict(self, capsys):
        """Test the integral surgery test exits 10 when it obstructs."""
        assert run_cli(["dinv", "--test", "0,-2/5,-2/5,-8/5,-8/5", "--n", "5"]) == 10
        assert "obstructed: true" in capsys.readouterr().out

    def test_not_obstructed(self, capsys):
        assert run_cli(["dinv", "--test", "1,1/5,-1/5,-1/5,1/5", "--n", "5"]) == 0

    def test_not_coprime(self, capsys):
        assert run_cli(["dinv", "4", "2"]) == 2


class TestProp4:
    def test_family(self, capsys):
        assert run_cli(["prop4", "3", "20"]) == 0
        out = capsys.readouterr().out
        assert "p=3 residues 6 11 7 3 H=17 obstructed holds:true" in out

    def test_precondition(self, capsys):
        assert run_cli(["prop4", "4"]) == 2


class TestParser:
    def test_missing_command(self, capsys):
        assert run_cli([]) == 2

    def test_verbose_logs_to_stderr(self, capsys):
        run_cli(["drill", "(5,-2)(3,-1)(4,3)", "--fibre", "3", "--linking", "0", "-v"])
        captured = capsys.readouterr()
        assert "drill_completed" in captured.err
        assert "drill_completed" not in captured.out
