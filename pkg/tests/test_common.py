"""Tests for settings, logging, run tracing and metrics export."""

import json

import structlog

from src.common.config import get_settings
from src.common.logging import get_logger, setup_logging
from src.common.metrics import FORMS_EXAMINED, REGISTRY, write_metrics
from src.common.tracing import census_run, generate_run_id
from src.search import SearchConfig, run_census


class TestSettings:
    def test_defaults(self, monkeypatch):
        for name in ("WORKERS", "LOG_LEVEL", "BRUTE_FORCE_LIMIT"):
            monkeypatch.delenv(f"SEIFCALC_{name}", raising=False)
        settings = get_settings()
        assert settings.workers is None
        assert settings.log_level == "WARNING"
        assert settings.brute_force_limit == 1_000_000
        assert settings.default_max_multiplicity == 12

    def test_env_prefix(self, monkeypatch):
        monkeypatch.setenv("SEIFCALC_DEFAULT_MAX_ABS_H", "250")
        assert get_settings().default_max_abs_h == 250


class TestRunTracing:
    def test_bound_for_the_run(self):
        """Test the run id is in the log context inside the block only."""
        with census_run() as run_id:
            assert structlog.contextvars.get_contextvars()["run_id"] == run_id
        assert "run_id" not in structlog.contextvars.get_contextvars()

    def test_nested_restores_outer(self):
        with census_run("outer123"):
            with census_run("inner456"):
                assert structlog.contextvars.get_contextvars()["run_id"] == "inner456"
            assert structlog.contextvars.get_contextvars()["run_id"] == "outer123"

    def test_census_binds_its_id(self, capsys):
        """Test every census log line carries the census run id."""
        setup_logging("INFO")
        census = run_census(SearchConfig(max_multiplicity=3, max_abs_h=10))
        events = [json.loads(line) for line in capsys.readouterr().err.strip().splitlines()]
        census_events = [e for e in events if e["event"].startswith("census_")]
        assert census_events
        assert {e["run_id"] for e in census_events} == {census.run_id}
        assert "run_id" not in structlog.contextvars.get_contextvars()

    def test_ids_are_unique(self):
        assert len({generate_run_id() for _ in range(50)}) == 50


class TestLogging:
    def test_json_lines_on_stderr(self, capsys):
        """Test events render as JSON with the bound run id."""
        setup_logging("INFO")
        with census_run("abc12345"):
            get_logger("test").info("census_started", blocks=3)
        line = capsys.readouterr().err.strip().splitlines()[-1]
        event = json.loads(line)
        assert event["event"] == "census_started"
        assert event["run_id"] == "abc12345"
        assert event["blocks"] == 3

    def test_level_filter(self, capsys):
        setup_logging("WARNING")
        get_logger("test").info("hidden")
        assert "hidden" not in capsys.readouterr().err


class TestMetrics:
    def test_textfile_export(self, tmp_path):
        FORMS_EXAMINED.inc(0)
        path = tmp_path / "metrics.prom"
        write_metrics(path)
        text = path.read_text()
        assert "census_forms_examined_total" in text
        assert "census_block_duration_seconds" in text
        assert REGISTRY.get_sample_value("census_forms_examined_total") is not None
