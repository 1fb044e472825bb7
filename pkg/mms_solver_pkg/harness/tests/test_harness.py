import logging
from math import isnan
from pathlib import Path
from unittest.mock import patch

import pytest

from .. import harness as harness_module
from ..experiment_config import ExperimentConfig
from ..harness import Harness
from ..registry import CheckEntry
from ..report_funcs import CONFIG_FILE, SUMMARY_FILE, run_file_name
from ..suite import Suite


def _crash(config, result):
    raise RuntimeError("not a numerical failure")


@pytest.mark.harness
class TestHarness:
    def test_configured_suite(self, small_config: ExperimentConfig,
                              toy_registry, toy_references, caplog):
        harness = Harness(small_config, toy_registry, toy_references)
        with caplog.at_level(logging.INFO):
            result = harness.run()
        assert [r.check_id for r in result.records] == \
            ["passing", "failing", "with_run"]
        assert [r.passed for r in result.records] == [True, False, True]
        # The worst check of a group sets its margin
        assert result.records[1].margin == -2.0
        assert not result.passed
        assert "failing failed" in caplog.text
        assert "Finished suite kernel" in caplog.text

        out = small_config.output_dir
        assert sorted(p.name for p in out.iterdir()) == \
            sorted([CONFIG_FILE, SUMMARY_FILE, run_file_name("fake")])

    def test_numerical_error_is_recorded(self,
                                         small_config: ExperimentConfig,
                                         toy_registry, toy_references,
                                         caplog):
        harness = Harness(small_config, toy_registry, toy_references)
        with caplog.at_level(logging.WARNING):
            result = harness.run(Suite.PICARD)
        assert len(result) == 1
        record = result.records[0]
        assert not record.passed
        assert isnan(record.margin)
        assert "ZeroDivisionError" in caplog.text
        summary = (small_config.output_dir / SUMMARY_FILE).read_text()
        assert "raising\tref-b\tfalse\tnan" in summary

    def test_check_ids(self, small_config: ExperimentConfig, toy_registry,
                       toy_references):
        harness = Harness(small_config, toy_registry, toy_references)
        result = harness.run(check_ids=["with_run", "passing"])
        # Registry order, not request order
        assert [r.check_id for r in result.records] == \
            ["passing", "with_run"]
        assert result.passed

    def test_unexpected_error_removes_reports(self,
                                              small_config: ExperimentConfig,
                                              toy_registry, toy_references,
                                              caplog):
        registry = toy_registry + (
            CheckEntry("crash", "ref-a", (Suite.KERNEL,), _crash),)
        harness = Harness(small_config, registry, toy_references)
        with pytest.raises(RuntimeError):
            with caplog.at_level(logging.CRITICAL):
                harness.run()
        assert "removing the partial reports" in caplog.text
        assert list(small_config.output_dir.iterdir()) == []
        assert harness.written == []

    def test_write_failure_removes_reports(self,
                                           small_config: ExperimentConfig,
                                           toy_registry, toy_references):
        harness = Harness(small_config, toy_registry, toy_references)
        with patch.object(harness_module, "emit_report",
                          side_effect=OSError("disk full")):
            with pytest.raises(OSError, match="disk full"):
                harness.run()
        assert not (small_config.output_dir / CONFIG_FILE).exists()

    def test_identical_runs_identical_bytes(self, tmp_path: Path,
                                            small_settings, toy_registry,
                                            toy_references):
        contents = list()
        for name in ("first", "second"):
            settings = dict(small_settings, output_dir=str(tmp_path / name))
            config = ExperimentConfig(settings)
            Harness(config, toy_registry, toy_references).run()
            contents.append({
                path.name: path.read_bytes()
                for path in config.output_dir.iterdir()
                if path.name != CONFIG_FILE})
        assert contents[0] == contents[1]

    def test_bad_registry_rejected(self, small_config: ExperimentConfig,
                                   toy_registry, toy_references):
        with pytest.raises(AssertionError, match="without a check"):
            Harness(small_config, toy_registry[:1], toy_references)


@pytest.mark.harness
@pytest.mark.slow
class TestRealChecks:
    """A few cheap registered checks on small grids"""

    @pytest.mark.parametrize("check_id", ["gronwall_inequality",
                                          "picard_uniform_bounds",
                                          "picard_contraction",
                                          "picard_fixed_point",
                                          "normalizing_constant"])
    def test_passes(self, small_config: ExperimentConfig, check_id: str):
        result = Harness(small_config).run(check_ids=[check_id])
        assert result.passed, result.records
