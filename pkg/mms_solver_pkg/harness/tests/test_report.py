import csv
from math import nan
from pathlib import Path

import pytest

from ..report_funcs import CONSTANTS_FILE, SUMMARY_FILE, emit_report
from ..report_funcs import format_float, run_file_name
from ..suite_result import CheckRecord, SuiteResult


def _result() -> SuiteResult:
    result = SuiteResult()
    result.records.append(CheckRecord("first", "ref-a", True, 0.25, 1.5))
    result.records.append(CheckRecord("second", "ref-b", False, nan, 0.1))
    return result


@pytest.mark.harness
class TestEmitReport:
    def test_empty_runs_give_summary_only(self, tmp_path: Path):
        paths = emit_report(_result(), {}, tmp_path)
        assert paths == [tmp_path / SUMMARY_FILE]
        assert sorted(p.name for p in tmp_path.iterdir()) == [SUMMARY_FILE]

    def test_summary_contents(self, tmp_path: Path):
        emit_report(_result(), {}, tmp_path)
        lines = (tmp_path / SUMMARY_FILE).read_text().splitlines()
        assert lines == ["check_id\tpaper_ref\tpass\tmargin\tseconds",
                         "first\tref-a\ttrue\t0.25\t",
                         "second\tref-b\tfalse\tnan\t"]

    def test_summary_header(self, tmp_path: Path):
        emit_report(SuiteResult(), {}, tmp_path)
        with (tmp_path / SUMMARY_FILE).open() as f:
            header = next(csv.reader(f, delimiter="\t"))
        assert tuple(header) == \
            ("check_id", "paper_ref", "pass", "margin", "seconds")
        assert CheckRecord("c", "r", True, 0.0).row().keys() == \
            set(header)

    def test_timings(self, tmp_path: Path):
        emit_report(_result(), {}, tmp_path, record_timings=True)
        lines = (tmp_path / SUMMARY_FILE).read_text().splitlines()
        assert lines[1].endswith("\t1.500")

    def test_run_of_100_records(self, tmp_path: Path, fake_run):
        emit_report(_result(), {"desk": fake_run(100)}, tmp_path)
        lines = (tmp_path / run_file_name("desk")).read_text().splitlines()
        assert len(lines) == 101
        assert lines[0] == "t\tlinf\tlip\ttheory_bound\tmodulus_min_margin"
        assert lines[1] == "0\t1\t1\t2\t0.5"
        assert not (tmp_path / CONSTANTS_FILE).exists()

    def test_identical_inputs_give_identical_bytes(self, tmp_path: Path,
                                                   fake_run,
                                                   theory_constants):
        outputs = list()
        for name in ("a", "b"):
            out = tmp_path / name
            emit_report(_result(),
                        {"desk": fake_run(10, theory_constants)}, out)
            outputs.append({path.name: path.read_bytes()
                            for path in sorted(out.iterdir())})
        assert outputs[0] == outputs[1]
        assert len(outputs[0]) == 3

    def test_constants_file(self, tmp_path: Path, fake_run,
                            theory_constants):
        emit_report(_result(), {"desk": fake_run(2, theory_constants),
                                "plain": fake_run(2)}, tmp_path)
        lines = (tmp_path / CONSTANTS_FILE).read_text().splitlines()
        assert lines[0] == "run\tname\tvalue\tformula"
        names = [line.split("\t")[1] for line in lines[1:]]
        assert names == ["M0", "M1", "kappa0", "T0", "c_dalpha", "B",
                         "delta0", "C0"]
        assert all(line.startswith("desk\t") for line in lines[1:])
        assert lines[6].split("\t")[2] == "4"

    def test_written_paths_are_collected(self, tmp_path: Path, fake_run):
        written = [tmp_path / "earlier"]
        paths = emit_report(_result(), {"desk": fake_run(3)}, tmp_path,
                            written=written)
        assert paths == [tmp_path / SUMMARY_FILE,
                         tmp_path / run_file_name("desk")]
        assert written == [tmp_path / "earlier"] + paths

    def test_io_error_names_the_path(self, tmp_path: Path):
        # A directory where the summary file should go
        (tmp_path / SUMMARY_FILE).mkdir()
        with pytest.raises(OSError, match=SUMMARY_FILE):
            emit_report(_result(), {}, tmp_path)

    def test_format_float(self):
        assert format_float(0.1) == "0.10000000000000001"
        assert format_float(nan) == "nan"
        assert float(format_float(1 / 3)) == 1 / 3


@pytest.mark.harness
class TestSuiteResult:
    def test_aggregates(self):
        result = _result()
        assert len(result) == 2
        assert not result.passed
        assert [record.check_id for record in result.failed] == ["second"]
        assert result.pass_rate == 0.5

    def test_empty(self):
        result = SuiteResult()
        assert result.passed
        assert result.pass_rate == 1.0

    def test_shared_builds_once(self):
        result = SuiteResult()
        calls = list()

        def factory():
            calls.append(1)
            return len(calls)
        assert result.shared("key", factory) == 1
        assert result.shared("key", factory) == 1
        assert calls == [1]

    def test_run_recorded_twice(self, fake_run):
        result = SuiteResult()
        result.add_run("desk", fake_run(1))
        with pytest.raises(AssertionError, match="desk"):
            result.add_run("desk", fake_run(1))
