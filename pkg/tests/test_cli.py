import json

import pytest
from click.testing import CliRunner

from histevents.cli import EXIT_CONFIG, EXIT_SOURCE, main
from histevents.store import EventStore

from conftest import CORPUS_ROOT


@pytest.fixture()
def runner():
    return CliRunner()


def run_extract(runner, tmp_path, *extra):
    db = tmp_path / "events.db"
    args = ["extract", "-l", "en,de,it", "--start", "-50", "--end", "2015",
            "--corpus", str(CORPUS_ROOT), "--store", str(db), *extra]
    result = runner.invoke(main, args)
    return result, db


class TestExtract:
    def test_full_offline_run(self, runner, tmp_path, all_events):
        result, db = run_extract(runner, tmp_path)
        assert result.exit_code == 0, result.output
        store = EventStore(str(db))
        assert store.count() == len(all_events)

    def test_summary_line_per_language(self, runner, tmp_path):
        result, _ = run_extract(runner, tmp_path)
        lines = [l for l in result.output.splitlines() if l and not l.startswith("lang")]
        summary = {l.split("\t")[0]: l.split("\t") for l in lines}
        assert set(summary) == {"en", "de", "it"}
        for lang, fields in summary.items():
            _, pages, candidates, extracted, failures, quotient = fields
            assert int(candidates) == int(extracted) + int(failures)
            assert abs(float(quotient) - int(extracted) / int(candidates)) < 1e-4

    def test_report_files_written(self, runner, tmp_path):
        report = tmp_path / "failures.log"
        result, _ = run_extract(runner, tmp_path, "--report", str(report))
        assert result.exit_code == 0
        assert report.is_file()
        for line in report.read_text("utf-8").splitlines():
            assert len(line.split("\t")) == 5
        jsonl = report.with_suffix(".jsonl")
        reports = [json.loads(l) for l in jsonl.read_text("utf-8").splitlines()]
        assert len(reports) == 13
        for rep in reports:
            assert rep["extracted_count"] + len(rep["failures"]) \
                == rep["candidate_count"]

    def test_enrich_flag_assigns_images(self, runner, tmp_path):
        result, db = run_extract(runner, tmp_path, "--enrich")
        assert result.exit_code == 0
        store = EventStore(str(db))
        with_images = [e for e in store.all_events() if e.image is not None]
        assert with_images
        assert all("150px-" in e.image.thumb_url for e in with_images)

    def test_unknown_language_is_config_error(self, runner, tmp_path):
        result = runner.invoke(main, [
            "extract", "-l", "xx", "--start", "2010", "--end", "2010",
            "--corpus", str(CORPUS_ROOT), "--store", str(tmp_path / "e.db")])
        assert result.exit_code == EXIT_CONFIG

    def test_bad_profiles_file_is_config_error(self, runner, tmp_path):
        bad = tmp_path / "profiles.yml"
        bad.write_text("en: [not, a, mapping]\n", "utf-8")
        result = runner.invoke(main, [
            "extract", "-l", "en", "--start", "2010", "--end", "2010",
            "--corpus", str(CORPUS_ROOT), "--profiles", str(bad),
            "--store", str(tmp_path / "e.db")])
        assert result.exit_code == EXIT_CONFIG

    def test_missing_corpus_is_source_error(self, runner, tmp_path):
        result = runner.invoke(main, [
            "extract", "-l", "en", "--start", "2010", "--end", "2010",
            "--corpus", str(tmp_path / "no-such-corpus"),
            "--store", str(tmp_path / "e.db")])
        assert result.exit_code == EXIT_SOURCE

    def test_inverted_year_range_is_config_error(self, runner, tmp_path):
        result = runner.invoke(main, [
            "extract", "-l", "en", "--start", "2015", "--end", "2010",
            "--corpus", str(CORPUS_ROOT), "--store", str(tmp_path / "e.db")])
        assert result.exit_code == EXIT_CONFIG


class TestEnrichCommand:
    def test_enrich_after_extract(self, runner, tmp_path):
        _, db = run_extract(runner, tmp_path)
        result = runner.invoke(main, [
            "enrich", "-l", "en,de,it", "--corpus", str(CORPUS_ROOT),
            "--store", str(db)])
        assert result.exit_code == 0, result.output
        assigned = int(result.output.strip().split("\t")[1])
        assert assigned > 0
        store = EventStore(str(db))
        assert sum(1 for e in store.all_events() if e.image) == assigned


class TestExportCommand:
    @pytest.mark.parametrize("fmt,probe", [
        ("n3", "@prefix lode:"),
        ("json", '"events"'),
        ("xml", "<events>"),
    ])
    def test_formats(self, runner, tmp_path, fmt, probe):
        _, db = run_extract(runner, tmp_path)
        out = tmp_path / f"out.{fmt}"
        result = runner.invoke(main, [
            "export", "--store", str(db), "--format", fmt, "--out", str(out)])
        assert result.exit_code == 0, result.output
        assert probe in out.read_text("utf-8")

    def test_stdout_default(self, runner, tmp_path):
        _, db = run_extract(runner, tmp_path)
        result = runner.invoke(main, ["export", "--store", str(db)])
        assert result.exit_code == 0
        assert "@prefix lode:" in result.output


class TestReportCommand:
    def test_summarizes_jsonl(self, runner, tmp_path):
        report = tmp_path / "failures.log"
        run_extract(runner, tmp_path, "--report", str(report))
        result = runner.invoke(main, [
            "report", "--report", str(report.with_suffix(".jsonl"))])
        assert result.exit_code == 0
        lines = result.output.strip().splitlines()
        assert lines[0].startswith("lang\t")
        assert len(lines) == 1 + 13
