"""Tests for canonical serialization, suite records, and the command line."""

import json
from pathlib import Path

import pytest

from qgatelab import (
    CSV_COLUMNS,
    CheckRecord,
    RunConfig,
    VerificationReport,
    canonical_json,
    run_suites,
    serialize_report,
)
from qgatelab.cli import ENV_OUT_DIR, main

GOLDEN_DIR = Path(__file__).parent / "golden"


def _golden_config() -> RunConfig:
    return RunConfig(suite="algebra", q_values=(2.0,), cutoff=4)


class TestCanonicalJson:
    def test_keys_are_sorted(self):
        assert canonical_json({"b": 1, "a": [True, None]}) == '{"a":[true,null],"b":1}'

    def test_floats_render_with_full_precision(self):
        assert canonical_json(0.1) == "0.10000000000000001"
        assert canonical_json(2.0) == "2"
        assert canonical_json(1e-12) == "9.9999999999999998e-13"

    def test_non_ascii_is_escaped(self):
        assert canonical_json("é") == '"\\u00e9"'

    def test_rejects_non_finite_floats(self):
        with pytest.raises(ValueError):
            canonical_json(float("inf"))

    def test_rejects_non_string_keys(self):
        with pytest.raises(TypeError):
            canonical_json({1: "x"})

    def test_output_is_valid_json(self):
        payload = canonical_json({"nested": {"x": [1.5, "s"]}, "n": 3})
        assert json.loads(payload) == {"nested": {"x": [1.5, "s"]}, "n": 3}


class TestCheckRecord:
    def test_rejects_unknown_relation_tag(self):
        with pytest.raises(ValueError):
            CheckRecord("x", "made-up-tag", "c", {}, 0.0, 1.0, True)

    def test_coerces_numeric_fields(self):
        record = CheckRecord("x", "derived", "c", {}, 1, 2, 1)
        assert record.residual == 1.0
        assert record.threshold == 2.0
        assert record.passed is True

    def test_allows_residual_free_checks(self):
        record = CheckRecord("x", "derived", "c", {}, None, None, True)
        assert record.residual is None
        assert record.threshold is None


class TestSerialization:
    def test_json_is_newline_terminated(self):
        payload = serialize_report(run_suites(_golden_config()), "json")
        assert payload.endswith(b"\n")
        assert not payload[:-1].endswith(b"\n")

    def test_csv_header_is_frozen(self):
        payload = serialize_report(run_suites(_golden_config()), "csv")
        header = payload.decode("utf-8").splitlines()[0]
        assert header == ",".join(CSV_COLUMNS)
        assert CSV_COLUMNS == (
            "check_id",
            "relation",
            "convention",
            "params",
            "residual",
            "threshold",
            "passed",
            "notes",
        )

    def test_csv_and_json_carry_the_same_records(self):
        report = run_suites(_golden_config())
        data = json.loads(serialize_report(report, "json"))
        csv_rows = serialize_report(report, "csv").decode("utf-8").splitlines()
        assert len(data["records"]) == len(csv_rows) - 1
        assert len(report.records) == 19

    def test_rejects_unknown_format(self):
        report = VerificationReport("0", {}, {}, [])
        with pytest.raises(ValueError):
            serialize_report(report, "yaml")

    def test_config_block_has_no_output_path(self):
        cfg = RunConfig(suite="algebra", q_values=(2.0,), cutoff=4, out="somewhere.json")
        data = json.loads(serialize_report(run_suites(cfg), "json"))
        assert "out" not in data["config"]

    def test_matches_golden_json(self):
        payload = serialize_report(run_suites(_golden_config()), "json")
        assert payload == (GOLDEN_DIR / "report_algebra.json").read_bytes()

    def test_matches_golden_csv(self):
        payload = serialize_report(run_suites(_golden_config()), "csv")
        assert payload == (GOLDEN_DIR / "report_algebra.csv").read_bytes()


class TestRunConfig:
    def test_rejects_unknown_suite(self):
        with pytest.raises(ValueError):
            RunConfig(suite="everything")

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"q_values": ()},
            {"q_values": (0.0,)},
            {"cutoff": 1},
            {"psi_grid": (2.0,)},
            {"limit_q": (1.0, 1.1)},
            {"identity_threshold": 0.0},
            {"format": "xml"},
        ],
    )
    def test_rejects_invalid_settings(self, kwargs):
        with pytest.raises(ValueError):
            RunConfig(**kwargs)

    def test_full_run_covers_every_suite(self):
        report = run_suites(RunConfig(suite="all", cutoff=4))
        prefixes = {record.check_id.split("/")[0] for record in report.records}
        assert prefixes == {"algebra", "gates", "constraints", "limits"}


class TestCli:
    ARGS = ["verify-algebra", "--q", "2", "--cutoff", "4"]

    def test_passing_run_exits_zero(self, tmp_path, capsys):
        out = tmp_path / "report.json"
        assert main(self.ARGS + ["--out", str(out)]) == 0
        message = capsys.readouterr().out
        assert "19/19 checks passed" in message
        assert json.loads(out.read_bytes())["summary"]["failed"] == 0

    def test_failing_checks_exit_one(self, tmp_path):
        out = tmp_path / "report.json"
        assert main(self.ARGS + ["--out", str(out), "--threshold", "1e-30"]) == 1
        assert json.loads(out.read_bytes())["summary"]["failed"] > 0

    def test_bad_flag_value_exits_two(self, capsys):
        assert main(["verify-algebra", "--q", "zebra"]) == 2
        assert "configuration error" in capsys.readouterr().err

    def test_config_file_with_unknown_key_exits_two(self, tmp_path, capsys):
        config = tmp_path / "config.json"
        config.write_text('{"suite": "algebra"}')
        assert main(["verify-algebra", "--config", str(config)]) == 2
        assert "unknown keys" in capsys.readouterr().err

    def test_invalid_json_config_exits_two(self, tmp_path):
        config = tmp_path / "config.json"
        config.write_text("{not json")
        assert main(["verify-algebra", "--config", str(config)]) == 2

    def test_unwritable_output_exits_three(self, tmp_path, capsys):
        out = tmp_path / "missing" / "report.json"
        assert main(self.ARGS + ["--out", str(out)]) == 3
        assert "cannot write report" in capsys.readouterr().err

    def test_unknown_command_exits_two_via_argparse(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["conjure"])
        assert excinfo.value.code == 2

    def test_env_variable_redirects_output(self, tmp_path, monkeypatch):
        target = tmp_path / "redirected"
        target.mkdir()
        monkeypatch.setenv(ENV_OUT_DIR, str(target))
        assert main(self.ARGS + ["--out", str(tmp_path / "elsewhere" / "named.json")]) == 0
        assert (target / "named.json").exists()

    def test_default_output_lands_in_working_directory(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        assert main(["verify-algebra", "--q", "2", "--cutoff", "4", "--format", "csv"]) == 0
        assert (tmp_path / "report.csv").exists()

    def test_flags_override_config_file(self, tmp_path):
        config = tmp_path / "config.json"
        config.write_text('{"cutoff": 4, "q_values": [2.0]}')
        out = tmp_path / "report.json"
        assert main(["verify-algebra", "--config", str(config), "--cutoff", "5", "--out", str(out)]) == 0
        data = json.loads(out.read_bytes())
        assert data["config"]["cutoff"] == 5
        assert data["config"]["q_values"] == [2.0]

    def test_repeated_runs_are_byte_identical(self, tmp_path):
        first = tmp_path / "first.json"
        second = tmp_path / "second.json"
        assert main(self.ARGS + ["--out", str(first)]) == 0
        assert main(self.ARGS + ["--out", str(second)]) == 0
        assert first.read_bytes() == second.read_bytes()

    def test_convention_tokens_reach_the_report(self, tmp_path):
        out = tmp_path / "report.json"
        args = self.ARGS + ["--convention", "matrix-element,vacuum", "--out", str(out)]
        assert main(args) in (0, 1)
        data = json.loads(out.read_bytes())
        assert data["config"]["operator"] == "matrix-element"
        assert data["config"]["exponent"] == "vacuum"

    def test_unknown_convention_token_exits_two(self):
        assert main(self.ARGS + ["--convention", "sideways"]) == 2
