"""
DebtDyn - Command Line Tests
End-to-end runs over the checked-in scenario files: data on stdout,
diagnostics on stderr, exit codes 0 / 1 / 2
"""

import csv
import io
import json

import pytest

from debtdyn.cli import build_parser, cli_main, main
from debtdyn.core.error_handling import EXIT_DOMAIN_ERROR, EXIT_INPUT_ERROR, EXIT_OK
from debtdyn.documents.scenario_io import EXAMPLE_DOCUMENT

pytestmark = pytest.mark.integration


def run(capsys, *argv):
    code = cli_main(list(map(str, argv)))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def last_row(out: str) -> dict:
    return list(csv.DictReader(io.StringIO(out)))[-1]


class TestSimulateCommand:
    """The published example reproduced from emitted CSV"""

    def test_baseline(self, capsys, scenario_path):
        code, out, err = run(capsys, "simulate", scenario_path("baseline_10y.json"))
        assert code == EXIT_OK
        assert err == ""
        row = last_row(out)
        assert row["t"] == "10"
        assert float(row["d_exact"]) == pytest.approx(89.34, abs=0.01)
        assert float(row["d_nom"]) == float(row["d_exact"])

    def test_shock_year1(self, capsys, scenario_path):
        code, out, _ = run(capsys, "simulate", scenario_path("shock_year1.json"))
        row = last_row(out)
        assert code == EXIT_OK
        assert float(row["d_exact"]) == pytest.approx(90.45, abs=0.01)
        assert float(row["delta_exact"]) == pytest.approx(1.11, abs=0.005)
        assert float(row["delta_linear"]) == pytest.approx(1.09, abs=0.005)

    def test_shock_year4(self, capsys, scenario_path):
        code, out, _ = run(capsys, "simulate", scenario_path("shock_year4.json"))
        row = last_row(out)
        assert code == EXIT_OK
        assert float(row["d_exact"]) == pytest.approx(88.40, abs=0.01)
        assert float(row["delta_exact"]) == pytest.approx(-0.94, abs=0.005)

    def test_both_shocks(self, capsys, scenario_path):
        code, out, _ = run(capsys, "simulate", scenario_path("shock_year1_and_4.json"))
        row = last_row(out)
        assert code == EXIT_OK
        assert float(row["d_exact"]) == pytest.approx(89.50, abs=0.01)
        assert float(row["delta_exact"]) == pytest.approx(0.16, abs=0.005)

    def test_json_ratio_rounded(self, capsys, scenario_path):
        code, out, _ = run(
            capsys, "simulate", scenario_path("shock_year1.json"), "--format", "json", "--units", "ratio", "--round", "4"
        )
        document = json.loads(out)
        assert code == EXIT_OK
        assert document["rows"][10]["d_exact"] == 0.9046
        assert document["metadata"]["units"] == "ratio"

    def test_convention_override(self, capsys, scenario_path):
        _, out, _ = run(capsys, "simulate", scenario_path("shock_year1.json"), "--convention", "additive")
        assert float(last_row(out)["delta_linear"]) == pytest.approx(100 * 0.01 * 1.01 ** 9, abs=1e-9)

    def test_output_file(self, capsys, scenario_path, tmp_path):
        target = tmp_path / "result.csv"
        code, out, _ = run(capsys, "simulate", scenario_path("baseline_10y.json"), "--output", target)
        assert code == EXIT_OK
        assert out == ""
        assert target.read_text().splitlines()[0].startswith("t,d_nom,d_exact")

    def test_environment_does_not_change_output(self, capsys, scenario_path, monkeypatch):
        _, expected, _ = run(capsys, "simulate", scenario_path("baseline_10y.json"))
        monkeypatch.setenv("DEBTDYN_DEFAULT_FORMAT", "json")
        monkeypatch.setenv("DEBTDYN_LOG_LEVEL", "DEBUG")
        code, out, err = run(capsys, "simulate", scenario_path("baseline_10y.json"))
        assert code == EXIT_OK
        assert out == expected
        assert err == ""


class TestErrors:
    """Failures leave stdout empty and report on stderr"""

    def test_malformed_file(self, capsys, fixture_path):
        code, out, err = run(capsys, "simulate", fixture_path("malformed.json"))
        assert code == EXIT_INPUT_ERROR
        assert out == ""
        assert "line 8" in err

    def test_feedback_collapse(self, capsys, fixture_path):
        code, out, err = run(capsys, "simulate", fixture_path("feedback_collapse.json"))
        assert code == EXIT_DOMAIN_ERROR
        assert out == ""
        assert "growth factor non-positive" in err
        assert "t=3" in err

    def test_missing_file(self, capsys, tmp_path):
        code, out, err = run(capsys, "simulate", tmp_path / "absent.json")
        assert code == EXIT_INPUT_ERROR
        assert out == ""
        assert "cannot read scenario file" in err

    def test_unknown_key(self, capsys, tmp_path):
        path = tmp_path / "corrupt.json"
        path.write_text(json.dumps(dict(EXAMPLE_DOCUMENT, horizn=10), indent=2))
        code, out, err = run(capsys, "simulate", path)
        assert code == EXIT_INPUT_ERROR
        assert out == ""
        assert "unknown key 'horizn'" in err

    def test_missing_units(self, capsys, tmp_path):
        document = dict(EXAMPLE_DOCUMENT)
        del document["units"]
        path = tmp_path / "no_units.json"
        path.write_text(json.dumps(document))
        code, out, err = run(capsys, "threshold", path)
        assert code == EXIT_INPUT_ERROR
        assert out == ""
        assert "units" in err

    def test_usage_error(self, capsys):
        code, out, err = run(capsys)
        assert code == EXIT_INPUT_ERROR
        assert out == ""
        assert "debtdyn: the following arguments are required" in err

    def test_bad_option_value(self, capsys, scenario_path):
        code, out, _ = run(capsys, "simulate", scenario_path("baseline_10y.json"), "--format", "xml")
        assert code == EXIT_INPUT_ERROR
        assert out == ""

    @pytest.mark.parametrize(
        "key, value",
        [
            ("d0", "one hundred"),
            ("horizon", "ten"),
            ("eta", -1),
            ("units", "permille"),
            ("rates", {"r": 3}),
            ("x_nom", [2, 2]),
            ("perturbations", [{"t": 11, "dx": 1}]),
            ("convention", "geometric"),
        ],
    )
    def test_each_corrupted_key(self, capsys, tmp_path, key, value):
        path = tmp_path / f"bad_{key}.json"
        path.write_text(json.dumps(dict(EXAMPLE_DOCUMENT, **{key: value})))
        code, out, err = run(capsys, "simulate", path, "--format", "json")
        assert code == EXIT_INPUT_ERROR
        assert out == ""
        assert err.strip()

    def test_overflow_exits_with_domain_error(self, capsys, fixture_path):
        code, out, err = run(capsys, "simulate", fixture_path("overflow.json"), "--format", "json")
        assert code == EXIT_DOMAIN_ERROR
        assert out == ""
        assert "not finite at t=1" in err

    def test_sweep_domain_error_names_eta(self, capsys, fixture_path):
        code, out, err = run(
            capsys, "sweep", fixture_path("feedback_collapse.json"), "--eta-from", "0", "--eta-to", "150", "--eta-steps", "4"
        )
        assert code == EXIT_DOMAIN_ERROR
        assert out == ""
        assert "eta=" in err


class TestAnalysisCommands:

    def test_sensitivity_at(self, capsys, scenario_path):
        code, out, _ = run(capsys, "sensitivity", scenario_path("shock_year1.json"), "--at", "10")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == EXIT_OK
        assert [row["m"] for row in rows] == [str(m) for m in range(1, 11)]
        assert float(rows[0]["coeff"]) == pytest.approx(1.0918, abs=5e-5)

    def test_threshold(self, capsys, scenario_path):
        code, out, _ = run(capsys, "threshold", scenario_path("baseline_10y.json"))
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == EXIT_OK
        assert len(rows) == 10
        assert {row["classification"] for row in rows} == {"AUSTERITY_RAISES_DEBT_RATIO"}
        assert float(rows[0]["break_even"]) == 0.5

    def test_sweep(self, capsys, scenario_path):
        code, out, _ = run(
            capsys, "sweep", scenario_path("shock_year1.json"),
            "--eta-from", "0.05", "--eta-to", "1.95", "--eta-steps", "20", "--format", "json",
        )
        document = json.loads(out)
        assert code == EXIT_OK
        assert len(document["rows"]) == 20
        [[low, high]] = document["metadata"]["zero_crossings"]
        assert low < 1.0 < high

    def test_example_round_trip(self, capsys, tmp_path):
        code, out, _ = run(capsys, "example")
        assert code == EXIT_OK
        assert json.loads(out) == EXAMPLE_DOCUMENT
        path = tmp_path / "example.json"
        path.write_text(out)
        code, out, _ = run(capsys, "simulate", path)
        assert code == EXIT_OK
        assert float(last_row(out)["d_exact"]) == pytest.approx(89.34, abs=0.01)


class TestDiagnostics:
    """Verbosity and log format only touch stderr"""

    def test_verbose_run_event(self, capsys, scenario_path):
        code, out, err = run(capsys, "simulate", scenario_path("baseline_10y.json"), "-v")
        assert code == EXIT_OK
        assert out.startswith("t,d_nom")
        assert '"event_type": "run"' in err

    def test_json_log_format(self, capsys, scenario_path):
        _, _, err = run(capsys, "threshold", scenario_path("baseline_10y.json"), "-v", "--log-format", "json")
        records = [json.loads(line) for line in err.splitlines() if line.strip()]
        assert any(record["levelname"] == "INFO" for record in records)

    def test_error_logged_as_structured_event(self, capsys, fixture_path):
        _, _, err = run(capsys, "simulate", fixture_path("feedback_collapse.json"))
        assert '"error_code": "DOMAIN_ERROR"' in err


class TestParser:

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as info:
            build_parser().parse_args(["--version"])
        assert info.value.code == 0
        assert "debtdyn" in capsys.readouterr().out

    def test_flags_before_subcommand(self, capsys, scenario_path):
        code, out, _ = run(capsys, "--format", "json", "--units", "ratio", "simulate", scenario_path("shock_year1.json"))
        document = json.loads(out)
        assert code == EXIT_OK
        assert document["metadata"]["units"] == "ratio"
        assert document["rows"][10]["d_exact"] == pytest.approx(0.9045531, abs=1e-7)

    def test_subcommand_flag_wins(self, scenario_path):
        args = build_parser().parse_args(
            ["--format", "json", "--units", "ratio", "simulate", str(scenario_path("baseline_10y.json")), "--format", "csv"]
        )
        assert args.format == "csv"
        assert args.units == "ratio"
        assert args.verbose == 0
        assert args.log_format == "standard"

    def test_main_delegates(self, capsys, scenario_path):
        assert main(["threshold", str(scenario_path("baseline_10y.json"))]) == EXIT_OK
