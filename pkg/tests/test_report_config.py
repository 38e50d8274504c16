"""Tests for check results, reports, run configuration and the suite registry."""

import json

import pytest

from conformal_states import registry
from conformal_states.config import THREADS_ENV_VAR, RunConfig, Tolerances, threads_from_env
from conformal_states.registry import clear_registry, get_suite, list_suites, suite
from conformal_states.report import CheckResult, CheckStatus, Report


@pytest.fixture
def isolated_registry():
    """Run a test against an empty registry and restore the real suites afterwards."""
    saved = dict(registry._SUITE_REGISTRY)
    clear_registry()
    yield
    clear_registry()
    registry._SUITE_REGISTRY.update(saved)


class TestCheckResult:
    """Tests for single checks."""

    def test_compare_passes_within_tolerance(self):
        """Residuals at or below the tolerance pass."""
        assert CheckResult.compare("a", 1e-12, 1e-10).status is CheckStatus.PASSED
        assert CheckResult.compare("b", 1e-10, 1e-10).passed

    def test_compare_fails_above_tolerance(self):
        """Residuals above the tolerance fail."""
        assert CheckResult.compare("a", 1e-3, 1e-10).status is CheckStatus.FAILED

    def test_nan_fails(self):
        """A NaN residual never passes."""
        assert not CheckResult.compare("a", float("nan"), 1.0).passed

    def test_skipped_counts_as_passed(self):
        """Skipped checks do not fail a report."""
        assert CheckResult("a", CheckStatus.SKIPPED).passed


class TestReport:
    """Tests for report export."""

    def test_json_export(self):
        """JSON carries the schema, config, checks and rows."""
        report = Report(command="casimir", config={"lam": 5})
        report.add(CheckResult.compare("casimir", 0.0, 1e-10, expected=5))
        report.columns = ["index", "casimir"]
        report.add_row("(j=0, m=0, qa=0, qb=0; lambda=5)", 5.0)

        data = json.loads(report.export_json())

        assert data["passed"] is True
        assert data["command"] == "casimir"
        assert data["checks"][0]["status"] == "passed"
        assert data["checks"][0]["details"] == {"expected": 5}
        assert data["rows"] == [["(j=0, m=0, qa=0, qb=0; lambda=5)", 5.0]]

    def test_complex_values_become_pairs(self):
        """Complex details are written as [re, im]."""
        report = Report(command="x")
        report.add(CheckResult.compare("c", 0.0, 1.0, estimate=1 + 2j))
        data = json.loads(report.export_json())
        assert data["checks"][0]["details"]["estimate"] == [1.0, 2.0]

    def test_csv_table(self):
        """CSV writes the table when one exists."""
        report = Report(command="x", columns=["index", "value"])
        report.add_row("a", 0.5)
        assert report.export_csv().splitlines() == ["index,value", "a,0.5"]

    def test_csv_falls_back_to_checks(self):
        """Without a table the check list is written."""
        report = Report(command="x")
        report.add(CheckResult.compare("c", 0.25, 1.0))
        lines = report.export_csv().splitlines()
        assert lines[0] == "check,status,residual,tolerance"
        assert lines[1] == "c,passed,0.25,1"

    def test_failed_checks(self):
        """failed_checks lists only failures."""
        report = Report(command="x")
        report.add(CheckResult.compare("ok", 0.0, 1.0))
        report.add(CheckResult.compare("bad", 2.0, 1.0))
        assert [c.name for c in report.failed_checks()] == ["bad"]
        assert not report.passed


class TestRunConfig:
    """Tests for tolerances and run configuration."""

    def test_override_touches_one_family(self):
        """--tolerance only changes the suite's own family."""
        config = RunConfig(command="kernel-check", tolerance=1e-4)
        tols = config.tolerances("kernel")
        assert tols.kernel == 1e-4
        assert tols.exact == Tolerances().exact

    def test_no_override(self):
        """Without an override the defaults apply."""
        assert RunConfig(command="casimir").tolerances("exact") == Tolerances()

    def test_as_dict_omits_output_settings(self):
        """Output destination, verbosity and threads are not part of the result."""
        data = RunConfig(command="casimir", out="x.json", verbose=True).as_dict()
        assert "out" not in data
        assert "verbose" not in data
        assert "threads" not in data
        assert data["lam"] == 4

    def test_threads_from_env(self, monkeypatch):
        """The thread cap is read from the environment."""
        monkeypatch.setenv(THREADS_ENV_VAR, "4")
        assert threads_from_env() == 4
        monkeypatch.setenv(THREADS_ENV_VAR, "0")
        assert threads_from_env() == 1
        monkeypatch.setenv(THREADS_ENV_VAR, "many")
        assert threads_from_env(default=2) == 2
        monkeypatch.delenv(THREADS_ENV_VAR)
        assert threads_from_env(default=3) == 3


class TestRegistry:
    """Tests for suite registration."""

    def test_builtin_suites(self):
        """Importing the suites module registers every subcommand."""
        import conformal_states.suites  # noqa: F401 - triggers registration

        assert set(list_suites()) >= {
            "kernel-check",
            "ortho-check",
            "casimir",
            "generators-dump",
            "cs-expand",
            "symbols",
            "fock-verify",
        }
        assert get_suite("kernel-check").tolerance_family == "kernel"
        assert get_suite("casimir").default_degree == 6

    def test_register_and_lookup(self, isolated_registry):
        """The decorator records name, family and default degree."""

        @suite(name="demo", description="Demo suite", tolerance_family="symbols", default_degree=3)
        def run_demo(config):
            return Report(command=config.command)

        entry = get_suite("demo")
        assert list_suites() == ["demo"]
        assert entry.tolerance_family == "symbols"
        assert entry.default_degree == 3
        assert entry.run(RunConfig(command="demo")).command == "demo"

    def test_unknown_suite(self, isolated_registry):
        """Unknown names raise KeyError."""
        with pytest.raises(KeyError):
            get_suite("missing")
