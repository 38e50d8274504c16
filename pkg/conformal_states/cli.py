"""Command line entry-point for the verification suites."""

from __future__ import annotations

import logging
from typing import Any, Optional, TextIO

import click

from . import suites  # noqa: F401  (registers the suites)
from .config import RunConfig
from .errors import ConformalStatesError
from .registry import SuiteEntry, get_suite, list_suites

logger = logging.getLogger("conformal_states.cli")


class SampleCount(click.ParamType):
    """Positive integer that also accepts scientific notation such as 1e6."""

    name = "count"

    def convert(self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]) -> int:
        if isinstance(value, int):
            count = value
        else:
            try:
                number = float(value)
            except (TypeError, ValueError):
                self.fail(f"{value!r} is not a number", param, ctx)
            if number != int(number):
                self.fail(f"{value!r} is not a whole number", param, ctx)
            count = int(number)
        if count <= 0:
            self.fail(f"{value!r} must be positive", param, ctx)
        return count


def _build_command(entry: SuiteEntry) -> click.Command:
    @click.command(name=entry.name, help=entry.description)
    @click.option("--lambda", "lam", type=click.IntRange(min=2), default=4, show_default=True, help="Scale dimension")
    @click.option("--degree", type=click.IntRange(min=0), default=None, help=f"Degree cutoff 2j+2m [default: {entry.default_degree}]")
    @click.option("--mc-samples", type=SampleCount(), default=100_000, show_default=True, help="Monte Carlo sample count")
    @click.option("--seed", type=int, default=7, show_default=True, help="Seed for random points and sampling")
    @click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
    @click.option("--out", "-o", type=click.File("w"), default="-", help="Output destination (defaults to stdout)")
    @click.option("--tolerance", type=float, default=None, help=f"Override the {entry.tolerance_family} tolerance")
    @click.option("--verbose", "-v", is_flag=True, help="Enable verbose logging")
    def command(
        lam: int,
        degree: Optional[int],
        mc_samples: int,
        seed: int,
        fmt: str,
        out: TextIO,
        tolerance: Optional[float],
        verbose: bool,
    ) -> None:
        logging.basicConfig(
            level=logging.DEBUG if verbose else logging.WARNING,
            format="%(levelname)s: %(message)s",
        )
        config = RunConfig(
            command=entry.name,
            lam=lam,
            degree=entry.default_degree if degree is None else degree,
            mc_samples=mc_samples,
            seed=seed,
            out=getattr(out, "name", None),
            fmt=fmt,
            tolerance=tolerance,
            verbose=verbose,
        )
        logger.info(f"Running {entry.name} with lambda={lam}, degree={config.degree}")

        try:
            report = entry.run(config)
        except ConformalStatesError as exc:
            raise click.ClickException(str(exc)) from exc

        text = report.export_json() if fmt == "json" else report.export_csv()
        out.write(text)
        if not text.endswith("\n"):
            out.write("\n")

        for check in report.failed_checks():
            logger.warning(f"{check.name} failed: residual {check.residual} > {check.tolerance}")
        if not report.passed:
            raise click.exceptions.Exit(1)

    return command


@click.group()
def main() -> None:
    """Numerical checks of the U(2,2) discrete series and its oscillator realizations."""


for _name in list_suites():
    main.add_command(_build_command(get_suite(_name)))


if __name__ == "__main__":  # pragma: no cover
    main()
