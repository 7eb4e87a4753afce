"""Definitions for lovelock-forms check action."""

from __future__ import annotations

from pathlib import Path
from typing import TYPE_CHECKING

from lovelock_forms.constants import JET_DIM_GUARD, JET_HEAVY_DIM, MAX_DIM, SUITES
from lovelock_forms.exceptions import UsageError
from lovelock_forms.suites import SuiteSettings, run_suite
from lovelock_forms.templar import Templar
from lovelock_forms.types import Report
from lovelock_forms.utils import write_report


if TYPE_CHECKING:
    from lovelock_forms.config import Config
    from lovelock_forms.output import Output

MIN_DIM = 2


class Check:
    """Class to handle the check subcommand."""

    def __init__(
        self,
        config: Config,
    ) -> None:
        """Initialize the check action.

        Args:
            config: App configuration object.
        """
        self._config = config
        self._suite: str = config.suite
        self._out: Path | None = Path(config.out) if config.out else None
        self.output: Output = config.output
        self.templar = Templar()

    def settings_for(self, suite: str) -> SuiteSettings:
        """Merge the command line with the packaged defaults of one suite.

        Args:
            suite: The suite name.

        Returns:
            The suite settings.

        Raises:
            UsageError: When the dimension is outside what the suite supports, or the
                jet suite is asked for a heavy dimension without --heavy.
        """
        config = self._config
        defaults = config.suite_defaults(suite)
        dim = config.dim if config.dim is not None else int(defaults.get("dim", 4))
        samples = config.samples if config.samples is not None else int(defaults.get("samples", 10))
        if dim < MIN_DIM:
            msg = f"Suite '{suite}' needs a dimension of at least {MIN_DIM}, got {dim}."
            raise UsageError(msg)
        limit = JET_DIM_GUARD - 1 if suite == "jet" else MAX_DIM
        if dim > limit:
            msg = f"Suite '{suite}' supports dimensions up to {limit}, got {dim}."
            raise UsageError(msg)
        if suite == "jet" and dim >= JET_HEAVY_DIM and not config.heavy:
            msg = f"Suite 'jet' at dimension {dim} needs --heavy."
            raise UsageError(msg)
        return SuiteSettings(
            dim=dim,
            r=int(config.r or 0),
            seed=int(config.seed or 0),
            samples=samples,
            tol=config.tol,
            heavy=config.heavy,
        )

    def run(self) -> int:
        """Run the requested suites and report.

        Returns:
            0 when every check passed or was skipped, 1 otherwise.
        """
        names = list(SUITES) if self._suite == "all" else [self._suite]
        plan = {name: self.settings_for(name) for name in names}
        report = Report(
            command="check",
            target=self._suite,
            environment={
                "seed": self._config.seed,
                "r": self._config.r,
                "dims": {name: settings.dim for name, settings in plan.items()},
                "samples": {name: settings.samples for name, settings in plan.items()},
                "tol": self._config.tol,
                "heavy": self._config.heavy,
            },
        )
        for name, settings in plan.items():
            self.output.info(f"Running suite '{name}' at dimension {settings.dim}")
            records, fitted = run_suite(name, settings, jobs=self._config.jobs)
            for record in records:
                self.output.check(record)
            report.checks.extend(records)
            report.fitted_constants.extend(fitted)

        failed = [record.name for record in report.checks if record.status == "fail"]
        report.status = "fail" if failed else "pass"
        self.output.summary(self.templar.render_summary(report))
        if self._out is not None:
            write_report(report, self._out)
            self.output.note(f"Report written to {self._out}")
        if failed:
            self.output.error(f"{len(failed)} check(s) failed: {', '.join(failed)}")
            return 1
        return 0
