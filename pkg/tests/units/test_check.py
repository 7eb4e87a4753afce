"""Unit tests for the check subcommand."""

from __future__ import annotations

import json

from typing import TYPE_CHECKING

import pytest

from lovelock_forms.config import Config
from lovelock_forms.exceptions import UsageError
from lovelock_forms.subcommands.check import Check


if TYPE_CHECKING:
    from pathlib import Path

    from lovelock_forms.output import Output


def _config(output: Output, **kwargs: object) -> Config:
    return Config(
        package_version="0.0.1",
        output=output,
        subcommand="check",
        **kwargs,  # type: ignore[arg-type]
    )


def test_settings_from_defaults(output: Output) -> None:
    """Suite defaults fill in the dimension and sample count.

    Args:
        output: Output class object.
    """
    check = Check(_config(output, suite="hodge", seed=9))
    settings = check.settings_for("hodge")
    assert (settings.dim, settings.samples, settings.seed, settings.r) == (4, 100, 9, 1)
    overridden = Check(_config(output, suite="jet", dim=2, samples=3)).settings_for("jet")
    assert (overridden.dim, overridden.samples) == (2, 3)


@pytest.mark.parametrize(
    ("suite", "dim", "match"),
    (
        ("jet", 5, "up to 4"),
        ("jet", 4, "needs --heavy"),
        ("lovelock", 7, "up to 6"),
        ("forms", 1, "at least 2"),
    ),
)
def test_dimension_limits(output: Output, suite: str, dim: int, match: str) -> None:
    """Dimensions outside a suite's range are usage errors.

    Args:
        output: Output class object.
        suite: The suite.
        dim: The requested dimension.
        match: Part of the expected message.
    """
    with pytest.raises(UsageError, match=match):
        Check(_config(output, suite=suite, dim=dim)).run()


def test_heavy_jet_dimension(output: Output) -> None:
    """--heavy opens the fourth jet dimension.

    Args:
        output: Output class object.
    """
    settings = Check(_config(output, suite="jet", dim=4, heavy=True)).settings_for("jet")
    assert (settings.dim, settings.heavy) == (4, True)


def test_run_writes_report(
    output: Output,
    tmp_path: Path,
    capsys: pytest.CaptureFixture[str],
) -> None:
    """A passing run returns 0, prints the summary and writes the report.

    Args:
        output: Output class object.
        tmp_path: Temporary directory.
        capsys: Pytest fixture.
    """
    out = tmp_path / "symbols.json"
    status = Check(_config(output, suite="symbols", dim=3, samples=2, out=str(out))).run()
    assert status == 0
    stdout = capsys.readouterr().out
    assert "check symbols: PASS" in stdout
    payload = json.loads(out.read_text(encoding="utf-8"))
    assert payload["status"] == "pass"
    assert payload["environment"]["dims"] == {"symbols": 3}
    assert [check["name"] for check in payload["checks"]][0] == "symbols.eps_delta"


def test_run_reports_failures(output: Output, capsys: pytest.CaptureFixture[str]) -> None:
    """A tolerance nothing can meet fails the run with status 1.

    Args:
        output: Output class object.
        capsys: Pytest fixture.
    """
    status = Check(_config(output, suite="hodge", dim=3, samples=2, tol=1e-300)).run()
    assert status == 1
    captured = capsys.readouterr()
    assert "check hodge: FAIL" in captured.out
    assert "check(s) failed" in captured.err
