"""Test the output module."""

from __future__ import annotations

import json

from types import SimpleNamespace
from typing import TYPE_CHECKING

import pytest

from lovelock_forms.output import Color, Level, Msg, Output, console_width
from lovelock_forms.types import CheckRecord
from lovelock_forms.utils import TermFeatures


if TYPE_CHECKING:
    from pathlib import Path


def _output(tmp_path: Path, **kwargs: object) -> Output:
    settings: dict[str, object] = {
        "log_file": str(tmp_path / "test.log"),
        "log_level": "debug",
        "log_append": "false",
        "term_features": TermFeatures(color=True, links=True),
        "verbosity": 3,
    }
    settings.update(kwargs)
    return Output(**settings)  # type: ignore[arg-type]


@pytest.mark.parametrize(argnames="width, expected", argvalues=((79, 79), (131, 81), (133, 132)))
def test_console_width(width: int, expected: int, monkeypatch: pytest.MonkeyPatch) -> None:
    """Test the console width function."""

    def mock_get_terminal_size() -> SimpleNamespace:
        return SimpleNamespace(columns=width, lines=24)

    monkeypatch.setattr("shutil.get_terminal_size", mock_get_terminal_size)

    monkeypatch.delenv("COLUMNS", raising=False)

    assert console_width() == expected


@pytest.mark.parametrize(
    "params",
    (
        (Level.DEBUG, Color.GREY),
        (Level.ERROR, Color.RED),
        (Level.HINT, Color.CYAN),
        (Level.INFO, Color.MAGENTA),
        (Level.NOTE, Color.GREEN),
        (Level.WARNING, Color.YELLOW),
    ),
    ids=("debug", "error", "hint", "info", "note", "warning"),
)
def test_color_mapping(params: tuple[Level, Color]) -> None:
    """Test the color mapping for Msg in the output module.

    Args:
        params: Tuple of Level and Color.
    """
    assert Msg(message="", prefix=params[0]).color == str(params[1])


@pytest.mark.parametrize("level", ("info", "warning", "error", "debug", "hint", "note"))
def test_console_output(level: str, capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    """Test the console output function.

    Args:
        level: Log level.
        capsys: Pytest fixture.
        tmp_path: Pytest fixture
    """
    output = _output(tmp_path)
    message = f"{level} message"
    msg = Msg(message=message, prefix=getattr(Level, level.upper()))
    getattr(output, level)(message)
    captured = capsys.readouterr()
    standard_x = captured.err if level == "error" else captured.out
    assert standard_x.startswith(msg.color)
    assert standard_x.endswith(Color.END + "\n")
    assert level.capitalize() in standard_x
    assert message in standard_x
    assert output.call_count[level] == 1


def test_verbosity_gating(capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    """Debug and info messages need verbosity.

    Args:
        capsys: Pytest fixture.
        tmp_path: Pytest fixture.
    """
    output = _output(tmp_path, verbosity=0, log_level="notset")
    output.debug("hidden debug")
    output.info("hidden info")
    output.note("shown note")
    captured = capsys.readouterr()
    assert "hidden" not in captured.out
    assert "shown note" in captured.out


def test_json_display(capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    """JSON display prints one object per message and per summary.

    Args:
        capsys: Pytest fixture.
        tmp_path: Pytest fixture.
    """
    output = _output(tmp_path, display="json")
    output.warning("careful")
    output.summary("check symbols: PASS\n")
    lines = capsys.readouterr().out.splitlines()
    assert json.loads(lines[0]) == {"level": "WARNING", "msg": "careful"}
    assert json.loads(lines[1]) == {"level": "SUMMARY", "msg": "check symbols: PASS\n"}


def test_summary_colors_status(capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    """Status tags are colored on color terminals and left alone otherwise.

    Args:
        capsys: Pytest fixture.
        tmp_path: Pytest fixture.
    """
    _output(tmp_path).summary("  [pass] a\n  [fail] b")
    colored = capsys.readouterr().out
    assert f"[{Color.GREEN}pass{Color.END}]" in colored
    assert f"[{Color.RED}fail{Color.END}]" in colored
    assert colored.endswith("\n")
    plain = _output(tmp_path, term_features=TermFeatures(color=False, links=False))
    plain.summary("  [skipped] c\n")
    assert capsys.readouterr().out == "  [skipped] c\n"


def test_check_levels(
    capsys: pytest.CaptureFixture[str],
    tmp_path: Path,
    monkeypatch: pytest.MonkeyPatch,
) -> None:
    """Failed checks are warnings and passing ones are debug lines.

    Args:
        capsys: Pytest fixture.
        tmp_path: Pytest fixture.
        monkeypatch: Pytest fixture.
    """
    monkeypatch.setenv("COLUMNS", "300")
    output = _output(tmp_path, term_features=TermFeatures(color=False, links=False))
    record = CheckRecord("jet.torsion", "fail", 1e-3, 1e-10, 5, 1.0)
    output.check(record)
    output.check(CheckRecord("jet.bracket", "pass", 0.0, 1e-10, 5, 1.0))
    out = capsys.readouterr().out
    assert "Warning: jet.torsion: fail (deviation 1.000e-03, tolerance 1.0e-10)" in out
    assert "Debug: jet.bracket: pass" in out
    assert output.call_count["warning"] == 1
    assert output.call_count["debug"] == 1


def test_log_file(tmp_path: Path) -> None:
    """Messages reach the log file when a level is set.

    Args:
        tmp_path: Pytest fixture.
    """
    output = _output(tmp_path, verbosity=0)
    output.warning("written to the log")
    for handler in output.logger.handlers:
        handler.flush()
    assert "written to the log" in (tmp_path / "test.log").read_text(encoding="utf-8")
