"""Tests for the command line parser and its help formatter."""

from __future__ import annotations

import pytest

from lovelock_forms.arg_parser import Parser


def _check_help(capsys: pytest.CaptureFixture[str], monkeypatch: pytest.MonkeyPatch) -> str:
    monkeypatch.setenv("COLUMNS", "300")
    with pytest.raises(SystemExit):
        Parser().parse_args(["check", "--help"])
    return capsys.readouterr().out


def test_check_help_layout(
    capsys: pytest.CaptureFixture[str],
    monkeypatch: pytest.MonkeyPatch,
) -> None:
    """Short and long spellings share a column and options are sorted.

    Args:
        capsys: Pytest fixture.
        monkeypatch: Pytest fixture.
    """
    help_text = _check_help(capsys, monkeypatch)
    assert " --na   --no-ansi" in help_text
    assert " -v     --verbosity" in help_text
    positions = [help_text.index(option) for option in (" --dim", " --heavy", " --jobs", " --tol")]
    assert positions == sorted(positions)


def test_check_help_lists_choices(
    capsys: pytest.CaptureFixture[str],
    monkeypatch: pytest.MonkeyPatch,
) -> None:
    """Choices and defaults are appended to the help text.

    Args:
        capsys: Pytest fixture.
        monkeypatch: Pytest fixture.
    """
    help_text = _check_help(capsys, monkeypatch)
    assert "(choices: symbols, forms, jet, hodge, lovelock, all)" in help_text
    assert "(default: 1)" in help_text


def test_pending_logs() -> None:
    """A run-wide tolerance leaves a note and a serial heavy run a hint."""
    args, pending = Parser().parse_args(["check", "jet", "--tol", "1e-6", "--heavy"])
    assert args.tol == 1e-6
    assert [msg.prefix.value for msg in pending] == ["Note", "Hint"]
    _, quiet = Parser().parse_args(["check", "jet", "--heavy", "--jobs", "2"])
    assert quiet == []


def test_eval_arguments() -> None:
    """Eval collects the metric, its parameters and the point."""
    args, _ = Parser().parse_args(
        ["eval", "tensor", "--metric", "schwarzschild", "--params", "M=1", "--point", "0", "10"],
    )
    assert args.what == "tensor"
    assert args.params == ["M=1"]
    assert args.point == [0.0, 10.0]
    assert args.step is None


@pytest.mark.parametrize(
    "argv",
    (
        ["check", "gravity"],
        ["check", "jet", "--dim", "0"],
        ["check", "jet", "--tol", "-1"],
        ["eval", "tensor", "--step", "zero"],
    ),
    ids=("suite", "dim", "tol", "step"),
)
def test_invalid_arguments(argv: list[str]) -> None:
    """Argument errors exit with the usage status.

    Args:
        argv: The arguments.
    """
    with pytest.raises(SystemExit) as exc:
        Parser().parse_args(argv)
    assert exc.value.code == 2
