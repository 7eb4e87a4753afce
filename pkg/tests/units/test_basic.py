"""Basic unit tests for lovelock-forms."""

from __future__ import annotations

import runpy
import sys

from pathlib import Path

import pytest

from lovelock_forms.cli import Cli
from lovelock_forms.cli import main as cli_main
from lovelock_forms.config import Config, parse_params, resolve_seed
from lovelock_forms.constants import SEED_ENV_VAR
from lovelock_forms.exceptions import UsageError
from lovelock_forms.output import Output
from lovelock_forms.utils import TermFeatures, expand_path


COMMON = {
    "no_ansi": False,
    "log_file": str(Path.cwd() / "lovelock-forms.log"),
    "log_level": "notset",
    "log_append": "true",
    "json": False,
    "verbose": 0,
    "r": None,
    "out": None,
}


def test_configuration_class(output: Output) -> None:
    """Test Config() dataclass post_init.

    Args:
        output: Output dataclass object.
    """
    app_config = Config(
        package_version="0.0.1",
        subcommand="eval",
        what="tensor",
        params=["M=2", "a=0.5"],
        out="~/report.json",
        output=output,
    )
    assert app_config.params == {"M": 2.0, "a": 0.5}
    assert app_config.out == Path.home().resolve() / "report.json"
    assert app_config.seed == 0
    assert app_config.r == 1
    assert app_config.step == 1e-3
    assert app_config.metric == "minkowski"
    assert app_config.suite_defaults("jet") == {"dim": 3, "samples": 20}
    assert app_config.suite_defaults("unknown") == {}


def test_seed_resolution(monkeypatch: pytest.MonkeyPatch) -> None:
    """The flag wins over the environment, which wins over the defaults.

    Args:
        monkeypatch: Pytest monkeypatch fixture.
    """
    assert resolve_seed(None, {"seed": 3}) == 3
    monkeypatch.setenv(SEED_ENV_VAR, "17")
    assert resolve_seed(None, {"seed": 3}) == 17
    assert resolve_seed(5, {"seed": 3}) == 5
    monkeypatch.setenv(SEED_ENV_VAR, "seventeen")
    with pytest.raises(UsageError, match=SEED_ENV_VAR):
        resolve_seed(None, {})


@pytest.mark.parametrize(
    ("items", "match"),
    ((["M"], "key=value"), (["=1"], "key=value"), (["M=one"], "numeric")),
    ids=("no-separator", "no-key", "not-a-number"),
)
def test_parse_params_errors(items: list[str], match: str) -> None:
    """Malformed metric parameters are usage errors.

    Args:
        items: The raw parameters.
        match: Part of the expected message.
    """
    with pytest.raises(UsageError, match=match):
        parse_params(items)


def test_parse_params_passthrough() -> None:
    """Parsed mappings and empty input are accepted."""
    assert parse_params({"M": 1}) == {"M": 1.0}
    assert parse_params(None) == {}


@pytest.mark.parametrize(
    argnames=["sysargs", "expected"],
    argvalues=[
        [
            ["lovelock-forms", "check", "symbols"],
            {
                **COMMON,
                "subcommand": "check",
                "suite": "symbols",
                "dim": None,
                "seed": None,
                "samples": None,
                "tol": None,
                "heavy": False,
                "jobs": 1,
            },
        ],
        [
            [
                "lovelock-forms",
                "eval",
                "density",
                "--metric=sphere",
                "--params",
                "a=2",
                "--point",
                "1.0",
                "0.3",
                "--r=1",
                "-vvv",
                "--json",
                "--no-ansi",
                "--la=false",
                "--lf=test.log",
                "--ll=debug",
            ],
            {
                **COMMON,
                "no_ansi": True,
                "log_file": "test.log",
                "log_level": "debug",
                "log_append": "false",
                "json": True,
                "verbose": 3,
                "r": 1,
                "subcommand": "eval",
                "what": "density",
                "metric": "sphere",
                "params": ["a=2"],
                "point": [1.0, 0.3],
                "step": None,
                "dim": None,
            },
        ],
    ],
)
def test_cli_parser(
    monkeypatch: pytest.MonkeyPatch,
    sysargs: list[str],
    expected: dict[str, str | bool | None],
) -> None:
    """Test CLI args parsing.

    Args:
        monkeypatch: Pytest monkeypatch fixture.
        sysargs: List of CLI arguments.
        expected: Expected values for the parsed CLI arguments.
    """
    monkeypatch.setattr("sys.argv", sysargs)
    parsed_args = Cli().args
    assert parsed_args == expected


def test_missing_j2(monkeypatch: pytest.MonkeyPatch) -> None:
    """Test missing Jinja2.

    Args:
        monkeypatch: Pytest monkeypatch fixture.
    """
    fail_msg = (
        "jinja2 is required but does not appear to be installed."
        "It can be installed using `pip install jinja2`"
    )

    monkeypatch.setattr("sys.path", [])
    monkeypatch.delitem(sys.modules, "jinja2", raising=False)
    monkeypatch.delitem(sys.modules, "lovelock_forms.templar", raising=False)

    import lovelock_forms.templar

    assert lovelock_forms.templar.HAS_JINJA2 is False
    with pytest.raises(ImportError, match=fail_msg):
        lovelock_forms.templar.Templar()


def test_cli_init_output(monkeypatch: pytest.MonkeyPatch) -> None:
    """Test CLI init_output method.

    Args:
        monkeypatch: Pytest monkeypatch fixture.
    """
    sysargs = [
        "lovelock-forms",
        "check",
        "hodge",
        "-vvv",
        "--json",
        "--no-ansi",
        "--la=false",
        "--lf=test.log",
        "--ll=debug",
    ]
    output = Output(
        log_append="false",
        log_file=str(expand_path("test.log")),
        log_level="debug",
        term_features=TermFeatures(color=False, links=False),
        verbosity=3,
        display="json",
    )

    monkeypatch.setattr("sys.argv", sysargs)
    cli = Cli()
    cli.init_output()
    assert vars(cli.output) == vars(output)


def test_cli_run(capsys: pytest.CaptureFixture[str]) -> None:
    """A passing suite returns 0 and prints its summary.

    Args:
        capsys: Pytest capsys fixture.
    """
    cli = Cli(["check", "symbols", "--dim", "3", "--samples", "2"])
    cli.init_output()
    cli.process_pending_logs()
    assert cli.run() == 0
    stdout = capsys.readouterr().out
    assert stdout.startswith("check symbols: PASS")
    assert "4 passed, 0 failed, 0 skipped" in stdout


def test_cli_run_library_error(capsys: pytest.CaptureFixture[str]) -> None:
    """Library errors are reported and map to the usage status.

    Args:
        capsys: Pytest capsys fixture.
    """
    cli = Cli(["eval", "density", "--metric", "kerr"])
    cli.init_output()
    assert cli.run() == 2
    assert "Unknown metric 'kerr'" in capsys.readouterr().err


def test_cli_main_exit_status(capsys: pytest.CaptureFixture[str]) -> None:
    """Main exits with the subcommand status.

    Args:
        capsys: Pytest capsys fixture.
    """
    with pytest.raises(SystemExit) as exc:
        cli_main(["eval", "density", "--metric", "minkowski", "--r", "0"])
    assert exc.value.code == 0
    assert "eval density: PASS" in capsys.readouterr().out


def test_is_a_tty(monkeypatch: pytest.MonkeyPatch) -> None:
    """Test is a tty.

    Args:
        monkeypatch: Pytest monkeypatch fixture.
    """
    monkeypatch.setattr("sys.argv", ["lovelock-forms", "check", "symbols"])
    monkeypatch.setattr("sys.stdout.isatty", lambda: True)
    monkeypatch.delenv("NO_COLOR", raising=False)

    cli = Cli()
    cli.init_output()
    assert cli.output.term_features.color is True
    assert cli.output.term_features.links is True
    assert cli.output.term_features.any_enabled() is True


def test_not_a_tty(monkeypatch: pytest.MonkeyPatch) -> None:
    """Test not a tty.

    Args:
        monkeypatch: Pytest monkeypatch fixture.
    """
    monkeypatch.setattr("sys.argv", ["lovelock-forms", "check", "symbols"])
    monkeypatch.setattr("sys.stdout.isatty", lambda: False)

    cli = Cli()
    cli.init_output()
    assert cli.output.term_features.color is False
    assert cli.output.term_features.links is False
    assert cli.output.term_features.any_enabled() is False


def test_main(monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]) -> None:
    """Test cli main.

    Args:
        monkeypatch: Pytest monkeypatch fixture.
        capsys: Pytest capsys fixture.
    """
    monkeypatch.setattr("sys.argv", ["lovelock-forms", "--help"])

    with pytest.raises(SystemExit):
        runpy.run_module("lovelock_forms.cli", run_name="__main__")
    stdout, _stderr = capsys.readouterr()
    assert "Verify the exterior calculus" in stdout


def test_proj_main(monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]) -> None:
    """Test project main.

    Args:
        monkeypatch: Pytest monkeypatch fixture.
        capsys: Pytest capsys fixture.
    """
    monkeypatch.setattr("sys.argv", ["lovelock-forms", "--help"])

    with pytest.raises(SystemExit):
        runpy.run_module("lovelock_forms", run_name="__main__")
    stdout, _stderr = capsys.readouterr()
    assert "Verify the exterior calculus" in stdout
