"""Parse the command line arguments."""

from __future__ import annotations

import argparse

from argparse import HelpFormatter
from operator import attrgetter
from pathlib import Path
from typing import TYPE_CHECKING, TypeAlias

from lovelock_forms.constants import EVAL_TARGETS, SUITES
from lovelock_forms.output import Level, Msg


if TYPE_CHECKING:
    from collections.abc import Iterable
    from typing import Any


try:
    import argcomplete

    HAS_ARGCOMPLETE = True
except ImportError:  # pragma: no cover
    HAS_ARGCOMPLETE = False

try:
    from ._version import version as __version__  # type: ignore[unused-ignore,import-not-found]
except ImportError:  # pragma: no cover
    __version__ = "source"


def positive_int(value: str) -> int:
    """Parse a strictly positive integer.

    Args:
        value: The raw value.

    Returns:
        The integer.

    Raises:
        ArgumentTypeError: When the value is not a positive integer.
    """
    try:
        number = int(value)
    except ValueError as exc:
        msg = f"'{value}' is not an integer"
        raise argparse.ArgumentTypeError(msg) from exc
    if number < 1:
        msg = f"'{value}' must be at least 1"
        raise argparse.ArgumentTypeError(msg)
    return number


def non_negative_int(value: str) -> int:
    """Parse an integer that may be zero.

    Args:
        value: The raw value.

    Returns:
        The integer.

    Raises:
        ArgumentTypeError: When the value is negative or not an integer.
    """
    try:
        number = int(value)
    except ValueError as exc:
        msg = f"'{value}' is not an integer"
        raise argparse.ArgumentTypeError(msg) from exc
    if number < 0:
        msg = f"'{value}' must not be negative"
        raise argparse.ArgumentTypeError(msg)
    return number


def positive_float(value: str) -> float:
    """Parse a strictly positive float.

    Args:
        value: The raw value.

    Returns:
        The float.

    Raises:
        ArgumentTypeError: When the value is not a positive number.
    """
    try:
        number = float(value)
    except ValueError as exc:
        msg = f"'{value}' is not a number"
        raise argparse.ArgumentTypeError(msg) from exc
    if not number > 0:
        msg = f"'{value}' must be positive"
        raise argparse.ArgumentTypeError(msg)
    return number


class Parser:
    """A parser for the command line arguments."""

    def __init__(self) -> None:
        """Initialize the parser."""
        self.args: argparse.Namespace
        self.pending_logs: list[Msg] = []

    def parse_args(self, argv: list[str] | None = None) -> tuple[argparse.Namespace, list[Msg]]:
        """Parse the root arguments.

        Args:
            argv: The arguments, sys.argv[1:] when omitted.

        Returns:
            The parsed arguments and any pending logs
        """
        parser = ArgumentParser(
            description="Verify the exterior calculus behind Lovelock gravity.",
            formatter_class=CustomHelpFormatter,
        )
        parser.add_argument(
            "--version",
            action="version",
            help="Print lovelock-forms version and exit.",
            version=__version__,
        )
        subparser = parser.add_subparsers(
            dest="subcommand",
            metavar="command",
            required=True,
        )
        self._check(subparser=subparser)
        self._eval(subparser=subparser)

        if HAS_ARGCOMPLETE:
            argcomplete.autocomplete(parser)
        self.args = parser.parse_args(argv)

        if getattr(self.args, "tol", None) is not None:
            msg = f"Every check is held to the tolerance {self.args.tol} instead of its own."
            self.pending_logs.append(Msg(prefix=Level.NOTE, message=msg))
        if self.args.subcommand == "check" and self.args.heavy and self.args.jobs == 1:
            msg = "Heavy runs can be spread over worker processes with --jobs."
            self.pending_logs.append(Msg(prefix=Level.HINT, message=msg))

        return self.args, self.pending_logs

    def _add_args_common(self, parser: ArgumentParser) -> None:
        """Add common arguments to the parser.

        Args:
            parser: The parser to add common arguments to
        """
        parser.add_argument(
            "--na",
            "--no-ansi",
            action="store_true",
            default=False,
            dest="no_ansi",
            help="Disable the use of ANSI codes for terminal color.",
        )

        parser.add_argument(
            "--lf",
            "--log-file <file>",
            dest="log_file",
            default=str(Path.cwd() / "lovelock-forms.log"),
            help="Log file to write to.",
        )

        parser.add_argument(
            "--ll",
            "--log-level <level>",
            dest="log_level",
            default="notset",
            choices=["notset", "debug", "info", "warning", "error", "critical"],
            help="Log level for file output.",
        )

        parser.add_argument(
            "--la",
            "--log-append <bool>",
            dest="log_append",
            choices=["true", "false"],
            default="true",
            help="Append to log file.",
        )

        parser.add_argument(
            "--json",
            dest="json",
            action="store_true",
            default=False,
            help="Output messages as JSON",
        )

        parser.add_argument(
            "-v",
            "--verbosity",
            dest="verbose",
            action="count",
            default=0,
            help="Give more Cli output. Option is additive, and can be used up to 3 times.",
        )

    def _add_args_run_common(self, parser: ArgumentParser) -> None:
        """Add the arguments shared by check and eval.

        Args:
            parser: The parser to add the arguments to
        """
        parser.add_argument(
            "--r",
            dest="r",
            type=non_negative_int,
            help="Lovelock order r, 1 when omitted.",
        )
        parser.add_argument(
            "--out",
            dest="out",
            help="Write the full JSON report to this file.",
        )

    def _check(self, subparser: SubParser[ArgumentParser]) -> None:
        """Run verification suites.

        Args:
            subparser: The subparser to add check to
        """
        parser = subparser.add_parser(
            "check",
            formatter_class=CustomHelpFormatter,
            help="Run a verification suite and report every check.",
        )
        parser.add_argument(
            "suite",
            choices=[*SUITES, "all"],
            help="The suite to run.",
        )
        parser.add_argument(
            "--dim",
            dest="dim",
            type=positive_int,
            help="Dimension m, the suite default when omitted.",
        )
        parser.add_argument(
            "--seed",
            dest="seed",
            type=int,
            help="Random seed, else LOVELOCK_FORMS_SEED, else 0.",
        )
        parser.add_argument(
            "--samples",
            dest="samples",
            type=positive_int,
            help="Random draws per check, the suite default when omitted.",
        )
        parser.add_argument(
            "--tol",
            dest="tol",
            type=positive_float,
            help="Tolerance applied to every check instead of its own.",
        )
        parser.add_argument(
            "--heavy",
            dest="heavy",
            action="store_true",
            default=False,
            help="Allow the expensive brute-force loops.",
        )
        parser.add_argument(
            "--jobs",
            dest="jobs",
            type=positive_int,
            default=1,
            help="Worker processes per suite.",
        )
        self._add_args_run_common(parser)
        self._add_args_common(parser)

    def _eval(self, subparser: SubParser[ArgumentParser]) -> None:
        """Evaluate a quantity for a metric at a point.

        Args:
            subparser: The subparser to add eval to
        """
        parser = subparser.add_parser(
            "eval",
            formatter_class=CustomHelpFormatter,
            help="Evaluate a Lovelock quantity for a metric at a point.",
        )
        parser.add_argument(
            "what",
            choices=list(EVAL_TARGETS),
            help="The quantity to evaluate.",
        )
        parser.add_argument(
            "--metric",
            dest="metric",
            help="A catalog metric or a tabulated metric JSON file, minkowski when omitted.",
        )
        parser.add_argument(
            "--params",
            dest="params",
            nargs="*",
            default=[],
            metavar="KEY=VALUE",
            help="Metric parameters such as M=1 or a=2.",
        )
        parser.add_argument(
            "--point",
            dest="point",
            nargs="+",
            type=float,
            help="Evaluation point, the origin when omitted.",
        )
        parser.add_argument(
            "--step",
            dest="step",
            type=positive_float,
            help="Finite-difference step h for divergence, 0.001 when omitted.",
        )
        parser.add_argument(
            "--dim",
            dest="dim",
            type=positive_int,
            help="Dimension for catalog metrics that take one.",
        )
        self._add_args_run_common(parser)
        self._add_args_common(parser)


class ArgumentParser(argparse.ArgumentParser):
    """A custom argument parser."""

    def add_argument(  # type: ignore[override]
        self,
        *args: Any,  # noqa: ANN401
        **kwargs: Any,  # noqa: ANN401
    ) -> None:
        """Add an argument.

        Args:
            *args: The arguments
            **kwargs: The keyword arguments
        """
        if "choices" in kwargs:
            kwargs["help"] += f" (choices: {', '.join(kwargs['choices'])})"
        if kwargs.get("default") not in (None, []):
            kwargs["help"] += f" (default: {kwargs['default']})"
        kwargs["help"] = kwargs["help"][0].upper() + kwargs["help"][1:]
        super().add_argument(*args, **kwargs)


if TYPE_CHECKING:
    SubParser: TypeAlias = argparse._SubParsersAction  # noqa: SLF001


class CustomHelpFormatter(HelpFormatter):
    """A custom help formatter."""

    def __init__(self, prog: str) -> None:
        """Initialize the help formatter.

        Args:
            prog: The program name
        """
        long_string = "--abc  --really_really_really_log"
        # 3 here accounts for the spaces in the ljust(6) below
        HelpFormatter.__init__(
            self,
            prog=prog,
            indent_increment=1,
            max_help_position=len(long_string) + 3,
        )

    def _format_action_invocation(
        self,
        action: argparse.Action,
    ) -> str:
        """Format the action invocation.

        Args:
            action: The action to format

        Returns:
            The formatted action invocation
        """
        if not action.option_strings:
            default = self._get_default_metavar_for_positional(action)
            (metavar,) = self._metavar_formatter(action, default)(1)
            return metavar

        if len(action.option_strings) == 1:
            return action.option_strings[0]

        short, *long = action.option_strings
        return f"{short.ljust(6)} {' '.join(long)}"

    def add_arguments(self, actions: Iterable[argparse.Action]) -> None:
        """Add arguments sorted by option strings.

        Args:
            actions: The actions to add
        """
        actions = sorted(actions, key=attrgetter("option_strings"))
        super().add_arguments(actions)
