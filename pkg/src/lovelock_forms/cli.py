# PYTHON_ARGCOMPLETE_OK
"""The lovelock-forms Cli."""

from __future__ import annotations

import os
import sys

from importlib import import_module
from typing import Any

from lovelock_forms.arg_parser import Parser
from lovelock_forms.config import Config
from lovelock_forms.exceptions import LovelockError
from lovelock_forms.output import EXIT_USAGE, Msg, Output
from lovelock_forms.utils import TermFeatures, expand_path


try:
    from ._version import version as __version__
except ImportError:  # pragma: no cover
    __version__ = "source"

# subcommand name -> module under lovelock_forms.subcommands
SUBCOMMAND_MODULES = {"check": "check", "eval": "evaluate"}


class Cli:
    """Class representing the lovelock-forms Cli."""

    def __init__(self, argv: list[str] | None = None) -> None:
        """Initialize the Cli and parse Cli args.

        Args:
            argv: The arguments, sys.argv[1:] when omitted.
        """
        self.args: dict[str, Any]
        self.output: Output
        self.pending_logs: list[Msg]
        self.term_features: TermFeatures
        self.parse_args(argv)

    def init_output(self) -> None:
        """Initialize the output object.

        In case the arg parsing exited early, set some sane default values.
        """
        no_ansi = self.args.pop("no_ansi", False)
        if not sys.stdout.isatty():
            self.term_features = TermFeatures(color=False, links=False)
        else:
            self.term_features = TermFeatures(
                color=False if os.environ.get("NO_COLOR") else not no_ansi,
                links=not no_ansi,
            )

        self.output = Output(
            log_append=self.args.pop("log_append", "true"),
            log_file=str(expand_path(self.args.pop("log_file", "./lovelock-forms.log"))),
            log_level=self.args.pop("log_level", "notset"),
            term_features=self.term_features,
            verbosity=self.args.pop("verbose", 0),
            display="json" if self.args.pop("json", None) else "text",
        )

    def parse_args(self, argv: list[str] | None = None) -> None:
        """Start parsing args passed from Cli.

        Args:
            argv: The arguments, sys.argv[1:] when omitted.
        """
        args, pending_logs = Parser().parse_args(argv)
        self.args = vars(args)
        self.pending_logs = pending_logs

    def process_pending_logs(self) -> None:
        """Log any pending logs."""
        for msg in self.pending_logs:
            getattr(self.output, msg.prefix.value.lower())(msg.message)

    def run(self) -> int:
        """Dispatch work to correct subcommand class.

        Returns:
            The exit status of the subcommand.
        """
        self.output.debug(msg=f"parsed args {self.args!s}")
        subcommand = self.args["subcommand"]
        module_name = SUBCOMMAND_MODULES[subcommand]
        subcommand_module = f"lovelock_forms.subcommands.{module_name}"
        subcommand_cls = module_name.capitalize()
        self.args.update({"package_version": __version__})

        try:
            self.output.debug(msg=f"starting requested action '{subcommand}'")
            action = getattr(import_module(subcommand_module), subcommand_cls)
            self.output.debug(f"found action class {action}")
            status = action(config=Config(**self.args, output=self.output)).run()
        except LovelockError as exc:
            self.output.error(str(exc))
            return EXIT_USAGE

        self.output.debug(msg="exiting lovelock-forms")
        return int(status)


def main(argv: list[str] | None = None) -> None:
    """Entry point for lovelock-forms Cli.

    Args:
        argv: The arguments, sys.argv[1:] when omitted.
    """
    cli = Cli(argv)
    cli.init_output()
    cli.process_pending_logs()
    sys.exit(cli.run())


if __name__ == "__main__":
    main()
