"""A Jinja2 template engine for run summaries."""

from __future__ import annotations

import json

from typing import TYPE_CHECKING, Any

from lovelock_forms.utils import report_payload, resource_text


if TYPE_CHECKING:
    from lovelock_forms.types import Report


try:
    from jinja2 import Environment, StrictUndefined

    HAS_JINJA2 = True
except ImportError:
    HAS_JINJA2 = False

SUMMARY_TEMPLATE = "summary.txt.j2"


def scientific(value: float | None) -> str:
    """Format a number for the summary.

    Args:
        value: The number, None for a non-finite value.

    Returns:
        The formatted number.
    """
    if value is None:
        return "inf"
    return f"{value:.3e}"


class Templar:
    """Class representing a Jinja2 template engine."""

    def __init__(self) -> None:
        """Instantiate the template engine.

        Raises:
            ImportError: when jinja2 is not installed.
        """
        if not HAS_JINJA2:
            msg = (
                "jinja2 is required but does not appear to be installed."
                "It can be installed using `pip install jinja2`"
            )
            raise ImportError(
                msg,
            )
        self.env: Environment = Environment(  # noqa: S701
            undefined=StrictUndefined,
            keep_trailing_newline=True,
            trim_blocks=True,
            lstrip_blocks=True,
        )
        self.env.filters["json"] = lambda value: json.dumps(value, sort_keys=True, indent=2)
        self.env.filters["sci"] = scientific

    def render_from_content(self, template: str, data: dict[str, Any]) -> str:
        """Render a template with provided data.

        Args:
            template: The template to load and render.
            data: Data to render template with.

        Returns:
            Templated content.
        """
        return self.env.from_string(template).render(data)

    def render_summary(self, report: Report) -> str:
        """Render the human summary of a report.

        Args:
            report: The report.

        Returns:
            The summary text.
        """
        data = report_payload(report)
        statuses = [check["status"] for check in data["checks"]]
        data["counts"] = {status: statuses.count(status) for status in ("pass", "fail", "skipped")}
        return self.render_from_content(resource_text(SUMMARY_TEMPLATE), data)
