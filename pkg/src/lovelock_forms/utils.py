"""Re-usable utility functions used by this package."""

from __future__ import annotations

import json
import math
import os

from dataclasses import asdict, dataclass
from importlib import resources as impl_resources
from pathlib import Path
from typing import TYPE_CHECKING, Any

import numpy as np
import yaml

from lovelock_forms.exceptions import UsageError


if TYPE_CHECKING:
    from lovelock_forms.types import Report


@dataclass
class TermFeatures:
    """Terminal features.

    Attributes:
        color: Enable color output.
        links: Enable clickable links.
    """

    color: bool
    links: bool

    def any_enabled(self) -> bool:
        """Return True if any features are enabled.

        Returns:
            bool: True if any features are enabled.
        """
        return any((self.color, self.links))


def expand_path(path: str) -> Path:
    """Resolve absolute path.

    Args:
        path: Path to expand.

    Returns:
        Expanded absolute path.
    """
    _path = Path(os.path.expandvars(path))
    _path = _path.expanduser()
    return _path.resolve()


def resource_text(name: str) -> str:
    """Read a file shipped in the resources package.

    Args:
        name: The file name.

    Returns:
        The file content.
    """
    return impl_resources.files("lovelock_forms.resources").joinpath(name).read_text("utf-8")


def load_defaults() -> dict[str, Any]:
    """Load the packaged run defaults.

    Returns:
        The parsed defaults.yml.
    """
    loaded = yaml.safe_load(resource_text("defaults.yml"))
    return loaded if isinstance(loaded, dict) else {}


def json_safe(value: Any) -> Any:  # noqa: ANN401
    """Convert a value into something json.dumps accepts deterministically.

    Non-finite floats become None; numpy scalars and arrays become Python values.

    Args:
        value: The value.

    Returns:
        The converted value.
    """
    if isinstance(value, dict):
        return {str(key): json_safe(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_safe(item) for item in value]
    if isinstance(value, np.ndarray):
        return json_safe(value.tolist())
    if isinstance(value, np.generic):
        return json_safe(value.item())
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def report_payload(report: Report) -> dict[str, Any]:
    """Return the JSON-ready mapping for a report.

    Args:
        report: The report.

    Returns:
        The payload.
    """
    return json_safe(asdict(report))


def dump_report(report: Report) -> str:
    """Serialize a report with sorted keys and a trailing newline.

    Args:
        report: The report.

    Returns:
        The JSON text.
    """
    return json.dumps(report_payload(report), sort_keys=True, indent=2) + "\n"


def write_report(report: Report, path: Path) -> None:
    """Write a report to disk.

    Args:
        report: The report.
        path: The destination file.

    Raises:
        UsageError: When the file cannot be written.
    """
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(dump_report(report), encoding="utf-8")
    except OSError as exc:
        msg = f"Could not write the report to {path}."
        raise UsageError(msg) from exc
