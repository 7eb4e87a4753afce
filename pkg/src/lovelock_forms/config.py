"""Application configuration class for lovelock-forms."""

from __future__ import annotations

import os

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

from lovelock_forms.constants import DEFAULT_SEED, SEED_ENV_VAR
from lovelock_forms.exceptions import UsageError
from lovelock_forms.utils import expand_path, load_defaults


if TYPE_CHECKING:
    from pathlib import Path

    from lovelock_forms.output import Output


def parse_params(items: list[str] | dict[str, float] | None) -> dict[str, float]:
    """Parse k=v metric parameters.

    Args:
        items: Strings of the form key=value, or an already parsed mapping.

    Returns:
        The parameters as floats.

    Raises:
        UsageError: When an item is malformed or its value is not a number.
    """
    if isinstance(items, dict):
        return {str(key): float(value) for key, value in items.items()}
    params: dict[str, float] = {}
    for item in items or []:
        key, sep, value = item.partition("=")
        if not sep or not key:
            msg = f"Metric parameter '{item}' is not of the form key=value."
            raise UsageError(msg)
        try:
            params[key] = float(value)
        except ValueError as exc:
            msg = f"Metric parameter '{key}' needs a numeric value, got '{value}'."
            raise UsageError(msg) from exc
    return params


def resolve_seed(seed: int | None, defaults: dict[str, Any]) -> int:
    """Pick the run seed: the flag, else the environment, else the packaged default.

    Args:
        seed: The --seed value.
        defaults: The packaged defaults.

    Returns:
        The seed.

    Raises:
        UsageError: When the environment variable is not an integer.
    """
    if seed is not None:
        return seed
    env = os.environ.get(SEED_ENV_VAR)
    if env:
        try:
            return int(env)
        except ValueError as exc:
            msg = f"{SEED_ENV_VAR} must be an integer, got '{env}'."
            raise UsageError(msg) from exc
    return int(defaults.get("seed", DEFAULT_SEED))


@dataclass(frozen=True)
class Config:
    """The application configuration for lovelock-forms.

    Attributes:
        package_version: The version of lovelock-forms.
        output: The output object to use for logging.
        subcommand: The subcommand to execute.
        suite: The suite to check, check only.
        what: The quantity to evaluate, eval only.
        dim: The dimension, None for the suite default.
        r: The Lovelock order.
        seed: The run seed.
        samples: Random draws per check, None for the suite default.
        tol: A tolerance overriding every check's own.
        out: Where to write the JSON report.
        heavy: Allow the expensive brute-force loops.
        jobs: Worker processes for a suite.
        metric: A catalog metric name or a JSON file.
        params: Metric parameters.
        point: The evaluation point.
        step: The finite-difference step.
        defaults: The packaged defaults.
    """

    package_version: str
    output: Output
    subcommand: str
    suite: str = ""
    what: str = ""
    dim: int | None = None
    r: int | None = None
    seed: int | None = None
    samples: int | None = None
    tol: float | None = None
    out: str | Path | None = None
    heavy: bool = False
    jobs: int = 1
    metric: str = ""
    params: list[str] | dict[str, float] | None = None
    point: list[float] | None = None
    step: float | None = None
    defaults: dict[str, Any] = field(default_factory=load_defaults)

    def __post_init__(self) -> None:
        """Post process config values."""
        object.__setattr__(self, "seed", resolve_seed(self.seed, self.defaults))
        object.__setattr__(self, "params", parse_params(self.params))
        if self.r is None:
            object.__setattr__(self, "r", int(self.defaults.get("r", 1)))
        if self.step is None:
            object.__setattr__(self, "step", float(self.defaults.get("step", 1e-3)))
        if not self.metric:
            object.__setattr__(self, "metric", str(self.defaults.get("metric", "minkowski")))
        if isinstance(self.out, str):
            object.__setattr__(self, "out", expand_path(self.out))

    def suite_defaults(self, suite: str) -> dict[str, Any]:
        """Return the packaged dimension and sample count of a suite.

        Args:
            suite: The suite name.

        Returns:
            The suite entry of defaults.yml.
        """
        return dict(self.defaults.get("suites", {}).get(suite, {}))
