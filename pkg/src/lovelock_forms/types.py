"""A home for shared types."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from lovelock_forms.exceptions import DomainError


@dataclass(frozen=True)
class Signature:
    """A diagonal metric signature η with entries ±1.

    Attributes:
        eta: The diagonal entries.
    """

    eta: tuple[float, ...]

    def __post_init__(self) -> None:
        """Validate the entries.

        Raises:
            DomainError: When an entry is not exactly ±1.
        """
        if not self.eta or any(value not in (-1.0, 1.0) for value in self.eta):
            msg = f"Signature entries must be exactly +1 or -1, got {self.eta}."
            raise DomainError(msg)

    @classmethod
    def lorentzian(cls, m: int) -> Signature:
        """Return diag(-1, 1, ..., 1).

        Args:
            m: The dimension.

        Returns:
            The signature.
        """
        return cls((-1.0,) + (1.0,) * (m - 1))

    @classmethod
    def euclidean(cls, m: int) -> Signature:
        """Return the identity signature.

        Args:
            m: The dimension.

        Returns:
            The signature.
        """
        return cls((1.0,) * m)

    @property
    def m(self) -> int:
        """Return the dimension."""
        return len(self.eta)

    @property
    def matrix(self) -> np.ndarray:
        """Return η as a dense matrix; it is its own inverse."""
        return np.diag(np.asarray(self.eta, dtype=float))

    @property
    def det(self) -> float:
        """Return det(η)."""
        return float(np.prod(self.eta))

    @property
    def negatives(self) -> int:
        """Return the number of -1 entries."""
        return sum(1 for value in self.eta if value < 0)


@dataclass
class CheckRecord:
    """The outcome of one verification check.

    Attributes:
        name: Dotted check name, suite first.
        status: pass, fail or skipped.
        max_deviation: Largest deviation observed.
        tolerance: The tolerance the deviation was held to.
        samples: Number of random draws or evaluations.
        elapsed_ms: Wall time, excluded from determinism comparisons.
        detail: Deterministic extra values such as fitted constants.
    """

    name: str
    status: str
    max_deviation: float
    tolerance: float
    samples: int
    elapsed_ms: float = 0.0
    detail: dict[str, Any] = field(default_factory=dict)


@dataclass
class FittedConstant:
    """A normalization constant fitted across samples.

    Attributes:
        label: What the constant normalizes.
        m: Dimension.
        r: Lovelock order.
        value: Mean fitted value.
        variance: Sample variance over the draws.
    """

    label: str
    m: int
    r: int
    value: float
    variance: float


@dataclass
class Report:
    """A machine-readable run report.

    Attributes:
        command: check or eval.
        target: Suite name or evaluation target.
        status: pass or fail.
        checks: The per-check records.
        environment: Seed, dimensions and orders used.
        fitted_constants: Constants fitted during the run.
        values: Evaluation payload for eval runs.
    """

    command: str
    target: str
    status: str = "pass"
    checks: list[CheckRecord] = field(default_factory=list)
    environment: dict[str, Any] = field(default_factory=dict)
    fitted_constants: list[FittedConstant] = field(default_factory=list)
    values: dict[str, Any] = field(default_factory=dict)
