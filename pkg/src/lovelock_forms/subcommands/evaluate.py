"""Definitions for lovelock-forms eval action."""

from __future__ import annotations

from pathlib import Path
from typing import TYPE_CHECKING, Any

import numpy as np

from lovelock_forms import lovelock
from lovelock_forms.exceptions import UsageError
from lovelock_forms.metrics import resolve_metric
from lovelock_forms.templar import Templar
from lovelock_forms.types import Report
from lovelock_forms.utils import write_report


if TYPE_CHECKING:
    from collections.abc import Callable

    from numpy.typing import NDArray

    from lovelock_forms.config import Config
    from lovelock_forms.metrics import MetricSource
    from lovelock_forms.output import Output


class Evaluate:
    """Class to handle the eval subcommand."""

    def __init__(
        self,
        config: Config,
    ) -> None:
        """Initialize the eval action.

        Args:
            config: App configuration object.
        """
        self._config = config
        self._what: str = config.what
        self._r: int = int(config.r or 0)
        self._step: float = float(config.step or 1e-3)
        self._out: Path | None = Path(config.out) if config.out else None
        self.output: Output = config.output
        self.templar = Templar()

    def run(self) -> int:
        """Evaluate the requested quantity and report it.

        Returns:
            0 once the values are computed, whatever they are.
        """
        config = self._config
        params = config.params if isinstance(config.params, dict) else {}
        source = resolve_metric(config.metric, params, config.dim)
        point = np.asarray(config.point if config.point else np.zeros(source.m), dtype=float)
        self.output.debug(f"Evaluating {self._what} for {source!r} at {point.tolist()}")

        handlers: dict[str, Callable[[MetricSource, NDArray[np.float64]], dict[str, Any]]] = {
            "density": self._density,
            "tensor": self._tensor,
            "psi": self._psi,
            "divergence": self._divergence,
            "eds": self._eds,
        }
        values = handlers[self._what](source, point)

        report = Report(
            command="eval",
            target=self._what,
            environment={
                "metric": source.name,
                "params": params,
                "m": source.m,
                "r": self._r,
                "point": point.tolist(),
            },
            values=values,
        )
        self.output.summary(self.templar.render_summary(report))
        if self._out is not None:
            write_report(report, self._out)
            self.output.note(f"Report written to {self._out}")
        return 0

    def _frame(
        self,
        source: MetricSource,
        point: NDArray[np.float64],
    ) -> tuple[lovelock.Vielbein, lovelock.CurvatureData]:
        cd = lovelock.curvature(source.sample(point))
        return lovelock.vielbein_from_metric(cd.sample.g, source.signature), cd

    def _density(self, source: MetricSource, point: NDArray[np.float64]) -> dict[str, Any]:
        return {"density": lovelock.lovelock_density(self._r, source.sample(point))}

    def _tensor(self, source: MetricSource, point: NDArray[np.float64]) -> dict[str, Any]:
        if self._r < 1:
            msg = "The Lovelock tensor needs an order of at least 1."
            raise UsageError(msg)
        tensor = lovelock.lovelock_tensor(self._r, source.sample(point))
        return {"tensor": tensor, "max_abs": float(np.max(np.abs(tensor)))}

    def _psi(self, source: MetricSource, point: NDArray[np.float64]) -> dict[str, Any]:
        """Ψ^{ab} norms, their frame contraction and the Lovelock tensor it should match."""
        r, m = self._r, source.m
        if r < 1 or 2 * r > m:
            msg = f"Ψ needs 1 <= r and 2r <= m, got r={r} in dimension {m}."
            raise UsageError(msg)
        vb, cd = self._frame(source, point)
        psi = lovelock.psi_form_base(r, vb, cd)
        contracted = lovelock.frame_contracted_psi(vb, psi)
        expected = lovelock.expected_psi_contraction(r, vb, cd)
        return {
            "norms": [[form.max_norm() for form in row] for row in psi],
            "contracted": contracted,
            "expected": expected,
            "deviation": float(np.max(np.abs(contracted - expected))),
        }

    def _divergence(self, source: MetricSource, point: NDArray[np.float64]) -> dict[str, Any]:
        if self._r < 1:
            msg = "The divergence needs an order of at least 1."
            raise UsageError(msg)
        result = lovelock.divergence_lovelock(self._r, source, point, h=self._step)
        return {
            "residual": result.residual,
            "residual_half": result.residual_half,
            "step": result.step,
            "ratio": result.ratio,
            "max_abs": float(np.max(np.abs(result.residual))),
        }

    def _eds(self, source: MetricSource, point: NDArray[np.float64]) -> dict[str, Any]:
        vb, cd = self._frame(source, point)
        report = lovelock.eds_residuals(self._r, vb, cd)
        return {"residuals": report.residuals, "structural": list(report.structural)}
