"""Metric sources: a built-in catalog with exact derivatives and a tabulated loader."""

from __future__ import annotations

import json
import logging

from dataclasses import dataclass
from pathlib import Path
from typing import TYPE_CHECKING, Any

import numpy as np

from lovelock_forms.constants import TOL_CONSISTENCY
from lovelock_forms.exceptions import (
    ConstructionError,
    DataConsistencyError,
    DomainError,
    PreconditionError,
    UsageError,
)
from lovelock_forms.types import Signature


if TYPE_CHECKING:
    from collections.abc import Callable, Mapping, Sequence

    from numpy.typing import NDArray


logger = logging.getLogger(__name__)

# tabulated points match a query within this distance
POINT_MATCH = 1e-12


@dataclass(frozen=True)
class MetricSample:
    """A metric and its first two coordinate derivatives at one point.

    Attributes:
        x: The point.
        g: g[μ, ν].
        dg: dg[ρ, μ, ν] = ∂_ρ g_{μν}.
        ddg: ddg[ρ, σ, μ, ν] = ∂_ρ ∂_σ g_{μν}.
    """

    x: NDArray[np.float64]
    g: NDArray[np.float64]
    dg: NDArray[np.float64]
    ddg: NDArray[np.float64]

    @property
    def m(self) -> int:
        """Return the dimension."""
        return int(self.g.shape[0])

    @property
    def det(self) -> float:
        """Return det g."""
        return float(np.linalg.det(self.g))

    def inverse(self) -> NDArray[np.float64]:
        """Return g^{μν}.

        Returns:
            The inverse metric.

        Raises:
            ConstructionError: When g is singular.
        """
        try:
            return np.linalg.inv(self.g)
        except np.linalg.LinAlgError as exc:
            msg = f"Metric is singular at {self.x.tolist()}."
            raise ConstructionError(msg) from exc

    def check(self, tol: float = TOL_CONSISTENCY) -> None:
        """Verify shapes and index symmetries.

        Args:
            tol: Absolute tolerance on the symmetry residuals.

        Raises:
            DataConsistencyError: When a shape or symmetry is violated.
        """
        m = self.g.shape[0]
        shapes = (self.g.shape, self.dg.shape, self.ddg.shape, self.x.shape)
        if shapes != ((m, m), (m,) * 3, (m,) * 4, (m,)):
            msg = f"Inconsistent metric sample shapes {shapes}."
            raise DataConsistencyError(msg)
        residuals = {
            "g symmetric": np.abs(self.g - self.g.T),
            "dg symmetric in (μν)": np.abs(self.dg - self.dg.transpose(0, 2, 1)),
            "ddg symmetric in (μν)": np.abs(self.ddg - self.ddg.transpose(0, 1, 3, 2)),
            "ddg symmetric in (ρσ)": np.abs(self.ddg - self.ddg.transpose(1, 0, 2, 3)),
        }
        for label, residual in residuals.items():
            worst = float(np.max(residual))
            if worst > tol:
                msg = f"Metric data violates {label}: residual {worst:.3e}."
                raise DataConsistencyError(msg)


class MetricSource:
    """A stateless point evaluator for a metric.

    Attributes:
        name: Catalog name or file path.
        signature: The signature the metric is expected to carry.
    """

    def __init__(self, name: str, signature: Signature) -> None:
        """Initialize the source.

        Args:
            name: The source name.
            signature: The expected signature.
        """
        self.name = name
        self.signature = signature

    @property
    def m(self) -> int:
        """Return the dimension."""
        return self.signature.m

    def evaluate(self, x: NDArray[np.float64]) -> MetricSample:
        """Return the raw sample at a point.

        Args:
            x: The point.

        Raises:
            NotImplementedError: Always; subclasses provide the metric.
        """
        raise NotImplementedError

    def sample(self, x: Sequence[float] | NDArray[np.float64]) -> MetricSample:
        """Evaluate and validate the metric at a point.

        Args:
            x: The point.

        Returns:
            The validated sample.

        Raises:
            DomainError: When the point has the wrong length.
        """
        point = np.asarray(x, dtype=float)
        if point.shape != (self.m,):
            msg = f"Metric '{self.name}' needs a point of length {self.m}, got {point.shape}."
            raise DomainError(msg)
        result = self.evaluate(point)
        result.check()
        return result

    def __repr__(self) -> str:
        """Return a short description.

        Returns:
            The representation.
        """
        return f"{type(self).__name__}(name={self.name!r}, m={self.m})"


class Minkowski(MetricSource):
    """The flat metric η in any dimension."""

    def __init__(self, dim: int = 4) -> None:
        """Initialize.

        Args:
            dim: The dimension.
        """
        super().__init__("minkowski", Signature.lorentzian(dim))

    def evaluate(self, x: NDArray[np.float64]) -> MetricSample:
        """Return η with vanishing derivatives.

        Args:
            x: The point.

        Returns:
            The sample.
        """
        m = self.m
        return MetricSample(
            x=x,
            g=self.signature.matrix,
            dg=np.zeros((m,) * 3),
            ddg=np.zeros((m,) * 4),
        )


class Schwarzschild(MetricSource):
    """Schwarzschild in (t, r, θ, φ) coordinates, valid for r > 3M."""

    def __init__(self, mass: float = 1.0) -> None:
        """Initialize.

        Args:
            mass: The mass parameter M.

        Raises:
            UsageError: When the mass is not positive.
        """
        if mass <= 0:
            msg = f"Schwarzschild mass must be positive, got {mass}."
            raise UsageError(msg)
        super().__init__("schwarzschild", Signature.lorentzian(4))
        self.mass = mass

    def evaluate(self, x: NDArray[np.float64]) -> MetricSample:
        """Return the metric with closed-form derivatives.

        Args:
            x: The point (t, r, θ, φ).

        Returns:
            The sample.

        Raises:
            DomainError: At or inside r = 3M, or on the polar axis.
        """
        _, r, theta, _ = x
        if r <= 3 * self.mass:
            msg = (
                f"Radius {r} must exceed 3M = {3 * self.mass}, "
                f"well outside the horizon at {2 * self.mass}."
            )
            raise DomainError(msg)
        s, c = np.sin(theta), np.cos(theta)
        if abs(s) < 1e-12:
            msg = "Schwarzschild coordinates are singular on the polar axis."
            raise DomainError(msg)
        f = 1.0 - 2.0 * self.mass / r
        f1 = 2.0 * self.mass / r**2
        f2 = -4.0 * self.mass / r**3
        g = np.diag([-f, 1.0 / f, r**2, r**2 * s**2])
        dg = np.zeros((4, 4, 4))
        dg[1] = np.diag([-f1, -f1 / f**2, 2 * r, 2 * r * s**2])
        dg[2, 3, 3] = 2 * r**2 * s * c
        ddg = np.zeros((4, 4, 4, 4))
        ddg[1, 1] = np.diag([-f2, -f2 / f**2 + 2 * f1**2 / f**3, 2.0, 2 * s**2])
        ddg[1, 2, 3, 3] = ddg[2, 1, 3, 3] = 4 * r * s * c
        ddg[2, 2, 3, 3] = 2 * r**2 * (c**2 - s**2)
        return MetricSample(x=x, g=g, dg=dg, ddg=ddg)


def _sphere_block(radius: float, theta: float) -> tuple[NDArray, NDArray, NDArray]:
    s, c = np.sin(theta), np.cos(theta)
    g = np.diag([radius**2, radius**2 * s**2])
    dg = np.zeros((2, 2, 2))
    dg[0, 1, 1] = 2 * radius**2 * s * c
    ddg = np.zeros((2, 2, 2, 2))
    ddg[0, 0, 1, 1] = 2 * radius**2 * (c**2 - s**2)
    return g, dg, ddg


class Sphere(MetricSource):
    """The round 2-sphere of radius a in (θ, φ)."""

    def __init__(self, radius: float = 1.0) -> None:
        """Initialize.

        Args:
            radius: The radius a.

        Raises:
            UsageError: When the radius is not positive.
        """
        if radius <= 0:
            msg = f"Sphere radius must be positive, got {radius}."
            raise UsageError(msg)
        super().__init__("sphere", Signature.euclidean(2))
        self.radius = radius

    def evaluate(self, x: NDArray[np.float64]) -> MetricSample:
        """Return the round metric.

        Args:
            x: The point (θ, φ).

        Returns:
            The sample.
        """
        g, dg, ddg = _sphere_block(self.radius, x[0])
        return MetricSample(x=x, g=g, dg=dg, ddg=ddg)


class SphereProduct(MetricSource):
    """S²(a) × S²(b) in (θ₁, φ₁, θ₂, φ₂)."""

    def __init__(self, a: float = 1.0, b: float = 1.0) -> None:
        """Initialize.

        Args:
            a: Radius of the first factor.
            b: Radius of the second factor.

        Raises:
            UsageError: When a radius is not positive.
        """
        if a <= 0 or b <= 0:
            msg = f"Sphere radii must be positive, got {a} and {b}."
            raise UsageError(msg)
        super().__init__("sphere-product", Signature.euclidean(4))
        self.a = a
        self.b = b

    def evaluate(self, x: NDArray[np.float64]) -> MetricSample:
        """Return the block-diagonal product metric.

        Args:
            x: The point.

        Returns:
            The sample.
        """
        g = np.zeros((4, 4))
        dg = np.zeros((4, 4, 4))
        ddg = np.zeros((4, 4, 4, 4))
        for offset, radius in ((0, self.a), (2, self.b)):
            block = slice(offset, offset + 2)
            g1, dg1, ddg1 = _sphere_block(radius, x[offset])
            g[block, block] = g1
            dg[block, block, block] = dg1
            ddg[block, block, block, block] = ddg1
        return MetricSample(x=x, g=g, dg=dg, ddg=ddg)


class RandomPolynomial(MetricSource):
    """g = η + ε(c + b·x + ½ a·x·x) with seeded symmetric coefficients.

    Coefficients are uniform on (-1, 1)/m, so with ε ≤ 0.1 the signature of η
    survives for |x_i| ≤ 0.5.
    """

    def __init__(
        self,
        dim: int = 4,
        seed: int = 0,
        eps: float = 0.1,
        *,
        lorentzian: bool = True,
    ) -> None:
        """Initialize and draw the coefficients.

        Args:
            dim: The dimension.
            seed: Seed for the coefficient draw.
            eps: The perturbation size.
            lorentzian: Perturb diag(-1, 1, ...) rather than the identity.

        Raises:
            UsageError: When eps exceeds 0.1 or the dimension is below 2.
        """
        if not 0 <= eps <= 0.1:  # noqa: PLR2004
            msg = f"Perturbation size must lie in [0, 0.1], got {eps}."
            raise UsageError(msg)
        if dim < 2:  # noqa: PLR2004
            msg = f"Random polynomial metrics need dimension 2 or more, got {dim}."
            raise UsageError(msg)
        sig = Signature.lorentzian(dim) if lorentzian else Signature.euclidean(dim)
        super().__init__("random-poly", sig)
        rng = np.random.default_rng(seed)
        m = dim

        def draw(shape: tuple[int, ...]) -> NDArray[np.float64]:
            return rng.uniform(-1.0, 1.0, size=shape) / m

        c = draw((m, m))
        self.c = 0.5 * (c + c.T)
        b = draw((m, m, m))
        self.b = 0.5 * (b + b.transpose(0, 2, 1))
        a = draw((m, m, m, m))
        a = 0.5 * (a + a.transpose(1, 0, 2, 3))
        self.a = 0.5 * (a + a.transpose(0, 1, 3, 2))
        self.eps = eps
        self.seed = seed

    def evaluate(self, x: NDArray[np.float64]) -> MetricSample:
        """Return the polynomial metric.

        Args:
            x: The point.

        Returns:
            The sample.
        """
        quad = np.einsum("rsmn,r,s->mn", self.a, x, x)
        g = self.signature.matrix + self.eps * (
            self.c + np.einsum("rmn,r->mn", self.b, x) + 0.5 * quad
        )
        dg = self.eps * (self.b + np.einsum("rsmn,s->rmn", self.a, x))
        ddg = self.eps * self.a
        return MetricSample(x=x, g=g, dg=dg, ddg=ddg)


class Tabulated(MetricSource):
    """Metric data read from a JSON file of explicit samples."""

    def __init__(self, path: Path) -> None:
        """Load and validate the file.

        Args:
            path: The JSON file.

        Raises:
            UsageError: When the file cannot be read or does not follow the schema.
        """
        try:
            payload = json.loads(Path(path).read_text(encoding="utf-8"))
            dim = int(payload["dim"])
            signature = Signature(tuple(float(v) for v in payload["signature"]))
            points = [
                MetricSample(
                    x=np.asarray(entry["x"], dtype=float),
                    g=np.asarray(entry["g"], dtype=float),
                    dg=np.asarray(entry["dg"], dtype=float),
                    ddg=np.asarray(entry["ddg"], dtype=float),
                )
                for entry in payload["points"]
            ]
        except (OSError, ValueError, KeyError, TypeError, DomainError) as exc:
            msg = f"Could not read tabulated metric {path}."
            raise UsageError(msg) from exc
        if signature.m != dim:
            msg = (
                f"Tabulated metric {path} declares dim {dim}"
                f" but a signature of length {signature.m}."
            )
            raise UsageError(msg)
        super().__init__(str(path), signature)
        for point in points:
            point.check()
        self.points = points
        logger.debug("Loaded %d tabulated points from %s", len(points), path)

    def evaluate(self, x: NDArray[np.float64]) -> MetricSample:
        """Return the tabulated sample at x.

        Args:
            x: The point.

        Returns:
            The stored sample.

        Raises:
            PreconditionError: When no stored point matches.
        """
        for point in self.points:
            if point.x.shape == x.shape and np.max(np.abs(point.x - x)) <= POINT_MATCH:
                return point
        msg = f"No tabulated sample at {x.tolist()} in {self.name}."
        raise PreconditionError(msg)


def scaled_sample(sample: MetricSample, s: float) -> MetricSample:
    """Return the sample in coordinates y = x / s.

    The metric picks up s², its first derivatives s³ and second derivatives s⁴.

    Args:
        sample: The original sample.
        s: The scale factor.

    Returns:
        The sample in the new coordinates, at y = x / s.
    """
    return MetricSample(
        x=sample.x / s,
        g=sample.g * s**2,
        dg=sample.dg * s**3,
        ddg=sample.ddg * s**4,
    )


def _param(params: Mapping[str, float], key: str, default: float) -> float:
    return float(params.get(key, default))


BUILTINS: dict[str, Callable[[Mapping[str, float], int | None], MetricSource]] = {
    "minkowski": lambda p, dim: Minkowski(int(_param(p, "dim", dim or 4))),
    "schwarzschild": lambda p, _dim: Schwarzschild(_param(p, "M", 1.0)),
    "sphere": lambda p, _dim: Sphere(_param(p, "a", 1.0)),
    "sphere-product": lambda p, _dim: SphereProduct(_param(p, "a", 1.0), _param(p, "b", 1.0)),
    "random-poly": lambda p, dim: RandomPolynomial(
        int(_param(p, "dim", dim or 4)),
        int(_param(p, "seed", 0)),
        _param(p, "eps", 0.1),
        lorentzian=bool(_param(p, "lorentzian", 1.0)),
    ),
}


def resolve_metric(
    name: str,
    params: Mapping[str, Any] | None = None,
    dim: int | None = None,
) -> MetricSource:
    """Return a metric source from a catalog name or a JSON file path.

    Args:
        name: A catalog name or a path to a tabulated metric.
        params: Catalog parameters such as M, a, b, seed, eps or dim.
        dim: A default dimension for catalog entries that take one.

    Returns:
        The metric source.

    Raises:
        UsageError: When the name is neither a catalog entry nor a file.
    """
    if name in BUILTINS:
        return BUILTINS[name](params or {}, dim)
    path = Path(name).expanduser()
    if path.is_file():
        return Tabulated(path)
    msg = f"Unknown metric '{name}'; choose one of {', '.join(BUILTINS)} or a JSON file."
    raise UsageError(msg)
