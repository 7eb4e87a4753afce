"""Spacetime-side Lovelock pipeline.

Index conventions follow R(∂_μ, ∂_ν)∂_ρ = R^σ_{ρμν} ∂_σ, Ricci is
R_{ρν} = R^σ_{ρσν} and the raised tensor is R^{στ}_{μν} = g^{ρτ} R^σ_{ρμν}.
Arrays carry their indices in the order they are written.
"""

from __future__ import annotations

import itertools
import logging
import math

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from lovelock_forms.alt import gkdelta, permutations_with_sign
from lovelock_forms.constants import TOL_CONSISTENCY
from lovelock_forms.exceptions import (
    ConstructionError,
    DataConsistencyError,
    DomainError,
    LovelockError,
    PreconditionError,
)
from lovelock_forms.jetforms import Coframe
from lovelock_forms.metrics import MetricSample
from lovelock_forms.types import Signature
from lovelock_forms.xalg import SparseAltForm, one_form, sum_forms, wedge


if TYPE_CHECKING:
    from collections.abc import Sequence

    from numpy.typing import NDArray

    from lovelock_forms.metrics import MetricSource


logger = logging.getLogger(__name__)

FormMatrix = tuple[tuple[SparseAltForm, ...], ...]


def christoffel(sample: MetricSample) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Return the Levi-Civita symbols and their first derivatives.

    Args:
        sample: The metric data.

    Returns:
        gamma[μ, ν, σ] = Γ^μ_{νσ} and dgamma[ρ, μ, ν, σ] = ∂_ρ Γ^μ_{νσ}.
    """
    g_inv = sample.inverse()
    dg, ddg = sample.dg, sample.ddg
    lower = 0.5 * (
        np.einsum("nrs->rns", dg) + np.einsum("srn->rns", dg) - dg
    )
    gamma = np.einsum("mr,rns->mns", g_inv, lower)
    dg_inv = -np.einsum("ma,lab,bn->lmn", g_inv, dg, g_inv)
    dlower = 0.5 * (
        np.einsum("lnrs->lrns", ddg) + np.einsum("lsrn->lrns", ddg) - ddg
    )
    dgamma = np.einsum("lmr,rns->lmns", dg_inv, lower) + np.einsum(
        "mr,lrns->lmns", g_inv, dlower
    )
    return gamma, dgamma


@dataclass(frozen=True)
class CurvatureData:
    """Levi-Civita curvature of a metric at one point.

    Attributes:
        sample: The metric data.
        g_inv: g^{μν}.
        gamma: Γ^μ_{νσ}.
        dgamma: ∂_ρ Γ^μ_{νσ}.
        riemann: R^σ_{ρμν}.
        raised: R^{στ}_{μν}.
        ricci: R_{ρν}.
        scalar: g^{ρν} R_{ρν}.
    """

    sample: MetricSample
    g_inv: NDArray[np.float64]
    gamma: NDArray[np.float64]
    dgamma: NDArray[np.float64]
    riemann: NDArray[np.float64]
    raised: NDArray[np.float64]
    ricci: NDArray[np.float64]
    scalar: float

    @property
    def m(self) -> int:
        """Return the dimension."""
        return self.sample.m


def _assert_small(label: str, residual: NDArray[np.float64], scale: float, tol: float) -> None:
    worst = float(np.max(np.abs(residual))) if residual.size else 0.0
    if worst > tol * max(1.0, scale):
        msg = f"Curvature data violates {label}: residual {worst:.3e}."
        raise DataConsistencyError(msg)


def riemann(
    gamma: NDArray[np.float64],
    dgamma: NDArray[np.float64],
    sample: MetricSample,
    tol: float = TOL_CONSISTENCY,
) -> CurvatureData:
    """Assemble the curvature tensors and assert their symmetries.

    R^σ_{ρμν} = ∂_μΓ^σ_{νρ} - ∂_νΓ^σ_{μρ} + Γ^σ_{μλ}Γ^λ_{νρ} - Γ^σ_{νλ}Γ^λ_{μρ}.

    Args:
        gamma: Γ^μ_{νσ}.
        dgamma: ∂_ρ Γ^μ_{νσ}.
        sample: The metric data.
        tol: Tolerance for the symmetry assertions, relative to max |R|.

    Returns:
        The curvature data.
    """
    g_inv = sample.inverse()
    derivative = np.einsum("msnr->srmn", dgamma)
    quadratic = np.einsum("sml,lnr->srmn", gamma, gamma)
    riem = (
        derivative
        - derivative.transpose(0, 1, 3, 2)
        + quadratic
        - quadratic.transpose(0, 1, 3, 2)
    )
    raised = np.einsum("rt,srmn->stmn", g_inv, riem)
    ricci = np.einsum("srsn->rn", riem)
    scalar = float(np.einsum("rn,rn->", g_inv, ricci))

    scale = float(np.max(np.abs(riem))) if riem.size else 0.0
    _assert_small("Γ symmetry", gamma - gamma.transpose(0, 2, 1), 1.0, tol)
    _assert_small("R antisymmetry in (μν)", riem + riem.transpose(0, 1, 3, 2), scale, tol)
    _assert_small("raised antisymmetry in (στ)", raised + raised.transpose(1, 0, 2, 3), scale, tol)
    _assert_small(
        "first Bianchi",
        riem + riem.transpose(0, 2, 3, 1) + riem.transpose(0, 3, 1, 2),
        scale,
        tol,
    )
    return CurvatureData(
        sample=sample,
        g_inv=g_inv,
        gamma=gamma,
        dgamma=dgamma,
        riemann=riem,
        raised=raised,
        ricci=ricci,
        scalar=scalar,
    )


def curvature(sample: MetricSample) -> CurvatureData:
    """Return the Levi-Civita curvature of a metric sample.

    Args:
        sample: The metric data.

    Returns:
        The curvature data.
    """
    gamma, dgamma = christoffel(sample)
    return riemann(gamma, dgamma, sample)


def _curvature_of(source: CurvatureData | MetricSample) -> CurvatureData:
    return source if isinstance(source, CurvatureData) else curvature(source)


def ricci(cd: CurvatureData) -> NDArray[np.float64]:
    """Return R_{ρν} by an independent contraction of the lowered tensor.

    Args:
        cd: The curvature data.

    Returns:
        The Ricci tensor.
    """
    lowered = np.einsum("as,srmn->armn", cd.sample.g, cd.riemann)
    return np.einsum("am,armn->rn", cd.g_inv, lowered)


def einstein_tensor(cd: CurvatureData) -> NDArray[np.float64]:
    """Return G^{μν} = g^{μa} g^{νb} (R_{ab} - ½ g_{ab} R).

    Args:
        cd: The curvature data.

    Returns:
        The contravariant Einstein tensor.
    """
    lower = cd.ricci - 0.5 * cd.sample.g * cd.scalar
    return cd.g_inv @ lower @ cd.g_inv


@dataclass(frozen=True)
class Vielbein:
    """An orthonormal coframe e^a_μ with e^a_μ η_{ab} e^b_ν = g_{μν}.

    Attributes:
        e: e[a, μ] = e^a_μ.
        e_inv: e_inv[μ, a] = e^μ_a.
        signature: η.
    """

    e: NDArray[np.float64]
    e_inv: NDArray[np.float64]
    signature: Signature

    @property
    def det(self) -> float:
        """Return det(e^a_μ)."""
        return float(np.linalg.det(self.e))

    def metric(self) -> NDArray[np.float64]:
        """Return e^T η e."""
        return self.e.T @ self.signature.matrix @ self.e

    def transformed(self, lam: NDArray[np.float64]) -> Vielbein:
        """Return the vielbein Λ e for a Lorentz transformation Λ.

        Args:
            lam: A matrix with Λ^T η Λ = η.

        Returns:
            The transformed vielbein.

        Raises:
            DomainError: When Λ does not preserve η.
        """
        eta = self.signature.matrix
        residual = float(np.max(np.abs(lam.T @ eta @ lam - eta)))
        if residual > TOL_CONSISTENCY:
            msg = f"Frame change does not preserve η, residual {residual:.3e}."
            raise DomainError(msg)
        e = lam @ self.e
        return Vielbein(e=e, e_inv=np.linalg.inv(e), signature=self.signature)


def vielbein_from_metric(g: NDArray[np.float64], sig: Signature) -> Vielbein:
    """Build a vielbein by eigendecomposition of g.

    Eigenvalues are taken in ascending order (stably for diagonal g), each
    eigenvector is sign-fixed so its largest entry is positive, and the
    negative eigenvalues fill the -1 slots of η in order.

    Args:
        g: The metric matrix.
        sig: The signature.

    Returns:
        The vielbein.

    Raises:
        ConstructionError: When the signature of g differs from η or the
            reconstruction fails.
    """
    g = np.asarray(g, dtype=float)
    m = sig.m
    if g.shape != (m, m):
        msg = f"Metric of shape {g.shape} does not match signature dimension {m}."
        raise ConstructionError(msg)
    if np.count_nonzero(g - np.diag(np.diag(g))) == 0:
        values = np.diag(g).copy()
        vectors = np.eye(m)
        order = np.argsort(values, kind="stable")
        values, vectors = values[order], vectors[:, order]
    else:
        values, vectors = np.linalg.eigh(g)
    negatives = int(np.sum(values < 0))
    if negatives != sig.negatives or np.any(values == 0):
        found = "".join("-" if v < 0 else "+" if v > 0 else "0" for v in values)
        msg = f"Metric signature ({found}) does not match η with {sig.negatives} negative entries."
        raise ConstructionError(msg)
    for col in range(m):
        if vectors[np.argmax(np.abs(vectors[:, col])), col] < 0:
            vectors[:, col] = -vectors[:, col]
    neg_slots = [a for a in range(m) if sig.eta[a] < 0]
    pos_slots = [a for a in range(m) if sig.eta[a] > 0]
    e = np.zeros((m, m))
    for slot, col in zip(neg_slots + pos_slots, range(m), strict=True):
        e[slot] = np.sqrt(abs(values[col])) * vectors[:, col]
    vb = Vielbein(e=e, e_inv=np.linalg.inv(e), signature=sig)
    residual = float(np.max(np.abs(vb.metric() - g)))
    if residual > 1e-12 * max(1.0, float(np.max(np.abs(g)))):
        msg = f"Vielbein reconstruction residual {residual:.3e} is too large."
        raise ConstructionError(msg)
    return vb


def lovelock_density(r: int, source: CurvatureData | MetricSample) -> float:
    """Return √|g| δ^{μ₁ν₁...}_{α₁β₁...} R^{α₁β₁}_{μ₁ν₁} ... R^{α_rβ_r}_{μ_rν_r}.

    Only repeat-free upper tuples and their rearrangements contribute.

    Args:
        r: The order; r = 0 gives √|g|.
        source: Curvature data or a metric sample.

    Returns:
        The density, exactly zero when 2r > m.
    """
    cd = _curvature_of(source)
    m = cd.m
    volume = math.sqrt(abs(cd.sample.det))
    if r == 0:
        return volume
    if 2 * r > m:
        return 0.0
    raised = cd.raised
    total = 0.0
    for upper in itertools.permutations(range(m), 2 * r):
        for sign, lower in permutations_with_sign(upper):
            total += sign * math.prod(
                raised[lower[2 * a], lower[2 * a + 1], upper[2 * a], upper[2 * a + 1]]
                for a in range(r)
            )
    return volume * total


def lovelock_density_reference(r: int, source: CurvatureData | MetricSample) -> float:
    """Return the density by the naive sum over all 4r indices.

    Args:
        r: The order.
        source: Curvature data or a metric sample.

    Returns:
        The density.
    """
    cd = _curvature_of(source)
    m = cd.m
    volume = math.sqrt(abs(cd.sample.det))
    if r == 0:
        return volume
    total = 0.0
    for upper in itertools.product(range(m), repeat=2 * r):
        for lower in itertools.product(range(m), repeat=2 * r):
            delta = gkdelta(upper, lower)
            if delta:
                total += delta * math.prod(
                    cd.raised[lower[2 * a], lower[2 * a + 1], upper[2 * a], upper[2 * a + 1]]
                    for a in range(r)
                )
    return volume * total


def _symmetrize_with_inverse(d: NDArray[np.float64], g_inv: NDArray[np.float64]) -> NDArray:
    contracted = d @ g_inv
    return contracted + contracted.T


def lovelock_tensor(r: int, source: CurvatureData | MetricSample) -> NDArray[np.float64]:
    """Return A^{μν} = (D^μ_ρ g^{ρν} + D^ν_ρ g^{ρμ}).

    D^μ_ρ = δ^{μα₁β₁...}_{ρλ₁θ₁...} R^{λ₁θ₁}_{α₁β₁} ... R^{λ_rθ_r}_{α_rβ_r}.

    Args:
        r: The order, at least 1.
        source: Curvature data or a metric sample.

    Returns:
        The symmetric tensor, exactly zero when 2r + 1 > m.

    Raises:
        DomainError: When r is below 1.
    """
    if r < 1:
        msg = f"Lovelock tensor order must be at least 1, got {r}."
        raise DomainError(msg)
    cd = _curvature_of(source)
    m = cd.m
    d = np.zeros((m, m))
    if 2 * r + 1 > m:
        return d
    raised = cd.raised
    for upper in itertools.permutations(range(m), 2 * r + 1):
        for sign, lower in permutations_with_sign(upper):
            d[upper[0], lower[0]] += sign * math.prod(
                raised[lower[2 * a + 1], lower[2 * a + 2], upper[2 * a + 1], upper[2 * a + 2]]
                for a in range(r)
            )
    return _symmetrize_with_inverse(d, cd.g_inv)


def lovelock_tensor_reference(r: int, source: CurvatureData | MetricSample) -> NDArray[np.float64]:
    """Return A^{μν} by the naive loop over all 4r + 2 indices.

    Args:
        r: The order, at least 1.
        source: Curvature data or a metric sample.

    Returns:
        The tensor.
    """
    cd = _curvature_of(source)
    m = cd.m
    d = np.zeros((m, m))
    for upper in itertools.product(range(m), repeat=2 * r + 1):
        for lower in itertools.product(range(m), repeat=2 * r + 1):
            delta = gkdelta(upper, lower)
            if delta:
                d[upper[0], lower[0]] += delta * math.prod(
                    cd.raised[
                        lower[2 * a + 1], lower[2 * a + 2], upper[2 * a + 1], upper[2 * a + 2]
                    ]
                    for a in range(r)
                )
    return _symmetrize_with_inverse(d, cd.g_inv)


@dataclass
class DivergenceReport:
    """Finite-difference covariant divergence of A^{μν}.

    Attributes:
        residual: ∇_μ A^{μν} at step h.
        residual_half: The same at step h / 2.
        step: The step h.
        ratio: max|residual| / max|residual_half|, None when the latter vanishes.
    """

    residual: NDArray[np.float64]
    residual_half: NDArray[np.float64]
    step: float
    ratio: float | None


def _divergence_at(
    r: int,
    source: MetricSource,
    x: NDArray[np.float64],
    h: float,
) -> NDArray[np.float64]:
    m = source.m
    cd = curvature(source.sample(x))
    tensor = lovelock_tensor(r, cd)
    result = np.einsum("mml,ln->n", cd.gamma, tensor) + np.einsum("nml,ml->n", cd.gamma, tensor)
    for mu in range(m):
        shift = np.zeros(m)
        shift[mu] = h
        forward = lovelock_tensor(r, source.sample(x + shift))
        backward = lovelock_tensor(r, source.sample(x - shift))
        result += (forward[mu] - backward[mu]) / (2.0 * h)
    return result


def divergence_lovelock(
    r: int,
    source: MetricSource,
    point: Sequence[float] | NDArray[np.float64],
    h: float = 1e-3,
) -> DivergenceReport:
    """Approximate ∇_μ A^{μν} with central differences at steps h and h / 2.

    Args:
        r: The order.
        source: A metric source evaluable around the point.
        point: The point.
        h: The step.

    Returns:
        The residuals and the convergence ratio.

    Raises:
        PreconditionError: When a stencil point cannot be evaluated.
    """
    x = np.asarray(point, dtype=float)
    try:
        coarse = _divergence_at(r, source, x, h)
        fine = _divergence_at(r, source, x, h / 2.0)
    except (LovelockError, np.linalg.LinAlgError) as exc:
        if isinstance(exc, PreconditionError):
            raise
        msg = f"Stencil around {x.tolist()} with step {h} could not be evaluated."
        raise PreconditionError(msg) from exc
    fine_norm = float(np.max(np.abs(fine)))
    ratio = float(np.max(np.abs(coarse))) / fine_norm if fine_norm > 0 else None
    logger.debug("Divergence residual %.3e, ratio %s", np.max(np.abs(coarse)), ratio)
    return DivergenceReport(residual=coarse, residual_half=fine, step=h, ratio=ratio)


@dataclass(frozen=True)
class BaseForms:
    """Pulled-back coframe and curvature on the base as forms on ℝ^m.

    Attributes:
        coframe: θ^a = e^a_μ dx^μ.
        curvature: Ω^{ab} = R^{στ}_{μν} e^a_σ e^b_τ dx^μ ∧ dx^ν, summed over all (μ, ν).
        signature: η.
    """

    coframe: Coframe
    curvature: FormMatrix
    signature: Signature

    @property
    def m(self) -> int:
        """Return the dimension."""
        return self.coframe.m

    def mixed(self, a: int, b: int) -> SparseAltForm:
        """Return Ω^a_b = Ω^{ac} η_{cb}.

        Args:
            a: Upper index.
            b: Lower index.

        Returns:
            The 2-form.
        """
        return self.curvature[a][b] * self.signature.eta[b]


def base_forms(vb: Vielbein, cd: CurvatureData) -> BaseForms:
    """Pull θ and Ω back to the base along the frame of a vielbein.

    Args:
        vb: The vielbein.
        cd: The curvature data.

    Returns:
        The base forms.
    """
    m = cd.m
    theta = [one_form({mu: vb.e[a, mu] for mu in range(m)}, m) for a in range(m)]
    frame_curv = np.einsum("as,bt,stmn->abmn", vb.e, vb.e, cd.raised)
    pairs = list(itertools.combinations(range(m), 2))
    curv = tuple(
        tuple(
            SparseAltForm(
                m,
                2,
                {(mu, nu): frame_curv[a, b, mu, nu] - frame_curv[a, b, nu, mu] for mu, nu in pairs},
            )
            for b in range(m)
        )
        for a in range(m)
    )
    return BaseForms(coframe=Coframe(theta), curvature=curv, signature=vb.signature)


def _curvature_chain(
    bf: BaseForms,
    heads: int,
    r_rest: int,
) -> dict[tuple[int, ...], SparseAltForm]:
    """Return Σ θ_{KIJ} ∧ Ω^{IJ} for every repeat-free head tuple K, with |I| = |J| = r_rest."""
    m = bf.m
    out = {}
    for key in itertools.permutations(range(m), heads):
        remaining = [i for i in range(m) if i not in key]
        terms = []
        for chosen in itertools.permutations(remaining, 2 * r_rest):
            upper, lower = chosen[:r_rest], chosen[r_rest:]
            term = bf.coframe.sparling((*key, *upper, *lower))
            for i, j in zip(upper, lower, strict=True):
                term = wedge(term, bf.curvature[i][j])
            terms.append(term)
        out[key] = sum_forms(terms, m, m - heads)
    return out


def alternative_order_sign(r: int) -> int:
    """Return (-1)^{r-1}, the factor taking the θ_{lIJ} expression of Ψ to θ_{stI'J'}.

    θ_{lIJ} places the second free index after the r - 1 indices of I'.
    """
    return -1 if (r - 1) % 2 else 1


def psi_form_base(r: int, vb: Vielbein, cd: CurvatureData) -> FormMatrix:
    """Return Ψ^{ab} = (Ω^{sa}η^{tb} + Ω^{sb}η^{ta} - η^{ab}Ω^{st}/r) ∧ θ_{stI'J'} ∧ Ω^{I'J'}.

    Args:
        r: The order, 1 ≤ r and 2r ≤ m.
        vb: The vielbein.
        cd: The curvature data.

    Returns:
        The m×m array of m-forms on the base.

    Raises:
        DomainError: When r is not admissible.
    """
    m = cd.m
    if r < 1 or 2 * r > m:
        msg = f"Order {r} is not admissible in dimension {m}."
        raise DomainError(msg)
    bf = base_forms(vb, cd)
    eta = bf.signature.eta
    chain = _curvature_chain(bf, 2, r - 1)
    zero = SparseAltForm.zero(m, m - 2)
    trace = sum_forms(
        (
            wedge(bf.curvature[s][t], chain.get((s, t), zero))
            for s in range(m)
            for t in range(m)
        ),
        m,
        m,
    )
    return tuple(
        tuple(
            sum_forms(
                (
                    wedge(bf.curvature[s][a], chain.get((s, b), zero)) * eta[b]
                    + wedge(bf.curvature[s][b], chain.get((s, a), zero)) * eta[a]
                    for s in range(m)
                ),
                m,
                m,
            )
            - (trace * (eta[a] / r) if a == b else SparseAltForm.zero(m, m))
            for b in range(m)
        )
        for a in range(m)
    )


def psi_form_base_alternative(r: int, vb: Vielbein, cd: CurvatureData) -> FormMatrix:
    """Return -(1/2r)(η^{il}θ^j + η^{jl}θ^i) ∧ θ_{lIJ} ∧ Ω^{IJ}.

    This equals alternative_order_sign(r) times psi_form_base, form by form.

    Args:
        r: The order.
        vb: The vielbein.
        cd: The curvature data.

    Returns:
        The m×m array of m-forms on the base.

    Raises:
        DomainError: When r is not admissible.
    """
    m = cd.m
    if r < 1 or 2 * r > m:
        msg = f"Order {r} is not admissible in dimension {m}."
        raise DomainError(msg)
    bf = base_forms(vb, cd)
    eta = bf.signature.eta
    theta = bf.coframe.theta
    chain = _curvature_chain(bf, 1, r)
    scale = -1.0 / (2 * r)
    return tuple(
        tuple(
            (
                wedge(theta[j], chain[(i,)]) * eta[i] + wedge(theta[i], chain[(j,)]) * eta[j]
            )
            * scale
            for j in range(m)
        )
        for i in range(m)
    )


def frame_contracted_psi(vb: Vielbein, psi: FormMatrix) -> NDArray[np.float64]:
    """Return e^μ_a Ψ^{ab} e^ν_b read off as the coefficient of dx^0 ∧ ... ∧ dx^{m-1}.

    Args:
        vb: The vielbein.
        psi: Ψ^{ab}.

    Returns:
        The m×m matrix.
    """
    m = vb.e.shape[0]
    top = tuple(range(m))
    coeffs = np.array([[psi[a][b].coefficient(top) for b in range(m)] for a in range(m)])
    return vb.e_inv @ coeffs @ vb.e_inv.T


def expected_psi_contraction(r: int, vb: Vielbein, cd: CurvatureData) -> NDArray[np.float64]:
    """Return -det(e)/(2r) A^{μν}, the value e^μ_a Ψ^{ab} e^ν_b must take.

    Args:
        r: The order, at least 1.
        vb: The vielbein.
        cd: The curvature data.

    Returns:
        The m×m matrix.
    """
    return -vb.det / (2 * r) * lovelock_tensor(r, cd)


@dataclass
class EdsReport:
    """Residuals of the exterior differential system at a Levi-Civita solution.

    Attributes:
        residuals: Named largest residuals.
        structural: Generators satisfied by construction on the momentum side.
    """

    residuals: dict[str, float]
    structural: tuple[str, ...] = ("Theta_l", "Theta_ij")


def eds_residuals(r: int, vb: Vielbein, cd: CurvatureData) -> EdsReport:
    """Evaluate the base-expressible generators of the Lovelock system.

    Args:
        r: The order.
        vb: The vielbein.
        cd: The curvature data.

    Returns:
        Torsion, metricity, Bianchi, curvature 𝔭-part and Ψ residuals.
    """
    m = cd.m
    sample = cd.sample
    gamma = cd.gamma
    torsion = float(np.max(np.abs(gamma - gamma.transpose(0, 2, 1))))
    metricity = float(
        np.max(
            np.abs(
                sample.dg
                - np.einsum("lrm,ln->rmn", gamma, sample.g)
                - np.einsum("lrn,ml->rmn", gamma, sample.g)
            )
        )
    )
    bf = base_forms(vb, cd)
    eta = bf.signature.eta
    bianchi = max(
        sum_forms((wedge(bf.mixed(k, ell), bf.coframe.theta[ell]) for ell in range(m)), m, 3)
        .max_norm()
        for k in range(m)
    )
    curvature_p = max(
        ((bf.mixed(i, j) + bf.mixed(j, i) * (eta[i] * eta[j])) * 0.5).max_norm()
        for i in range(m)
        for j in range(m)
    )
    residuals = {
        "torsion": torsion,
        "metricity": metricity,
        "bianchi": bianchi,
        "curvature_p": curvature_p,
    }
    if 1 <= r and 2 * r <= m:
        psi = psi_form_base(r, vb, cd)
        residuals["psi"] = max(form.max_norm() for row in psi for form in row)
    return EdsReport(residuals=residuals)
