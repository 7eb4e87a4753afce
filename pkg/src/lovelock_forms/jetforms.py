"""Canonical forms on the first jet space of the frame bundle.

A point carries the base coordinates x^μ, a frame e^μ_k and its first
derivatives e^μ_{kσ}. The cotangent space is spanned by dx^μ, de^μ_k and
de^μ_{kσ}, laid out as

    x^μ          -> μ
    e^μ_k        -> m + μ·m + k
    e^μ_{kσ}     -> m + m² + μ·m² + k·m + σ

so every form built here lives on a space of dimension m + m² + m³.
"""

from __future__ import annotations

import itertools
import logging
import math

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np

from lovelock_forms.alt import gkdelta, levi_civita
from lovelock_forms.constants import TOL_ALGEBRAIC, TOL_INVERSE, VERTICAL_LIFT_SIGN
from lovelock_forms.exceptions import ConstructionError, DomainError, PreconditionError
from lovelock_forms.types import Signature
from lovelock_forms.xalg import (
    SparseAltForm,
    TangentVector,
    basis_covector,
    interior,
    one_form,
    sum_forms,
    wedge,
    wedge_all,
)


if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from numpy.typing import NDArray


logger = logging.getLogger(__name__)

FormMatrix = tuple[tuple[SparseAltForm, ...], ...]


@dataclass(frozen=True)
class JetPoint:
    """A point (x^μ, e^μ_k, e^μ_{kσ}) of the first jet space.

    Attributes:
        m: The base dimension.
        x: Base coordinates, shape (m,).
        e: The frame, e[μ, k] = e^μ_k.
        ejet: Frame derivatives, ejet[μ, k, σ] = e^μ_{kσ}.
        e_inv: The inverse frame, e_inv[k, μ] = e^k_μ.
        condition: The condition number of the frame.
    """

    m: int
    x: NDArray[np.float64]
    e: NDArray[np.float64]
    ejet: NDArray[np.float64]
    e_inv: NDArray[np.float64]
    condition: float

    @property
    def dim(self) -> int:
        """Return the dimension of the jet space."""
        return self.m + self.m**2 + self.m**3

    def frame_index(self, mu: int, k: int) -> int:
        """Return the coordinate slot of e^μ_k.

        Args:
            mu: The coordinate index.
            k: The frame index.

        Returns:
            The slot.
        """
        return self.m + mu * self.m + k

    def jet_index(self, mu: int, k: int, sigma: int) -> int:
        """Return the coordinate slot of e^μ_{kσ}.

        Args:
            mu: The coordinate index.
            k: The frame index.
            sigma: The derivative index.

        Returns:
            The slot.
        """
        m = self.m
        return m + m * m + mu * m * m + k * m + sigma


def make_jet_point(
    x: Sequence[float] | NDArray[np.float64],
    e: Sequence[Sequence[float]] | NDArray[np.float64],
    ejet: NDArray[np.float64],
) -> JetPoint:
    """Validate a jet point and attach its inverse frame.

    Args:
        x: Base coordinates.
        e: The frame e[μ, k].
        ejet: The frame derivatives ejet[μ, k, σ].

    Returns:
        The jet point.

    Raises:
        DomainError: When the shapes disagree.
        ConstructionError: When the frame is singular.
    """
    x_arr = np.asarray(x, dtype=float)
    e_arr = np.asarray(e, dtype=float)
    jet_arr = np.asarray(ejet, dtype=float)
    m = x_arr.shape[0] if x_arr.ndim == 1 else -1
    if m < 1 or e_arr.shape != (m, m) or jet_arr.shape != (m, m, m):
        msg = (
            f"Inconsistent jet point shapes: x {x_arr.shape}, e {e_arr.shape}, "
            f"ejet {jet_arr.shape}."
        )
        raise DomainError(msg)
    try:
        e_inv = np.linalg.inv(e_arr)
    except np.linalg.LinAlgError as exc:
        msg = "The frame is singular."
        raise ConstructionError(msg) from exc
    residual = float(np.max(np.abs(e_inv @ e_arr - np.eye(m))))
    if not np.isfinite(residual) or residual > TOL_INVERSE:
        msg = f"The frame is numerically singular, inverse residual {residual:.3e}."
        raise ConstructionError(msg)
    return JetPoint(
        m=m,
        x=x_arr,
        e=e_arr,
        ejet=jet_arr,
        e_inv=e_inv,
        condition=float(np.linalg.cond(e_arr)),
    )


class Coframe:
    """A coframe θ^0..θ^{m-1} with cached wedge powers and Sparling forms.

    The optional differentials dθ^k enable Leibniz expansion of dθ_I.
    """

    def __init__(
        self,
        theta: Sequence[SparseAltForm],
        dtheta: Sequence[SparseAltForm] | None = None,
    ) -> None:
        """Initialize the coframe.

        Args:
            theta: The m coframe 1-forms.
            dtheta: Their exterior derivatives, if known.

        Raises:
            DomainError: When the coframe is empty or not made of 1-forms.
        """
        if not theta or any(form.degree != 1 for form in theta):
            msg = "A coframe needs at least one 1-form."
            raise DomainError(msg)
        self.theta = tuple(theta)
        self.dtheta = tuple(dtheta) if dtheta is not None else None
        self.m = len(self.theta)
        self.space_dim = self.theta[0].space_dim
        self._powers: dict[tuple[int, ...], SparseAltForm] = {
            (): SparseAltForm.constant(self.space_dim, 1.0),
        }

    def power(self, indices: Sequence[int]) -> SparseAltForm:
        """Return θ^{i₁} ∧ ... ∧ θ^{i_p}.

        Args:
            indices: The ordered indices.

        Returns:
            The wedge product.
        """
        key = tuple(indices)
        if key not in self._powers:
            self._powers[key] = wedge(self.power(key[:-1]), self.theta[key[-1]])
        return self._powers[key]

    def volume(self) -> SparseAltForm:
        """Return σ₀ = θ^0 ∧ ... ∧ θ^{m-1}."""
        return self.power(range(self.m))

    def _complement(self, indices: Sequence[int]) -> tuple[int, tuple[int, ...]]:
        idx = tuple(indices)
        if len(idx) > self.m:
            msg = f"Sparling form of order {len(idx)} exceeds the dimension {self.m}."
            raise DomainError(msg)
        if any(not 0 <= i < self.m for i in idx):
            msg = f"Sparling indices {idx} outside [0, {self.m})."
            raise DomainError(msg)
        if len(set(idx)) != len(idx):
            return 0, ()
        rest = tuple(k for k in range(self.m) if k not in idx)
        return levi_civita(idx + rest), rest

    def sparling(self, indices: Sequence[int]) -> SparseAltForm:
        """Return θ_I = ε(I, K) θ^{K₁} ∧ ... ∧ θ^{K_q} for the ascending complement K.

        Args:
            indices: The index tuple I.

        Returns:
            The (m - p)-form θ_I, zero when an index repeats.
        """
        sign, rest = self._complement(indices)
        if not sign:
            return SparseAltForm.zero(self.space_dim, self.m - len(indices))
        return self.power(rest) * float(sign)

    def dsparling(self, indices: Sequence[int]) -> SparseAltForm:
        """Return dθ_I by the Leibniz rule over the complement factors.

        Args:
            indices: The index tuple I.

        Returns:
            The (m - p + 1)-form dθ_I.

        Raises:
            DomainError: When no differentials were supplied.
        """
        if self.dtheta is None:
            msg = "This coframe carries no differentials."
            raise DomainError(msg)
        sign, rest = self._complement(indices)
        degree = self.m - len(indices) + 1
        if not sign:
            return SparseAltForm.zero(self.space_dim, degree)
        terms = []
        for pos, k in enumerate(rest):
            head = self.power(rest[:pos])
            tail = wedge_all((self.theta[q] for q in rest[pos + 1 :]), self.space_dim)
            term = wedge(wedge(head, self.dtheta[k]), tail)
            terms.append(term * (-1.0 if pos % 2 else 1.0))
        return sum_forms(terms, self.space_dim, degree) * float(sign)


@dataclass
class CanonicalForms:
    """The canonical forms at one jet point.

    Matrix-valued entries are indexed [i][j] for the (i, j) component ω^i_j.

    Attributes:
        point: The jet point.
        theta: θ^k.
        dtheta: dθ^k.
        omega: ω^i_j.
        domega: dω^i_j.
        curvature: Ω^i_j = dω^i_j + ω^i_k ∧ ω^k_j.
        torsion: T^k = dθ^k + ω^k_l ∧ θ^l.
        coframe: The coframe with cached Sparling forms.
    """

    point: JetPoint
    theta: tuple[SparseAltForm, ...]
    dtheta: tuple[SparseAltForm, ...]
    omega: FormMatrix
    domega: FormMatrix
    curvature: FormMatrix
    torsion: tuple[SparseAltForm, ...]
    coframe: Coframe = field(repr=False)

    def sparling(self, indices: Sequence[int]) -> SparseAltForm:
        """Return θ_I at this point.

        Args:
            indices: The index tuple I.

        Returns:
            The Sparling form.
        """
        return self.coframe.sparling(indices)


def _frame_differentials(jp: JetPoint) -> list[list[SparseAltForm]]:
    """Return de^k_μ = -e^k_ν e^l_μ de^ν_l indexed [k][μ]."""
    m, n = jp.m, jp.dim
    return [
        [
            one_form(
                {
                    jp.frame_index(nu, ell): -jp.e_inv[k, nu] * jp.e_inv[ell, mu]
                    for nu in range(m)
                    for ell in range(m)
                },
                n,
            )
            for mu in range(m)
        ]
        for k in range(m)
    ]


def coframe_forms(jp: JetPoint) -> tuple[SparseAltForm, ...]:
    """Return θ^k = e^k_μ dx^μ.

    Args:
        jp: The jet point.

    Returns:
        The m coframe 1-forms.
    """
    return tuple(
        one_form({mu: jp.e_inv[k, mu] for mu in range(jp.m)}, jp.dim) for k in range(jp.m)
    )


def canonical_forms(jp: JetPoint) -> CanonicalForms:
    """Build θ, ω, their differentials, the torsion and the curvature at a jet point.

    Args:
        jp: The jet point.

    Returns:
        The canonical forms.
    """
    m, n = jp.m, jp.dim
    dx = [basis_covector(n, mu) for mu in range(m)]
    de_inv = _frame_differentials(jp)
    theta = coframe_forms(jp)
    dtheta = tuple(
        sum_forms((wedge(de_inv[k][mu], dx[mu]) for mu in range(m)), n, 2) for k in range(m)
    )

    omega = []
    domega = []
    for i in range(m):
        omega_row = []
        domega_row = []
        for j in range(m):
            coeffs = {jp.frame_index(mu, j): jp.e_inv[i, mu] for mu in range(m)}
            for sigma in range(m):
                coeffs[sigma] = -float(np.dot(jp.e_inv[i, :], jp.ejet[:, j, sigma]))
            omega_row.append(one_form(coeffs, n))

            frame_part = sum_forms(
                (
                    wedge(de_inv[i][mu], basis_covector(n, jp.frame_index(mu, j)))
                    - wedge(
                        de_inv[i][mu],
                        one_form({s: jp.ejet[mu, j, s] for s in range(m)}, n),
                    )
                    for mu in range(m)
                ),
                n,
                2,
            )
            # -e^i_μ de^μ_{jσ} ∧ dx^σ with σ always the smaller slot
            jet_part = SparseAltForm(
                n,
                2,
                {
                    (sigma, jp.jet_index(mu, j, sigma)): jp.e_inv[i, mu]
                    for mu in range(m)
                    for sigma in range(m)
                },
            )
            domega_row.append(frame_part + jet_part)
        omega.append(tuple(omega_row))
        domega.append(tuple(domega_row))

    curvature = tuple(
        tuple(
            domega[i][j]
            + sum_forms((wedge(omega[i][k], omega[k][j]) for k in range(m)), n, 2)
            for j in range(m)
        )
        for i in range(m)
    )
    torsion = tuple(
        dtheta[k] + sum_forms((wedge(omega[k][ell], theta[ell]) for ell in range(m)), n, 2)
        for k in range(m)
    )
    return CanonicalForms(
        point=jp,
        theta=theta,
        dtheta=dtheta,
        omega=tuple(omega),
        domega=tuple(domega),
        curvature=curvature,
        torsion=torsion,
        coframe=Coframe(theta, dtheta),
    )


def torsion_zero_residual(jp: JetPoint) -> NDArray[np.float64]:
    """Return Z[μ, ν, σ] = e^μ_{iν} e^i_σ - e^μ_{iσ} e^i_ν.

    The torsion vanishes exactly where Z does.

    Args:
        jp: The jet point.

    Returns:
        Array of shape (m, m, m).
    """
    contracted = np.einsum("miv,is->mvs", jp.ejet, jp.e_inv)
    return contracted - contracted.transpose(0, 2, 1)


def torsion_closed_form(jp: JetPoint) -> tuple[SparseAltForm, ...]:
    """Return T^k = ½ e^k_μ Z[μ, ν, σ] dx^σ ∧ dx^ν.

    Args:
        jp: The jet point.

    Returns:
        The torsion 2-forms from the closed expression.
    """
    z = torsion_zero_residual(jp)
    coeff = np.einsum("km,mvs->ksv", jp.e_inv, z)
    return tuple(
        SparseAltForm(
            jp.dim,
            2,
            {(s, v): coeff[k, s, v] for s, v in itertools.combinations(range(jp.m), 2)},
        )
        for k in range(jp.m)
    )


def project_to_T0(jp: JetPoint) -> JetPoint:
    """Project the frame derivatives onto the torsion-free locus.

    Forms Γ^μ_{νσ} = -e^k_ν e^μ_{kσ}, symmetrizes it in (ν, σ) and maps back.

    Args:
        jp: The jet point.

    Returns:
        A jet point with the same x and e and vanishing torsion.
    """
    gamma = -np.einsum("kn,mks->mns", jp.e_inv, jp.ejet)
    gamma = 0.5 * (gamma + gamma.transpose(0, 2, 1))
    ejet = -np.einsum("nk,mns->mks", jp.e, gamma)
    return make_jet_point(jp.x, jp.e, ejet)


def sparling(jp: JetPoint, indices: Sequence[int]) -> SparseAltForm:
    """Return the Sparling form θ_I at a jet point.

    Args:
        jp: The jet point.
        indices: The index tuple I.

    Returns:
        The (m - p)-form θ_I.
    """
    return Coframe(coframe_forms(jp)).sparling(indices)


def sparling_from_coframe(
    theta: Sequence[SparseAltForm],
    indices: Sequence[int],
) -> SparseAltForm:
    """Return θ_I for an arbitrary coframe.

    Args:
        theta: The coframe 1-forms.
        indices: The index tuple I.

    Returns:
        The Sparling form.
    """
    return Coframe(theta).sparling(indices)


def sparling_via_contraction(
    jp: JetPoint,
    indices: Sequence[int],
    vectors: Sequence[TangentVector] | None = None,
) -> SparseAltForm:
    """Return X_{i_p} ⌟ ... ⌟ X_{i₁} ⌟ σ₀ with θ^j(X_i) = δ^j_i.

    Args:
        jp: The jet point.
        indices: The index tuple I, contracted first to last.
        vectors: Dual vectors; solved from the θ matrix when omitted.

    Returns:
        The contracted form.

    Raises:
        DomainError: When more indices than dimensions are given.
    """
    idx = tuple(indices)
    if len(idx) > jp.m:
        msg = f"Cannot contract {len(idx)} vectors into a {jp.m}-form."
        raise DomainError(msg)
    if vectors is None:
        dual = np.linalg.solve(jp.e_inv, np.eye(jp.m))
        vectors = [
            TangentVector(jp.dim, {mu: float(dual[mu, i]) for mu in range(jp.m)})
            for i in range(jp.m)
        ]
    result = Coframe(coframe_forms(jp)).volume()
    for i in idx:
        result = interior(vectors[i], result)
    return result


def vertical_lift_vector(jp: JetPoint, r: int, s: int, t: int) -> TangentVector:
    """Return Σ e^r_σ e^μ_t ∂/∂e^μ_{sσ}.

    Args:
        jp: The jet point.
        r: The coframe index.
        s: The lower frame index of the varied derivative.
        t: The frame index contracted against e^μ.

    Returns:
        The vertical tangent vector.
    """
    m = jp.m
    return TangentVector(
        jp.dim,
        {
            jp.jet_index(mu, s, sigma): float(jp.e_inv[r, sigma] * jp.e[mu, t])
            for mu in range(m)
            for sigma in range(m)
        },
    )


def _dot(a: SparseAltForm, b: SparseAltForm) -> float:
    return sum(value * b.terms.get(key, 0.0) for key, value in a.terms.items())


@dataclass
class VerticalLiftReport:
    """Contractions of the vertical lifts with θ, ω and Ω.

    Attributes:
        sign: The sign s the data favour in v⌟Ω^k_l = s δ^k_t δ^s_l θ^r.
        theta_deviation: Largest |v⌟θ^k|.
        omega_deviation: Largest |v⌟ω^i_j|.
        curvature_deviation: Largest deviation from the relation with VERTICAL_LIFT_SIGN.
        checked: Number of lifts examined.
    """

    sign: int
    theta_deviation: float
    omega_deviation: float
    curvature_deviation: float
    checked: int


def vertical_lift_check(
    forms: CanonicalForms,
    triples: Iterable[tuple[int, int, int]] | None = None,
) -> VerticalLiftReport:
    """Contract the vertical lifts into θ, ω and Ω.

    The curvature contraction is compared against VERTICAL_LIFT_SIGN, never against
    the sign the data favour.

    Args:
        forms: The canonical forms.
        triples: (r, s, t) triples to examine, all of them by default.

    Returns:
        The report.
    """
    jp = forms.point
    m = jp.m
    chosen = list(triples) if triples is not None else list(itertools.product(range(m), repeat=3))
    contractions = {}
    theta_dev = 0.0
    omega_dev = 0.0
    numerator = 0.0
    denominator = 0.0
    for r, s, t in chosen:
        v = vertical_lift_vector(jp, r, s, t)
        theta_dev = max(theta_dev, *(interior(v, th).max_norm() for th in forms.theta))
        for i, j in itertools.product(range(m), repeat=2):
            omega_dev = max(omega_dev, interior(v, forms.omega[i][j]).max_norm())
            contractions[r, s, t, i, j] = interior(v, forms.curvature[i][j])
        numerator += _dot(contractions[r, s, t, t, s], forms.theta[r])
        denominator += _dot(forms.theta[r], forms.theta[r])
    sign = 1 if numerator >= 0 else -1
    curvature_dev = 0.0
    for (r, s, t, k, ell), contracted in contractions.items():
        expected = forms.theta[r] * float(VERTICAL_LIFT_SIGN * (k == t) * (s == ell))
        curvature_dev = max(curvature_dev, (contracted - expected).max_norm())
    logger.debug("Vertical lift sign %d from %.3e / %.3e", sign, numerator, denominator)
    return VerticalLiftReport(
        sign=sign,
        theta_deviation=theta_dev,
        omega_deviation=omega_dev,
        curvature_deviation=curvature_dev,
        checked=len(chosen),
    )


def raise_curvature(curvature: FormMatrix, signature: Signature) -> FormMatrix:
    """Return Ω^{ij} = η^{jq} Ω^i_q for a diagonal signature.

    Args:
        curvature: Ω^i_j.
        signature: The signature η.

    Returns:
        The raised curvature.
    """
    m = len(curvature)
    return tuple(
        tuple(curvature[i][j] * signature.eta[j] for j in range(m)) for i in range(m)
    )


def _distinct_pairs(m: int, r: int) -> Iterable[tuple[tuple[int, ...], tuple[int, ...]]]:
    for upper in itertools.product(range(m), repeat=r):
        for lower in itertools.product(range(m), repeat=r):
            if len(set(upper + lower)) == 2 * r:
                yield upper, lower


def _resolve_signature(m: int, signature: Signature | None) -> Signature:
    sig = signature or Signature.lorentzian(m)
    if sig.m != m:
        msg = f"Signature of dimension {sig.m} used in dimension {m}."
        raise DomainError(msg)
    return sig


def lovelock_lagrangian_form(
    forms: CanonicalForms,
    r: int,
    signature: Signature | None = None,
) -> SparseAltForm:
    """Return λ = θ_{i₁..i_r j₁..j_r} ∧ Ω^{i₁j₁} ∧ ... ∧ Ω^{i_rj_r}.

    Args:
        forms: The canonical forms.
        r: The Lovelock order.
        signature: η, Lorentzian by default.

    Returns:
        The m-form λ; σ₀ for r = 0 and zero when 2r exceeds m.

    Raises:
        DomainError: When r is negative.
    """
    jp = forms.point
    m, n = jp.m, jp.dim
    if r < 0:
        msg = f"Lovelock order must not be negative, got {r}."
        raise DomainError(msg)
    if r == 0:
        return forms.coframe.volume()
    if 2 * r > m:
        logger.warning("Lovelock order %d vanishes in dimension %d", r, m)
        return SparseAltForm.zero(n, m)
    raised = raise_curvature(forms.curvature, _resolve_signature(m, signature))
    terms = []
    for upper, lower in _distinct_pairs(m, r):
        term = forms.sparling(upper + lower)
        for i, j in zip(upper, lower, strict=True):
            term = wedge(term, raised[i][j])
        terms.append(term)
    return sum_forms(terms, n, m)


def curvature_differential(forms: CanonicalForms) -> FormMatrix:
    """Return dΩ^i_j = Ω^i_p ∧ ω^p_j - ω^i_p ∧ Ω^p_j.

    Args:
        forms: The canonical forms.

    Returns:
        The 3-forms dΩ^i_j.
    """
    m, n = forms.point.m, forms.point.dim
    omega, curv = forms.omega, forms.curvature
    return tuple(
        tuple(
            sum_forms(
                (
                    wedge(curv[i][p], omega[p][j]) - wedge(omega[i][p], curv[p][j])
                    for p in range(m)
                ),
                n,
                3,
            )
            for j in range(m)
        )
        for i in range(m)
    )


@dataclass
class DlambdaReport:
    """Both sides of the dλ identity at a torsion-free point.

    Attributes:
        lhs: dλ assembled by the Leibniz rule.
        rhs: The closed expression through the 𝔭-part of ω.
        deviation: Largest coefficient difference.
        torsion_residual: Largest torsion coefficient at the point.
    """

    lhs: SparseAltForm
    rhs: SparseAltForm
    deviation: float
    torsion_residual: float


def omega_p_part(forms: CanonicalForms, signature: Signature) -> FormMatrix:
    """Return (ω_𝔭)^q_p = ½(ω^q_p + η_{pa} ω^a_b η^{bq}).

    Args:
        forms: The canonical forms.
        signature: η.

    Returns:
        The 𝔭-projection of ω.
    """
    m = forms.point.m
    eta = signature.eta
    return tuple(
        tuple(
            (forms.omega[q][p] + forms.omega[p][q] * (eta[p] * eta[q])) * 0.5 for p in range(m)
        )
        for q in range(m)
    )


def dlambda_check(
    forms: CanonicalForms,
    r: int,
    signature: Signature | None = None,
) -> DlambdaReport:
    """Compare dλ with its closed expression at a torsion-free jet point.

    Args:
        forms: The canonical forms.
        r: The Lovelock order, with 2r ≤ m.
        signature: η, Lorentzian by default.

    Returns:
        The report.

    Raises:
        PreconditionError: When the point is off the torsion-free locus.
        DomainError: When 2r exceeds m.
    """
    jp = forms.point
    m, n = jp.m, jp.dim
    residual = float(np.max(np.abs(torsion_zero_residual(jp))))
    if residual > TOL_ALGEBRAIC:
        msg = f"Jet point is off the torsion-free locus, residual {residual:.3e}."
        raise PreconditionError(msg)
    if r < 1 or 2 * r > m:
        msg = f"Lovelock order {r} is not admissible in dimension {m}."
        raise DomainError(msg)
    sig = _resolve_signature(m, signature)
    eta = sig.eta
    raised = raise_curvature(forms.curvature, sig)
    dcurv = curvature_differential(forms)
    draised = tuple(tuple(dcurv[i][j] * eta[j] for j in range(m)) for i in range(m))
    omega_p = omega_p_part(forms, sig)
    trace = sum_forms((forms.omega[ell][ell] for ell in range(m)), n, 1)
    parity = -1.0 if (m - 2 * r) % 2 else 1.0

    lhs_terms = []
    rhs_terms = []
    for upper, lower in _distinct_pairs(m, r):
        idx = upper + lower
        pairs = list(zip(upper, lower, strict=True))
        theta_ij = forms.sparling(idx)

        product = wedge_all((raised[i][j] for i, j in pairs), n)
        lhs_terms.append(wedge(forms.coframe.dsparling(idx), product))
        for pos in range(r):
            factors = [
                draised[i][j] if a == pos else raised[i][j] for a, (i, j) in enumerate(pairs)
            ]
            lhs_terms.append(wedge(theta_ij, wedge_all(factors, n)) * parity)

        i1, j1 = pairs[0]
        rest = wedge_all((raised[i][j] for i, j in pairs[1:]), n)
        for q in range(m):
            coeff = omega_p[q][j1] * float(r)
            if q == j1:
                coeff = coeff - trace * 0.5
            coeff = coeff * (2.0 * eta[j1])
            rhs_terms.append(
                wedge(wedge(wedge(coeff, theta_ij), forms.curvature[i1][q]), rest),
            )
    lhs = sum_forms(lhs_terms, n, m + 1)
    rhs = sum_forms(rhs_terms, n, m + 1)
    return DlambdaReport(
        lhs=lhs,
        rhs=rhs,
        deviation=(lhs - rhs).max_norm(),
        torsion_residual=residual,
    )


def sparling_product_residual(
    coframe: Coframe,
    upper: Sequence[int],
    lower: Sequence[int],
) -> float:
    """Check θ^{i₁..i_r} ∧ θ_{j₁..j_s} against its Kronecker-delta expansion.

    The expansion is (-1)^{r(s-r)}/(s-r)! δ^{i₁..i_s}_{j₁..j_s} θ_{i_{r+1}..i_s},
    summed over the free indices.

    Args:
        coframe: The coframe.
        upper: The r wedge indices.
        lower: The s Sparling indices, s ≥ r.

    Returns:
        The largest coefficient deviation.

    Raises:
        DomainError: When r exceeds s.
    """
    r, s = len(upper), len(lower)
    if r > s:
        msg = f"Wedge order {r} exceeds Sparling order {s}."
        raise DomainError(msg)
    lhs = wedge(coframe.power(upper), coframe.sparling(lower))
    terms = []
    for free in itertools.product(range(coframe.m), repeat=s - r):
        delta = gkdelta(tuple(upper) + free, tuple(lower))
        if delta:
            terms.append(coframe.sparling(free) * float(delta))
    scale = (-1.0) ** (r * (s - r)) / math.factorial(s - r)
    rhs = sum_forms(terms, coframe.space_dim, lhs.degree) * scale
    return (lhs - rhs).max_norm()


def sparling_contraction_residual(coframe: Coframe, k: int, indices: Sequence[int]) -> float:
    """Check θ^k ∧ θ_I = Σ_a (-1)^{p+a+1} δ^k_{i_a} θ_{I without i_a}.

    Args:
        coframe: The coframe.
        k: The coframe index.
        indices: The index tuple I of length p ≥ 1, positions a counted from 0.

    Returns:
        The largest coefficient deviation.
    """
    idx = tuple(indices)
    p = len(idx)
    lhs = wedge(coframe.theta[k], coframe.sparling(idx))
    terms = [
        coframe.sparling(idx[:a] + idx[a + 1 :]) * (-1.0) ** (p + a + 1)
        for a in range(p)
        if idx[a] == k
    ]
    rhs = sum_forms(terms, coframe.space_dim, lhs.degree)
    return (lhs - rhs).max_norm()


def sparling_differential_residual(forms: CanonicalForms, indices: Sequence[int]) -> float:
    """Check dθ_I against its expansion through T and ω.

    dθ_I = T^l ∧ θ_{I l} - ω^l_l ∧ θ_I
    + Σ_a (-1)^{p+a+1} ω^l_{i_a} ∧ θ_{I without i_a, l}.

    Args:
        forms: The canonical forms.
        indices: The index tuple I.

    Returns:
        The largest coefficient deviation.
    """
    idx = tuple(indices)
    p = len(idx)
    m, n = forms.point.m, forms.point.dim
    lhs = forms.coframe.dsparling(idx)
    terms = []
    for ell in range(m):
        if p < m:
            terms.append(wedge(forms.torsion[ell], forms.sparling((*idx, ell))))
        for a in range(p):
            reduced = (*idx[:a], *idx[a + 1 :], ell)
            terms.append(
                wedge(forms.omega[ell][idx[a]], forms.sparling(reduced)) * (-1.0) ** (p + a + 1),
            )
        terms.append(-wedge(forms.omega[ell][ell], forms.sparling(idx)))
    rhs = sum_forms(terms, n, lhs.degree)
    return (lhs - rhs).max_norm()


def first_structure_residual(forms: CanonicalForms) -> float:
    """Check dT^k + ω^k_l ∧ T^l = Ω^k_l ∧ θ^l.

    Args:
        forms: The canonical forms.

    Returns:
        The largest coefficient deviation.
    """
    m, n = forms.point.m, forms.point.dim
    worst = 0.0
    for k in range(m):
        dtorsion = sum_forms(
            (
                wedge(forms.domega[k][i], forms.theta[i])
                - wedge(forms.omega[k][i], forms.dtheta[i])
                for i in range(m)
            ),
            n,
            3,
        )
        lhs = dtorsion + sum_forms(
            (wedge(forms.omega[k][ell], forms.torsion[ell]) for ell in range(m)), n, 3
        )
        rhs = sum_forms(
            (wedge(forms.curvature[k][ell], forms.theta[ell]) for ell in range(m)), n, 3
        )
        worst = max(worst, (lhs - rhs).max_norm())
    return worst


def canonical_rank(forms: CanonicalForms) -> int:
    """Return the rank of the m + m² one-forms θ^k and ω^i_j.

    Args:
        forms: The canonical forms.

    Returns:
        The numerical rank of their coefficient matrix.
    """
    rows = [*forms.theta, *(w for row in forms.omega for w in row)]
    matrix = np.zeros((len(rows), forms.point.dim))
    for pos, form in enumerate(rows):
        for (col,), value in form.terms.items():
            matrix[pos, col] = value
    return int(np.linalg.matrix_rank(matrix))


@dataclass
class SwapReport:
    """Both sides of the curvature index swap under its premise.

    Attributes:
        premise_residual: Largest |Ω^q_l ∧ θ^l| or |Ω^l_l| coefficient.
        lhs_norm: Largest coefficient of the left-hand side.
        deviation: Largest coefficient difference.
    """

    premise_residual: float
    lhs_norm: float
    deviation: float


def omega_swap_check(
    theta: Sequence[SparseAltForm],
    curvature: Sequence[Sequence[SparseAltForm]],
    r: int,
    signature: Signature | None = None,
) -> SwapReport:
    """Compare both sides of the curvature index swap.

    Left: Ω^q_{i₁} ∧ θ_{q i₂..i_r J} ∧ Ω^{IJ}. Right: -Ω^q_{j₁} ∧ θ_{I q j₂..j_r} ∧ Ω^{IJ}.

    The identity holds when Ω^q_l ∧ θ^l = 0 and Ω^l_l = 0; both are measured.

    Args:
        theta: A coframe on any space.
        curvature: Matching 2-forms Ω^i_j.
        r: The order.
        signature: η, Lorentzian by default.

    Returns:
        The report.

    Raises:
        DomainError: When r is not positive.
    """
    coframe = Coframe(theta)
    m, n = coframe.m, coframe.space_dim
    if r < 1 or 2 * r > m:
        msg = f"Order {r} is not admissible in dimension {m}."
        raise DomainError(msg)
    sig = _resolve_signature(m, signature)
    curv = tuple(tuple(row) for row in curvature)
    raised = raise_curvature(curv, sig)
    premise = max(
        sum_forms((wedge(curv[q][ell], coframe.theta[ell]) for ell in range(m)), n, 3).max_norm()
        for q in range(m)
    )
    premise = max(premise, sum_forms((curv[ell][ell] for ell in range(m)), n, 2).max_norm())

    lhs_terms = []
    rhs_terms = []
    for upper in itertools.product(range(m), repeat=r):
        for lower in itertools.product(range(m), repeat=r):
            product = wedge_all((raised[i][j] for i, j in zip(upper, lower, strict=True)), n)
            if product.is_zero():
                continue
            for q in range(m):
                left = coframe.sparling((q, *upper[1:], *lower))
                lhs_terms.append(wedge(wedge(curv[q][upper[0]], left), product))
                right = coframe.sparling((*upper, q, *lower[1:]))
                rhs_terms.append(-wedge(wedge(curv[q][lower[0]], right), product))
    lhs = sum_forms(lhs_terms, n, m + 2)
    rhs = sum_forms(rhs_terms, n, m + 2)
    return SwapReport(
        premise_residual=premise,
        lhs_norm=lhs.max_norm(),
        deviation=(lhs - rhs).max_norm(),
    )
