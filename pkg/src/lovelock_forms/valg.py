"""Hodge star, Cartan projectors and the invariant Lovelock construction Ξ_r.

Multivectors of ℝ^m are stored as SparseAltForm instances on a space of
dimension m; the basis label K stands for e_{k₁} ∧ ... ∧ e_{k_p}.
"""

from __future__ import annotations

import itertools
import math

from dataclasses import dataclass
from typing import TYPE_CHECKING, Literal, cast

import numpy as np

from lovelock_forms.alt import canonicalize, levi_civita, parity, permutations_with_sign
from lovelock_forms.exceptions import DomainError
from lovelock_forms.jetforms import lovelock_lagrangian_form
from lovelock_forms.types import Signature
from lovelock_forms.xalg import (
    SparseAltForm,
    ValueKind,
    ValueSpace,
    VectorValuedForm,
    bilinear_combine,
    sum_forms,
    wedge,
    wedge_all,
)


if TYPE_CHECKING:
    from collections.abc import Sequence

    from numpy.typing import NDArray

    from lovelock_forms.jetforms import CanonicalForms


__all__ = [
    "Signature",
    "XiPairingReport",
    "cartan_project",
    "curvature_power",
    "eta_hat",
    "gamma_embedding",
    "hodge_star",
    "star_values",
    "theta_power",
    "wedge_map_ar",
    "xi_pairing_check",
    "xi_r",
    "xi_r_via_hodge",
]

Part = Literal["k", "p"]


def _gram(sig: Signature, upper: Sequence[int], lower: Sequence[int]) -> float:
    if not upper:
        return 1.0
    block = sig.matrix[np.ix_(list(upper), list(lower))]
    return float(np.linalg.det(block))


def eta_hat(alpha: SparseAltForm, beta: SparseAltForm, sig: Signature) -> float:
    """Return the extension η̂(α, β) of η to k-vectors.

    Elementary pairs contribute the Gram determinant det[η(e_{i_a}, e_{j_b})].

    Args:
        alpha: A k-vector.
        beta: A k-vector.
        sig: The signature.

    Returns:
        The bilinear extension over the sparse terms.

    Raises:
        DomainError: When the degrees or dimensions differ.
    """
    if alpha.degree != beta.degree or {alpha.space_dim, beta.space_dim} != {sig.m}:
        msg = f"Cannot pair a {alpha.degree}-vector with a {beta.degree}-vector."
        raise DomainError(msg)
    return sum(
        a * b * _gram(sig, upper, lower)
        for upper, a in alpha.terms.items()
        for lower, b in beta.terms.items()
    )


def hodge_star(beta: SparseAltForm, sig: Signature) -> SparseAltForm:
    """Return ⋆β so that α ∧ ⋆β = η̂(α, β) e₀ ∧ ... ∧ e_{m-1}.

    For a basis k-vector ⋆e_I = η_I ε(I, K) e_K with K the ascending complement.

    Args:
        beta: A k-vector on ℝ^m.
        sig: The signature.

    Returns:
        The (m - k)-vector.

    Raises:
        DomainError: When the dimensions differ.
    """
    m = sig.m
    if beta.space_dim != m:
        msg = f"Multivector lives in dimension {beta.space_dim}, signature in {m}."
        raise DomainError(msg)
    terms: dict[tuple[int, ...], float] = {}
    for idx, coeff in beta.terms.items():
        rest = tuple(k for k in range(m) if k not in idx)
        weight = math.prod(sig.eta[i] for i in idx) * levi_civita(idx + rest)
        terms[rest] = terms.get(rest, 0.0) + coeff * weight
    return SparseAltForm(m, m - beta.degree, terms)


def cartan_project(
    value: NDArray[np.float64] | VectorValuedForm,
    part: Part,
    sig: Signature,
) -> NDArray[np.float64] | VectorValuedForm:
    """Project onto the 𝔨 or 𝔭 summand of gl(m) = 𝔨 ⊕ 𝔭.

    π_𝔨(A) = ½(A - ηAᵀη) and π_𝔭(A) = ½(A + ηAᵀη); gl-valued forms are
    projected componentwise.

    Args:
        value: An m×m matrix or a gl(m)-valued form.
        part: "k" or "p".
        sig: The signature.

    Returns:
        The projection, of the same type as the input.

    Raises:
        DomainError: On a shape mismatch or an unknown part.
    """
    if part not in ("k", "p"):
        msg = f"Unknown Cartan part '{part}'."
        raise DomainError(msg)
    sign = 1.0 if part == "p" else -1.0
    m = sig.m
    if isinstance(value, VectorValuedForm):
        if value.space.kind is not ValueKind.GL or value.space.m != m:
            msg = f"Expected a gl({m})-valued form, got {value.space}."
            raise DomainError(msg)
        comps = tuple(
            (
                value.components[i * m + j]
                + value.components[j * m + i] * (sign * sig.eta[i] * sig.eta[j])
            )
            * 0.5
            for i in range(m)
            for j in range(m)
        )
        return VectorValuedForm(value.space, comps)
    mat = np.asarray(value, dtype=float)
    if mat.shape != (m, m):
        msg = f"Expected an {m}x{m} matrix, got shape {mat.shape}."
        raise DomainError(msg)
    eta = sig.matrix
    return 0.5 * (mat + sign * eta @ mat.T @ eta)


def theta_power(theta: Sequence[SparseAltForm], k: int) -> VectorValuedForm:
    """Return θ^{(k)} = θ ∧ ... ∧ θ as a Λ^k ℝ^m-valued k-form.

    The component on e_K is k! θ^{K₁} ∧ ... ∧ θ^{K_k}.

    Args:
        theta: The coframe.
        k: The power.

    Returns:
        The vector-valued form.

    Raises:
        DomainError: When k is outside [0, m].
    """
    m = len(theta)
    if not 0 <= k <= m:
        msg = f"Power {k} outside [0, {m}]."
        raise DomainError(msg)
    n = theta[0].space_dim
    space = ValueSpace(ValueKind.LAMBDA, m, k)
    factor = float(math.factorial(k))
    comps = tuple(
        wedge_all((theta[i] for i in label), n) * factor for label in space.labels()
    )
    return VectorValuedForm(space, comps)


def star_values(form: VectorValuedForm, sig: Signature) -> VectorValuedForm:
    """Apply the Hodge star to the value factor of a Λ^k-valued form.

    Args:
        form: A Λ^k ℝ^m-valued form.
        sig: The signature.

    Returns:
        The Λ^{m-k} ℝ^m-valued form.

    Raises:
        DomainError: When the value space is not Λ^k ℝ^m.
    """
    if form.space.kind is not ValueKind.LAMBDA or form.space.m != sig.m:
        msg = f"Expected a Λ-valued form in dimension {sig.m}, got {form.space}."
        raise DomainError(msg)
    m, k = sig.m, form.space.r
    target = ValueSpace(ValueKind.LAMBDA, m, m - k)
    matrix = np.zeros((target.dim, form.space.dim))
    for col, label in enumerate(form.space.labels()):
        image = hodge_star(SparseAltForm(m, k, {label: 1.0}), sig)
        for out, coeff in image.terms.items():
            matrix[target.index(out), col] = coeff
    return cast(
        "VectorValuedForm",
        bilinear_combine("constant_map", None, form, linear_map=matrix, target=target),
    )


def wedge_map_ar(sig: Signature, r: int) -> NDArray[np.float64]:
    """Return the matrix of A_r: Λ^{2r} ℝ^m → Λ^r ℝ^m ⊗ (Λ^r ℝ^m)*.

    A_r(e_{j₁} ∧ ... ∧ e_{j_{2r}}) = 1/(2r)! Σ_σ sgn σ η_{j_{σ(1)}l₁}...η_{j_{σ(r)}l_r}
    e_{j_{σ(r+1)}} ∧ ... ⊗ e^{l₁} ∧ ..., the first r factors being lowered.

    Args:
        sig: The signature.
        r: The order, 2r ≤ m.

    Returns:
        Array of shape (C(m, r)², C(m, 2r)) in the LAMBDA_END label order.

    Raises:
        DomainError: When 2r exceeds m.
    """
    m = sig.m
    if r < 0 or 2 * r > m:
        msg = f"Order {r} is not admissible in dimension {m}."
        raise DomainError(msg)
    target = ValueSpace(ValueKind.LAMBDA_END, m, r)
    source = list(itertools.combinations(range(m), 2 * r))
    matrix = np.zeros((target.dim, len(source)))
    scale = 1.0 / math.factorial(2 * r)
    for col, label in enumerate(source):
        for sign, perm in permutations_with_sign(label):
            lowered, raised = perm[:r], perm[r:]
            upper_sign, upper = canonicalize(raised)
            lower_sign, lower = canonicalize(lowered)
            weight = math.prod(sig.eta[i] for i in lowered)
            matrix[target.index((upper, lower)), col] += (
                scale * sign * upper_sign * lower_sign * weight
            )
    return matrix


def _check_order(m: int, r: int) -> None:
    if r < 0 or 2 * r > m:
        msg = f"Order {r} is not admissible in dimension {m}."
        raise DomainError(msg)


def xi_r(forms: CanonicalForms, r: int, sig: Signature | None = None) -> VectorValuedForm:
    """Return Ξ_r from its coordinate expression.

    Ξ_r = det(η) η^{i_{r+1}j_{r+1}}...η^{i_{2r}j_{2r}} θ_{i₁..i_{2r}} ⊗ e_{j_{r+1}..j_{2r}}
    ⊗ e^{i₁..i_r},
    summed over every index tuple and collected on canonical labels.

    Args:
        forms: The canonical forms.
        r: The order.
        sig: The signature, Lorentzian by default.

    Returns:
        The Λ^r ⊗ (Λ^r)*-valued (m - 2r)-form.
    """
    m, n = forms.point.m, forms.point.dim
    _check_order(m, r)
    sig = sig or Signature.lorentzian(m)
    space = ValueSpace(ValueKind.LAMBDA_END, m, r)
    buckets: list[list[SparseAltForm]] = [[] for _ in range(space.dim)]
    for lower in itertools.product(range(m), repeat=r):
        lower_sign, lower_key = canonicalize(lower)
        if not lower_sign:
            continue
        for upper in itertools.product(range(m), repeat=r):
            upper_sign, upper_key = canonicalize(upper)
            if not upper_sign or set(upper) & set(lower):
                continue
            weight = sig.det * math.prod(sig.eta[j] for j in upper) * lower_sign * upper_sign
            buckets[space.index((upper_key, lower_key))].append(
                forms.sparling(lower + upper) * weight,
            )
    return VectorValuedForm(
        space,
        tuple(sum_forms(bucket, n, m - 2 * r) for bucket in buckets),
    )


def xi_r_via_hodge(
    forms: CanonicalForms,
    r: int,
    sig: Signature | None = None,
) -> VectorValuedForm:
    """Return A_r(⋆θ^{(m-2r)}).

    Equals (m - 2r)!/(2r)! times xi_r.

    Args:
        forms: The canonical forms.
        r: The order.
        sig: The signature, Lorentzian by default.

    Returns:
        The Λ^r ⊗ (Λ^r)*-valued (m - 2r)-form.
    """
    m = forms.point.m
    _check_order(m, r)
    sig = sig or Signature.lorentzian(m)
    starred = star_values(theta_power(forms.theta, m - 2 * r), sig)
    return cast(
        "VectorValuedForm",
        bilinear_combine(
            "constant_map",
            None,
            starred,
            linear_map=wedge_map_ar(sig, r),
            target=ValueSpace(ValueKind.LAMBDA_END, m, r),
        ),
    )


def gamma_embedding(matrices: Sequence[NDArray[np.float64]]) -> NDArray[np.float64]:
    """Return Γ(A₁ ∧ ... ∧ A_r) as a matrix on Λ^r ℝ^m.

    Γ(A₁, ..., A_r)(e_J) = 1/r! Σ_σ sgn σ A₁(e_{j_{σ(1)}}) ∧ ... ∧ A_r(e_{j_{σ(r)}}).

    Args:
        matrices: The r endomorphisms, A[i, j] mapping e_j to Σ_i A[i, j] e_i.

    Returns:
        Matrix M[L, J] on the canonical r-tuples.
    """
    r = len(matrices)
    m = np.asarray(matrices[0]).shape[0]
    labels = list(itertools.combinations(range(m), r))
    position = {label: pos for pos, label in enumerate(labels)}
    out = np.zeros((len(labels), len(labels)))
    scale = 1.0 / math.factorial(r)
    for col, label in enumerate(labels):
        for sign, perm in permutations_with_sign(label):
            for image in itertools.product(range(m), repeat=r):
                coeff = math.prod(matrices[a][image[a], perm[a]] for a in range(r))
                if not coeff:
                    continue
                img_sign, img_key = canonicalize(image)
                if img_sign:
                    out[position[img_key], col] += scale * sign * img_sign * coeff
    return out


def curvature_power(
    curvature: Sequence[Sequence[SparseAltForm]],
    r: int,
) -> VectorValuedForm:
    """Return Ω^r as an End(Λ^r ℝ^m)-valued 2r-form.

    Ω^r = Ω^{a₁}_{b₁} ∧ ... ∧ Ω^{a_r}_{b_r} ⊗ Γ(E^{b₁}_{a₁}, ..., E^{b_r}_{a_r}), with
    E^b_a the endomorphism v ↦ e^b(v) e_a. Components are labelled (L, J) for e_L ⊗ e^J.

    Args:
        curvature: Ω^i_j.
        r: The order.

    Returns:
        The vector-valued form.
    """
    m = len(curvature)
    n = curvature[0][0].space_dim
    space = ValueSpace(ValueKind.LAMBDA_END, m, r)
    labels = list(itertools.combinations(range(m), r))
    buckets: list[list[SparseAltForm]] = [[] for _ in range(space.dim)]
    elementary = {}
    for a, b in itertools.product(range(m), repeat=2):
        mat = np.zeros((m, m))
        mat[a, b] = 1.0
        elementary[a, b] = mat
    for tops in itertools.product(range(m), repeat=r):
        if not parity(tops):
            continue
        for bottoms in itertools.product(range(m), repeat=r):
            if not parity(bottoms):
                continue
            pairs = list(zip(tops, bottoms, strict=True))
            embedded = gamma_embedding([elementary[pair] for pair in pairs])
            product = wedge_all((curvature[t][b] for t, b in pairs), n)
            if product.is_zero():
                continue
            for row, col in zip(*np.nonzero(embedded), strict=True):
                label = (labels[row], labels[col])
                buckets[space.index(label)].append(product * float(embedded[row, col]))
    return VectorValuedForm(space, tuple(sum_forms(bucket, n, 2 * r) for bucket in buckets))


@dataclass
class XiPairingReport:
    """The pairing ⟨Ξ_r ∧, Ω^r⟩ compared with λ^{(r)} at one jet point.

    Attributes:
        constant: The fitted c with pairing ≈ c λ, None when λ vanishes.
        residual: Largest coefficient of pairing - c λ.
        lagrangian_norm: Largest coefficient of λ.
        path_deviation: Deviation between the two Ξ constructions after rescaling.
    """

    constant: float | None
    residual: float
    lagrangian_norm: float
    path_deviation: float


def _fit(target: SparseAltForm, basis: SparseAltForm) -> float:
    num = sum(value * target.terms.get(key, 0.0) for key, value in basis.terms.items())
    den = sum(value * value for value in basis.terms.values())
    return num / den


def xi_pairing_check(
    forms: CanonicalForms,
    r: int,
    sig: Signature | None = None,
) -> XiPairingReport:
    """Pair Ξ_r with Ω^r and fit the constant relating it to λ^{(r)}.

    Args:
        forms: The canonical forms.
        r: The order.
        sig: The signature, Lorentzian by default.

    Returns:
        The report; the constant is None at points where λ vanishes.
    """
    m = forms.point.m
    _check_order(m, r)
    sig = sig or Signature.lorentzian(m)
    xi = xi_r(forms, r, sig)
    ratio = math.factorial(m - 2 * r) / math.factorial(2 * r)
    path_deviation = xi_r_via_hodge(forms, r, sig).max_deviation(xi.scaled(ratio))
    pairing = cast(
        "SparseAltForm",
        bilinear_combine("pairing", xi, curvature_power(forms.curvature, r)),
    )
    lagrangian = lovelock_lagrangian_form(forms, r, sig)
    if lagrangian.is_zero():
        return XiPairingReport(
            constant=None,
            residual=pairing.max_norm(),
            lagrangian_norm=0.0,
            path_deviation=path_deviation,
        )
    constant = _fit(pairing, lagrangian)
    return XiPairingReport(
        constant=constant,
        residual=(pairing - lagrangian * constant).max_norm(),
        lagrangian_norm=lagrangian.max_norm(),
        path_deviation=path_deviation,
    )


def star_star_sign(sig: Signature, k: int) -> float:
    """Return the sign s with ⋆⋆β = s β on k-vectors.

    Args:
        sig: The signature.
        k: The degree.

    Returns:
        det(η) (-1)^{k(m-k)}.
    """
    return sig.det * (-1.0) ** (k * (sig.m - k))


def wedge_pairing_residual(alpha: SparseAltForm, beta: SparseAltForm, sig: Signature) -> float:
    """Return |α ∧ ⋆β - η̂(α, β) e₀ ∧ ... ∧ e_{m-1}|.

    Args:
        alpha: A k-vector.
        beta: A k-vector.
        sig: The signature.

    Returns:
        The largest coefficient deviation.
    """
    lhs = wedge(alpha, hodge_star(beta, sig))
    rhs = SparseAltForm(sig.m, sig.m, {tuple(range(sig.m)): eta_hat(alpha, beta, sig)})
    return (lhs - rhs).max_norm()
