"""Tests for metric curvature, the Lovelock tensor and Ψ on the base."""

from __future__ import annotations

import math

import numpy as np
import pytest

from lovelock_forms import lovelock
from lovelock_forms.exceptions import ConstructionError, DomainError
from lovelock_forms.metrics import Minkowski, Schwarzschild, Sphere, SphereProduct, scaled_sample
from lovelock_forms.sampling import (
    eta_preserving_frame_change,
    random_metric_point,
    random_metric_sample,
    random_poly_metric,
)
from lovelock_forms.types import Signature
from tests.defaults import SCHWARZSCHILD_POINT


def _frame(
    rng: np.random.Generator,
    m: int,
) -> tuple[lovelock.Vielbein, lovelock.CurvatureData]:
    cd = lovelock.curvature(random_metric_sample(rng, m))
    return lovelock.vielbein_from_metric(cd.sample.g, Signature.lorentzian(m)), cd


def test_flat_space_has_no_curvature() -> None:
    """Minkowski space has vanishing Christoffels and Riemann tensor."""
    cd = lovelock.curvature(Minkowski(4).sample(np.zeros(4)))
    assert not np.any(cd.gamma)
    assert not np.any(cd.riemann)
    assert cd.scalar == 0.0
    assert lovelock.lovelock_density(0, cd) == 1.0


def test_sphere_christoffel() -> None:
    """The round sphere has Γ^θ_φφ = -sin θ cos θ and Γ^φ_θφ = cot θ, independent of radius."""
    theta = 0.9
    gamma, dgamma = lovelock.christoffel(Sphere(2.0).sample([theta, 0.3]))
    assert gamma[0, 1, 1] == pytest.approx(-math.sin(theta) * math.cos(theta))
    assert gamma[1, 0, 1] == pytest.approx(1.0 / math.tan(theta))
    assert gamma[1, 1, 0] == pytest.approx(1.0 / math.tan(theta))
    assert gamma[0, 0, 0] == 0.0
    assert dgamma[0, 0, 1, 1] == pytest.approx(-math.cos(2 * theta))
    assert dgamma[0, 1, 0, 1] == pytest.approx(-1.0 / math.sin(theta) ** 2)
    assert not np.any(dgamma[1])


def test_riemann_symmetries(rng: np.random.Generator) -> None:
    """R^{στ}_{μν} is antisymmetric in both pairs and symmetric under pair exchange.

    Args:
        rng: Seeded generator.
    """
    cd = lovelock.curvature(random_metric_sample(rng, 4))
    lowered = np.einsum("sa,tb,abmn->stmn", cd.sample.g, cd.sample.g, cd.raised)
    np.testing.assert_allclose(lowered, -lowered.transpose(1, 0, 2, 3), atol=1e-12)
    np.testing.assert_allclose(lowered, -lowered.transpose(0, 1, 3, 2), atol=1e-12)
    np.testing.assert_allclose(lowered, lowered.transpose(2, 3, 0, 1), atol=1e-12)
    np.testing.assert_allclose(cd.ricci, cd.ricci.T, atol=1e-12)
    gamma_sym = cd.gamma - cd.gamma.transpose(0, 2, 1)
    assert np.max(np.abs(gamma_sym)) < 1e-14


@pytest.mark.parametrize(("m", "r"), ((3, 1), (4, 1), (4, 2)))
def test_density_matches_reference(m: int, r: int, rng: np.random.Generator) -> None:
    """The permutation sum agrees with the naive contraction.

    Args:
        m: Dimension.
        r: Order.
        rng: Seeded generator.
    """
    cd = lovelock.curvature(random_metric_sample(rng, m))
    fast = lovelock.lovelock_density(r, cd)
    slow = lovelock.lovelock_density_reference(r, cd)
    assert fast == pytest.approx(slow, rel=1e-10, abs=1e-12)


def test_density_edge_orders(rng: np.random.Generator) -> None:
    """r = 0 gives the volume density and 2r > m gives zero.

    Args:
        rng: Seeded generator.
    """
    sample = random_metric_sample(rng, 3)
    assert lovelock.lovelock_density(0, sample) == pytest.approx(math.sqrt(abs(sample.det)))
    assert lovelock.lovelock_density(2, sample) == 0.0


def test_sphere_densities() -> None:
    """The round sphere gives 4 sin θ and S² × S² gives 32 sin θ₁ sin θ₂."""
    theta = 1.0
    sphere = lovelock.lovelock_density(1, Sphere(1.0).sample((theta, 0.3)))
    assert sphere == pytest.approx(4.0 * math.sin(theta), rel=1e-12)
    product = lovelock.lovelock_density(2, SphereProduct(1.0, 1.0).sample((theta, 0.3, 0.7, 1.1)))
    assert product == pytest.approx(32.0 * math.sin(theta) * math.sin(0.7), rel=1e-12)


@pytest.mark.parametrize(("m", "r"), ((3, 1), (4, 1)))
def test_tensor_matches_reference(m: int, r: int, rng: np.random.Generator) -> None:
    """The permutation sum for A^{μν} agrees with the naive loop and is symmetric.

    Args:
        m: Dimension.
        r: Order.
        rng: Seeded generator.
    """
    cd = lovelock.curvature(random_metric_sample(rng, m))
    tensor = lovelock.lovelock_tensor(r, cd)
    np.testing.assert_allclose(tensor, lovelock.lovelock_tensor_reference(r, cd), atol=1e-10)
    np.testing.assert_allclose(tensor, tensor.T, atol=1e-12)


def test_tensor_orders(rng: np.random.Generator) -> None:
    """Orders with 2r + 1 > m give zero and orders below 1 are rejected.

    Args:
        rng: Seeded generator.
    """
    sample = random_metric_sample(rng, 4)
    assert not np.any(lovelock.lovelock_tensor(2, sample))
    with pytest.raises(DomainError):
        lovelock.lovelock_tensor(0, sample)


def test_order_one_is_einstein(rng: np.random.Generator) -> None:
    """At r = 1 the Lovelock tensor is -8 times the Einstein tensor.

    Args:
        rng: Seeded generator.
    """
    for _ in range(3):
        cd = lovelock.curvature(random_metric_sample(rng, 4))
        np.testing.assert_allclose(
            lovelock.lovelock_tensor(1, cd),
            -8.0 * lovelock.einstein_tensor(cd),
            atol=1e-10,
        )


def test_schwarzschild_is_vacuum() -> None:
    """Schwarzschild has vanishing Ricci curvature and Lovelock tensor."""
    cd = lovelock.curvature(Schwarzschild(1.0).sample(SCHWARZSCHILD_POINT))
    assert np.max(np.abs(cd.ricci)) < 1e-10
    assert np.max(np.abs(lovelock.lovelock_tensor(1, cd))) < 1e-8
    assert np.max(np.abs(cd.riemann)) > 1e-4


def test_vielbein_reconstruction(rng: np.random.Generator) -> None:
    """e^T η e returns the metric for generic and diagonal inputs.

    Args:
        rng: Seeded generator.
    """
    sig = Signature.lorentzian(4)
    sample = random_metric_sample(rng, 4)
    vb = lovelock.vielbein_from_metric(sample.g, sig)
    np.testing.assert_allclose(vb.metric(), sample.g, atol=1e-12)
    np.testing.assert_allclose(vb.e @ vb.e_inv, np.eye(4), atol=1e-12)
    diagonal = lovelock.vielbein_from_metric(np.diag([3.0, -2.0, 1.0, 5.0]), sig)
    np.testing.assert_allclose(diagonal.metric(), np.diag([3.0, -2.0, 1.0, 5.0]), atol=1e-14)


def test_vielbein_errors() -> None:
    """Mismatched signature or shape and non-η frame changes are rejected."""
    with pytest.raises(ConstructionError, match="signature"):
        lovelock.vielbein_from_metric(np.eye(4), Signature.lorentzian(4))
    with pytest.raises(ConstructionError, match="shape"):
        lovelock.vielbein_from_metric(np.eye(3), Signature.euclidean(4))
    vb = lovelock.vielbein_from_metric(np.eye(2), Signature.euclidean(2))
    with pytest.raises(DomainError, match="preserve"):
        vb.transformed(np.diag([2.0, 1.0]))


def test_alternative_order_sign() -> None:
    """(-1)^{r-1} for the first few orders."""
    assert [lovelock.alternative_order_sign(r) for r in range(1, 6)] == [1, -1, 1, -1, 1]


@pytest.mark.parametrize(("m", "r"), ((3, 1), (4, 1), (5, 1), (4, 2), (5, 2)))
def test_psi_contracts_to_lovelock_tensor(m: int, r: int, rng: np.random.Generator) -> None:
    """e_a Ψ^{ab} e_b is -det(e) / 2r times A^{μν} at every order.

    Args:
        m: Dimension.
        r: Order.
        rng: Seeded generator.
    """
    vb, cd = _frame(rng, m)
    contracted = lovelock.frame_contracted_psi(vb, lovelock.psi_form_base(r, vb, cd))
    expected = -vb.det / (2 * r) * lovelock.lovelock_tensor(r, cd)
    np.testing.assert_array_equal(lovelock.expected_psi_contraction(r, vb, cd), expected)
    np.testing.assert_allclose(contracted, expected, atol=1e-9 * max(1.0, np.max(np.abs(expected))))


def test_psi_nonzero_at_second_order(rng: np.random.Generator) -> None:
    """In five dimensions the second-order contraction is nonzero and keeps its sign.

    Args:
        rng: Seeded generator.
    """
    vb, cd = _frame(rng, 5)
    contracted = lovelock.frame_contracted_psi(vb, lovelock.psi_form_base(2, vb, cd))
    expected = -vb.det / 4 * lovelock.lovelock_tensor(2, cd)
    assert np.max(np.abs(expected)) > 1e-6
    assert np.max(np.abs(contracted - expected)) < 1e-9 * np.max(np.abs(expected))
    assert np.max(np.abs(contracted + expected)) > np.max(np.abs(expected))


@pytest.mark.parametrize("r", (1, 2))
def test_psi_alternative_agrees(r: int, rng: np.random.Generator) -> None:
    """The θ_{lIJ} expression matches Ψ up to (-1)^{r-1}.

    Args:
        r: Order.
        rng: Seeded generator.
    """
    vb, cd = _frame(rng, 5)
    sign = lovelock.alternative_order_sign(r)
    direct = lovelock.psi_form_base(r, vb, cd)
    other = lovelock.psi_form_base_alternative(r, vb, cd)
    for row_a, row_b in zip(direct, other, strict=True):
        for a, b in zip(row_a, row_b, strict=True):
            assert (a - b * sign).max_norm() < 1e-10 * max(1.0, b.max_norm())


def test_psi_frame_covariance(rng: np.random.Generator) -> None:
    """The contracted Ψ ignores the choice of orthonormal frame.

    Args:
        rng: Seeded generator.
    """
    vb, cd = _frame(rng, 4)
    moved = vb.transformed(eta_preserving_frame_change(rng, vb.signature))
    before = lovelock.frame_contracted_psi(vb, lovelock.psi_form_base(1, vb, cd))
    after = lovelock.frame_contracted_psi(moved, lovelock.psi_form_base(1, moved, cd))
    np.testing.assert_allclose(after, before, atol=1e-9 * max(1.0, np.max(np.abs(before))))


def test_psi_order_guard(rng: np.random.Generator) -> None:
    """Ψ needs 1 ≤ r and 2r ≤ m.

    Args:
        rng: Seeded generator.
    """
    vb, cd = _frame(rng, 3)
    with pytest.raises(DomainError):
        lovelock.psi_form_base(2, vb, cd)
    with pytest.raises(DomainError):
        lovelock.psi_form_base(0, vb, cd)


@pytest.mark.slow
def test_divergence_converges(rng: np.random.Generator) -> None:
    """∇_μ A^{μν} is small and shrinks by about four when the step halves.

    Args:
        rng: Seeded generator.
    """
    source = random_poly_metric(rng, 3)
    report = lovelock.divergence_lovelock(1, source, random_metric_point(rng, 3), h=1e-2)
    assert np.max(np.abs(report.residual)) < 1e-3
    assert report.step == 1e-2
    if report.ratio is not None:
        assert 2.0 < report.ratio < 6.0


def test_eds_residuals(rng: np.random.Generator) -> None:
    """Levi-Civita data satisfies the base generators of the system.

    Args:
        rng: Seeded generator.
    """
    vb, cd = _frame(rng, 4)
    report = lovelock.eds_residuals(1, vb, cd)
    assert report.structural == ("Theta_l", "Theta_ij")
    assert set(report.residuals) == {"torsion", "metricity", "bianchi", "curvature_p", "psi"}
    for key in ("torsion", "metricity", "bianchi", "curvature_p"):
        assert report.residuals[key] < 1e-9
    assert "psi" not in lovelock.eds_residuals(3, vb, cd).residuals


def test_scaling(rng: np.random.Generator) -> None:
    """x → x/s multiplies the density by s^m and A by s^{-2}.

    Args:
        rng: Seeded generator.
    """
    sample = random_metric_sample(rng, 3)
    s = 1.7
    scaled = scaled_sample(sample, s)
    assert lovelock.lovelock_density(1, scaled) == pytest.approx(
        s**3 * lovelock.lovelock_density(1, sample), rel=1e-10
    )
    np.testing.assert_allclose(
        lovelock.lovelock_tensor(1, scaled),
        lovelock.lovelock_tensor(1, sample) / s**2,
        atol=1e-10,
    )
