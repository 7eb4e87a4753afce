"""Tests for the sparse exterior algebra."""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from hypothesis import given, settings
from hypothesis import strategies as st

from lovelock_forms.exceptions import DomainError
from lovelock_forms.xalg import (
    SparseAltForm,
    TangentVector,
    ValueKind,
    ValueSpace,
    VectorValuedForm,
    approx_eq,
    basis_covector,
    basis_vector,
    bilinear_combine,
    gl_form,
    interior,
    linear_combine,
    merge_sign,
    one_form,
    pullback,
    sum_forms,
    vector_form,
    wedge,
    wedge_all,
)


N = 5

coefficients = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False)


@st.composite
def forms(draw: st.DrawFn, degree: int | None = None) -> SparseAltForm:
    """Draw a form on R^N with a random subset of basis terms.

    Args:
        draw: Hypothesis draw function.
        degree: Fixed degree, random when omitted.

    Returns:
        The form.
    """
    k = draw(st.integers(min_value=0, max_value=N)) if degree is None else degree
    basis = list(itertools.combinations(range(N), k))
    chosen = draw(st.lists(st.sampled_from(basis), max_size=len(basis), unique=True))
    return SparseAltForm(N, k, {idx: draw(coefficients) for idx in chosen})


vectors = st.dictionaries(st.integers(min_value=0, max_value=N - 1), coefficients).map(
    lambda comps: TangentVector(N, comps)
)


def test_merge_sign() -> None:
    """Crossings decide the sign; shared indices kill the product."""
    assert merge_sign((0, 2), (1,)) == (-1, (0, 1, 2))
    assert merge_sign((1,), (0, 2)) == (-1, (0, 1, 2))
    assert merge_sign((0,), (1, 2)) == (1, (0, 1, 2))
    assert merge_sign((0, 1), (1,))[0] == 0


def test_invalid_terms() -> None:
    """Keys must be canonical tuples of the declared degree."""
    with pytest.raises(DomainError, match="strictly increasing"):
        SparseAltForm(3, 2, {(1, 0): 1.0})
    with pytest.raises(DomainError, match="length"):
        SparseAltForm(3, 2, {(0,): 1.0})
    with pytest.raises(DomainError, match="outside"):
        SparseAltForm(3, 1, {(3,): 1.0})
    with pytest.raises(DomainError):
        basis_covector(3, 5)


def test_coefficient_sign_and_zero_pruning() -> None:
    """Coefficients are read in any index order; exact zeros vanish."""
    form = SparseAltForm(4, 2, {(0, 2): 3.0, (1, 3): 0.0})
    assert form.coefficient((2, 0)) == -3.0
    assert form.coefficient((0, 0)) == 0.0
    assert dict(form.terms) == {(0, 2): 3.0}
    assert SparseAltForm.zero(4, 2).is_zero()
    assert SparseAltForm.constant(4, 2.5).scalar() == 2.5
    with pytest.raises(DomainError, match="not a scalar"):
        form.scalar()


@settings(max_examples=60, deadline=None)
@given(forms(), forms())
def test_graded_commutativity(alpha: SparseAltForm, beta: SparseAltForm) -> None:
    """α ∧ β = (-1)^{pq} β ∧ α.

    Args:
        alpha: First form.
        beta: Second form.
    """
    sign = (-1) ** (alpha.degree * beta.degree)
    assert approx_eq(wedge(alpha, beta), wedge(beta, alpha) * sign, 1e-12).equal


@settings(max_examples=40, deadline=None)
@given(forms(), forms(), forms())
def test_associativity(alpha: SparseAltForm, beta: SparseAltForm, gamma: SparseAltForm) -> None:
    """(α ∧ β) ∧ γ = α ∧ (β ∧ γ).

    Args:
        alpha: First form.
        beta: Second form.
        gamma: Third form.
    """
    left = wedge(wedge(alpha, beta), gamma)
    right = wedge(alpha, wedge(beta, gamma))
    assert approx_eq(left, right, 1e-12).equal


@given(forms(degree=1))
def test_odd_square_vanishes(alpha: SparseAltForm) -> None:
    """A 1-form wedged with itself is zero.

    Args:
        alpha: A 1-form.
    """
    assert wedge(alpha, alpha).max_norm() <= 1e-12


@settings(max_examples=60, deadline=None)
@given(vectors, forms(degree=2), forms(degree=3))
def test_interior_is_antiderivation(
    v: TangentVector,
    alpha: SparseAltForm,
    beta: SparseAltForm,
) -> None:
    """v ⌟ (α ∧ β) = (v ⌟ α) ∧ β + (-1)^p α ∧ (v ⌟ β).

    Args:
        v: A vector.
        alpha: A 2-form.
        beta: A 3-form.
    """
    lhs = interior(v, wedge(alpha, beta))
    rhs = wedge(interior(v, alpha), beta) + wedge(alpha, interior(v, beta))
    assert approx_eq(lhs, rhs, 1e-12).equal


@given(vectors, forms(degree=3))
def test_interior_twice_vanishes(v: TangentVector, alpha: SparseAltForm) -> None:
    """Contracting the same vector twice gives zero.

    Args:
        v: A vector.
        alpha: A 3-form.
    """
    assert interior(v, interior(v, alpha)).max_norm() <= 1e-12


def test_interior_errors() -> None:
    """Degree-0 forms and dimension mismatches are rejected."""
    with pytest.raises(DomainError, match="0-form"):
        interior(basis_vector(3, 0), SparseAltForm.constant(3, 1.0))
    with pytest.raises(DomainError, match="does not match"):
        interior(basis_vector(4, 0), basis_covector(3, 0))


def test_basis_duality() -> None:
    """e_i ⌟ dx^j = δ_ij."""
    for i, j in itertools.product(range(3), repeat=2):
        assert interior(basis_vector(3, i), basis_covector(3, j)).scalar() == float(i == j)


def test_evaluate_matches_determinant(rng: np.random.Generator) -> None:
    """dx^0 ∧ ... ∧ dx^{n-1} evaluates to the determinant.

    Args:
        rng: Seeded generator.
    """
    top = wedge_all((basis_covector(4, i) for i in range(4)), 4)
    vecs = rng.uniform(-1, 1, size=(4, 4))
    assert top.evaluate(vecs) == pytest.approx(np.linalg.det(vecs), abs=1e-12)


def test_pullback_commutes_with_wedge(rng: np.random.Generator) -> None:
    """L*(α ∧ β) = L*α ∧ L*β and the top form pulls back to det L.

    Args:
        rng: Seeded generator.
    """
    lmap = rng.uniform(-1, 1, size=(4, 4))
    alpha = one_form({0: 1.0, 2: -0.5}, 4)
    beta = SparseAltForm(4, 2, {(1, 3): 2.0, (0, 1): 0.3})
    lhs = pullback(lmap, wedge(alpha, beta))
    rhs = wedge(pullback(lmap, alpha), pullback(lmap, beta))
    assert approx_eq(lhs, rhs, 1e-12).equal
    top = wedge_all((basis_covector(4, i) for i in range(4)), 4)
    assert pullback(lmap, top).coefficient((0, 1, 2, 3)) == pytest.approx(np.linalg.det(lmap))


def test_pullback_shape_errors() -> None:
    """The map must have one row per coordinate of the form's space."""
    with pytest.raises(DomainError, match="cannot pull back"):
        pullback(np.eye(3), basis_covector(4, 0))
    assert pullback(np.ones((4, 1)), wedge(basis_covector(4, 0), basis_covector(4, 1))).is_zero()


def test_wedge_degree_overflow() -> None:
    """Degrees beyond the space dimension give the zero form."""
    top = wedge_all((basis_covector(2, i) for i in range(2)), 2)
    product = wedge(top, basis_covector(2, 0))
    assert product.is_zero()
    assert product.degree == 3


def test_linear_combine() -> None:
    """Coefficients scale and add matching forms."""
    result = linear_combine((2.0, -1.0), (basis_covector(3, 0), one_form({0: 1.0, 1: 1.0}, 3)))
    assert dict(result.terms) == {(0,): 1.0, (1,): -1.0}
    with pytest.raises(DomainError):
        linear_combine((1.0,), ())


def test_value_space_dimensions() -> None:
    """Each value kind has the expected dimension."""
    assert ValueSpace(ValueKind.SCALAR, 4).dim == 1
    assert ValueSpace(ValueKind.COVECTOR, 4).dim == 4
    assert ValueSpace(ValueKind.GL, 4).dim == 16
    assert ValueSpace(ValueKind.LAMBDA, 4, 2).dim == 6
    assert ValueSpace(ValueKind.LAMBDA_END, 4, 2).dim == 36


def test_vector_valued_validation() -> None:
    """Component count and shapes must agree."""
    with pytest.raises(DomainError, match="Expected"):
        VectorValuedForm(ValueSpace(ValueKind.VECTOR, 3), (basis_covector(3, 0),))
    with pytest.raises(DomainError, match="disagree"):
        vector_form([basis_covector(3, 0), SparseAltForm.zero(3, 2), basis_covector(3, 1)])


def test_pairing_and_action() -> None:
    """Covector-vector pairing and the gl action on vectors."""
    n = 3
    dx = [basis_covector(n, i) for i in range(n)]
    vec = vector_form(dx)
    covec = vector_form(dx, ValueKind.COVECTOR)
    assert bilinear_combine("pairing", covec, vec).is_zero()
    zero = SparseAltForm.zero(n, 0)
    one = SparseAltForm.constant(n, 1.0)
    swap = gl_form([[zero, one, zero], [one, zero, zero], [zero, zero, one]])
    acted = bilinear_combine("action", swap, vec)
    assert isinstance(acted, VectorValuedForm)
    assert dict(acted.components[0].terms) == {(1,): 1.0}
    assert dict(acted.components[1].terms) == {(0,): 1.0}


def test_bracket_of_one_forms_is_twice_square() -> None:
    """[ω ∧, ω] = 2 ω ∧ ω for a gl-valued 1-form."""
    n = 3
    dx = [basis_covector(n, i) for i in range(n)]
    omega = gl_form([[dx[(i + j) % n] * (i - j + 0.5) for j in range(n)] for i in range(n)])
    bracket = bilinear_combine("bracket", omega, omega)
    assert isinstance(bracket, VectorValuedForm)
    for i, j in itertools.product(range(n), repeat=2):
        square = sum(
            (wedge(omega.component((i, k)), omega.component((k, j))) for k in range(n)),
            SparseAltForm.zero(n, 2),
        )
        assert approx_eq(bracket.component((i, j)), square * 2.0, 1e-12).equal


def test_bilinear_tag_mismatch() -> None:
    """Kinds reject value spaces they do not combine."""
    vec = vector_form([basis_covector(3, i) for i in range(3)])
    with pytest.raises(DomainError, match="does not accept"):
        bilinear_combine("bracket", vec, vec)
    with pytest.raises(DomainError, match="linear map"):
        bilinear_combine("constant_map", None, vec)


def test_sum_forms() -> None:
    """Summands add up and an empty sum keeps the requested degree."""
    empty = sum_forms([], 3, 2)
    assert empty.is_zero()
    assert empty.degree == 2
    total = sum_forms((basis_covector(3, i) for i in range(3)), 3, 1)
    assert dict(total.terms) == {(0,): 1.0, (1,): 1.0, (2,): 1.0}
