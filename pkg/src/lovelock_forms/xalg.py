"""Sparse alternating forms on an abstract n-dimensional coordinate space.

A form of degree k is stored as a map from strictly increasing index
tuples to float coefficients, the sign of any reordering absorbed into
the coefficient. A k-vector on R^m uses the same storage.
"""

from __future__ import annotations

import itertools
import math

from dataclasses import dataclass, field
from enum import Enum
from functools import cache, lru_cache
from types import MappingProxyType
from typing import TYPE_CHECKING, Any, NamedTuple

import numpy as np

from lovelock_forms.constants import PRUNE_THRESHOLD
from lovelock_forms.exceptions import DomainError


if TYPE_CHECKING:
    from collections.abc import Iterable, Mapping, Sequence

    from numpy.typing import NDArray


Terms = dict[tuple[int, ...], float]
Label = tuple[Any, ...]


@lru_cache(maxsize=1 << 20)
def merge_sign(left: tuple[int, ...], right: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Merge two strictly increasing tuples, counting crossings.

    Args:
        left: The first tuple.
        right: The second tuple.

    Returns:
        The merge sign (0 on a shared index) and the merged tuple.
    """
    out: list[int] = []
    i = j = crossings = 0
    n_left = len(left)
    n_right = len(right)
    while i < n_left and j < n_right:
        x = left[i]
        y = right[j]
        if x < y:
            out.append(x)
            i += 1
        elif y < x:
            out.append(y)
            crossings += n_left - i
            j += 1
        else:
            return 0, ()
    out.extend(left[i:])
    out.extend(right[j:])
    return (-1 if crossings & 1 else 1), tuple(out)


def _prune(terms: Terms) -> Terms:
    return {key: value for key, value in terms.items() if abs(value) >= PRUNE_THRESHOLD}


class SparseAltForm:
    """A degree-k alternating form with sparse canonical storage.

    Instances are treated as immutable once built.
    """

    __slots__ = ("_terms", "degree", "space_dim")

    def __init__(
        self,
        space_dim: int,
        degree: int,
        terms: Mapping[tuple[int, ...], float] | None = None,
    ) -> None:
        """Build a form, validating and pruning the supplied terms.

        Args:
            space_dim: The dimension n of the coordinate space.
            degree: The form degree k.
            terms: Map from strictly increasing index tuples to coefficients.

        Raises:
            DomainError: When a key is not a canonical tuple of length k in [0, n).
        """
        if space_dim < 0 or degree < 0:
            msg = f"Invalid form shape: space_dim={space_dim}, degree={degree}."
            raise DomainError(msg)
        clean: Terms = {}
        for key, value in (terms or {}).items():
            idx = tuple(int(i) for i in key)
            if len(idx) != degree:
                msg = f"Term {idx} does not have length {degree}."
                raise DomainError(msg)
            if any(b <= a for a, b in itertools.pairwise(idx)):
                msg = f"Term {idx} is not strictly increasing."
                raise DomainError(msg)
            if idx and not (0 <= idx[0] and idx[-1] < space_dim):
                msg = f"Term {idx} has an entry outside [0, {space_dim})."
                raise DomainError(msg)
            clean[idx] = clean.get(idx, 0.0) + float(value)
        self.space_dim = space_dim
        self.degree = degree
        self._terms = _prune(clean)

    @classmethod
    def _raw(cls, space_dim: int, degree: int, terms: Terms) -> SparseAltForm:
        """Build from trusted canonical terms, pruning only.

        Args:
            space_dim: The space dimension.
            degree: The degree.
            terms: Canonical terms.

        Returns:
            The form.
        """
        form = cls.__new__(cls)
        form.space_dim = space_dim
        form.degree = degree
        form._terms = _prune(terms)
        return form

    @classmethod
    def zero(cls, space_dim: int, degree: int) -> SparseAltForm:
        """Return the zero form of a given shape.

        Args:
            space_dim: The space dimension.
            degree: The degree.

        Returns:
            The zero form.
        """
        return cls._raw(space_dim, degree, {})

    @classmethod
    def constant(cls, space_dim: int, value: float) -> SparseAltForm:
        """Return a degree-0 form.

        Args:
            space_dim: The space dimension.
            value: The scalar value.

        Returns:
            The scalar form.
        """
        return cls._raw(space_dim, 0, {(): float(value)})

    @property
    def terms(self) -> Mapping[tuple[int, ...], float]:
        """Read-only view of the canonical terms."""
        return MappingProxyType(self._terms)

    def coefficient(self, idx: Sequence[int]) -> float:
        """Return the coefficient of dx^{idx}, idx in any order.

        Args:
            idx: The index sequence.

        Returns:
            The signed coefficient.
        """
        if len(set(idx)) != len(idx):
            return 0.0
        order = sorted(range(len(idx)), key=lambda pos: idx[pos])
        sign = -1.0 if _inversions(order) % 2 else 1.0
        return sign * self._terms.get(tuple(idx[p] for p in order), 0.0)

    def scalar(self) -> float:
        """Return the value of a degree-0 form.

        Returns:
            The scalar.

        Raises:
            DomainError: When the form has positive degree.
        """
        if self.degree:
            msg = f"Form of degree {self.degree} is not a scalar."
            raise DomainError(msg)
        return self._terms.get((), 0.0)

    def max_norm(self) -> float:
        """Return the largest coefficient magnitude."""
        return max((abs(c) for c in self._terms.values()), default=0.0)

    def is_zero(self) -> bool:
        """Return whether no term survived pruning."""
        return not self._terms

    def _check_same(self, other: SparseAltForm) -> None:
        if self.space_dim != other.space_dim or self.degree != other.degree:
            msg = (
                f"Shape mismatch: ({self.space_dim}, {self.degree}) vs "
                f"({other.space_dim}, {other.degree})."
            )
            raise DomainError(msg)

    def __add__(self, other: SparseAltForm) -> SparseAltForm:
        """Add two forms of equal shape.

        Args:
            other: The other form.

        Returns:
            The sum.
        """
        self._check_same(other)
        terms = dict(self._terms)
        for key, value in other._terms.items():
            terms[key] = terms.get(key, 0.0) + value
        return SparseAltForm._raw(self.space_dim, self.degree, terms)

    def __sub__(self, other: SparseAltForm) -> SparseAltForm:
        """Subtract two forms of equal shape.

        Args:
            other: The other form.

        Returns:
            The difference.
        """
        return self + (-other)

    def __neg__(self) -> SparseAltForm:
        """Negate the form.

        Returns:
            The negated form.
        """
        return SparseAltForm._raw(
            self.space_dim,
            self.degree,
            {k: -v for k, v in self._terms.items()},
        )

    def __mul__(self, scale: float) -> SparseAltForm:
        """Scale by a number.

        Args:
            scale: The factor.

        Returns:
            The scaled form.
        """
        return SparseAltForm._raw(
            self.space_dim,
            self.degree,
            {k: v * scale for k, v in self._terms.items()},
        )

    __rmul__ = __mul__

    def wedge(self, other: SparseAltForm) -> SparseAltForm:
        """Return self ∧ other.

        Args:
            other: The right factor.

        Returns:
            The wedge product.
        """
        return wedge(self, other)

    def evaluate(self, vectors: NDArray[np.float64]) -> float:
        """Evaluate on k vectors given as the rows of a k×n array.

        Args:
            vectors: Array of shape (k, n).

        Returns:
            The value of the form on the vectors.
        """
        vecs = np.asarray(vectors, dtype=float).reshape(self.degree, self.space_dim)
        if self.degree == 0:
            return self.scalar()
        return float(
            sum(c * np.linalg.det(vecs[:, list(idx)]) for idx, c in self._terms.items()),
        )

    def __repr__(self) -> str:
        """Return a short description.

        Returns:
            The representation.
        """
        return f"SparseAltForm(n={self.space_dim}, k={self.degree}, terms={len(self._terms)})"


def _inversions(seq: Sequence[int]) -> int:
    return sum(1 for a, b in itertools.combinations(seq, 2) if a > b)


@dataclass(frozen=True)
class TangentVector:
    """A sparse tangent vector.

    Attributes:
        space_dim: The space dimension.
        components: Map from coordinate index to component.
    """

    space_dim: int
    components: Mapping[int, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        """Validate the component indices.

        Raises:
            DomainError: When an index lies outside [0, space_dim).
        """
        for idx in self.components:
            if not 0 <= idx < self.space_dim:
                msg = f"Vector component {idx} outside [0, {self.space_dim})."
                raise DomainError(msg)

    def dense(self) -> NDArray[np.float64]:
        """Return the dense component array."""
        out = np.zeros(self.space_dim)
        for idx, value in self.components.items():
            out[idx] = value
        return out


def basis_covector(n: int, i: int) -> SparseAltForm:
    """Return dx^i on an n-dimensional space.

    Args:
        n: The space dimension.
        i: The coordinate index.

    Returns:
        The 1-form.

    Raises:
        DomainError: When i is outside [0, n).
    """
    if not 0 <= i < n:
        msg = f"Covector index {i} outside [0, {n})."
        raise DomainError(msg)
    return SparseAltForm._raw(n, 1, {(i,): 1.0})


def basis_vector(n: int, i: int) -> TangentVector:
    """Return the coordinate vector e_i.

    Args:
        n: The space dimension.
        i: The coordinate index.

    Returns:
        The vector.
    """
    return TangentVector(n, {i: 1.0})


def one_form(coefficients: Mapping[int, float], n: int) -> SparseAltForm:
    """Build Σ c_i dx^i.

    Args:
        coefficients: Map from coordinate index to coefficient.
        n: The space dimension.

    Returns:
        The 1-form.
    """
    return SparseAltForm(n, 1, {(i,): c for i, c in coefficients.items()})


def wedge(a: SparseAltForm, b: SparseAltForm) -> SparseAltForm:
    """Return a ∧ b.

    Args:
        a: The left factor.
        b: The right factor.

    Returns:
        The product; the zero form when the degrees exceed the space dimension.

    Raises:
        DomainError: When the space dimensions differ.
    """
    if a.space_dim != b.space_dim:
        msg = f"Cannot wedge forms on spaces of dimension {a.space_dim} and {b.space_dim}."
        raise DomainError(msg)
    degree = a.degree + b.degree
    if degree > a.space_dim:
        return SparseAltForm.zero(a.space_dim, degree)
    terms: Terms = {}
    for ta, ca in a._terms.items():  # noqa: SLF001
        for tb, cb in b._terms.items():  # noqa: SLF001
            sign, merged = merge_sign(ta, tb)
            if sign:
                terms[merged] = terms.get(merged, 0.0) + sign * ca * cb
    return SparseAltForm._raw(a.space_dim, degree, terms)  # noqa: SLF001


def wedge_all(forms: Iterable[SparseAltForm], n: int) -> SparseAltForm:
    """Wedge a sequence of forms left to right.

    Args:
        forms: The factors.
        n: The space dimension, used for the empty product.

    Returns:
        The product, the constant 1 for no factors.
    """
    result = SparseAltForm.constant(n, 1.0)
    for form in forms:
        result = wedge(result, form)
    return result


def linear_combine(coeffs: Sequence[float], forms: Sequence[SparseAltForm]) -> SparseAltForm:
    """Return Σ c_i α_i.

    Args:
        coeffs: The scalar coefficients.
        forms: The forms, all of one shape.

    Returns:
        The linear combination.

    Raises:
        DomainError: On a length, degree or dimension mismatch.
    """
    if len(coeffs) != len(forms) or not forms:
        msg = "linear_combine needs equally many coefficients and forms, at least one."
        raise DomainError(msg)
    first = forms[0]
    terms: Terms = {}
    for coeff, form in zip(coeffs, forms, strict=True):
        first._check_same(form)  # noqa: SLF001
        if coeff == 0:
            continue
        for key, value in form._terms.items():  # noqa: SLF001
            terms[key] = terms.get(key, 0.0) + coeff * value
    return SparseAltForm._raw(first.space_dim, first.degree, terms)  # noqa: SLF001


def interior(v: TangentVector, a: SparseAltForm) -> SparseAltForm:
    """Return the contraction v ⌟ a.

    Args:
        v: The vector.
        a: A form of degree at least one.

    Returns:
        The contracted form.

    Raises:
        DomainError: For degree-0 input or mismatched dimensions.
    """
    if a.degree == 0:
        msg = "Cannot contract a vector into a 0-form."
        raise DomainError(msg)
    if v.space_dim != a.space_dim:
        msg = f"Vector dimension {v.space_dim} does not match form dimension {a.space_dim}."
        raise DomainError(msg)
    comps = v.components
    terms: Terms = {}
    for idx, coeff in a._terms.items():  # noqa: SLF001
        for pos, i in enumerate(idx):
            vi = comps.get(i)
            if vi:
                key = idx[:pos] + idx[pos + 1 :]
                term = (-coeff if pos & 1 else coeff) * vi
                terms[key] = terms.get(key, 0.0) + term
    return SparseAltForm._raw(a.space_dim, a.degree - 1, terms)  # noqa: SLF001


def pullback(lmap: NDArray[np.float64], a: SparseAltForm) -> SparseAltForm:
    """Pull a form back along a linear map R^p → R^n.

    Args:
        lmap: Matrix of shape (n, p) acting on column vectors of R^p.
        a: A form on R^n.

    Returns:
        The pulled-back form on R^p, whose coefficients are minors of ``lmap``.

    Raises:
        DomainError: When the matrix rows do not match the form dimension.
    """
    mat = np.asarray(lmap, dtype=float)
    if mat.ndim != 2 or mat.shape[0] != a.space_dim:  # noqa: PLR2004
        msg = f"Map of shape {mat.shape} cannot pull back a form on {a.space_dim} dims."
        raise DomainError(msg)
    p = mat.shape[1]
    if a.degree > p:
        return SparseAltForm.zero(p, a.degree)
    if a.degree == 0:
        return SparseAltForm._raw(p, 0, dict(a._terms))  # noqa: SLF001
    targets = list(itertools.combinations(range(p), a.degree))
    terms: Terms = {}
    for idx, coeff in a._terms.items():  # noqa: SLF001
        rows = mat[list(idx), :]
        for target in targets:
            minor = float(np.linalg.det(rows[:, list(target)]))
            if minor:
                terms[target] = terms.get(target, 0.0) + coeff * minor
    return SparseAltForm._raw(p, a.degree, terms)  # noqa: SLF001


class Comparison(NamedTuple):
    """Result of comparing two forms.

    Attributes:
        equal: Whether the forms agree within tolerance.
        deviation: Largest absolute coefficient difference.
    """

    equal: bool
    deviation: float


def approx_eq(a: SparseAltForm, b: SparseAltForm, tol: float) -> Comparison:
    """Compare two forms with a relative max-norm tolerance.

    Args:
        a: The first form.
        b: The second form.
        tol: Tolerance relative to max(1, |a|, |b|).

    Returns:
        The comparison.
    """
    deviation = (a - b).max_norm()
    scale = max(1.0, a.max_norm(), b.max_norm())
    return Comparison(equal=deviation <= tol * scale, deviation=deviation)


class ValueKind(Enum):
    """The value spaces a vector-valued form may live in.

    Attributes:
        SCALAR: The real line.
        VECTOR: R^m with basis e_k.
        COVECTOR: The dual of R^m with basis e^k.
        GL: gl(m), component (i, j) is the matrix entry A^i_j.
        LAMBDA: Λ^r R^m with lexicographic canonical r-tuples.
        LAMBDA_END: Λ^r R^m ⊗ (Λ^r R^m)*, component (J, L) multiplies e_J ⊗ e^L.
    """

    SCALAR = "scalar"
    VECTOR = "vector"
    COVECTOR = "covector"
    GL = "gl"
    LAMBDA = "lambda"
    LAMBDA_END = "lambda_end"


@cache
def _space_labels(kind: ValueKind, m: int, r: int) -> tuple[Label, ...]:
    if kind is ValueKind.SCALAR:
        return ((),)
    if kind in (ValueKind.VECTOR, ValueKind.COVECTOR):
        return tuple((k,) for k in range(m))
    if kind is ValueKind.GL:
        return tuple((i, j) for i in range(m) for j in range(m))
    tuples = tuple(itertools.combinations(range(m), r))
    if kind is ValueKind.LAMBDA:
        return tuples
    return tuple((upper, lower) for upper in tuples for lower in tuples)


@cache
def _space_positions(kind: ValueKind, m: int, r: int) -> dict[Label, int]:
    return {label: pos for pos, label in enumerate(_space_labels(kind, m, r))}


@dataclass(frozen=True)
class ValueSpace:
    """A tagged finite-dimensional value space.

    Attributes:
        kind: The kind of space.
        m: The underlying dimension.
        r: The exterior degree for the Λ kinds.
    """

    kind: ValueKind
    m: int
    r: int = 1

    def labels(self) -> list[Label]:
        """Return the basis labels in storage order."""
        return list(_space_labels(self.kind, self.m, self.r))

    @property
    def dim(self) -> int:
        """Return the dimension of the value space."""
        if self.kind is ValueKind.SCALAR:
            return 1
        if self.kind in (ValueKind.VECTOR, ValueKind.COVECTOR):
            return self.m
        if self.kind is ValueKind.GL:
            return self.m * self.m
        size = math.comb(self.m, self.r)
        return size if self.kind is ValueKind.LAMBDA else size * size

    def index(self, label: Label) -> int:
        """Return the storage position of a basis label.

        Args:
            label: A label as produced by labels().

        Returns:
            The position.
        """
        return _space_positions(self.kind, self.m, self.r)[label]


@dataclass(frozen=True)
class VectorValuedForm:
    """A form with one SparseAltForm component per basis element of its value space.

    Attributes:
        space: The value space.
        components: The component forms, in label order.
    """

    space: ValueSpace
    components: tuple[SparseAltForm, ...]

    def __post_init__(self) -> None:
        """Check the component count and shapes.

        Raises:
            DomainError: On inconsistent components.
        """
        if len(self.components) != self.space.dim:
            msg = f"Expected {self.space.dim} components, got {len(self.components)}."
            raise DomainError(msg)
        shapes = {(c.space_dim, c.degree) for c in self.components}
        if len(shapes) > 1:
            msg = f"Components disagree in shape: {sorted(shapes)}."
            raise DomainError(msg)

    @property
    def degree(self) -> int:
        """Return the common form degree."""
        return self.components[0].degree

    @property
    def space_dim(self) -> int:
        """Return the common space dimension."""
        return self.components[0].space_dim

    def component(self, label: Label) -> SparseAltForm:
        """Return the component for a basis label.

        Args:
            label: The basis label.

        Returns:
            The component form.
        """
        return self.components[self.space.index(label)]

    def scaled(self, factor: float) -> VectorValuedForm:
        """Scale every component.

        Args:
            factor: The factor.

        Returns:
            The scaled form.
        """
        return VectorValuedForm(self.space, tuple(c * factor for c in self.components))

    def max_deviation(self, other: VectorValuedForm) -> float:
        """Return the largest coefficient difference to another form on the same space.

        Args:
            other: The other form.

        Returns:
            The max-norm of the difference.

        Raises:
            DomainError: When the value spaces differ.
        """
        if self.space != other.space:
            msg = f"Value spaces differ: {self.space} vs {other.space}."
            raise DomainError(msg)
        return max(
            ((a - b).max_norm() for a, b in zip(self.components, other.components, strict=True)),
            default=0.0,
        )

    def max_norm(self) -> float:
        """Return the largest coefficient over all components."""
        return max((c.max_norm() for c in self.components), default=0.0)


def sum_forms(forms: Iterable[SparseAltForm], n: int, degree: int) -> SparseAltForm:
    """Add forms of one degree, starting from zero.

    Args:
        forms: The summands.
        n: The dimension of the underlying space.
        degree: The common degree, used when there are no summands.

    Returns:
        The sum.
    """
    total = SparseAltForm.zero(n, degree)
    for form in forms:
        total = total + form
    return total


def _graded_bracket(
    alpha: VectorValuedForm,
    beta: VectorValuedForm,
) -> VectorValuedForm:
    m = alpha.space.m
    n = alpha.space_dim
    degree = alpha.degree + beta.degree
    sign = -1.0 if (alpha.degree * beta.degree) % 2 else 1.0
    comps = []
    for i in range(m):
        for j in range(m):
            left = sum_forms(
                (wedge(alpha.components[i * m + k], beta.components[k * m + j]) for k in range(m)),
                n,
                degree,
            )
            right = sum_forms(
                (wedge(beta.components[i * m + k], alpha.components[k * m + j]) for k in range(m)),
                n,
                degree,
            )
            comps.append(left - right * sign)
    return VectorValuedForm(alpha.space, tuple(comps))


def bilinear_combine(  # noqa: C901
    kind: str,
    alpha: VectorValuedForm | None,
    beta: VectorValuedForm,
    linear_map: NDArray[np.float64] | None = None,
    target: ValueSpace | None = None,
) -> VectorValuedForm | SparseAltForm:
    """Combine two vector-valued forms through a bilinear map B(α ∧, β).

    Args:
        kind: One of pairing, action, bracket, wedge, constant_map.
        alpha: The left form, unused by constant_map.
        beta: The right form.
        linear_map: Matrix applied to β's values for constant_map.
        target: Value space of the constant_map result, defaults to β's.

    Returns:
        A scalar form for pairing, a vector-valued form otherwise.

    Raises:
        DomainError: When the value-space tags do not fit the requested kind.
    """
    n = beta.space_dim
    if kind == "constant_map":
        if linear_map is None:
            msg = "constant_map needs a linear map."
            raise DomainError(msg)
        out_space = target or beta.space
        mat = np.asarray(linear_map, dtype=float)
        if mat.shape != (out_space.dim, beta.space.dim):
            msg = f"Linear map shape {mat.shape} does not fit {beta.space} -> {out_space}."
            raise DomainError(msg)
        comps = tuple(
            linear_combine(list(mat[row]), list(beta.components)) for row in range(out_space.dim)
        )
        return VectorValuedForm(out_space, comps)

    if alpha is None:
        msg = f"{kind} needs a left operand."
        raise DomainError(msg)
    tags = (alpha.space.kind, beta.space.kind)
    if alpha.space.m != beta.space.m or alpha.space.r != beta.space.r:
        msg = f"Value spaces {alpha.space} and {beta.space} have different shapes."
        raise DomainError(msg)
    degree = alpha.degree + beta.degree
    m = alpha.space.m

    if kind == "pairing":
        if tags in ((ValueKind.COVECTOR, ValueKind.VECTOR), (ValueKind.VECTOR, ValueKind.COVECTOR)):
            return sum_forms(
                (wedge(a, b) for a, b in zip(alpha.components, beta.components, strict=True)),
                n,
                degree,
            )
        if tags == (ValueKind.LAMBDA_END, ValueKind.LAMBDA_END):
            labels = alpha.space.labels()
            return sum_forms(
                (
                    wedge(alpha.components[pos], beta.component((lab[1], lab[0])))
                    for pos, lab in enumerate(labels)
                ),
                n,
                degree,
            )
    elif kind == "action" and tags == (ValueKind.GL, ValueKind.VECTOR):
        comps = tuple(
            sum_forms(
                (wedge(alpha.components[i * m + j], beta.components[j]) for j in range(m)),
                n,
                degree,
            )
            for i in range(m)
        )
        return VectorValuedForm(beta.space, comps)
    elif kind == "bracket" and tags == (ValueKind.GL, ValueKind.GL):
        return _graded_bracket(alpha, beta)
    elif kind == "wedge" and tags == (ValueKind.VECTOR, ValueKind.VECTOR):
        pairs = list(itertools.combinations(range(m), 2))
        comps = tuple(
            wedge(alpha.components[i], beta.components[j])
            - wedge(alpha.components[j], beta.components[i])
            for i, j in pairs
        )
        return VectorValuedForm(ValueSpace(ValueKind.LAMBDA, m, 2), comps)
    msg = f"Bilinear kind '{kind}' does not accept value spaces {tags[0].value} x {tags[1].value}."
    raise DomainError(msg)


def gl_form(entries: Sequence[Sequence[SparseAltForm]]) -> VectorValuedForm:
    """Pack an m×m array of forms as a gl(m)-valued form.

    Args:
        entries: Row-major nested sequences, entries[i][j] = A^i_j.

    Returns:
        The gl(m)-valued form.
    """
    m = len(entries)
    return VectorValuedForm(
        ValueSpace(ValueKind.GL, m),
        tuple(entries[i][j] for i in range(m) for j in range(m)),
    )


def vector_form(
    entries: Sequence[SparseAltForm],
    kind: ValueKind = ValueKind.VECTOR,
) -> VectorValuedForm:
    """Pack m forms as an R^m- or dual-valued form.

    Args:
        entries: The component forms.
        kind: VECTOR or COVECTOR.

    Returns:
        The vector-valued form.
    """
    return VectorValuedForm(ValueSpace(kind, len(entries)), tuple(entries))
