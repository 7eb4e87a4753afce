"""Exact combinatorics of the Levi-Civita symbol and the generalized Kronecker delta.

Indices are 0-based. Everything here works on Python integers so the
identities can be compared exactly.
"""

from __future__ import annotations

import itertools
import math

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from lovelock_forms.constants import MAX_SYMBOL_DIM
from lovelock_forms.exceptions import DomainError


if TYPE_CHECKING:
    from collections.abc import Iterator, Sequence

    from numpy.typing import NDArray


IndexTuple = tuple[int, ...]


def inversions(seq: Sequence[int]) -> int:
    """Count the pairs (a, b) with a < b and seq[a] > seq[b].

    Args:
        seq: The sequence to inspect.

    Returns:
        The number of inversions.
    """
    return sum(1 for a, b in itertools.combinations(range(len(seq)), 2) if seq[a] > seq[b])


def parity(seq: Sequence[int]) -> int:
    """Return the sign of the permutation that sorts ``seq``.

    Args:
        seq: A sequence without repeated entries.

    Returns:
        +1 or -1, or 0 when an entry repeats.
    """
    if len(set(seq)) != len(seq):
        return 0
    return -1 if inversions(seq) % 2 else 1


def canonicalize(seq: Sequence[int]) -> tuple[int, IndexTuple]:
    """Sort an index sequence and return the sign of the sort.

    Args:
        seq: The sequence to sort.

    Returns:
        The sign (0 when an index repeats) and the strictly increasing tuple.
    """
    return parity(seq), tuple(sorted(seq))


def levi_civita(seq: Sequence[int]) -> int:
    """Evaluate the Levi-Civita symbol.

    Args:
        seq: A sequence of length k with entries in [0, k).

    Returns:
        +1 for even permutations of (0, ..., k-1), -1 for odd ones, 0 on repeats.

    Raises:
        DomainError: When an entry is outside [0, k).
    """
    k = len(seq)
    for idx in seq:
        if not 0 <= idx < k:
            msg = f"Levi-Civita entry {idx} out of range for a symbol of length {k}."
            raise DomainError(msg)
    return parity(seq)


def gkdelta(upper: Sequence[int], lower: Sequence[int]) -> int:
    """Evaluate the generalized Kronecker delta.

    Computed by permutation matching: both tuples must be repeat-free
    rearrangements of the same set, and the result is the sign of the
    permutation taking ``lower`` to ``upper``.

    Args:
        upper: The upper indices.
        lower: The lower indices.

    Returns:
        -1, 0 or +1.

    Raises:
        DomainError: When the tuples differ in length.
    """
    if len(upper) != len(lower):
        msg = f"gkdelta needs equal lengths, got {len(upper)} and {len(lower)}."
        raise DomainError(msg)
    if sorted(upper) != sorted(lower):
        return 0
    return parity(upper) * parity(lower)


def gkdelta_determinant(upper: Sequence[int], lower: Sequence[int]) -> int:
    """Evaluate the generalized Kronecker delta as a determinant of ordinary deltas.

    Args:
        upper: The upper indices.
        lower: The lower indices.

    Returns:
        The determinant, expanded over permutations in exact arithmetic.

    Raises:
        DomainError: When the tuples differ in length.
    """
    if len(upper) != len(lower):
        msg = f"gkdelta needs equal lengths, got {len(upper)} and {len(lower)}."
        raise DomainError(msg)
    total = 0
    for perm in itertools.permutations(range(len(upper))):
        if all(upper[a] == lower[perm[a]] for a in range(len(upper))):
            total += parity(perm)
    return total


def permutations_with_sign(seq: Sequence[int]) -> Iterator[tuple[int, IndexTuple]]:
    """Yield every rearrangement of ``seq`` together with its sign relative to ``seq``.

    Args:
        seq: A repeat-free sequence.

    Yields:
        Pairs of (sign, rearranged tuple).
    """
    for perm in itertools.permutations(range(len(seq))):
        yield parity(perm), tuple(seq[p] for p in perm)


def antisymmetrize(components: NDArray[np.float64], n: int) -> NDArray[np.float64]:
    """Antisymmetrize a dense rank-p array over all of its axes.

    Args:
        components: Array with p axes of extent n.
        n: The extent of every axis.

    Returns:
        (1/p!) times the signed sum over all axis permutations.

    Raises:
        DomainError: When the array shape is not (n, ..., n).
    """
    arr = np.asarray(components, dtype=float)
    if any(extent != n for extent in arr.shape):
        msg = f"Expected every axis to have extent {n}, got shape {arr.shape}."
        raise DomainError(msg)
    rank = arr.ndim
    result = np.zeros_like(arr)
    for perm in itertools.permutations(range(rank)):
        result += parity(perm) * np.transpose(arr, perm)
    return result / math.factorial(rank)


@dataclass
class IdentityReport:
    """Outcome of an exact identity check.

    Attributes:
        passed: Whether every compared entry matched.
        max_deviation: The largest absolute integer difference.
        compared: The number of entries compared.
    """

    passed: bool
    max_deviation: int
    compared: int


def levi_civita_tensor(m: int) -> NDArray[np.int64]:
    """Return ε as a dense integer array of shape (m,) * m.

    Args:
        m: The dimension.

    Returns:
        The array with ε at every index tuple.
    """
    eps = np.zeros((m,) * m, dtype=np.int64)
    for perm in itertools.permutations(range(m)):
        eps[perm] = parity(perm)
    return eps


def verify_eps_delta(m: int, k: int) -> IdentityReport:
    """Check ε_{i..k i..}ε^{i..k j..} = k! δ^{j..}_{i..} on every free index tuple.

    The k leading indices are contracted with np.tensordot on the dense ε. Lower
    tuples with a repeated index only need a row when their ε slice is nonzero, since
    δ vanishes on them.

    Args:
        m: The dimension.
        k: The number of contracted leading indices.

    Returns:
        The identity report; ``compared`` counts every (lower, upper) pair.

    Raises:
        DomainError: When m exceeds the symbol guard or k is outside [0, m].
    """
    if m > MAX_SYMBOL_DIM:
        msg = f"Dimension {m} exceeds the brute-force guard of {MAX_SYMBOL_DIM}."
        raise DomainError(msg)
    if not 0 <= k <= m:
        msg = f"Split {k} is outside [0, {m}]."
        raise DomainError(msg)
    free = m - k
    eps = levi_civita_tensor(m)
    factor = math.factorial(k)
    heads = (slice(None),) * k
    worst = 0
    for lower in itertools.product(range(m), repeat=free):
        head = eps[(*heads, *lower)]
        repeat_free = len(set(lower)) == free
        if not repeat_free and not np.any(head):
            continue
        rhs = np.zeros((m,) * free, dtype=np.int64)
        if repeat_free:
            for sign, upper in permutations_with_sign(lower):
                rhs[upper] = factor * sign
        lhs = head * eps if k == 0 else np.tensordot(head, eps, axes=k)
        worst = max(worst, int(np.max(np.abs(lhs - rhs))))
    compared = m ** (2 * free)
    return IdentityReport(passed=worst == 0, max_deviation=worst, compared=compared)


def verify_contraction_projector(m: int, p: int, a: NDArray[np.int64]) -> IdentityReport:
    """Check (1/p!) δ^{μ..}_{ν..} a^{ν..} equals the antisymmetric part of ``a``.

    Both sides are scaled by p! so the comparison stays in integers.

    Args:
        m: The dimension.
        p: The rank of ``a``.
        a: Integer array of shape (m,) * p.

    Returns:
        The identity report.
    """
    worst = 0
    compared = 0
    for upper in itertools.product(range(m), repeat=p):
        lhs = sum(
            gkdelta(upper, lower) * int(a[lower])
            for lower in itertools.product(range(m), repeat=p)
        )
        rhs = sum(sign * int(a[perm]) for sign, perm in permutations_with_sign(upper))
        worst = max(worst, abs(lhs - rhs))
        compared += 1
    return IdentityReport(passed=worst == 0, max_deviation=worst, compared=compared)


def verify_determinant_identity(a: NDArray[np.int64]) -> IdentityReport:
    """Check ε_{i..} a^{i₁}_{j₁} ... a^{iₙ}_{jₙ} = det(A) ε_{j..} for an integer matrix.

    The determinant is itself computed as an exact Leibniz sum.

    Args:
        a: Square integer matrix.

    Returns:
        The identity report.
    """
    n = a.shape[0]
    det = sum(
        levi_civita(perm) * math.prod(int(a[perm[row], row]) for row in range(n))
        for perm in itertools.permutations(range(n))
    )
    worst = 0
    compared = 0
    for lower in itertools.product(range(n), repeat=n):
        lhs = sum(
            levi_civita(upper) * math.prod(int(a[upper[q], lower[q]]) for q in range(n))
            for upper in itertools.permutations(range(n))
        )
        worst = max(worst, abs(lhs - det * levi_civita(lower)))
        compared += 1
    return IdentityReport(passed=worst == 0, max_deviation=worst, compared=compared)
