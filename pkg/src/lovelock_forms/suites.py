"""The named verification suites and the machinery that runs them."""

from __future__ import annotations

import itertools
import logging
import math
import time

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any, cast

import numpy as np

from lovelock_forms import alt, jetforms, lovelock, valg
from lovelock_forms.constants import (
    TOL_ALGEBRAIC,
    TOL_CURVATURE,
    TOL_DIVERGENCE,
    VERTICAL_LIFT_SIGN,
)
from lovelock_forms.exceptions import LovelockError
from lovelock_forms.metrics import Schwarzschild, Sphere, SphereProduct, scaled_sample
from lovelock_forms.sampling import (
    eta_preserving_frame_change,
    random_form,
    random_jet_point,
    random_metric_point,
    random_metric_sample,
    random_poly_metric,
    random_t0_point,
    rng_for,
    swap_lemma_data,
)
from lovelock_forms.types import CheckRecord, FittedConstant, Signature
from lovelock_forms.xalg import (
    SparseAltForm,
    TangentVector,
    VectorValuedForm,
    bilinear_combine,
    gl_form,
    interior,
    pullback,
    wedge,
    wedge_all,
)


if TYPE_CHECKING:
    from collections.abc import Callable, Sequence

    from numpy.typing import NDArray


logger = logging.getLogger(__name__)

# brute-force loops above this many iterations need --heavy
LOOP_BUDGET = 10**6

# convergence ratio window for the halved finite-difference step
RATIO_WINDOW = (3.5, 4.5)

SCHWARZSCHILD_POINT = (0.0, 10.0, 1.0, 0.5)

# torsion and metricity of Levi-Civita data
TOL_STRUCTURAL = 1e-12


@dataclass(frozen=True)
class SuiteSettings:
    """The knobs every check reads.

    Attributes:
        dim: The dimension m.
        r: The Lovelock order.
        seed: The run seed.
        samples: Random draws per check.
        tol: A tolerance overriding every check's own, if set.
        heavy: Lift the brute-force loop budget.
    """

    dim: int
    r: int
    seed: int
    samples: int
    tol: float | None = None
    heavy: bool = False

    def affordable(self, iterations: int) -> bool:
        """Return whether a brute-force loop of this size may run.

        Args:
            iterations: The loop size.

        Returns:
            True under --heavy or within the budget.
        """
        return self.heavy or iterations <= LOOP_BUDGET


@dataclass
class Outcome:
    """What a check function measured.

    Attributes:
        deviation: The largest deviation, compared against the tolerance.
        samples: Draws or evaluations performed.
        detail: Deterministic extra values.
        violations: Conditions that fail the check regardless of the deviation.
        fitted: Constants fitted across the draws.
        skipped: Reason the check did not run.
    """

    deviation: float
    samples: int
    detail: dict[str, Any] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)
    fitted: list[FittedConstant] = field(default_factory=list)
    skipped: str | None = None


@dataclass(frozen=True)
class Check:
    """A named check with its default tolerance.

    Attributes:
        name: Dotted name, suite first.
        func: The check function.
        tolerance: The default tolerance.
    """

    name: str
    func: Callable[[SuiteSettings, np.random.Generator], Outcome]
    tolerance: float


def _relative(actual: NDArray[np.float64] | float, expected: NDArray[np.float64] | float) -> float:
    diff = float(np.max(np.abs(np.asarray(actual) - np.asarray(expected))))
    return diff / max(1.0, float(np.max(np.abs(np.asarray(expected)))))


def _spread(values: Sequence[float]) -> tuple[float, float, float]:
    """Return mean, sample variance and relative spread."""
    arr = np.asarray(values, dtype=float)
    mean = float(np.mean(arr))
    variance = float(np.var(arr, ddof=1)) if arr.size > 1 else 0.0
    spread = float(np.ptp(arr)) / abs(mean) if mean else float(np.ptp(arr))
    return mean, variance, spread


def _signatures(m: int) -> tuple[Signature, ...]:
    return (Signature.lorentzian(m), Signature.euclidean(m))


# symbols


def check_eps_delta(settings: SuiteSettings, _rng: np.random.Generator) -> Outcome:
    """Contract two Levi-Civita symbols over every leading split k."""
    m = settings.dim
    worst = 0
    compared = 0
    for k in range(m + 1):
        report = alt.verify_eps_delta(m, k)
        worst = max(worst, report.max_deviation)
        compared += report.compared
    return Outcome(float(worst), compared, detail={"splits": list(range(m + 1))})


def check_projector(settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    """Apply the contraction projector to random integer tensors."""
    m = settings.dim
    worst = 0
    compared = 0
    for p in range(1, min(3, m) + 1):
        for _ in range(settings.samples):
            report = alt.verify_contraction_projector(m, p, rng.integers(-3, 4, size=(m,) * p))
            worst = max(worst, report.max_deviation)
            compared += report.compared
    return Outcome(float(worst), compared)


def check_determinant(settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    """Contract ε with a random integer matrix."""
    n = settings.dim
    if not settings.affordable(n**n * math.factorial(n)):
        n = 5
    worst = 0
    compared = 0
    for _ in range(max(1, min(settings.samples, 3))):
        report = alt.verify_determinant_identity(rng.integers(-3, 4, size=(n, n)))
        worst = max(worst, report.max_deviation)
        compared += report.compared
    return Outcome(float(worst), compared, detail={"matrix_size": n})


def check_delta_forms(settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    """Compare both delta evaluations and the swap antisymmetry on random tuples."""
    m = settings.dim
    worst = 0
    draws = 20 * settings.samples
    for _ in range(draws):
        k = int(rng.integers(1, m + 1))
        upper = tuple(int(i) for i in rng.integers(0, m, size=k))
        shuffled = rng.random() < 0.7  # noqa: PLR2004
        source = rng.permutation(upper) if shuffled else rng.integers(0, m, size=k)
        lower = tuple(int(i) for i in source)
        value = alt.gkdelta(upper, lower)
        worst = max(worst, abs(value - alt.gkdelta_determinant(upper, lower)))
        if k >= 2:  # noqa: PLR2004
            swapped = (upper[1], upper[0], *upper[2:])
            worst = max(worst, abs(alt.gkdelta(swapped, lower) + value))
    return Outcome(float(worst), draws)


# forms


def _degree_pairs(n: int) -> list[tuple[int, int]]:
    return [(p, q) for p in range(n + 1) for q in range(n + 1 - p)]


def check_graded_commutativity(settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    """Check a ∧ b = (-1)^{pq} b ∧ a for every degree pair."""
    n = settings.dim
    worst = 0.0
    count = 0
    for p, q in _degree_pairs(n):
        for _ in range(settings.samples):
            a, b = random_form(rng, n, p, 4), random_form(rng, n, q, 4)
            sign = -1.0 if (p * q) % 2 else 1.0
            worst = max(worst, (wedge(a, b) - wedge(b, a) * sign).max_norm())
            count += 1
    return Outcome(worst, count)


def check_associativity(settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    """Check (a ∧ b) ∧ c = a ∧ (b ∧ c)."""
    n = settings.dim
    worst = 0.0
    for _ in range(settings.samples):
        p, q, s = (int(d) for d in rng.integers(0, 3, size=3))
        a, b, c = (random_form(rng, n, d, 4) for d in (p, q, s))
        worst = max(worst, (wedge(wedge(a, b), c) - wedge(a, wedge(b, c))).max_norm())
    return Outcome(worst, settings.samples)


def check_interior(settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    """Check the antiderivation law and v ⌟ v ⌟ a = 0."""
    n = settings.dim
    worst = 0.0
    for p, q in _degree_pairs(n):
        if p == 0 or q == 0:
            continue
        a, b = random_form(rng, n, p, 4), random_form(rng, n, q, 4)
        v = TangentVector(n, dict(enumerate(rng.uniform(-1.0, 1.0, size=n))))
        sign = -1.0 if p % 2 else 1.0
        lhs = interior(v, wedge(a, b))
        rhs = wedge(interior(v, a), b) + wedge(a, interior(v, b)) * sign
        worst = max(worst, (lhs - rhs).max_norm())
        if p >= 2:  # noqa: PLR2004
            worst = max(worst, interior(v, interior(v, a)).max_norm())
    return Outcome(worst, len(_degree_pairs(n)))


def check_pullback(settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    """Check that pulling back commutes with the wedge product."""
    n = settings.dim
    worst = 0.0
    for _ in range(settings.samples):
        lmap = rng.uniform(-1.0, 1.0, size=(n, n))
        p = int(rng.integers(0, n + 1))
        q = int(rng.integers(0, n + 1 - p))
        a, b = random_form(rng, n, p, 4), random_form(rng, n, q, 4)
        lhs = pullback(lmap, wedge(a, b))
        rhs = wedge(pullback(lmap, a), pullback(lmap, b))
        worst = max(worst, (lhs - rhs).max_norm())
    return Outcome(worst, settings.samples)


def check_evaluation(settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    """Check (α¹ ∧ ... ∧ α^k)(v₁, ..., v_k) = det[α^i(v_j)] for 1-forms."""
    n = settings.dim
    worst = 0.0
    for _ in range(settings.samples):
        k = int(rng.integers(1, n + 1))
        covectors = rng.uniform(-1.0, 1.0, size=(k, n))
        vectors = rng.uniform(-1.0, 1.0, size=(k, n))
        product = wedge_all(
            (SparseAltForm(n, 1, {(i,): c for i, c in enumerate(row)}) for row in covectors), n
        )
        expected = float(np.linalg.det(covectors @ vectors.T))
        worst = max(worst, abs(product.evaluate(vectors) - expected))
    return Outcome(worst, settings.samples)


# jet


def _jet_samples(settings: SuiteSettings) -> int:
    if settings.dim < 4:  # noqa: PLR2004
        return settings.samples
    return max(1, min(settings.samples, 3))


def check_canonical_rank(settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    """The m + m² forms θ and ω stay linearly independent."""
    m = settings.dim
    worst = 0
    for _ in range(_jet_samples(settings)):
        forms = jetforms.canonical_forms(random_jet_point(rng, m))
        worst = max(worst, abs(jetforms.canonical_rank(forms) - (m + m * m)))
    return Outcome(float(worst), _jet_samples(settings))


def _random_indices(rng: np.random.Generator, m: int, p: int) -> tuple[int, ...]:
    return tuple(int(i) for i in rng.permutation(m)[:p])


def check_sparling_paths(settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    """The ε-sum and the iterated contraction of σ₀ give the same θ_I."""
    m = settings.dim
    worst = 0.0
    for _ in range(_jet_samples(settings)):
        jp = random_jet_point(rng, m)
        for p in range(m + 1):
            idx = _random_indices(rng, m, p)
            via = jetforms.sparling_via_contraction(jp, idx)
            worst = max(worst, (jetforms.sparling(jp, idx) - via).max_norm())
    return Outcome(worst, _jet_samples(settings))


def check_sparling_product(settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    """θ^{i₁..i_r} ∧ θ_{j₁..j_s} expands through the generalized delta."""
    m = settings.dim
    worst = 0.0
    for _ in range(_jet_samples(settings)):
        coframe = jetforms.canonical_forms(random_jet_point(rng, m)).coframe
        for s in range(1, m + 1):
            for r in range(1, s + 1):
                upper = tuple(int(i) for i in rng.integers(0, m, size=r))
                lower = _random_indices(rng, m, s)
                worst = max(worst, jetforms.sparling_product_residual(coframe, upper, lower))
    return Outcome(worst, _jet_samples(settings))


def check_sparling_contraction(settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    """θ^k ∧ θ_I drops one index, including the σ₀ case θ^k ∧ θ_l = δ^k_l σ₀."""
    m = settings.dim
    worst = 0.0
    for _ in range(_jet_samples(settings)):
        coframe = jetforms.canonical_forms(random_jet_point(rng, m)).coframe
        for p in range(1, m + 1):
            idx = _random_indices(rng, m, p)
            for k in range(m):
                worst = max(worst, jetforms.sparling_contraction_residual(coframe, k, idx))
    return Outcome(worst, _jet_samples(settings))


def check_sparling_differential(settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    """dθ_I expands through torsion and connection."""
    m = settings.dim
    worst = 0.0
    for _ in range(_jet_samples(settings)):
        forms = jetforms.canonical_forms(random_jet_point(rng, m))
        for p in range(m + 1):
            idx = _random_indices(rng, m, p)
            worst = max(worst, jetforms.sparling_differential_residual(forms, idx))
    return Outcome(worst, _jet_samples(settings))


def check_torsion(settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    """The closed-form torsion matches the structure equation and obeys dT + ω∧T = Ω∧θ."""
    m = settings.dim
    closed = 0.0
    structure = 0.0
    for _ in range(_jet_samples(settings)):
        jp = random_jet_point(rng, m)
        forms = jetforms.canonical_forms(jp)
        for a, b in zip(jetforms.torsion_closed_form(jp), forms.torsion, strict=True):
            closed = max(closed, (a - b).max_norm())
        structure = max(structure, jetforms.first_structure_residual(forms))
    return Outcome(
        max(closed, structure),
        _jet_samples(settings),
        detail={"closed_form": closed, "first_structure": structure},
    )


def check_bracket(settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    """Ω = dω + ½[ω ∧, ω] with the graded bracket."""
    m = settings.dim
    worst = 0.0
    for _ in range(_jet_samples(settings)):
        forms = jetforms.canonical_forms(random_jet_point(rng, m))
        omega = gl_form(forms.omega)
        bracket = cast("VectorValuedForm", bilinear_combine("bracket", omega, omega))
        for pos, comp in enumerate(bracket.components):
            i, j = divmod(pos, m)
            rebuilt = forms.domega[i][j] + comp * 0.5
            worst = max(worst, (rebuilt - forms.curvature[i][j]).max_norm())
    return Outcome(worst, _jet_samples(settings))


def check_vertical_lift(settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    """Vertical lifts annihilate θ and ω and pick θ^r out of Ω with the fixed sign."""
    m = settings.dim
    worst = 0.0
    signs = set()
    for _ in range(_jet_samples(settings)):
        report = jetforms.vertical_lift_check(jetforms.canonical_forms(random_jet_point(rng, m)))
        signs.add(report.sign)
        worst = max(
            worst, report.theta_deviation, report.omega_deviation, report.curvature_deviation
        )
    violations = [
        f"data favour sign {sign}, expected {VERTICAL_LIFT_SIGN}"
        for sign in sorted(signs)
        if sign != VERTICAL_LIFT_SIGN
    ]
    return Outcome(
        worst,
        _jet_samples(settings),
        detail={"sign": VERTICAL_LIFT_SIGN, "observed_signs": sorted(signs)},
        violations=violations,
    )


def check_dlambda(settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    """dλ matches its closed expression at torsion-free points."""
    m, r = settings.dim, settings.r
    if r < 1 or 2 * r > m:
        return Outcome(0.0, 0, skipped=f"order {r} is not admissible in dimension {m}")
    worst = 0.0
    for _ in range(_jet_samples(settings)):
        report = jetforms.dlambda_check(jetforms.canonical_forms(random_t0_point(rng, m)), r)
        worst = max(worst, report.deviation / max(1.0, report.lhs.max_norm()))
    return Outcome(worst, _jet_samples(settings))


def check_xi_pairing(settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    """⟨Ξ_r ∧, Ω^r⟩ is one constant multiple of λ across points."""
    m, r = settings.dim, settings.r
    if r < 1 or 2 * r > m:
        return Outcome(0.0, 0, skipped=f"order {r} is not admissible in dimension {m}")
    constants = []
    worst = 0.0
    for _ in range(_jet_samples(settings)):
        report = valg.xi_pairing_check(jetforms.canonical_forms(random_jet_point(rng, m)), r)
        worst = max(worst, report.path_deviation)
        if report.constant is not None:
            constants.append(report.constant)
            worst = max(worst, report.residual / max(1.0, report.lagrangian_norm))
    if not constants:
        return Outcome(worst, _jet_samples(settings), detail={"constant": None})
    mean, variance, spread = _spread(constants)
    return Outcome(
        max(worst, spread),
        _jet_samples(settings),
        detail={"constant": mean, "spread": spread},
        fitted=[FittedConstant("xi_pairing", m, r, mean, variance)],
    )


def check_swap_lemma(settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    """The Ω ∧ θ index swap holds on Bianchi-compatible curvature data."""
    m, r = settings.dim, settings.r
    if r < 1 or 2 * r > m:
        return Outcome(0.0, 0, skipped=f"order {r} is not admissible in dimension {m}")
    worst = 0.0
    premise = 0.0
    for _ in range(_jet_samples(settings)):
        theta, curv, sig = swap_lemma_data(rng, m)
        report = jetforms.omega_swap_check(theta, curv, r, sig)
        premise = max(premise, report.premise_residual)
        worst = max(worst, report.deviation / max(1.0, report.lhs_norm))
    violations = [] if premise < TOL_ALGEBRAIC else [f"premise residual {premise:.3e}"]
    return Outcome(
        worst, _jet_samples(settings), detail={"premise": premise}, violations=violations
    )


# hodge


def check_wedge_pairing(settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    """α ∧ ⋆β = η̂(α, β) ω for random k-vectors in both signatures."""
    m = settings.dim
    worst = 0.0
    count = 0
    for sig in _signatures(m):
        for k in range(m + 1):
            for _ in range(settings.samples):
                alpha, beta = random_form(rng, m, k), random_form(rng, m, k)
                worst = max(worst, valg.wedge_pairing_residual(alpha, beta, sig))
                count += 1
    return Outcome(worst, count)


def check_star_star(settings: SuiteSettings, _rng: np.random.Generator) -> Outcome:
    """⋆⋆ acts as det(η)(-1)^{k(m-k)} on every basis k-vector."""
    m = settings.dim
    worst = 0.0
    count = 0
    for sig in _signatures(m):
        for k in range(m + 1):
            sign = valg.star_star_sign(sig, k)
            for idx in itertools.combinations(range(m), k):
                basis = SparseAltForm(m, k, {idx: 1.0})
                twice = valg.hodge_star(valg.hodge_star(basis, sig), sig)
                worst = max(worst, (twice - basis * sign).max_norm())
                count += 1
    return Outcome(worst, count)


def check_cartan(settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    """The 𝔨 and 𝔭 projectors are complementary idempotents."""
    m = settings.dim
    worst = 0.0
    for sig in _signatures(m):
        for _ in range(settings.samples):
            mat = rng.uniform(-1.0, 1.0, size=(m, m))
            k_part = np.asarray(valg.cartan_project(mat, "k", sig))
            p_part = np.asarray(valg.cartan_project(mat, "p", sig))
            worst = max(
                worst,
                float(np.max(np.abs(k_part + p_part - mat))),
                float(np.max(np.abs(np.asarray(valg.cartan_project(k_part, "p", sig))))),
                float(np.max(np.abs(np.asarray(valg.cartan_project(p_part, "p", sig)) - p_part))),
            )
    return Outcome(worst, 2 * settings.samples)


def check_frame_change(settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    """Exponentiated 𝔨 generators preserve η."""
    m = settings.dim
    worst = 0.0
    for sig in _signatures(m):
        eta = sig.matrix
        for _ in range(settings.samples):
            lam = eta_preserving_frame_change(rng, sig)
            worst = max(worst, float(np.max(np.abs(lam.T @ eta @ lam - eta))))
    return Outcome(worst, 2 * settings.samples)


# lovelock


def check_density_reference(settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    """The optimized density matches the naive loop."""
    m, r = settings.dim, settings.r
    if not settings.affordable(m ** (4 * r)):
        return Outcome(0.0, 0, skipped=f"naive loop of {m ** (4 * r)} terms")
    worst = 0.0
    for _ in range(settings.samples):
        cd = lovelock.curvature(random_metric_sample(rng, m))
        worst = max(
            worst,
            _relative(lovelock.lovelock_density(r, cd), lovelock.lovelock_density_reference(r, cd)),
        )
    return Outcome(worst, settings.samples)


def check_tensor_reference(settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    """The optimized Lovelock tensor matches the naive loop."""
    m, r = settings.dim, max(1, settings.r)
    if not settings.affordable(m ** (4 * r + 2)):
        return Outcome(0.0, 0, skipped=f"naive loop of {m ** (4 * r + 2)} terms")
    worst = 0.0
    for _ in range(settings.samples):
        cd = lovelock.curvature(random_metric_sample(rng, m))
        worst = max(
            worst,
            _relative(lovelock.lovelock_tensor(r, cd), lovelock.lovelock_tensor_reference(r, cd)),
        )
    return Outcome(worst, settings.samples)


def check_tensor_shape(settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    """A is exactly symmetric and exactly zero once 2r + 1 exceeds m."""
    m, r = settings.dim, max(1, settings.r)
    vanishing = (m + 1) // 2
    worst = 0.0
    for _ in range(settings.samples):
        cd = lovelock.curvature(random_metric_sample(rng, m))
        tensor = lovelock.lovelock_tensor(r, cd)
        worst = max(
            worst,
            float(np.max(np.abs(tensor - tensor.T))),
            float(np.max(np.abs(lovelock.lovelock_tensor(vanishing, cd)))),
        )
    return Outcome(worst, settings.samples, detail={"vanishing_order": vanishing})


def check_einstein(settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    """At r = 1, A is one constant multiple of the Einstein tensor."""
    m = settings.dim
    if m < 3:  # noqa: PLR2004
        return Outcome(0.0, 0, skipped="the Einstein tensor vanishes in dimension 2")
    constants = []
    residual = 0.0
    for _ in range(settings.samples):
        cd = lovelock.curvature(random_metric_sample(rng, m))
        tensor = lovelock.lovelock_tensor(1, cd)
        einstein = lovelock.einstein_tensor(cd)
        constant = float(np.sum(tensor * einstein) / np.sum(einstein * einstein))
        constants.append(constant)
        residual = max(residual, _relative(tensor, constant * einstein))
    mean, variance, spread = _spread(constants)
    return Outcome(
        max(residual, spread),
        settings.samples,
        detail={"constant": mean, "spread": spread},
        fitted=[FittedConstant("lovelock_over_einstein", m, 1, mean, variance)],
    )


def _psi_inputs(
    rng: np.random.Generator,
    m: int,
) -> tuple[lovelock.Vielbein, lovelock.CurvatureData]:
    cd = lovelock.curvature(random_metric_sample(rng, m))
    return lovelock.vielbein_from_metric(cd.sample.g, Signature.lorentzian(m)), cd


def check_psi_equivalence(settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    """e_a Ψ^{ab} e_b reproduces the Lovelock tensor up to -det(e)/2r."""
    m, r = settings.dim, settings.r
    if r < 1 or 2 * r > m:
        return Outcome(0.0, 0, skipped=f"order {r} is not admissible in dimension {m}")
    worst = 0.0
    for _ in range(settings.samples):
        vb, cd = _psi_inputs(rng, m)
        contracted = lovelock.frame_contracted_psi(vb, lovelock.psi_form_base(r, vb, cd))
        worst = max(worst, _relative(contracted, lovelock.expected_psi_contraction(r, vb, cd)))
    return Outcome(worst, settings.samples)


def check_psi_alternative(settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    """The θ_{lIJ} expression matches Ψ form by form up to (-1)^{r-1}."""
    m, r = settings.dim, settings.r
    if r < 1 or 2 * r > m:
        return Outcome(0.0, 0, skipped=f"order {r} is not admissible in dimension {m}")
    worst = 0.0
    sign = lovelock.alternative_order_sign(r)
    for _ in range(settings.samples):
        vb, cd = _psi_inputs(rng, m)
        direct = lovelock.psi_form_base(r, vb, cd)
        other = lovelock.psi_form_base_alternative(r, vb, cd)
        for row_a, row_b in zip(direct, other, strict=True):
            for a, b in zip(row_a, row_b, strict=True):
                worst = max(worst, (a - b * sign).max_norm() / max(1.0, b.max_norm()))
    return Outcome(worst, settings.samples, detail={"order_sign": sign})


def check_frame_covariance(settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    """The contracted Ψ does not depend on the choice of orthonormal frame."""
    m, r = settings.dim, settings.r
    if r < 1 or 2 * r > m:
        return Outcome(0.0, 0, skipped=f"order {r} is not admissible in dimension {m}")
    worst = 0.0
    for _ in range(settings.samples):
        vb, cd = _psi_inputs(rng, m)
        moved = vb.transformed(eta_preserving_frame_change(rng, vb.signature))
        before = lovelock.frame_contracted_psi(vb, lovelock.psi_form_base(r, vb, cd))
        after = lovelock.frame_contracted_psi(moved, lovelock.psi_form_base(r, moved, cd))
        worst = max(worst, _relative(after, before))
    return Outcome(worst, settings.samples)


def check_scaling(settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    """Under x → x/s the density scales by s^m and A by s^{-2}."""
    m, r = settings.dim, max(1, settings.r)
    worst = 0.0
    for _ in range(settings.samples):
        sample = random_metric_sample(rng, m)
        s = float(rng.uniform(0.5, 2.0))
        scaled = scaled_sample(sample, s)
        worst = max(
            worst,
            _relative(
                lovelock.lovelock_density(r, scaled), s**m * lovelock.lovelock_density(r, sample)
            ),
            _relative(
                lovelock.lovelock_tensor(r, scaled), lovelock.lovelock_tensor(r, sample) / s**2
            ),
        )
    return Outcome(worst, settings.samples)


def check_divergence(settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    """∇_μ A^{μν} vanishes to second order in the finite-difference step."""
    m, r = settings.dim, max(1, settings.r)
    worst = 0.0
    ratios = []
    violations = []
    for _ in range(max(1, min(settings.samples, 3))):
        source = random_poly_metric(rng, m)
        report = lovelock.divergence_lovelock(r, source, random_metric_point(rng, m))
        worst = max(worst, float(np.max(np.abs(report.residual))))
        if report.ratio is None:
            continue
        ratios.append(report.ratio)
        if not RATIO_WINDOW[0] <= report.ratio <= RATIO_WINDOW[1]:
            violations.append(f"convergence ratio {report.ratio:.3f}")
    return Outcome(
        worst,
        max(1, min(settings.samples, 3)),
        detail={"ratios": ratios},
        violations=violations,
    )


def check_eds(settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    """Levi-Civita data has vanishing torsion, metricity, Bianchi and 𝔭-curvature."""
    m, r = settings.dim, settings.r
    worst = 0.0
    structural = 0.0
    for _ in range(settings.samples):
        vb, cd = _psi_inputs(rng, m)
        report = lovelock.eds_residuals(r, vb, cd)
        res = report.residuals
        structural = max(structural, res["torsion"], res["metricity"])
        worst = max(worst, res["bianchi"], res["curvature_p"])
    violations = [] if structural < TOL_STRUCTURAL else [f"torsion/metricity {structural:.3e}"]
    return Outcome(
        worst, settings.samples, detail={"structural": structural}, violations=violations
    )


def check_schwarzschild(_settings: SuiteSettings, _rng: np.random.Generator) -> Outcome:
    """Schwarzschild is a vacuum solution: A and Ψ vanish at r = 1."""
    cd = lovelock.curvature(Schwarzschild(1.0).sample(SCHWARZSCHILD_POINT))
    vb = lovelock.vielbein_from_metric(cd.sample.g, Signature.lorentzian(4))
    tensor = float(np.max(np.abs(lovelock.lovelock_tensor(1, cd))))
    residuals = lovelock.eds_residuals(1, vb, cd).residuals
    return Outcome(max(tensor, *residuals.values()), 1, detail={"tensor": tensor, **residuals})


def check_catalog(_settings: SuiteSettings, _rng: np.random.Generator) -> Outcome:
    """Closed-form densities on the round sphere and on S² × S²."""
    theta = 1.0
    sphere = lovelock.lovelock_density(1, Sphere(1.0).sample((theta, 0.3)))
    product = lovelock.lovelock_density(
        2, SphereProduct(1.0, 1.0).sample((theta, 0.3, 0.7, 1.1))
    )
    deviation = max(
        _relative(sphere, 4.0 * math.sin(theta)),
        _relative(product, 32.0 * math.sin(theta) * math.sin(0.7)),
    )
    return Outcome(deviation, 2, detail={"sphere": sphere, "sphere_product": product})


SUITES: dict[str, tuple[Check, ...]] = {
    "symbols": (
        Check("symbols.eps_delta", check_eps_delta, 0.0),
        Check("symbols.projector", check_projector, 0.0),
        Check("symbols.determinant", check_determinant, 0.0),
        Check("symbols.delta_forms", check_delta_forms, 0.0),
    ),
    "forms": (
        Check("forms.graded_commutativity", check_graded_commutativity, TOL_ALGEBRAIC),
        Check("forms.associativity", check_associativity, TOL_ALGEBRAIC),
        Check("forms.interior", check_interior, TOL_ALGEBRAIC),
        Check("forms.pullback", check_pullback, TOL_ALGEBRAIC),
        Check("forms.evaluation", check_evaluation, TOL_ALGEBRAIC),
    ),
    "jet": (
        Check("jet.canonical_rank", check_canonical_rank, 0.0),
        Check("jet.sparling_paths", check_sparling_paths, TOL_ALGEBRAIC),
        Check("jet.sparling_product", check_sparling_product, TOL_ALGEBRAIC),
        Check("jet.sparling_contraction", check_sparling_contraction, TOL_ALGEBRAIC),
        Check("jet.sparling_differential", check_sparling_differential, TOL_ALGEBRAIC),
        Check("jet.torsion", check_torsion, TOL_ALGEBRAIC),
        Check("jet.bracket", check_bracket, TOL_ALGEBRAIC),
        Check("jet.vertical_lift", check_vertical_lift, 1e-12),
        Check("jet.dlambda", check_dlambda, TOL_ALGEBRAIC),
        Check("jet.xi_pairing", check_xi_pairing, 1e-9),
        Check("jet.swap_lemma", check_swap_lemma, 1e-9),
    ),
    "hodge": (
        Check("hodge.wedge_pairing", check_wedge_pairing, 1e-12),
        Check("hodge.star_star", check_star_star, 0.0),
        Check("hodge.cartan", check_cartan, 1e-12),
        Check("hodge.frame_change", check_frame_change, TOL_ALGEBRAIC),
    ),
    "lovelock": (
        Check("lovelock.density_reference", check_density_reference, TOL_ALGEBRAIC),
        Check("lovelock.tensor_reference", check_tensor_reference, TOL_ALGEBRAIC),
        Check("lovelock.tensor_shape", check_tensor_shape, 0.0),
        Check("lovelock.einstein", check_einstein, 1e-9),
        Check("lovelock.psi_equivalence", check_psi_equivalence, 1e-9),
        Check("lovelock.psi_alternative", check_psi_alternative, TOL_ALGEBRAIC),
        Check("lovelock.frame_covariance", check_frame_covariance, 1e-9),
        Check("lovelock.scaling", check_scaling, TOL_ALGEBRAIC),
        Check("lovelock.divergence", check_divergence, TOL_DIVERGENCE),
        Check("lovelock.eds", check_eds, TOL_ALGEBRAIC),
        Check("lovelock.schwarzschild", check_schwarzschild, TOL_CURVATURE),
        Check("lovelock.catalog", check_catalog, TOL_ALGEBRAIC),
    ),
}


def run_check(check: Check, settings: SuiteSettings) -> tuple[CheckRecord, list[FittedConstant]]:
    """Run one check with its own seeded generator.

    A library error inside the check fails it rather than the run.

    Args:
        check: The check.
        settings: The suite settings.

    Returns:
        The record and any fitted constants.
    """
    tolerance = check.tolerance if settings.tol is None else settings.tol
    start = time.perf_counter()
    try:
        outcome = check.func(settings, rng_for(settings.seed, check.name))
    except LovelockError as exc:
        logger.warning("Check %s raised %s", check.name, exc)
        outcome = Outcome(math.inf, 0, violations=[str(exc)])
    elapsed = (time.perf_counter() - start) * 1000.0
    if outcome.skipped is not None:
        status = "skipped"
        outcome.detail["reason"] = outcome.skipped
    elif outcome.violations or not outcome.deviation <= tolerance:
        status = "fail"
    else:
        status = "pass"
    if outcome.violations:
        outcome.detail["violations"] = outcome.violations
    record = CheckRecord(
        name=check.name,
        status=status,
        max_deviation=outcome.deviation,
        tolerance=tolerance,
        samples=outcome.samples,
        elapsed_ms=elapsed,
        detail=outcome.detail,
    )
    return record, outcome.fitted


def _run_pair(args: tuple[Check, SuiteSettings]) -> tuple[CheckRecord, list[FittedConstant]]:
    return run_check(*args)


def run_suite(
    name: str,
    settings: SuiteSettings,
    jobs: int = 1,
) -> tuple[list[CheckRecord], list[FittedConstant]]:
    """Run every check of a suite in declared order.

    Args:
        name: The suite name.
        settings: The suite settings.
        jobs: Worker processes; 1 runs serially.

    Returns:
        The records and the fitted constants.
    """
    checks = SUITES[name]
    work = [(check, settings) for check in checks]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_pair, work))
    else:
        results = [_run_pair(item) for item in work]
    records = [record for record, _ in results]
    fitted = [constant for _, constants in results for constant in constants]
    return records, fitted
