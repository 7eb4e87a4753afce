"""Seeded random draws shared by the verification suites and the tests."""

from __future__ import annotations

import itertools
import logging
import zlib

from typing import TYPE_CHECKING

import numpy as np
import scipy.linalg

from lovelock_forms.constants import JET_SPREAD, MAX_CONDITION, MAX_REDRAWS
from lovelock_forms.exceptions import ConstructionError
from lovelock_forms.jetforms import JetPoint, make_jet_point, project_to_T0
from lovelock_forms.lovelock import curvature, vielbein_from_metric
from lovelock_forms.metrics import MetricSample, RandomPolynomial
from lovelock_forms.types import Signature
from lovelock_forms.valg import cartan_project
from lovelock_forms.xalg import SparseAltForm, one_form, sum_forms, wedge


if TYPE_CHECKING:
    from numpy.typing import NDArray


logger = logging.getLogger(__name__)

# random metric points stay inside the box where RandomPolynomial keeps its signature
POINT_RADIUS = 0.5


def rng_for(seed: int, name: str) -> np.random.Generator:
    """Return a generator keyed by the run seed and a check name.

    Args:
        seed: The run seed.
        name: The check name.

    Returns:
        An independent generator, stable across runs and worker processes.
    """
    return np.random.default_rng([seed, zlib.crc32(name.encode())])


def random_jet_point(rng: np.random.Generator, m: int) -> JetPoint:
    """Draw a jet point with a well-conditioned frame.

    Args:
        rng: The generator.
        m: The dimension.

    Returns:
        The jet point.

    Raises:
        ConstructionError: When no draw meets the condition bound.
    """
    for attempt in range(MAX_REDRAWS):
        x = rng.uniform(-1.0, 1.0, size=m)
        e = np.eye(m) + JET_SPREAD * rng.uniform(-1.0, 1.0, size=(m, m))
        ejet = rng.uniform(-1.0, 1.0, size=(m, m, m))
        if np.linalg.cond(e) <= MAX_CONDITION:
            return make_jet_point(x, e, ejet)
        logger.debug("Redrawing jet point %d, frame condition too large", attempt)
    msg = f"No frame with condition number below {MAX_CONDITION} after {MAX_REDRAWS} draws."
    raise ConstructionError(msg)


def random_t0_point(rng: np.random.Generator, m: int) -> JetPoint:
    """Draw a jet point on the torsion-zero submanifold.

    Args:
        rng: The generator.
        m: The dimension.

    Returns:
        The projected jet point.
    """
    return project_to_T0(random_jet_point(rng, m))


def random_poly_metric(
    rng: np.random.Generator,
    m: int,
    *,
    lorentzian: bool = True,
) -> RandomPolynomial:
    """Draw a random polynomial metric source.

    Args:
        rng: The generator.
        m: The dimension.
        lorentzian: Perturb the Lorentzian rather than the Euclidean η.

    Returns:
        The metric source.
    """
    return RandomPolynomial(m, int(rng.integers(2**31)), 0.1, lorentzian=lorentzian)


def random_metric_point(rng: np.random.Generator, m: int) -> NDArray[np.float64]:
    """Draw a point inside the box where random polynomial metrics are valid.

    Args:
        rng: The generator.
        m: The dimension.

    Returns:
        The point.
    """
    return rng.uniform(-POINT_RADIUS, POINT_RADIUS, size=m)


def random_metric_sample(
    rng: np.random.Generator,
    m: int,
    *,
    lorentzian: bool = True,
) -> MetricSample:
    """Draw a random polynomial metric and evaluate it at a random point.

    Args:
        rng: The generator.
        m: The dimension.
        lorentzian: Use a Lorentzian background.

    Returns:
        The sample.
    """
    source = random_poly_metric(rng, m, lorentzian=lorentzian)
    return source.sample(random_metric_point(rng, m))


def eta_preserving_frame_change(rng: np.random.Generator, sig: Signature) -> NDArray[np.float64]:
    """Return Λ = exp(π_𝔨(X)) for a random X, so that Λᵀ η Λ = η.

    Args:
        rng: The generator.
        sig: The signature.

    Returns:
        The frame change.
    """
    generator = rng.uniform(-0.5, 0.5, size=(sig.m, sig.m))
    return scipy.linalg.expm(np.asarray(cartan_project(generator, "k", sig)))


def swap_lemma_data(
    rng: np.random.Generator,
    m: int,
    extra: int = 2,
    *,
    lorentzian: bool = True,
) -> tuple[tuple[SparseAltForm, ...], tuple[tuple[SparseAltForm, ...], ...], Signature]:
    """Build coframe and curvature data with Ω^q_l ∧ θ^l = 0 and Ω^l_l = 0.

    The space has m + extra coordinates y, θ^a = A^a_i dy^i for a random A and
    Ω^a_b = ½ R^a_{bcd} θ^c ∧ θ^d + θ^c ∧ γ^a_{bc}, where R is the frame Riemann
    tensor of a random metric and the 1-forms γ^a_{bc} are symmetric in (b, c)
    with vanishing trace Σ_a γ^a_{ac}.

    Args:
        rng: The generator.
        m: The frame dimension.
        extra: Additional coordinates beyond m.
        lorentzian: Use a Lorentzian background metric.

    Returns:
        θ, the mixed curvature Ω^a_b and η.
    """
    source = random_poly_metric(rng, m, lorentzian=lorentzian)
    sig = source.signature
    cd = curvature(source.sample(random_metric_point(rng, m)))
    vb = vielbein_from_metric(cd.sample.g, sig)
    frame = np.einsum(
        "as,srmn,rb,mc,nd->abcd", vb.e, cd.riemann, vb.e_inv, vb.e_inv, vb.e_inv
    )

    n = m + extra
    amat = rng.uniform(-1.0, 1.0, size=(m, n))
    theta = tuple(one_form(dict(enumerate(amat[a])), n) for a in range(m))

    raw = rng.uniform(-1.0, 1.0, size=(m, m, m, n))
    raw = 0.5 * (raw + raw.transpose(0, 2, 1, 3))
    trace = np.einsum("aaci->ci", raw)
    delta = np.eye(m)
    gamma = raw - (
        np.einsum("ab,ci->abci", delta, trace) + np.einsum("ac,bi->abci", delta, trace)
    ) / (m + 1)

    pairs = [(c, d) for c in range(m) for d in range(c + 1, m)]
    curv = tuple(
        tuple(
            sum_forms(
                [wedge(theta[c], theta[d]) * frame[a, b, c, d] for c, d in pairs]
                + [
                    wedge(theta[c], one_form(dict(enumerate(gamma[a, b, c])), n))
                    for c in range(m)
                ],
                n,
                2,
            )
            for b in range(m)
        )
        for a in range(m)
    )
    return theta, curv, sig


def random_form(
    rng: np.random.Generator,
    n: int,
    k: int,
    terms: int | None = None,
) -> SparseAltForm:
    """Draw a k-form on ℝ^n with uniform coefficients on a random set of basis terms.

    Args:
        rng: The generator.
        n: The space dimension.
        k: The degree.
        terms: How many basis terms to fill, all of them by default.

    Returns:
        The form.
    """
    basis = list(itertools.combinations(range(n), k))
    count = len(basis) if terms is None else min(terms, len(basis))
    chosen = rng.choice(len(basis), size=count, replace=False) if basis else []
    return SparseAltForm(n, k, {basis[pos]: rng.uniform(-1.0, 1.0) for pos in chosen})
