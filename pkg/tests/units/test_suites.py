"""Tests for the suite runner and the random sampling helpers."""

from __future__ import annotations

import math

import numpy as np
import pytest

from lovelock_forms.constants import SUITES as SUITE_NAMES
from lovelock_forms.exceptions import DomainError
from lovelock_forms.jetforms import torsion_zero_residual
from lovelock_forms.sampling import random_form, random_t0_point, rng_for
from lovelock_forms.suites import (
    SUITES,
    Check,
    Outcome,
    SuiteSettings,
    run_check,
    run_suite,
)
from lovelock_forms.types import FittedConstant


SETTINGS = SuiteSettings(dim=3, r=1, seed=5, samples=2)


def _passing(_settings: SuiteSettings, rng: np.random.Generator) -> Outcome:
    return Outcome(float(rng.uniform(0.0, 1e-14)), 3, detail={"note": "ok"})


def _drifting(_settings: SuiteSettings, _rng: np.random.Generator) -> Outcome:
    return Outcome(1e-3, 1)


def _raising(_settings: SuiteSettings, _rng: np.random.Generator) -> Outcome:
    msg = "index outside the space"
    raise DomainError(msg)


def _skipping(_settings: SuiteSettings, _rng: np.random.Generator) -> Outcome:
    return Outcome(0.0, 0, skipped="not admissible")


def _violating(_settings: SuiteSettings, _rng: np.random.Generator) -> Outcome:
    return Outcome(0.0, 1, violations=["ratio 2.0"])


def _fitting(_settings: SuiteSettings, _rng: np.random.Generator) -> Outcome:
    return Outcome(0.0, 2, fitted=[FittedConstant("c", 3, 1, -8.0, 0.0)])


def test_suite_names_match_constants() -> None:
    """Every declared suite has checks prefixed with its name."""
    assert tuple(SUITES) == SUITE_NAMES
    for name, checks in SUITES.items():
        assert checks
        assert all(check.name.startswith(f"{name}.") for check in checks)


def test_rng_for_is_deterministic() -> None:
    """Generators depend on the seed and the check name only."""
    a = rng_for(42, "jet.torsion").uniform(size=4)
    b = rng_for(42, "jet.torsion").uniform(size=4)
    np.testing.assert_array_equal(a, b)
    assert not np.array_equal(a, rng_for(42, "jet.bracket").uniform(size=4))
    assert not np.array_equal(a, rng_for(43, "jet.torsion").uniform(size=4))


def test_random_t0_point_is_torsion_free(rng: np.random.Generator) -> None:
    """Sampled torsion-free points satisfy the torsion equation.

    Args:
        rng: Seeded generator.
    """
    point = random_t0_point(rng, 3)
    assert np.max(np.abs(torsion_zero_residual(point))) < 1e-12


def test_random_form_terms(rng: np.random.Generator) -> None:
    """The requested number of basis terms is filled.

    Args:
        rng: Seeded generator.
    """
    assert len(random_form(rng, 5, 2, 3).terms) == 3
    assert len(random_form(rng, 4, 2).terms) == 6
    assert random_form(rng, 3, 4).is_zero()


@pytest.mark.parametrize(
    ("func", "status"),
    (
        (_passing, "pass"),
        (_drifting, "fail"),
        (_raising, "fail"),
        (_skipping, "skipped"),
        (_violating, "fail"),
    ),
    ids=("pass", "deviation", "error", "skipped", "violation"),
)
def test_run_check_status(func: object, status: str) -> None:
    """The status follows the deviation, violations, errors and skips.

    Args:
        func: The check function.
        status: The expected status.
    """
    record, _ = run_check(Check("unit.sample", func, 1e-12), SETTINGS)  # type: ignore[arg-type]
    assert record.status == status
    assert record.name == "unit.sample"
    assert record.elapsed_ms >= 0


def test_run_check_details() -> None:
    """Errors surface as violations and skips keep their reason."""
    record, _ = run_check(Check("unit.error", _raising, 1.0), SETTINGS)
    assert math.isinf(record.max_deviation)
    assert record.detail["violations"] == ["index outside the space"]
    skipped, _ = run_check(Check("unit.skip", _skipping, 1.0), SETTINGS)
    assert skipped.detail["reason"] == "not admissible"
    _, fitted = run_check(Check("unit.fit", _fitting, 1.0), SETTINGS)
    assert fitted[0].value == -8.0


def test_tolerance_override() -> None:
    """A run-wide tolerance replaces the check's own."""
    loose = SuiteSettings(dim=3, r=1, seed=5, samples=2, tol=1e-2)
    record, _ = run_check(Check("unit.drift", _drifting, 1e-12), loose)
    assert record.status == "pass"
    assert record.tolerance == 1e-2


def test_run_check_reproducible() -> None:
    """The same seed reproduces the same deviation."""
    first, _ = run_check(Check("unit.sample", _passing, 1.0), SETTINGS)
    second, _ = run_check(Check("unit.sample", _passing, 1.0), SETTINGS)
    assert first.max_deviation == second.max_deviation


def test_affordable() -> None:
    """The loop budget is lifted by the heavy flag."""
    assert SETTINGS.affordable(10)
    assert not SETTINGS.affordable(10**9)
    assert SuiteSettings(dim=3, r=1, seed=0, samples=1, heavy=True).affordable(10**9)


def test_run_symbols_suite() -> None:
    """The symbols suite passes exactly and keeps its declared order."""
    records, fitted = run_suite("symbols", SETTINGS)
    assert [record.name for record in records] == [check.name for check in SUITES["symbols"]]
    assert all(record.status == "pass" for record in records)
    assert all(record.max_deviation == 0.0 for record in records)
    assert fitted == []


def test_eps_delta_checks_every_split_in_five_dimensions() -> None:
    """No split is left out at the largest acceptance dimension."""
    check = next(check for check in SUITES["symbols"] if check.name == "symbols.eps_delta")
    record, _ = run_check(check, SuiteSettings(dim=5, r=1, seed=0, samples=1))
    assert record.status == "pass"
    assert record.max_deviation == 0.0
    assert record.detail == {"splits": [0, 1, 2, 3, 4, 5]}
    assert record.samples == sum(5 ** (2 * (5 - k)) for k in range(6))


def test_vertical_lift_sign_is_fixed(monkeypatch: pytest.MonkeyPatch) -> None:
    """The lift check fails when the data disagree with the expected sign.

    Args:
        monkeypatch: Pytest fixture.
    """
    check = next(check for check in SUITES["jet"] if check.name == "jet.vertical_lift")
    settings = SuiteSettings(dim=2, r=1, seed=0, samples=1)
    record, _ = run_check(check, settings)
    assert record.status == "pass"
    assert record.detail["sign"] == -1

    monkeypatch.setattr("lovelock_forms.jetforms.VERTICAL_LIFT_SIGN", 1)
    monkeypatch.setattr("lovelock_forms.suites.VERTICAL_LIFT_SIGN", 1)
    record, _ = run_check(check, settings)
    assert record.status == "fail"
    assert record.detail["violations"] == ["data favour sign -1, expected 1"]
    assert record.max_deviation > 1e-3


def test_run_hodge_suite_in_parallel() -> None:
    """Worker processes give the same records as a serial run."""
    settings = SuiteSettings(dim=3, r=1, seed=1, samples=2)
    serial, _ = run_suite("hodge", settings)
    parallel, _ = run_suite("hodge", settings, jobs=2)
    assert [r.status for r in serial] == [r.status for r in parallel]
    assert [r.max_deviation for r in serial] == [r.max_deviation for r in parallel]


@pytest.mark.slow
def test_run_lovelock_suite() -> None:
    """The lovelock suite passes in dimension 4 and fits the Einstein constant."""
    records, fitted = run_suite("lovelock", SuiteSettings(dim=4, r=1, seed=0, samples=2))
    failing = [record.name for record in records if record.status == "fail"]
    assert failing == []
    constants = {constant.label: constant.value for constant in fitted}
    assert constants["lovelock_over_einstein"] == pytest.approx(-8.0)
