"""
    Verify Tests

    Description:
    - Checks the seeded generator, report aggregation and the property
    suites on small sample counts.

"""

# Importing Python Packages
import math
import time
import pytest
from pydantic import ValidationError

# Importing FastAPI Packages

# Importing Project Files
from apps.verify.configuration import Suite
from apps.verify.helper import build_report, evaluate_sample
from apps.verify.prng import Xorshift64Star, splitmix64
from apps.verify.schema import SuiteConfig
from apps.verify.view import run_all, run_suite, verify_view
from core.exceptions import DomainError, GammaOverflowError


# -----------------------------------------------------------------------------


def without_elapsed(record: dict) -> dict:
    return {key: value for key, value in record.items() if key != "elapsed_ms"}


def test_splitmix64_reference_value():
    assert splitmix64(0) == 0xE220A8397B1DCDAF


def test_generator_is_deterministic():
    first = Xorshift64Star(42)
    second = Xorshift64Star(42)

    assert [first.next_u64() for _ in range(10)] == [
        second.next_u64() for _ in range(10)
    ]
    assert Xorshift64Star(1).next_u64() != Xorshift64Star(2).next_u64()


def test_generator_ranges():
    generator = Xorshift64Star(7)

    for _ in range(1000):
        assert 0.0 <= generator.uniform() < 1.0
        assert 0.05 <= generator.log_uniform_range(0.05, 50.0) < 50.0
        assert 2.0 <= generator.uniform_range(2.0, 3.0) < 3.0

    assert generator.log_uniform_range(1.5, 1.5) == 1.5


@pytest.mark.parametrize("seed", [-1, 2**64, 1.5, True])
def test_generator_rejects_bad_seed(seed):
    with pytest.raises(DomainError):
        Xorshift64Star(seed)


def test_evaluate_sample_captures_errors():
    def overflow() -> float:
        raise GammaOverflowError("too large")

    errored = evaluate_sample((1.0, 2.0), overflow)
    non_finite = evaluate_sample((3.0,), lambda: math.nan)
    fine = evaluate_sample((4.0,), lambda: -2e-12)

    assert errored.residual is None
    assert errored.error.startswith("GammaOverflowError")
    assert non_finite.residual is None and non_finite.error
    assert fine.residual == 2e-12


def test_build_report_orders_worst_cases():
    outcomes = [
        evaluate_sample((float(index),), lambda index=index: index * 1e-13)
        for index in range(8)
    ]
    report = build_report("custom", 3, 1e-12, outcomes, time.perf_counter())

    assert report.samples == 8
    assert report.max_relative_residual == pytest.approx(7e-13)
    assert [case.inputs[0] for case in report.worst_cases] == [
        7.0,
        6.0,
        5.0,
        4.0,
        3.0,
    ]
    assert report.passed


def test_build_report_fails_on_error():
    outcomes = [
        evaluate_sample((1.0,), lambda: 0.0),
        evaluate_sample((2.0,), lambda: math.inf),
    ]
    report = build_report("custom", 0, 1.0, outcomes, time.perf_counter())

    assert not report.passed
    assert report.worst_cases[0].inputs == (2.0,)
    assert "error" in report.to_record()["worst_cases"][0]
    assert "error" not in report.to_record()["worst_cases"][1]


def test_suite_config_defaults_and_overrides():
    config = SuiteConfig.default(Suite.COCYCLE_R)

    assert (config.samples, config.tol, config.seed) == (10_000, 1e-10, 0)
    assert config.x_range == (0.05, 50.0)

    overridden = SuiteConfig.default(
        Suite.COCYCLE_R, 9, samples=10, tol=None
    )
    assert (overridden.samples, overridden.tol, overridden.seed) == (
        10,
        1e-10,
        9,
    )


@pytest.mark.parametrize(
    "overrides",
    [
        {"samples": 0},
        {"tol": 0.0},
        {"x_range": (0.0, 1.0)},
        {"x_range": (2.0, 1.0)},
        {"r_range": (-1.0, 1.0)},
    ],
)
def test_suite_config_rejects_invalid_fields(overrides):
    with pytest.raises(ValidationError):
        SuiteConfig.default(Suite.COBOUNDARY, **overrides)


def test_suite_config_rejects_bad_seed():
    with pytest.raises(ValidationError):
        SuiteConfig.default(Suite.COBOUNDARY, 2**64)


@pytest.mark.parametrize(
    "suite, samples",
    [
        (Suite.COCYCLE_R, 300),
        (Suite.COCYCLE_T, 300),
        (Suite.COBOUNDARY, 300),
        (Suite.TRANSPORT_CONSISTENCY, 300),
        (Suite.CATEGORY_LAWS, 100),
        (Suite.FUNCTORIALITY_GENERIC, 20),
        (Suite.NORMALIZATION, 5),
        (Suite.SCALING_COVARIANCE, 2),
    ],
)
def test_suites_pass(suite, samples):
    report = run_suite(SuiteConfig.default(suite, samples=samples))

    assert report.passed, report.worst_cases
    assert report.suite == suite.value
    assert report.samples == samples
    assert len(report.worst_cases) == min(samples, 5)


def test_golden_volumes_suite():
    report = run_suite(SuiteConfig.default(Suite.GOLDEN_VOLUMES))

    assert report.passed
    assert report.samples == 5
    assert report.max_relative_residual <= 1e-12


def test_runs_are_reproducible():
    config = SuiteConfig.default(Suite.COBOUNDARY, 123, samples=50)

    assert without_elapsed(run_suite(config).to_record()) == without_elapsed(
        run_suite(config).to_record()
    )


def test_seed_changes_samples():
    first = run_suite(SuiteConfig.default(Suite.COCYCLE_T, 1, samples=20))
    second = run_suite(SuiteConfig.default(Suite.COCYCLE_T, 2, samples=20))

    assert first.worst_cases[0].inputs != second.worst_cases[0].inputs


def test_tight_tolerance_fails_suite():
    report = run_suite(
        SuiteConfig.default(Suite.COCYCLE_R, samples=200, tol=1e-300)
    )

    assert not report.passed
    assert report.max_relative_residual > 1e-300


def test_report_record_field_order():
    record = run_suite(SuiteConfig.default(Suite.GOLDEN_VOLUMES)).to_record()

    assert list(record) == [
        "suite",
        "samples",
        "seed",
        "tol",
        "max_relative_residual",
        "worst_cases",
        "passed",
        "elapsed_ms",
    ]
    assert list(record["worst_cases"][0]) == ["inputs", "residual"]


@pytest.mark.parametrize("seed", [0, 1, 2, 3])
def test_scaling_covariance_default_samples_pass(seed):
    report = run_suite(SuiteConfig.default(Suite.SCALING_COVARIANCE, seed))

    assert report.samples == 20
    assert report.passed, report.worst_cases


@pytest.mark.slow
def test_run_all():
    reports = run_all()

    assert [report.suite for report in reports] == [
        suite.value for suite in Suite
    ]
    assert all(report.passed for report in reports)


def test_verify_view_delegates():
    config = SuiteConfig.default(Suite.GOLDEN_VOLUMES)

    assert without_elapsed(
        verify_view.run_suite(config).to_record()
    ) == without_elapsed(run_suite(config).to_record())
