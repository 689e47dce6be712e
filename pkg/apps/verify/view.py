"""
    Verify View Module

    Description:
    - This module is responsible for running the property suites.
    - Each suite draws its samples from one seeded generator in a fixed
    order, so the same config always yields the same report apart from
    elapsed_ms.

"""

# Importing Python Packages
import logging
import math
import time
from typing import Callable

# Importing FastAPI Packages

# Importing Project Files
from apps.cocycles.configuration import CocycleKind
from apps.cocycles.view import (
    ball_cocycle_T,
    coboundary_form_residual,
    coboundary_residual,
    cocycle,
    cocycle_residual,
)
from apps.measures.configuration import measures_configuration
from apps.measures.schema import CoefficientFunction, DimObject, DimShift
from apps.measures.view import (
    check_scaling_covariance,
    compose_morphisms,
    compose_shifts,
    functor_morphism,
    functor_object,
    identity_morphism,
    identity_shift,
    mellin_gamma_functor,
)
from apps.observables.configuration import ObservableMethod
from apps.observables.view import (
    ball_volume_V,
    gaussian_observable,
    transport_consistency,
)
from core.exceptions import ConvergenceError
from core.helper import relative_residual
from .configuration import Suite, verify_configuration
from .helper import build_report, evaluate_sample
from .prng import Xorshift64Star
from .schema import SuiteConfig, VerificationReport, WorstCase


verify_logger = logging.getLogger(__name__)


# -----------------------------------------------------------------------------


def _relative(residual: float, reference: float) -> float:
    return abs(residual) / abs(reference)


def _draw_shifted(
    config: SuiteConfig, generator: Xorshift64Star, shifts: int
) -> tuple[float, ...]:
    """
    Draw x log-uniform over x_range, then the shifts uniform over r_range.

    """

    x: float = generator.log_uniform_range(*config.x_range)

    return (x,) + tuple(
        generator.uniform_range(*config.r_range) for _ in range(shifts)
    )


def _cocycle_suite(kind: CocycleKind):
    def run(
        config: SuiteConfig, generator: Xorshift64Star
    ) -> list[WorstCase]:
        outcomes: list[WorstCase] = []

        for _ in range(config.samples):
            x, r, s = _draw_shifted(config, generator, 2)
            outcomes.append(
                evaluate_sample(
                    (x, r, s),
                    lambda: _relative(
                        cocycle_residual(kind, x, r, s),
                        cocycle(kind, x, r + s),
                    ),
                )
            )

        return outcomes

    return run


def _coboundary_suite(
    config: SuiteConfig, generator: Xorshift64Star
) -> list[WorstCase]:
    outcomes: list[WorstCase] = []

    def residual(x: float, r: float) -> float:
        expected: float = (x + 2.0 * r) / x

        return max(
            _relative(coboundary_residual(x, r), expected),
            _relative(coboundary_form_residual(x, r), ball_cocycle_T(x, r)),
        )

    for _ in range(config.samples):
        x, r = _draw_shifted(config, generator, 1)
        outcomes.append(evaluate_sample((x, r), lambda: residual(x, r)))

    return outcomes


def _transport_suite(
    config: SuiteConfig, generator: Xorshift64Star
) -> list[WorstCase]:
    outcomes: list[WorstCase] = []

    for _ in range(config.samples):
        x, r = _draw_shifted(config, generator, 1)
        outcomes.append(
            evaluate_sample(
                (x, r),
                lambda: _relative(
                    transport_consistency(x, r), ball_cocycle_T(x, r)
                ),
            )
        )

    return outcomes


def _normalization_suite(
    config: SuiteConfig, generator: Xorshift64Star
) -> list[WorstCase]:
    outcomes: list[WorstCase] = []
    c: CoefficientFunction = mellin_gamma_functor()

    def residual(x: float) -> float:
        measure = functor_object(c, DimObject(x=x))
        integral: float = gaussian_observable(
            measure, ObservableMethod.QUADRATURE
        ).value

        return relative_residual(
            integral, math.exp((x / 2.0) * measures_configuration.LOG_PI)
        )

    for _ in range(config.samples):
        (x,) = _draw_shifted(config, generator, 0)
        outcomes.append(evaluate_sample((x,), lambda: residual(x)))

    return outcomes


def _scaling_covariance_suite(
    config: SuiteConfig, generator: Xorshift64Star
) -> list[WorstCase]:
    outcomes: list[WorstCase] = []
    c: CoefficientFunction = mellin_gamma_functor()

    def residual(x: float, scale: float) -> float:
        report: VerificationReport = check_scaling_covariance(
            functor_object(c, DimObject(x=x)),
            scale,
            measures_configuration.DEFAULT_PROBE_COUNT,
            config.tol,
        )

        for case in report.worst_cases:
            if case.error is not None:
                raise ConvergenceError(case.error)

        return report.max_relative_residual

    for _ in range(config.samples):
        x, s = _draw_shifted(config, generator, 1)
        scale: float = 1.0 + s

        if generator.uniform() < 0.5:
            scale = 1.0 / scale

        outcomes.append(
            evaluate_sample((x, scale), lambda: residual(x, scale))
        )

    return outcomes


def _random_coefficient(generator: Xorshift64Star) -> CoefficientFunction:
    """
    Smooth positive c(x) = exp(a0 + a1 sin(a2 x) + a3 ln(1 + x)) with random
    parameters.

    """

    offset: float = generator.uniform_range(
        *verify_configuration.COEFFICIENT_OFFSET_RANGE
    )
    amplitude: float = generator.uniform_range(
        *verify_configuration.COEFFICIENT_AMPLITUDE_RANGE
    )
    frequency: float = generator.uniform_range(
        *verify_configuration.COEFFICIENT_FREQUENCY_RANGE
    )
    growth: float = generator.uniform_range(
        *verify_configuration.COEFFICIENT_GROWTH_RANGE
    )

    def log_c(x: float) -> float:
        return (
            offset
            + amplitude * math.sin(frequency * x)
            + growth * math.log1p(x)
        )

    return CoefficientFunction(
        c=lambda x: math.exp(log_c(x)), log_c=log_c, name="random_smooth"
    )


def _functoriality_suite(
    config: SuiteConfig, generator: Xorshift64Star
) -> list[WorstCase]:
    outcomes: list[WorstCase] = []

    def residual(
        c: CoefficientFunction, x: float, r: float, s: float
    ) -> float:
        source = DimObject(x=x)
        direct = functor_morphism(c, DimShift(source=source, r=r + s))
        first = functor_morphism(c, DimShift(source=source, r=r))
        second = functor_morphism(
            c, DimShift(source=DimObject(x=first.target.x), r=s)
        )
        composite = compose_morphisms(first, second)

        return max(
            relative_residual(composite.A, direct.A),
            abs(composite.power - direct.power),
        )

    for _ in range(config.samples):
        c: CoefficientFunction = _random_coefficient(generator)
        x, r, s = _draw_shifted(config, generator, 2)
        outcomes.append(
            evaluate_sample((x, r, s), lambda: residual(c, x, r, s))
        )

    return outcomes


def _category_laws_suite(
    config: SuiteConfig, generator: Xorshift64Star
) -> list[WorstCase]:
    outcomes: list[WorstCase] = []
    c: CoefficientFunction = mellin_gamma_functor()

    def residual(x: float, r: float, s: float, t: float) -> float:
        first = DimShift(source=DimObject(x=x), r=r)
        second = DimShift(source=first.target, r=s)
        third = DimShift(source=second.target, r=t)

        left = compose_shifts(compose_shifts(first, second), third)
        right = compose_shifts(first, compose_shifts(second, third))
        shift_residual: float = max(
            abs(left.r - right.r),
            abs(compose_shifts(identity_shift(first.source), first).r - r),
            abs(compose_shifts(first, identity_shift(first.target)).r - r),
        )

        f, g, h = (
            functor_morphism(c, shift) for shift in (first, second, third)
        )
        left_morphism = compose_morphisms(compose_morphisms(f, g), h)
        right_morphism = compose_morphisms(f, compose_morphisms(g, h))
        morphism_residual: float = max(
            relative_residual(left_morphism.A, right_morphism.A),
            abs(left_morphism.power - right_morphism.power),
            relative_residual(
                compose_morphisms(identity_morphism(f.source), f).A, f.A
            ),
            relative_residual(
                compose_morphisms(f, identity_morphism(f.target)).A, f.A
            ),
        )

        return max(shift_residual, morphism_residual)

    for _ in range(config.samples):
        x, r, s, t = _draw_shifted(config, generator, 3)
        outcomes.append(
            evaluate_sample((x, r, s, t), lambda: residual(x, r, s, t))
        )

    return outcomes


def _golden_volumes_suite(
    config: SuiteConfig, generator: Xorshift64Star
) -> list[WorstCase]:
    return [
        evaluate_sample(
            (float(n),),
            lambda n=n, volume=volume: relative_residual(
                ball_volume_V(float(n)), volume
            ),
        )
        for n, volume in verify_configuration.GOLDEN_VOLUMES.items()
    ]


SUITE_RUNNERS: dict[
    Suite, Callable[[SuiteConfig, Xorshift64Star], list[WorstCase]]
] = {
    Suite.COCYCLE_R: _cocycle_suite(CocycleKind.R),
    Suite.COCYCLE_T: _cocycle_suite(CocycleKind.T),
    Suite.COBOUNDARY: _coboundary_suite,
    Suite.NORMALIZATION: _normalization_suite,
    Suite.SCALING_COVARIANCE: _scaling_covariance_suite,
    Suite.FUNCTORIALITY_GENERIC: _functoriality_suite,
    Suite.CATEGORY_LAWS: _category_laws_suite,
    Suite.GOLDEN_VOLUMES: _golden_volumes_suite,
    Suite.TRANSPORT_CONSISTENCY: _transport_suite,
}


def run_suite(config: SuiteConfig) -> VerificationReport:
    """
    Run Suite

    Description:
    - This function is used to run one suite from its config.
    - Sample errors are captured in the report and fail it; they never
    abort the run.

    Parameter:
    - **config** (SuiteConfig): Suite config. **(Required)**

    Return:
    - **report** (VerificationReport): Suite report.

    """
    verify_logger.debug("Calling run_suite method for %s", config.suite.value)

    started: float = time.perf_counter()
    generator = Xorshift64Star(config.seed)
    outcomes: list[WorstCase] = SUITE_RUNNERS[config.suite](config, generator)

    return build_report(
        config.suite.value, config.seed, config.tol, outcomes, started
    )


def run_all(
    seed: int = verify_configuration.DEFAULT_SEED,
) -> list[VerificationReport]:
    """
    Run All

    Description:
    - This function is used to run every suite with its default config.

    Parameter:
    - **seed** (INT): Unsigned 64-bit seed. **(Optional)**

    Return:
    - **reports** (LIST): One report per suite, in suite order.

    """
    verify_logger.debug("Calling run_all method")

    reports: list[VerificationReport] = [
        run_suite(SuiteConfig.default(suite, seed)) for suite in Suite
    ]
    verify_logger.info(
        "%d of %d suites passed",
        sum(report.passed for report in reports),
        len(reports),
    )

    return reports


class VerifyView:
    """
    Verify View Class

    Description:
    - This class is responsible for the verification suite views.

    """

    run_suite = staticmethod(run_suite)
    run_all = staticmethod(run_all)


verify_view = VerifyView()
