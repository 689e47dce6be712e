"""
    Measures View Module

    Description:
    - This module is responsible for composing shifts and density
    morphisms, building functors from coefficient functions, Gaussian
    normalization and the scaling covariance check.

"""

# Importing Python Packages
import logging
import math
import sys
import time
from typing import Callable
import numpy as np

# Importing FastAPI Packages

# Importing Project Files
from apps.quadrature.configuration import quadrature_configuration
from apps.quadrature.view import (
    converged_value,
    integrate_half_line,
    integrate_interval,
)
from apps.quadrature.schema import Integrand, QuadratureResult
from apps.specfun.view import log_gamma
from apps.verify.configuration import Suite
from apps.verify.helper import build_report, evaluate_sample
from apps.verify.schema import VerificationReport, WorstCase
from core.exceptions import CoefficientError, ComposabilityError, DomainError
from core.helper import exponentiate, relative_residual
from .configuration import measures_configuration
from .response_message import measures_response_message
from .schema import (
    BumpProbe,
    CoefficientFunction,
    DensityMorphism,
    DimObject,
    DimShift,
    HomogeneousRadialMeasure,
)


measures_logger = logging.getLogger(__name__)


# -----------------------------------------------------------------------------


def _close(left: float, right: float, tolerance: float) -> bool:
    return abs(left - right) <= tolerance * max(abs(left), abs(right))


def _close_log(left: float, right: float, tolerance: float) -> bool:
    return abs(left - right) <= tolerance * max(1.0, abs(left), abs(right))


def compose_shifts(first: DimShift, second: DimShift) -> DimShift:
    """
    Compose Shifts

    Description:
    - This function is used to compose x -> x + 2r with x + 2r -> x + 2r + 2s.

    Parameter:
    - **first** (DimShift): Shift applied first. **(Required)**
    - **second** (DimShift): Shift applied second, starting where first
    ends. **(Required)**

    Return:
    - **shift** (DimShift): Shift by r + s from first.source.

    """
    measures_logger.debug("Calling compose_shifts method")

    expected: float = first.source.x + 2.0 * first.r

    if abs(second.source.x - expected) > (
        measures_configuration.SHIFT_TOLERANCE
    ):
        raise ComposabilityError(
            f"{measures_response_message.SHIFTS_NOT_COMPOSABLE}"
            f"second starts at {second.source.x!r}, first ends at "
            f"{expected!r}"
        )

    return DimShift(source=first.source, r=first.r + second.r)


def identity_shift(x: DimObject) -> DimShift:
    return DimShift(source=x, r=0.0)


def functor_object(
    c: CoefficientFunction, x: DimObject
) -> HomogeneousRadialMeasure:
    """
    Functor Object

    Description:
    - This function is used to map a dimension to the measure
    c(x) * u^(x/2 - 1) du.
    - When c has a log-scale evaluation the measure is built from ln c(x),
    so it stays valid where c(x) underflows.

    Parameter:
    - **c** (CoefficientFunction): Coefficient function. **(Required)**
    - **x** (DimObject): Dimension. **(Required)**

    Return:
    - **measure** (HomogeneousRadialMeasure): Measure at x.

    """
    measures_logger.debug("Calling functor_object method")

    if c.log_c is None:
        return HomogeneousRadialMeasure(x=x.x, coeff=c(x.x))

    log_coeff: float = c.log(x.x)

    if log_coeff >= measures_configuration.LOG_FLOAT_MAX:
        raise CoefficientError(
            f"{measures_response_message.INVALID_COEFFICIENT}, "
            f"ln {c.name}({x.x!r}) = {log_coeff!r}"
        )

    return HomogeneousRadialMeasure(x=x.x, log_coeff=log_coeff)


def functor_morphism(
    c: CoefficientFunction, shift: DimShift
) -> DensityMorphism:
    """
    Functor Morphism

    Description:
    - This function is used to map a shift x -> x + 2r to the density
    A * u^r with A = c(x + 2r) / c(x).
    - Past the log-scale threshold, or when either coefficient is not a
    normal float, A is computed as exp(ln c(x + 2r) - ln c(x)).

    Parameter:
    - **c** (CoefficientFunction): Coefficient function. **(Required)**
    - **shift** (DimShift): Shift. **(Required)**

    Return:
    - **morphism** (DensityMorphism): Density morphism.

    """
    measures_logger.debug("Calling functor_morphism method")

    source: HomogeneousRadialMeasure = functor_object(c, shift.source)
    target: HomogeneousRadialMeasure = functor_object(c, shift.target)

    if shift.r == 0.0:
        coefficient: float = 1.0

    elif (
        source.is_log_scale
        or target.is_log_scale
        or shift.target.x > measures_configuration.LOG_SCALE_THRESHOLD
    ):
        coefficient = exponentiate(
            target.log_coeff - source.log_coeff,
            measures_response_message.MORPHISM_COEFFICIENT,
        )

    else:
        coefficient = target.coeff / source.coeff

    return DensityMorphism(
        source=source, target=target, A=coefficient, power=shift.r
    )


def identity_morphism(m: HomogeneousRadialMeasure) -> DensityMorphism:
    return DensityMorphism(source=m, target=m, A=1.0, power=0.0)


def compose_morphisms(
    f: DensityMorphism, g: DensityMorphism
) -> DensityMorphism:
    """
    Compose Morphisms

    Description:
    - This function is used to compose densities by pointwise
    multiplication: (g o f)(u) = f.A * g.A * u^(f.power + g.power).

    Parameter:
    - **f** (DensityMorphism): Morphism applied first. **(Required)**
    - **g** (DensityMorphism): Morphism applied second; g.source must equal
    f.target. **(Required)**

    Return:
    - **morphism** (DensityMorphism): Composite from f.source to g.target.

    """
    measures_logger.debug("Calling compose_morphisms method")

    tolerance: float = measures_configuration.MORPHISM_RELATIVE_TOLERANCE

    if not (
        _close(g.source.x, f.target.x, tolerance)
        and _close_log(g.source.log_coeff, f.target.log_coeff, tolerance)
    ):
        raise ComposabilityError(
            f"{measures_response_message.MORPHISMS_NOT_COMPOSABLE}"
            f"g.source = (x={g.source.x!r}, "
            f"log_coeff={g.source.log_coeff!r}), "
            f"f.target = (x={f.target.x!r}, "
            f"log_coeff={f.target.log_coeff!r})"
        )

    coefficient: float = f.A * g.A

    if not sys.float_info.min <= coefficient < math.inf:
        coefficient = exponentiate(
            math.log(f.A) + math.log(g.A),
            measures_response_message.MORPHISM_COEFFICIENT,
        )

    return DensityMorphism(
        source=f.source,
        target=g.target,
        A=coefficient,
        power=f.power + g.power,
    )


def _mellin_gamma_log(x: float) -> float:
    return (x / 2.0) * measures_configuration.LOG_PI - log_gamma(x / 2.0)


def _mellin_gamma(x: float) -> float:
    return math.exp(_mellin_gamma_log(x))


def mellin_gamma_functor() -> CoefficientFunction:
    """
    Mellin Gamma Functor

    Description:
    - This function is used to return the Gaussian-normalized coefficient
    function x -> pi^(x/2) / Gamma(x/2).

    Return:
    - **c** (CoefficientFunction): Mellin-Gamma coefficient function.

    """

    return CoefficientFunction(
        c=_mellin_gamma,
        log_c=_mellin_gamma_log,
        name=measures_configuration.MELLIN_GAMMA_NAME,
    )


def _log_normalization_factor(c: CoefficientFunction, x: float) -> float:
    return _mellin_gamma_log(x) - c.log(x)


def gaussian_normalize(
    c_unnormalized: CoefficientFunction, x: DimObject
) -> float:
    """
    Gaussian Normalize

    Description:
    - This function is used to compute the factor
    pi^(x/2) / (c(x) * Gamma(x/2)) that makes the integral of
    exp(-u) against the measure equal pi^(x/2).

    Parameter:
    - **c_unnormalized** (CoefficientFunction): Any positive coefficient
    function. **(Required)**
    - **x** (DimObject): Dimension. **(Required)**

    Return:
    - **factor** (FLOAT): Factor to multiply c_unnormalized(x) by.

    """
    measures_logger.debug("Calling gaussian_normalize method")

    return math.exp(_log_normalization_factor(c_unnormalized, x.x))


def normalize_coefficient_function(
    c: CoefficientFunction,
) -> CoefficientFunction:
    """
    Normalize Coefficient Function

    Description:
    - This function is used to rescale c pointwise by its Gaussian
    normalization factor.
    - The result agrees with mellin_gamma_functor() for every positive c.

    Parameter:
    - **c** (CoefficientFunction): Positive coefficient function.
    **(Required)**

    Return:
    - **c** (CoefficientFunction): Gaussian-normalized coefficient function.

    """

    def log_normalized(x: float) -> float:
        return c.log(x) + _log_normalization_factor(c, x)

    return CoefficientFunction(
        c=lambda x: math.exp(log_normalized(x)),
        log_c=log_normalized,
        name=f"{c.name}_gaussian_normalized",
    )


def probe_normalize(
    c_unnormalized: CoefficientFunction,
    x: DimObject,
    probe: Callable[[float], float],
    target_value: float,
    probe_order: float = 0.0,
) -> float:
    """
    Probe Normalize

    Description:
    - This function is used to normalize with an arbitrary positive probe
    psi: the factor N / (c(x) * integral of psi(u) u^(x/2 - 1) du).
    - The integral is computed by quadrature over (0, inf); psi must decay
    at infinity.

    Parameter:
    - **c_unnormalized** (CoefficientFunction): Coefficient function.
    **(Required)**
    - **x** (DimObject): Dimension. **(Required)**
    - **probe** (CALLABLE): Positive probe psi. **(Required)**
    - **target_value** (FLOAT): Prescribed value N > 0. **(Required)**
    - **probe_order** (FLOAT): Power of u psi behaves like at zero.
    **(Optional)**

    Return:
    - **factor** (FLOAT): Factor to multiply c_unnormalized(x) by.

    """
    measures_logger.debug("Calling probe_normalize method")

    if not (math.isfinite(target_value) and target_value > 0.0):
        raise DomainError(
            f"{measures_response_message.INVALID_TARGET_VALUE}, "
            f"got {target_value!r}"
        )

    measure: HomogeneousRadialMeasure = functor_object(c_unnormalized, x)
    integral: float = converged_value(
        integrate_half_line(measure.integrand(probe, probe_order))
    )

    return target_value / integral


def bump_probes(
    count: int = measures_configuration.DEFAULT_PROBE_COUNT,
) -> list[BumpProbe]:
    """
    Bump Probes

    Description:
    - This function is used to build the probe family: centers log-spaced
    in [0.1, 10], widths half the center.

    Parameter:
    - **count** (INT): Number of probes, >= 1. **(Optional)**

    Return:
    - **probes** (LIST): Bump probes.

    """

    if isinstance(count, bool) or not isinstance(count, int) or count < 1:
        raise DomainError(
            f"{measures_response_message.INVALID_PROBE_COUNT}, got {count!r}"
        )

    centers: np.ndarray = np.geomspace(
        measures_configuration.PROBE_CENTER_LOW,
        measures_configuration.PROBE_CENTER_HIGH,
        count,
    )

    return [
        BumpProbe(
            center=float(center),
            width=float(center) * measures_configuration.PROBE_WIDTH_RATIO,
        )
        for center in centers
    ]


def _check_scale(scale: float) -> None:
    if not (math.isfinite(scale) and scale > 0.0):
        raise DomainError(
            f"{measures_response_message.INVALID_SCALE}, got {scale!r}"
        )


def probe_integral(
    m: HomogeneousRadialMeasure, probe: BumpProbe, scale: float = 1.0
) -> QuadratureResult:
    """
    Probe Integral

    Description:
    - This function is used to integrate probe(scale * u) against m over
    the exact support of the scaled probe.
    - The absolute tolerance follows the size of the integral, so tiny
    integrals at large x still converge in the relative sense.

    Parameter:
    - **m** (HomogeneousRadialMeasure): Measure. **(Required)**
    - **probe** (BumpProbe): Probe. **(Required)**
    - **scale** (FLOAT): Scale factor lambda > 0. **(Optional)**

    Return:
    - **result** (QuadratureResult): Integral with error estimate.

    """
    measures_logger.debug("Calling probe_integral method")

    _check_scale(scale)

    lo, hi = (end / scale for end in probe.support)
    peak_mass: float = m.interval_mass(lo, hi) * probe.peak
    abs_tol: float = max(
        measures_configuration.PROBE_ABS_TOL_FRACTION * peak_mass,
        quadrature_configuration.UNDERFLOW,
    )

    return integrate_interval(
        Integrand(function=lambda u: probe(scale * u) * m.density(u)),
        lo,
        hi,
        abs_tol=abs_tol,
    )


def check_scaling_covariance(
    m: HomogeneousRadialMeasure,
    lambda_: float,
    probe_count: int = measures_configuration.DEFAULT_PROBE_COUNT,
    tol: float = measures_configuration.SCALING_TOL,
) -> VerificationReport:
    """
    Check Scaling Covariance

    Description:
    - This function is used to check, for each bump probe phi, that the
    integral of phi(lambda u) against m equals lambda^(-x/2) times the
    integral of phi(u).
    - A probe whose quadrature does not converge fails the report.

    Parameter:
    - **m** (HomogeneousRadialMeasure): Measure. **(Required)**
    - **lambda_** (FLOAT): Scale factor > 0. **(Required)**
    - **probe_count** (INT): Number of probes. **(Optional)**
    - **tol** (FLOAT): Pass threshold on the relative residual.
    **(Optional)**

    Return:
    - **report** (VerificationReport): Per-probe residuals.

    """
    measures_logger.debug("Calling check_scaling_covariance method")

    started: float = time.perf_counter()
    _check_scale(lambda_)
    factor: float = math.exp(-(m.x / 2.0) * math.log(lambda_))

    def residual(probe: BumpProbe) -> float:
        scaled: float = converged_value(probe_integral(m, probe, lambda_))
        unscaled: float = converged_value(probe_integral(m, probe))

        return relative_residual(scaled, factor * unscaled)

    outcomes: list[WorstCase] = [
        evaluate_sample(
            (m.x, lambda_, probe.center),
            lambda probe=probe: residual(probe),
        )
        for probe in bump_probes(probe_count)
    ]

    return build_report(
        Suite.SCALING_COVARIANCE.value, 0, tol, outcomes, started
    )


def check_density_morphism(
    morphism: DensityMorphism,
    intervals: tuple[
        tuple[float, float], ...
    ] = measures_configuration.DENSITY_CHECK_INTERVALS,
    tol: float = measures_configuration.DENSITY_CHECK_TOL,
) -> VerificationReport:
    """
    Check Density Morphism

    Description:
    - This function is used to check target((a, b)) = integral over (a, b)
    of h d(source) on a family of intervals, the closed-form mass on the
    left and quadrature on the right.

    Parameter:
    - **morphism** (DensityMorphism): Density morphism. **(Required)**
    - **intervals** (TUPLE): Intervals (a, b) with 0 <= a < b.
    **(Optional)**
    - **tol** (FLOAT): Pass threshold on the relative residual.
    **(Optional)**

    Return:
    - **report** (VerificationReport): Per-interval residuals.

    """
    measures_logger.debug("Calling check_density_morphism method")

    started: float = time.perf_counter()
    weighted: Integrand = morphism.source.integrand(
        morphism.density, morphism.power
    )

    def residual(lo: float, hi: float) -> float:
        integral: float = converged_value(integrate_interval(weighted, lo, hi))

        return relative_residual(
            integral, morphism.target.interval_mass(lo, hi)
        )

    outcomes: list[WorstCase] = [
        evaluate_sample(
            (morphism.source.x, morphism.power, lo, hi),
            lambda lo=lo, hi=hi: residual(lo, hi),
        )
        for lo, hi in intervals
    ]

    return build_report(
        measures_configuration.DENSITY_CHECK_NAME, 0, tol, outcomes, started
    )


class MeasuresView:
    """
    Measures View Class

    Description:
    - This class is responsible for the category, functor and
    normalization views.

    """

    compose_shifts = staticmethod(compose_shifts)
    identity_shift = staticmethod(identity_shift)
    functor_object = staticmethod(functor_object)
    functor_morphism = staticmethod(functor_morphism)
    identity_morphism = staticmethod(identity_morphism)
    compose_morphisms = staticmethod(compose_morphisms)
    mellin_gamma_functor = staticmethod(mellin_gamma_functor)
    gaussian_normalize = staticmethod(gaussian_normalize)
    normalize_coefficient_function = staticmethod(
        normalize_coefficient_function
    )
    probe_normalize = staticmethod(probe_normalize)
    bump_probes = staticmethod(bump_probes)
    probe_integral = staticmethod(probe_integral)
    check_scaling_covariance = staticmethod(check_scaling_covariance)
    check_density_morphism = staticmethod(check_density_morphism)


measures_view = MeasuresView()
