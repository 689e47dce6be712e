"""
    Observables View Module

    Description:
    - This module is responsible for the unit-interval observable, sublevel
    masses, the ball volume V(x) and the Gaussian observables.
    - Observables return closed forms; method=quadrature recomputes them
    by integration for cross-checking.
    - Observables act on objects only; no morphism mapping is provided.

"""

# Importing Python Packages
import logging
import math
import sys
import numpy as np

# Importing FastAPI Packages

# Importing Project Files
from apps.cocycles.view import ball_cocycle_T
from apps.measures.schema import HomogeneousRadialMeasure
from apps.quadrature.schema import Integrand, QuadratureResult
from apps.quadrature.view import (
    converged_value,
    integrate_half_line,
    integrate_interval,
)
from apps.specfun.view import log_gamma, regularized_lower_incomplete
from core.exceptions import DomainError
from core.helper import exponentiate
from .configuration import ObservableMethod, observables_configuration
from .response_message import observables_response_message
from .schema import ObservableValue, VolumePeak


observables_logger = logging.getLogger(__name__)


# -----------------------------------------------------------------------------


def _check_dimension(x: float) -> None:
    if not (isinstance(x, (int, float)) and math.isfinite(x) and x > 0):
        raise DomainError(
            f"{observables_response_message.INVALID_DIMENSION}, got {x!r}"
        )


def _check_bound(b: float) -> None:
    if not (isinstance(b, (int, float)) and math.isfinite(b) and b > 0):
        raise DomainError(
            f"{observables_response_message.INVALID_BOUND}, got {b!r}"
        )


def _exponentiate(log_value: float) -> float:
    return exponentiate(
        log_value, observables_response_message.OBSERVABLE_VALUE
    )


def _closed_form(value: float) -> ObservableValue:
    return ObservableValue(value=value, method=ObservableMethod.CLOSED_FORM)


def _from_quadrature(result: QuadratureResult) -> ObservableValue:
    return ObservableValue(
        value=converged_value(result),
        method=ObservableMethod.QUADRATURE,
        error_estimate=result.error_estimate,
    )


def _exponential_weight(u: float) -> float:
    return math.exp(-u)


def sublevel_mass(
    m: HomogeneousRadialMeasure,
    b: float,
    method: ObservableMethod = ObservableMethod.CLOSED_FORM,
) -> ObservableValue:
    """
    Sublevel Mass

    Description:
    - This function is used to evaluate m((0, b)) = coeff * (2/x) * b^(x/2).

    Parameter:
    - **m** (HomogeneousRadialMeasure): Measure. **(Required)**
    - **b** (FLOAT): Finite bound, b > 0. **(Required)**
    - **method** (ObservableMethod): Closed form or quadrature.
    **(Optional)**

    Return:
    - **value** (ObservableValue): Mass of (0, b).

    """
    observables_logger.debug("Calling sublevel_mass method")

    _check_bound(b)

    if ObservableMethod(method) is ObservableMethod.QUADRATURE:
        return _from_quadrature(integrate_interval(m.integrand(), 0.0, b))

    mass: float = m.interval_mass(0.0, b)

    if math.isfinite(mass) and mass >= sys.float_info.min:
        return _closed_form(mass)

    return _closed_form(_exponentiate(m.log_interval_mass(0.0, b)))


def unit_interval_observable(
    m: HomogeneousRadialMeasure,
    method: ObservableMethod = ObservableMethod.CLOSED_FORM,
) -> ObservableValue:
    """
    Unit Interval Observable

    Description:
    - This function is used to evaluate B(m) = m((0, 1)) = 2 coeff / x.
    - On the Mellin-Gamma measure at x this is the ball volume V(x).

    Parameter:
    - **m** (HomogeneousRadialMeasure): Measure. **(Required)**
    - **method** (ObservableMethod): Closed form or quadrature.
    **(Optional)**

    Return:
    - **value** (ObservableValue): Mass of (0, 1).

    """
    observables_logger.debug("Calling unit_interval_observable method")

    return sublevel_mass(m, 1.0, method)


def ball_volume_V(x: float) -> float:
    """
    Ball Volume V

    Description:
    - This function is used to evaluate
    V(x) = pi^(x/2) / Gamma(x/2 + 1) for real x > 0.

    Parameter:
    - **x** (FLOAT): Dimension, x > 0. **(Required)**

    Return:
    - **value** (FLOAT): V(x).

    """
    observables_logger.debug("Calling ball_volume_V method")

    _check_dimension(x)

    return _exponentiate(
        (x / 2.0) * observables_configuration.LOG_PI - log_gamma(x / 2.0 + 1.0)
    )


def unit_sphere_area(x: float) -> float:
    """
    Unit Sphere Area

    Description:
    - This function is used to evaluate S(x) = 2 pi^(x/2) / Gamma(x/2),
    which equals x V(x).

    Parameter:
    - **x** (FLOAT): Dimension, x > 0. **(Required)**

    Return:
    - **value** (FLOAT): S(x).

    """

    _check_dimension(x)

    return _exponentiate(
        observables_configuration.LOG_TWO
        + (x / 2.0) * observables_configuration.LOG_PI
        - log_gamma(x / 2.0)
    )


def gaussian_observable(
    m: HomogeneousRadialMeasure,
    method: ObservableMethod = ObservableMethod.CLOSED_FORM,
) -> ObservableValue:
    """
    Gaussian Observable

    Description:
    - This function is used to evaluate the integral of exp(-u) against m,
    coeff * Gamma(x/2); pi^(x/2) on the Mellin-Gamma measure.

    Parameter:
    - **m** (HomogeneousRadialMeasure): Measure. **(Required)**
    - **method** (ObservableMethod): Closed form or quadrature.
    **(Optional)**

    Return:
    - **value** (ObservableValue): Gaussian observable.

    """
    observables_logger.debug("Calling gaussian_observable method")

    if ObservableMethod(method) is ObservableMethod.QUADRATURE:
        return _from_quadrature(
            integrate_half_line(m.integrand(_exponential_weight))
        )

    return _closed_form(_exponentiate(m.log_coeff + log_gamma(m.x / 2.0)))


def gaussian_partial_observable(
    m: HomogeneousRadialMeasure,
    b: float,
    method: ObservableMethod = ObservableMethod.CLOSED_FORM,
) -> ObservableValue:
    """
    Gaussian Partial Observable

    Description:
    - This function is used to evaluate the integral of exp(-u) against m
    over (0, b), coeff * Gamma(x/2) * P(x/2, b).
    - Strictly increasing in b; b = inf gives gaussian_observable.

    Parameter:
    - **m** (HomogeneousRadialMeasure): Measure. **(Required)**
    - **b** (FLOAT): Bound, b > 0, inf allowed. **(Required)**
    - **method** (ObservableMethod): Closed form or quadrature.
    **(Optional)**

    Return:
    - **value** (ObservableValue): Truncated Gaussian observable.

    """
    observables_logger.debug("Calling gaussian_partial_observable method")

    if isinstance(b, (int, float)) and b == math.inf:
        return gaussian_observable(m, method)

    _check_bound(b)

    if ObservableMethod(method) is ObservableMethod.QUADRATURE:
        return _from_quadrature(
            integrate_interval(m.integrand(_exponential_weight), 0.0, b)
        )

    full: float = gaussian_observable(m).value

    return _closed_form(full * regularized_lower_incomplete(m.x / 2.0, b))


def transport_consistency(x: float, r: float) -> float:
    """
    Transport Consistency

    Description:
    - This function is used to evaluate V(x + 2r) / V(x) - T(x, r), with
    the ratio formed from the two volumes directly.

    Parameter:
    - **x** (FLOAT): Dimension, x > 0. **(Required)**
    - **r** (FLOAT): Shift, r >= 0. **(Required)**

    Return:
    - **residual** (FLOAT): Signed residual.

    """
    observables_logger.debug("Calling transport_consistency method")

    if not (isinstance(r, (int, float)) and math.isfinite(r) and r >= 0):
        raise DomainError(
            f"{observables_response_message.INVALID_SHIFT}, got {r!r}"
        )

    return ball_volume_V(x + 2.0 * r) / ball_volume_V(x) - ball_cocycle_T(
        x, r
    )


def _log_volume(x: float) -> float:
    return (x / 2.0) * observables_configuration.LOG_PI - log_gamma(
        x / 2.0 + 1.0
    )


def ball_volume_peak() -> VolumePeak:
    """
    Ball Volume Peak

    Description:
    - This function is used to locate the maximizer of V on (0.1, 30) by
    golden-section search on ln V.

    Return:
    - **peak** (VolumePeak): Maximizer (about 5.2569464) and maximum.

    """
    observables_logger.debug("Calling ball_volume_peak method")

    ratio: float = observables_configuration.INVERSE_GOLDEN_RATIO
    lo, hi = observables_configuration.PEAK_BRACKET
    left: float = hi - ratio * (hi - lo)
    right: float = lo + ratio * (hi - lo)
    left_value: float = _log_volume(left)
    right_value: float = _log_volume(right)

    for _ in range(observables_configuration.PEAK_MAX_ITERATIONS):
        if hi - lo <= observables_configuration.PEAK_TOLERANCE:
            break

        if left_value > right_value:
            hi, right, right_value = right, left, left_value
            left = hi - ratio * (hi - lo)
            left_value = _log_volume(left)

        else:
            lo, left, left_value = left, right, right_value
            right = lo + ratio * (hi - lo)
            right_value = _log_volume(right)

    x: float = (lo + hi) / 2.0

    return VolumePeak(x=x, value=ball_volume_V(x))


def is_unimodal(
    samples: int = observables_configuration.UNIMODAL_SAMPLES,
    x_range: tuple[float, float] = observables_configuration.PEAK_BRACKET,
) -> bool:
    """
    Is Unimodal

    Description:
    - This function is used to check on an even grid that V rises and then
    falls, with a single change of direction.

    Parameter:
    - **samples** (INT): Grid size, >= 3. **(Optional)**
    - **x_range** (TUPLE): Grid bounds. **(Optional)**

    Return:
    - **unimodal** (BOOL): True when the sampled values are unimodal.

    """
    observables_logger.debug("Calling is_unimodal method")

    if isinstance(samples, bool) or not isinstance(samples, int) or (
        samples < 3
    ):
        raise DomainError(
            f"{observables_response_message.INVALID_SAMPLE_COUNT}, "
            f"got {samples!r}"
        )

    grid: np.ndarray = np.linspace(x_range[0], x_range[1], samples)
    values: np.ndarray = np.array([ball_volume_V(float(x)) for x in grid])
    signs: np.ndarray = np.sign(np.diff(values))
    signs = signs[signs != 0]

    return int(np.count_nonzero(np.diff(signs))) <= 1


def euclidean_gaussian_integral(n: int) -> ObservableValue:
    """
    Euclidean Gaussian Integral

    Description:
    - This function is used to integrate exp(-|y|^2) over R^n as the
    product of n one-dimensional integrals, each computed by quadrature.
    - Agrees with gaussian_observable of the Mellin-Gamma measure at x = n.

    Parameter:
    - **n** (INT): Dimension, n >= 1. **(Required)**

    Return:
    - **value** (ObservableValue): (sqrt(pi))^n with its error estimate.

    """
    observables_logger.debug("Calling euclidean_gaussian_integral method")

    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(
            f"{observables_response_message.INVALID_DIMENSION_COUNT}, "
            f"got {n!r}"
        )

    result: QuadratureResult = integrate_half_line(
        Integrand(function=lambda t: math.exp(-t * t))
    )
    line: float = 2.0 * converged_value(result)

    return ObservableValue(
        value=line**n,
        method=ObservableMethod.QUADRATURE,
        error_estimate=n * line ** (n - 1) * 2.0 * result.error_estimate,
    )


class ObservablesView:
    """
    Observables View Class

    Description:
    - This class is responsible for the observable views.

    """

    sublevel_mass = staticmethod(sublevel_mass)
    unit_interval_observable = staticmethod(unit_interval_observable)
    ball_volume_V = staticmethod(ball_volume_V)
    unit_sphere_area = staticmethod(unit_sphere_area)
    gaussian_observable = staticmethod(gaussian_observable)
    gaussian_partial_observable = staticmethod(gaussian_partial_observable)
    transport_consistency = staticmethod(transport_consistency)
    ball_volume_peak = staticmethod(ball_volume_peak)
    is_unimodal = staticmethod(is_unimodal)
    euclidean_gaussian_integral = staticmethod(euclidean_gaussian_integral)


observables_view = ObservablesView()
