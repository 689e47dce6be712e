"""
    Special Functions View Module

    Description:
    - This module is responsible for log-Gamma, Gamma and the regularized
    lower incomplete Gamma function.
    - All functions are pure and thread-safe.

"""

# Importing Python Packages
import logging
import math
from pydantic import ValidationError

# Importing FastAPI Packages

# Importing Project Files
from core.exceptions import ConvergenceError, DomainError, GammaOverflowError
from .configuration import specfun_configuration
from .response_message import specfun_response_message
from .schema import GammaArg


specfun_logger = logging.getLogger(__name__)


# -----------------------------------------------------------------------------


def _gamma_argument(a: float) -> float:
    """
    Validate a Gamma argument and return it as float.

    """

    try:
        return GammaArg(value=a).value

    except ValidationError as err:
        raise DomainError(
            f"{specfun_response_message.INVALID_GAMMA_ARGUMENT}, got {a!r}"
        ) from err


def log_gamma(a: float) -> float:
    """
    Log Gamma

    Description:
    - This function is used to evaluate ln Gamma(a) with the Lanczos
    approximation.

    Parameter:
    - **a** (FLOAT): Argument, a > 0. **(Required)**

    Return:
    - **value** (FLOAT): ln Gamma(a).

    """

    a = _gamma_argument(a)

    shifted: float = a
    tmp: float = a + specfun_configuration.LANCZOS_SHIFT
    tmp = (a + 0.5) * math.log(tmp) - tmp
    series: float = specfun_configuration.LANCZOS_SERIES_CONSTANT

    for coefficient in specfun_configuration.LANCZOS_COEFFICIENTS:
        shifted += 1.0
        series += coefficient / shifted

    return tmp + math.log(specfun_configuration.SQRT_TWO_PI * series / a)


def gamma(a: float) -> float:
    """
    Gamma

    Description:
    - This function is used to evaluate Gamma(a) = exp(ln Gamma(a)).
    - Raises instead of returning infinity past
    GAMMA_OVERFLOW_CUTOFF (about 171.62); compute ratios with log_gamma.

    Parameter:
    - **a** (FLOAT): Argument, 0 < a <= 171.62. **(Required)**

    Return:
    - **value** (FLOAT): Gamma(a).

    """

    value: float = log_gamma(a)

    if value > specfun_configuration.LOG_FLOAT_MAX:
        raise GammaOverflowError(
            f"{specfun_response_message.GAMMA_OVERFLOW}"
            f"{specfun_configuration.GAMMA_OVERFLOW_CUTOFF}, got {a!r}"
        )

    return math.exp(value)


def _lower_series(a: float, b: float, log_prefactor: float) -> float:
    """
    Series expansion of P(a, b), used for b < a + 1.

    """

    epsilon: float = specfun_configuration.INCOMPLETE_GAMMA_EPSILON
    term: float = 1.0 / a
    total: float = term
    denominator: float = a

    for _ in range(specfun_configuration.INCOMPLETE_GAMMA_MAX_ITERATIONS):
        denominator += 1.0
        term *= b / denominator
        total += term

        if abs(term) < abs(total) * epsilon:
            return total * math.exp(log_prefactor)

    raise ConvergenceError(
        f"{specfun_response_message.SERIES_NOT_CONVERGED} (a={a}, b={b})"
    )


def _upper_fraction(a: float, b: float, log_prefactor: float) -> float:
    """
    Continued fraction of Q(a, b) = 1 - P(a, b), modified Lentz method,
    used for b >= a + 1.

    """

    floor: float = specfun_configuration.INCOMPLETE_GAMMA_FLOOR
    epsilon: float = specfun_configuration.INCOMPLETE_GAMMA_EPSILON

    beta: float = b + 1.0 - a
    c: float = 1.0 / floor
    d: float = 1.0 / beta
    h: float = d

    for i in range(1, specfun_configuration.INCOMPLETE_GAMMA_MAX_ITERATIONS):
        an: float = -i * (i - a)
        beta += 2.0
        d = an * d + beta
        if abs(d) < floor:
            d = floor
        c = beta + an / c
        if abs(c) < floor:
            c = floor
        d = 1.0 / d
        delta: float = d * c
        h *= delta

        if abs(delta - 1.0) < epsilon:
            return math.exp(log_prefactor) * h

    raise ConvergenceError(
        f"{specfun_response_message.FRACTION_NOT_CONVERGED} (a={a}, b={b})"
    )


def regularized_lower_incomplete(a: float, b: float) -> float:
    """
    Regularized Lower Incomplete Gamma

    Description:
    - This function is used to evaluate
    P(a, b) = (1 / Gamma(a)) * integral_0^b exp(-t) t^(a-1) dt.
    - Series for b < a + 1, continued fraction for b >= a + 1.

    Parameter:
    - **a** (FLOAT): Shape, a > 0. **(Required)**
    - **b** (FLOAT): Upper limit, b >= 0 (inf gives 1). **(Required)**

    Return:
    - **value** (FLOAT): P(a, b) in [0, 1].

    """
    specfun_logger.debug("Calling regularized_lower_incomplete method")

    a = _gamma_argument(a)

    if math.isnan(b) or b < 0.0:
        raise DomainError(
            f"{specfun_response_message.INVALID_UPPER_LIMIT}, got {b!r}"
        )

    if b == 0.0:
        return 0.0

    if math.isinf(b):
        return 1.0

    log_prefactor: float = -b + a * math.log(b) - log_gamma(a)

    if b < a + 1.0:
        value: float = _lower_series(a, b, log_prefactor)
    else:
        value = 1.0 - _upper_fraction(a, b, log_prefactor)

    return min(1.0, max(0.0, value))


class SpecfunView:
    """
    Specfun View Class

    Description:
    - This class is responsible for the special-function views.

    """

    log_gamma = staticmethod(log_gamma)
    gamma = staticmethod(gamma)
    regularized_lower_incomplete = staticmethod(regularized_lower_incomplete)


specfun_view = SpecfunView()
