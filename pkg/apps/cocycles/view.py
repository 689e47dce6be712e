"""
    Cocycles View Module

    Description:
    - This module is responsible for R(x, r), T(x, r), beta(x) and the
    residuals of the identities between them.
    - Gamma ratios are formed in log space and exponentiated last.

"""

# Importing Python Packages
import logging
import math

# Importing FastAPI Packages

# Importing Project Files
from apps.specfun.view import log_gamma
from core.exceptions import DomainError
from core.helper import exponentiate
from .configuration import CocycleKind, cocycles_configuration
from .response_message import cocycles_response_message
from .schema import CocycleEval


cocycles_logger = logging.getLogger(__name__)


# -----------------------------------------------------------------------------


def _check_dimension(x: float) -> None:
    if not (isinstance(x, (int, float)) and math.isfinite(x) and x > 0):
        raise DomainError(
            f"{cocycles_response_message.INVALID_DIMENSION}, got {x!r}"
        )


def _check_shift(r: float) -> None:
    if not (isinstance(r, (int, float)) and math.isfinite(r) and r >= 0):
        raise DomainError(
            f"{cocycles_response_message.INVALID_SHIFT}, got {r!r}"
        )


def _log_cocycle(kind: CocycleKind, x: float, r: float) -> float:
    """
    ln C(x, r) = r ln(pi) + ln Gamma(x/2 + k) - ln Gamma(x/2 + r + k), with
    k = 0 for R and k = 1 for T.

    """

    _check_dimension(x)
    _check_shift(r)

    offset: float = cocycles_configuration.GAMMA_OFFSET[CocycleKind(kind)]
    half: float = x / 2.0 + offset

    return (
        r * cocycles_configuration.LOG_PI
        + log_gamma(half)
        - log_gamma(half + r)
    )


def _exponentiate(log_value: float) -> float:
    return exponentiate(log_value, cocycles_response_message.COCYCLE_VALUE)


def radial_cocycle_R(x: float, r: float) -> float:
    """
    Radial Cocycle R

    Description:
    - This function is used to evaluate
    R(x, r) = pi^r Gamma(x/2) / Gamma(x/2 + r), the coefficient of the
    Mellin-Gamma functor on the shift x -> x + 2r.

    Parameter:
    - **x** (FLOAT): Dimension, x > 0. **(Required)**
    - **r** (FLOAT): Shift, r >= 0. **(Required)**

    Return:
    - **value** (FLOAT): R(x, r).

    """
    cocycles_logger.debug("Calling radial_cocycle_R method")

    return _exponentiate(_log_cocycle(CocycleKind.R, x, r))


def ball_cocycle_T(x: float, r: float) -> float:
    """
    Ball Cocycle T

    Description:
    - This function is used to evaluate
    T(x, r) = pi^r Gamma(x/2 + 1) / Gamma(x/2 + r + 1) = V(x + 2r) / V(x).

    Parameter:
    - **x** (FLOAT): Dimension, x > 0. **(Required)**
    - **r** (FLOAT): Shift, r >= 0. **(Required)**

    Return:
    - **value** (FLOAT): T(x, r).

    """
    cocycles_logger.debug("Calling ball_cocycle_T method")

    return _exponentiate(_log_cocycle(CocycleKind.T, x, r))


def cocycle(kind: CocycleKind, x: float, r: float) -> float:
    if CocycleKind(kind) is CocycleKind.R:
        return radial_cocycle_R(x, r)

    return ball_cocycle_T(x, r)


def evaluate_cocycle(kind: CocycleKind, x: float, r: float) -> CocycleEval:
    """
    Evaluate Cocycle

    Description:
    - This function is used to evaluate R or T and return it with its
    inputs.

    Parameter:
    - **kind** (CocycleKind): R or T. **(Required)**
    - **x** (FLOAT): Dimension, x > 0. **(Required)**
    - **r** (FLOAT): Shift, r >= 0. **(Required)**

    Return:
    - **evaluation** (CocycleEval): Kind, inputs and value.

    """

    return CocycleEval(kind=kind, x=x, r=r, value=cocycle(kind, x, r))


def beta(x: float) -> float:
    """
    Beta

    Description:
    - This function is used to evaluate the coboundary function
    beta(x) = x.

    Parameter:
    - **x** (FLOAT): Dimension, x > 0. **(Required)**

    Return:
    - **value** (FLOAT): x.

    """

    _check_dimension(x)

    return float(x)


def coboundary_residual(x: float, r: float) -> float:
    """
    Coboundary Residual

    Description:
    - This function is used to evaluate
    R(x, r) / T(x, r) - beta(x + 2r) / beta(x).
    - |result| <= 1e-11 * (1 + (x + 2r) / x).

    Parameter:
    - **x** (FLOAT): Dimension, x > 0. **(Required)**
    - **r** (FLOAT): Shift, r >= 0. **(Required)**

    Return:
    - **residual** (FLOAT): Signed residual.

    """
    cocycles_logger.debug("Calling coboundary_residual method")

    ratio: float = radial_cocycle_R(x, r) / ball_cocycle_T(x, r)

    return ratio - beta(x + 2.0 * r) / beta(x)


def coboundary_form_residual(x: float, r: float) -> float:
    """
    Coboundary Form Residual

    Description:
    - This function is used to evaluate
    T(x, r) - beta(x) / beta(x + 2r) * R(x, r).

    Parameter:
    - **x** (FLOAT): Dimension, x > 0. **(Required)**
    - **r** (FLOAT): Shift, r >= 0. **(Required)**

    Return:
    - **residual** (FLOAT): Signed residual.

    """

    return ball_cocycle_T(x, r) - (
        beta(x) / beta(x + 2.0 * r) * radial_cocycle_R(x, r)
    )


def cocycle_residual(
    kind: CocycleKind, x: float, r: float, s: float
) -> float:
    """
    Cocycle Residual

    Description:
    - This function is used to evaluate C(x, r + s) - C(x + 2r, s) C(x, r)
    for C = R or T.

    Parameter:
    - **kind** (CocycleKind): R or T. **(Required)**
    - **x** (FLOAT): Dimension, x > 0. **(Required)**
    - **r** (FLOAT): First shift, r >= 0. **(Required)**
    - **s** (FLOAT): Second shift, s >= 0. **(Required)**

    Return:
    - **residual** (FLOAT): Signed residual.

    """
    cocycles_logger.debug("Calling cocycle_residual method")

    _check_shift(s)

    return cocycle(kind, x, r + s) - (
        cocycle(kind, x + 2.0 * r, s) * cocycle(kind, x, r)
    )


class CocyclesView:
    """
    Cocycles View Class

    Description:
    - This class is responsible for the cocycle views.

    """

    radial_cocycle_R = staticmethod(radial_cocycle_R)
    ball_cocycle_T = staticmethod(ball_cocycle_T)
    cocycle = staticmethod(cocycle)
    evaluate_cocycle = staticmethod(evaluate_cocycle)
    beta = staticmethod(beta)
    coboundary_residual = staticmethod(coboundary_residual)
    coboundary_form_residual = staticmethod(coboundary_form_residual)
    cocycle_residual = staticmethod(cocycle_residual)


cocycles_view = CocyclesView()
