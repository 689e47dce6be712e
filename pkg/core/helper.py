"""
    Core Helper Module

    Description:
    - This module contains all helper functions shared by the apps.
"""

# Importing Python Packages
import math
import sys

# Importing FastAPI Packages

# Importing Project Files
from .exceptions import GammaOverflowError, GammaUnderflowError
from .response_message import core_response_message


LOG_FLOAT_MIN: float = math.log(sys.float_info.min)


# -----------------------------------------------------------------------------


def relative_residual(value: float, reference: float) -> float:
    """
    Relative Residual

    Description:
    - This function is used to scale a difference by the magnitude of the
    reference side of an identity.
    - Falls back to the absolute difference when the reference is zero.

    Parameter:
    - **value** (FLOAT): Computed side. **(Required)**
    - **reference** (FLOAT): Reference side. **(Required)**

    Return:
    - **residual** (FLOAT): |value - reference| / |reference|.

    """

    difference: float = abs(value - reference)

    if reference == 0.0:
        return difference

    return difference / abs(reference)


def format_significant(value: float, precision: int) -> float:
    """
    Format Significant

    Description:
    - This function is used to round a float to the given number of
    significant digits.
    - The result prints as the shortest round-trip decimal of the rounded
    float; at precision 17 the float is unchanged.

    Parameter:
    - **value** (FLOAT): Value to round. **(Required)**
    - **precision** (INT): Significant digits, 1 to 17. **(Required)**

    Return:
    - **value** (FLOAT): Rounded value.

    """

    if not math.isfinite(value):
        return value

    return float(f"{value:.{precision}g}")


def exponentiate(log_value: float, label: str) -> float:
    """
    Exponentiate

    Description:
    - This function is used to turn a log-space result into a positive
    normal float.
    - Raises GammaOverflowError past the largest float and
    GammaUnderflowError below the smallest normal float.

    Parameter:
    - **log_value** (FLOAT): Natural log of the result. **(Required)**
    - **label** (STR): Name of the quantity, used in error messages.
    **(Required)**

    Return:
    - **value** (FLOAT): exp(log_value).

    """

    if log_value < LOG_FLOAT_MIN:
        raise GammaUnderflowError(
            f"{label} {core_response_message.VALUE_UNDERFLOW}, "
            f"log value {log_value!r}"
        )

    try:
        return math.exp(log_value)

    except OverflowError as err:
        raise GammaOverflowError(
            f"{label} {core_response_message.VALUE_OVERFLOW}, "
            f"log value {log_value!r}"
        ) from err
