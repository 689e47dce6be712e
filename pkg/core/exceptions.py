"""
    Core Exceptions Module

    Description:
    - This module contains the typed errors raised by every operation.
    - Each error also derives from the matching builtin so callers can catch
    it generically.

"""

# Importing Python Packages

# Importing FastAPI Packages

# Importing Project Files


# -----------------------------------------------------------------------------


class BallVolumeError(Exception):
    """
    Ball Volume Error

    Description:
    - Base class of all project errors.

    """


class DomainError(BallVolumeError, ValueError):
    """
    Domain Error

    Description:
    - Raised when an argument lies outside the domain of an operation.

    """


class GammaOverflowError(BallVolumeError, OverflowError):
    """
    Gamma Overflow Error

    Description:
    - Raised when Gamma(a) does not fit in a 64-bit float.

    """


class ConvergenceError(BallVolumeError, ArithmeticError):
    """
    Convergence Error

    Description:
    - Raised when an iterative method exhausts its iteration budget.

    """


class ComposabilityError(BallVolumeError, ValueError):
    """
    Composability Error

    Description:
    - Raised when two morphisms do not share an endpoint.

    """


class CoefficientError(BallVolumeError, ValueError):
    """
    Coefficient Error

    Description:
    - Raised when a coefficient function returns a non-positive or
    non-finite value.

    """


class GammaUnderflowError(BallVolumeError, ArithmeticError):
    """
    Gamma Underflow Error

    Description:
    - Raised when a positive result falls below the smallest normal 64-bit
    float and would otherwise print as zero.

    """
