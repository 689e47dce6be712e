"""
    Core Module

    Description:
    - This module contains core configuration, exceptions and helpers.

"""

from .configuration import core_configuration
from .exceptions import (
    BallVolumeError,
    CoefficientError,
    ComposabilityError,
    ConvergenceError,
    DomainError,
    GammaOverflowError,
    GammaUnderflowError,
)
from .helper import exponentiate, format_significant, relative_residual
from .logger import configure_logging
