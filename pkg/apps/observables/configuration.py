"""
    Observables Configuration Module

    Description:
    - This module is responsible for observable constants.

"""

# Importing Python Packages
import math
from enum import Enum

# Importing FastAPI Packages

# Importing Project Files


# -----------------------------------------------------------------------------


class ObservableMethod(str, Enum):
    """
    Observable Method Enum

    Description:
    - This enum is used to select the closed form or the quadrature
    cross-check of an observable.

    """

    CLOSED_FORM: str = "closed_form"
    QUADRATURE: str = "quadrature"


class ObservablesConfiguration:
    """
    Observables Settings Class

    Description:
    - This class is used to define observable constants and the search
    settings of the ball-volume maximum.

    """

    LOG_PI: float = math.log(math.pi)
    LOG_TWO: float = math.log(2.0)

    PEAK_BRACKET: tuple[float, float] = (0.1, 30.0)
    PEAK_TOLERANCE: float = 1e-10
    INVERSE_GOLDEN_RATIO: float = (math.sqrt(5.0) - 1.0) / 2.0
    PEAK_MAX_ITERATIONS: int = 200

    UNIMODAL_SAMPLES: int = 1_000


observables_configuration = ObservablesConfiguration()
