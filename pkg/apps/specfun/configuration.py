"""
    Special Functions Configuration Module

    Description:
    - This module is responsible for special function constants.

"""

# Importing Python Packages
import math
import sys

# Importing FastAPI Packages

# Importing Project Files


# -----------------------------------------------------------------------------


class SpecfunConfiguration:
    """
    Special Functions Settings Class

    Description:
    - This class is used to define the Lanczos coefficient set and the
    incomplete Gamma iteration budget.
    - Lanczos set: g = 607/128, 14 terms (Numerical Recipes, 3rd edition,
    gammln); full double precision on (0, inf).

    """

    LANCZOS_SHIFT: float = 5.2421875  # g + 1/2 = 671/128
    LANCZOS_SERIES_CONSTANT: float = 0.999999999999997092
    LANCZOS_COEFFICIENTS: tuple[float, ...] = (
        57.1562356658629235,
        -59.5979603554754912,
        14.1360979747417471,
        -0.491913816097620199,
        0.339946499848118887e-4,
        0.465236289270485756e-4,
        -0.983744753048795646e-4,
        0.158088703224912494e-3,
        -0.210264441724104883e-3,
        0.217439618115212643e-3,
        -0.164318106536763890e-3,
        0.844182239838527433e-4,
        -0.261908384015814087e-4,
        0.368991826595316234e-5,
    )
    SQRT_TWO_PI: float = 2.5066282746310005

    # Gamma(a) exceeds the largest double past this argument
    GAMMA_OVERFLOW_CUTOFF: float = 171.6243769563027
    LOG_FLOAT_MAX: float = math.log(sys.float_info.max)

    INCOMPLETE_GAMMA_EPSILON: float = sys.float_info.epsilon
    INCOMPLETE_GAMMA_MAX_ITERATIONS: int = 10_000
    INCOMPLETE_GAMMA_FLOOR: float = (
        sys.float_info.min / sys.float_info.epsilon
    )


specfun_configuration = SpecfunConfiguration()
