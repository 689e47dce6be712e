"""
    Measures Configuration Module

    Description:
    - This module is responsible for measures configuration.

"""

# Importing Python Packages
import math
import sys

# Importing FastAPI Packages

# Importing Project Files


# -----------------------------------------------------------------------------


class MeasuresConfiguration:
    """
    Measures Settings Class

    Description:
    - This class is used to define composability tolerances, the log-scale
    threshold and the bump probe family.

    """

    SHIFT_TOLERANCE: float = 1e-12
    MORPHISM_RELATIVE_TOLERANCE: float = 1e-12

    # functor_morphism switches to log-space coefficients past this dimension
    LOG_SCALE_THRESHOLD: float = 300.0

    LOG_PI: float = math.log(math.pi)
    LOG_FLOAT_MAX: float = math.log(sys.float_info.max)
    LOG_FLOAT_MIN: float = math.log(sys.float_info.min)

    PROBE_CENTER_LOW: float = 0.1
    PROBE_CENTER_HIGH: float = 10.0
    PROBE_WIDTH_RATIO: float = 0.5
    DEFAULT_PROBE_COUNT: int = 5
    SCALING_TOL: float = 1e-7
    # quadrature abs_tol of a probe integral, relative to its peak mass
    PROBE_ABS_TOL_FRACTION: float = 1e-13

    DENSITY_CHECK_NAME: str = "density_morphism"
    DENSITY_CHECK_TOL: float = 1e-8
    DENSITY_CHECK_INTERVALS: tuple[tuple[float, float], ...] = (
        (0.0, 1.0),
        (0.5, 2.0),
        (1.0, 4.0),
    )

    MELLIN_GAMMA_NAME: str = "mellin_gamma"


measures_configuration = MeasuresConfiguration()
