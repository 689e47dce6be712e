"""
    Measures Response Message Module

    Description:
    - This module is responsible for measures messages.

"""

# Importing Python Packages

# Importing FastAPI Packages

# Importing Project Files


# -----------------------------------------------------------------------------


class MeasuresResponseMessage:
    """
    Measures Response Message Class

    Description:
    - This class is used to define measures messages.

    """

    SHIFTS_NOT_COMPOSABLE: str = "Shifts are not composable: "
    MORPHISMS_NOT_COMPOSABLE: str = "Morphisms are not composable: "
    INVALID_COEFFICIENT: str = (
        "Coefficient function must be positive and finite"
    )
    INVALID_TARGET_DIMENSION: str = "Target dimension must equal x + 2 * power"
    INVALID_MORPHISM_COEFFICIENT: str = (
        "Morphism coefficient must equal target.coeff / source.coeff"
    )
    INCONSISTENT_COEFFICIENTS: str = "coeff must equal exp(log_coeff)"
    MORPHISM_COEFFICIENT: str = "Morphism coefficient"
    INVALID_PROBE_SUPPORT: str = "Probe support must lie inside (0, inf)"
    INVALID_SCALE: str = "Scale factor must be a finite real > 0"
    INVALID_PROBE_COUNT: str = "Probe count must be a positive integer"
    INVALID_TARGET_VALUE: str = (
        "Normalization target must be a finite real > 0"
    )
    QUADRATURE_NOT_CONVERGED: str = "Quadrature did not converge"


measures_response_message = MeasuresResponseMessage()
