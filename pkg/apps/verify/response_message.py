"""
    Verify Response Message Module

    Description:
    - This module is responsible for verify messages.

"""

# Importing Python Packages

# Importing FastAPI Packages

# Importing Project Files


# -----------------------------------------------------------------------------


class VerifyResponseMessage:
    """
    Verify Response Message Class

    Description:
    - This class is used to define verify messages.

    """

    INVALID_X_RANGE: str = "x_range must satisfy 0 < low <= high"
    INVALID_R_RANGE: str = "r_range must satisfy 0 <= low <= high"
    INVALID_SEED: str = "Seed must be an unsigned 64-bit integer"
    NON_FINITE_RESIDUAL: str = "Residual is not finite"
    QUADRATURE_NOT_CONVERGED: str = "Quadrature did not converge"
    SUITE_FAILED: str = "Suite failed"


verify_response_message = VerifyResponseMessage()
