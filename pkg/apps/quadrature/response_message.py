"""
    Quadrature Response Message Module

    Description:
    - This module is responsible for quadrature messages.

"""

# Importing Python Packages

# Importing FastAPI Packages

# Importing Project Files


# -----------------------------------------------------------------------------


class QuadratureResponseMessage:
    """
    Quadrature Response Message Class

    Description:
    - This class is used to define quadrature messages.

    """

    INVALID_INTERVAL: str = "Interval requires 0 <= lo < hi < inf"
    INVALID_TOLERANCE: str = "Tolerances must be positive"
    NON_FINITE_INTEGRAND: str = "Integrand returned a non-finite value at u = "
    NOT_CONVERGED: str = "Quadrature did not converge"
    TRUNCATION_NOT_CONVERGED: str = (
        "Truncation bound reached before the integrand decayed"
    )


quadrature_response_message = QuadratureResponseMessage()
