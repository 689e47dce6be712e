"""
    Special Functions Response Message Module

    Description:
    - This module is responsible for special function messages.

"""

# Importing Python Packages

# Importing FastAPI Packages

# Importing Project Files


# -----------------------------------------------------------------------------


class SpecfunResponseMessage:
    """
    Special Functions Response Message Class

    Description:
    - This class is used to define special function messages.

    """

    INVALID_GAMMA_ARGUMENT: str = "Gamma argument must be a finite real > 0"
    INVALID_UPPER_LIMIT: str = "Incomplete Gamma limit must be a real >= 0"
    GAMMA_OVERFLOW: str = "Gamma overflows a 64-bit float past a = "
    SERIES_NOT_CONVERGED: str = "Incomplete Gamma series did not converge"
    FRACTION_NOT_CONVERGED: str = (
        "Incomplete Gamma continued fraction did not converge"
    )


specfun_response_message = SpecfunResponseMessage()
