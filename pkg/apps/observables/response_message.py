"""
    Observables Response Message Module

    Description:
    - This module is responsible for observable messages.

"""

# Importing Python Packages

# Importing FastAPI Packages

# Importing Project Files


# -----------------------------------------------------------------------------


class ObservablesResponseMessage:
    """
    Observables Response Message Class

    Description:
    - This class is used to define observable messages.

    """

    INVALID_DIMENSION: str = "Dimension x must be a finite real > 0"
    INVALID_SHIFT: str = "Shift parameter must be a finite real >= 0"
    INVALID_BOUND: str = "Bound b must be a real > 0"
    INVALID_DIMENSION_COUNT: str = "Dimension n must be a positive integer"
    INVALID_SAMPLE_COUNT: str = "Sample count must be an integer >= 3"
    OBSERVABLE_VALUE: str = "Observable value"


observables_response_message = ObservablesResponseMessage()
