"""
    Cocycles Response Message Module

    Description:
    - This module is responsible for cocycle messages.

"""

# Importing Python Packages

# Importing FastAPI Packages

# Importing Project Files


# -----------------------------------------------------------------------------


class CocyclesResponseMessage:
    """
    Cocycles Response Message Class

    Description:
    - This class is used to define cocycle messages.

    """

    INVALID_DIMENSION: str = "Dimension x must be a finite real > 0"
    INVALID_SHIFT: str = "Shift parameter must be a finite real >= 0"
    COCYCLE_VALUE: str = "Cocycle value"


cocycles_response_message = CocyclesResponseMessage()
