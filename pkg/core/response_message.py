"""
    Core Response Message Module

    Description:
    - This module is responsible for core response messages.

"""

# Importing Python Packages

# Importing FastAPI Packages

# Importing Project Files


# -----------------------------------------------------------------------------


class CoreResponseMessage:
    """
    Core Response Message Class

    Description:
    - This class is used to define core response messages.

    """

    INVALID_ARGUMENT: str = "Invalid argument"
    EVALUATION_ERROR: str = "Evaluation error"
    INTERNAL_SERVER_ERROR: str = "Internal server error"
    VALUE_OVERFLOW: str = "overflows a 64-bit float"
    VALUE_UNDERFLOW: str = "underflows a 64-bit float"


core_response_message = CoreResponseMessage()
