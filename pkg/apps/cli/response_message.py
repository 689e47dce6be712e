"""
    CLI Response Message Module

    Description:
    - This module is responsible for command messages.

"""

# Importing Python Packages

# Importing FastAPI Packages

# Importing Project Files


# -----------------------------------------------------------------------------


class CliResponseMessage:
    """
    CLI Response Message Class

    Description:
    - This class is used to define command and help messages.

    """

    DESCRIPTION: str = (
        "Evaluate, tabulate and verify continuous-dimension ball volumes and "
        "the Mellin-Gamma cocycles."
    )
    EVAL_HELP: str = "Evaluate one quantity"
    TABLE_HELP: str = "Tabulate a quantity over an x grid"
    VERIFY_HELP: str = "Run property-verification suites"
    VERBOSE_HELP: str = "Log debug messages to stderr"

    SHIFT_REQUIRED: str = "--r is required for targets R, T and coboundary"
    BOUND_REQUIRED: str = "--b is required for target sublevel"
    INVALID_RANGE: str = "Grid requires 0 < x_start <= x_end and step > 0"
    GRID_TOO_LARGE: str = "Grid has more points than allowed"
    UNKNOWN_SUITE: str = "Unknown suite"
    INVALID_ARGUMENT: str = "Invalid argument"
    EVALUATION_ERROR: str = "Evaluation error"
    SUITES_FAILED: str = "Suites failed: "


cli_response_message = CliResponseMessage()
