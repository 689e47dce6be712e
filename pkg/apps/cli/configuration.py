"""
    CLI Configuration Module

    Description:
    - This module is responsible for command targets, output formats and
    exit codes.

"""

# Importing Python Packages
from enum import Enum

# Importing FastAPI Packages

# Importing Project Files


# -----------------------------------------------------------------------------


class EvalTarget(str, Enum):
    """
    Eval Target Enum

    Description:
    - This enum is used to define the quantities eval can print.
    - B, gaussian, sublevel and S are evaluated on the Mellin-Gamma
    measure at x.

    """

    V: str = "V"
    R: str = "R"
    T: str = "T"
    COBOUNDARY: str = "coboundary"
    B: str = "B"
    GAUSSIAN: str = "gaussian"
    SUBLEVEL: str = "sublevel"
    S: str = "S"


class TableTarget(str, Enum):
    """
    Table Target Enum

    Description:
    - This enum is used to define the quantities table can tabulate.

    """

    V: str = "V"
    R: str = "R"
    T: str = "T"


class FormatKind(str, Enum):
    """
    Format Kind Enum

    Description:
    - This enum is used to define the output formats.

    """

    JSON: str = "json"
    CSV: str = "csv"


class CliConfiguration:
    """
    CLI Settings Class

    Description:
    - This class is used to define command defaults, CSV headers and exit
    codes.

    """

    PROGRAM_NAME: str = "ballvolume"

    DEFAULT_PRECISION: int = 15
    MIN_PRECISION: int = 1
    MAX_PRECISION: int = 17

    ALL_SUITES: str = "all"

    MAX_GRID_POINTS: int = 100_000
    MAX_HTTP_SAMPLES: int = 100_000

    EXIT_SUCCESS: int = 0
    EXIT_FAILURE: int = 1
    EXIT_USAGE: int = 2

    SHIFT_TARGETS: frozenset[str] = frozenset({"R", "T", "coboundary"})
    BOUND_TARGETS: frozenset[str] = frozenset({"sublevel"})

    EVAL_HEADER: tuple[str, ...] = (
        "target",
        "x",
        "r",
        "b",
        "value",
        "method",
        "error_estimate",
    )
    VERIFY_HEADER: tuple[str, ...] = (
        "suite",
        "samples",
        "seed",
        "tol",
        "max_relative_residual",
        "passed",
        "elapsed_ms",
    )


cli_configuration = CliConfiguration()
