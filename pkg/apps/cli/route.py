"""
    CLI Route Module

    Description:
    - This module is responsible for the HTTP mirror of the eval, table and
    verify commands.
    - Responses carry the same records as the JSON output of the command.
    - Handlers are plain functions, so FastAPI runs them in its threadpool.

"""

# Importing Python Packages
from typing import Any

# Importing FastAPI Packages
from fastapi import APIRouter, Query, status

# Importing Project Files
from .configuration import EvalTarget, TableTarget, cli_configuration
from .schema import EvalRequest, OutputFormat, TableRequest
from .view import cli_view

# Router Object to Create Routes
router = APIRouter(tags=["Ball Volume"])


# -----------------------------------------------------------------------------


# Evaluate a single quantity route
@router.get(
    path="/eval/{target}",
    status_code=status.HTTP_200_OK,
    summary="Evaluate a single quantity",
    response_description="Quantity evaluated successfully",
)
def eval_target(
    target: EvalTarget,
    x: float,
    r: float | None = None,
    b: float | None = None,
    precision: int = Query(default=cli_configuration.DEFAULT_PRECISION),
) -> dict[str, Any]:
    """
    Evaluate a single quantity

    Description:
    - This route is used to evaluate V, R, T, coboundary, B, gaussian,
    sublevel or S.

    Parameter:
    - **target** (STR): Quantity to evaluate. **(Required)**
    - **x** (FLOAT): Dimension, x > 0. **(Required)**
    - **r** (FLOAT): Shift, required for R, T and coboundary.
    **(Optional)**
    - **b** (FLOAT): Bound, required for sublevel. **(Optional)**
    - **precision** (INT): Significant digits, 1 to 17. **(Optional)**

    Return:
    Evaluated quantity with following information:
    - **target** (STR): Quantity evaluated.
    - **inputs** (DICT): Inputs given.
    - **value** (FLOAT): Value.
    - **method** (STR): closed_form or quadrature.
    - **error_estimate** (FLOAT): Error estimate.

    """

    fmt = OutputFormat(precision=precision)
    record = cli_view.evaluate(EvalRequest(target=target, x=x, r=r, b=b))

    return cli_view.eval_payload(record, fmt.precision)


# Tabulate a quantity route
@router.get(
    path="/table/{target}",
    status_code=status.HTTP_200_OK,
    summary="Tabulate a quantity over an x grid",
    response_description="Table generated successfully",
)
def table_target(
    target: TableTarget,
    x_start: float,
    x_end: float,
    step: float,
    r: float | None = None,
    precision: int = Query(default=cli_configuration.DEFAULT_PRECISION),
) -> list[dict[str, float]]:
    """
    Tabulate a quantity

    Description:
    - This route is used to tabulate V, R or T on x_start, x_start + step,
    ... up to x_end.

    Parameter:
    - **target** (STR): Quantity to tabulate. **(Required)**
    - **x_start** (FLOAT): First point. **(Required)**
    - **x_end** (FLOAT): End of the range. **(Required)**
    - **step** (FLOAT): Spacing. **(Required)**
    - **r** (FLOAT): Shift, required for R and T. **(Optional)**
    - **precision** (INT): Significant digits, 1 to 17. **(Optional)**

    Return:
    - **rows** (LIST): Records {x, value} or {x, r, value}.

    """

    fmt = OutputFormat(precision=precision)
    request = TableRequest(
        target=target, x_start=x_start, x_end=x_end, step=step, r=r
    )

    return cli_view.table_payload(cli_view.tabulate(request), fmt.precision)


# Run verification suites route
@router.get(
    path="/verify/{suite}",
    status_code=status.HTTP_200_OK,
    summary="Run a verification suite or all suites",
    response_description="Suites run successfully",
)
def verify_suite(
    suite: str,
    seed: int = 0,
    samples: int | None = Query(
        default=None, ge=1, le=cli_configuration.MAX_HTTP_SAMPLES
    ),
    tol: float | None = None,
    precision: int = Query(default=cli_configuration.DEFAULT_PRECISION),
) -> list[dict[str, Any]]:
    """
    Run verification suites

    Description:
    - This route is used to run one suite, or every suite for "all".

    Parameter:
    - **suite** (STR): Suite id or "all". **(Required)**
    - **seed** (INT): Unsigned 64-bit seed. **(Optional)**
    - **samples** (INT): Sample count override, at most MAX_HTTP_SAMPLES.
    **(Optional)**
    - **tol** (FLOAT): Tolerance override. **(Optional)**
    - **precision** (INT): Significant digits, 1 to 17. **(Optional)**

    Return:
    - **reports** (LIST): Reports with suite, samples, seed, tol,
    max_relative_residual, worst_cases, passed and elapsed_ms.

    """

    fmt = OutputFormat(precision=precision)

    return cli_view.verify_payload(
        cli_view.verify(suite, seed, samples, tol), fmt.precision
    )
