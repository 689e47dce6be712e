"""
    CLI View Module

    Description:
    - This module is responsible for evaluating, tabulating and verifying
    on behalf of the command line and the HTTP mirror, and for rendering
    records as JSON or CSV.

"""

# Importing Python Packages
import csv
import io
import json
import logging
import math
from typing import Any, Callable

# Importing FastAPI Packages

# Importing Project Files
from apps.cocycles.view import cocycles_view
from apps.measures.schema import DimObject, HomogeneousRadialMeasure
from apps.measures.view import measures_view
from apps.observables.configuration import ObservableMethod
from apps.observables.schema import ObservableValue
from apps.observables.view import observables_view
from apps.verify.configuration import Suite
from apps.verify.schema import SuiteConfig, VerificationReport
from apps.verify.view import verify_view
from core.exceptions import DomainError
from core.helper import format_significant
from .configuration import (
    EvalTarget,
    FormatKind,
    TableTarget,
    cli_configuration,
)
from .response_message import cli_response_message
from .schema import EvalRecord, EvalRequest, OutputFormat, TableRequest


cli_logger = logging.getLogger(__name__)


# -----------------------------------------------------------------------------


def _mellin_gamma_measure(x: float) -> HomogeneousRadialMeasure:
    return measures_view.functor_object(
        measures_view.mellin_gamma_functor(), DimObject(x=x)
    )


EVALUATORS: dict[EvalTarget, Callable[[EvalRequest], Any]] = {
    EvalTarget.V: lambda request: observables_view.ball_volume_V(request.x),
    EvalTarget.R: lambda request: cocycles_view.radial_cocycle_R(
        request.x, request.r
    ),
    EvalTarget.T: lambda request: cocycles_view.ball_cocycle_T(
        request.x, request.r
    ),
    EvalTarget.COBOUNDARY: lambda request: cocycles_view.coboundary_residual(
        request.x, request.r
    ),
    EvalTarget.B: lambda request: observables_view.unit_interval_observable(
        _mellin_gamma_measure(request.x)
    ),
    EvalTarget.GAUSSIAN: lambda request: observables_view.gaussian_observable(
        _mellin_gamma_measure(request.x)
    ),
    EvalTarget.SUBLEVEL: lambda request: observables_view.sublevel_mass(
        _mellin_gamma_measure(request.x), request.b
    ),
    EvalTarget.S: lambda request: observables_view.unit_sphere_area(
        request.x
    ),
}

TABULATORS: dict[TableTarget, Callable[[float, float | None], float]] = {
    TableTarget.V: lambda x, r: observables_view.ball_volume_V(x),
    TableTarget.R: cocycles_view.radial_cocycle_R,
    TableTarget.T: cocycles_view.ball_cocycle_T,
}


def evaluate(request: EvalRequest) -> EvalRecord:
    """
    Evaluate

    Description:
    - This function is used to evaluate one target.

    Parameter:
    - **request** (EvalRequest): Validated eval arguments. **(Required)**

    Return:
    - **record** (EvalRecord): Target, inputs, value, method and error
    estimate.

    """
    cli_logger.debug("Calling evaluate method for %s", request.target.value)

    result: ObservableValue | float = EVALUATORS[request.target](request)
    inputs: dict[str, float] = {
        name: value
        for name, value in (
            ("x", request.x),
            ("r", request.r),
            ("b", request.b),
        )
        if value is not None
    }

    if isinstance(result, ObservableValue):
        return EvalRecord(
            target=request.target,
            inputs=inputs,
            value=result.value,
            method=result.method.value,
            error_estimate=result.error_estimate,
        )

    return EvalRecord(
        target=request.target,
        inputs=inputs,
        value=result,
        method=ObservableMethod.CLOSED_FORM.value,
        error_estimate=0.0,
    )


def grid(x_start: float, x_end: float, step: float) -> list[float]:
    """
    Grid

    Description:
    - This function is used to build x_start, x_start + step, ... with the
    last point <= x_end + step / 2.
    - Points are x_start + i * step, not a running sum.

    Parameter:
    - **x_start** (FLOAT): First point. **(Required)**
    - **x_end** (FLOAT): End of the range. **(Required)**
    - **step** (FLOAT): Spacing, > 0. **(Required)**

    Return:
    - **points** (LIST): Grid points.

    """

    count: int = math.floor((x_end - x_start) / step + 0.5) + 1
    points: list[float] = [x_start + index * step for index in range(count)]

    return [point for point in points if point <= x_end + step / 2.0]


def tabulate(request: TableRequest) -> list[dict[str, float]]:
    """
    Tabulate

    Description:
    - This function is used to evaluate a target on the x grid.

    Parameter:
    - **request** (TableRequest): Validated table arguments. **(Required)**

    Return:
    - **rows** (LIST): Records {x, value} or {x, r, value}.

    """
    cli_logger.debug("Calling tabulate method for %s", request.target.value)

    compute = TABULATORS[request.target]
    rows: list[dict[str, float]] = []

    for x in grid(request.x_start, request.x_end, request.step):
        row: dict[str, float] = {"x": x}

        if request.target is not TableTarget.V:
            row["r"] = request.r

        row["value"] = compute(x, request.r)
        rows.append(row)

    return rows


def verify(
    suite: str,
    seed: int,
    samples: int | None = None,
    tol: float | None = None,
) -> list[VerificationReport]:
    """
    Verify

    Description:
    - This function is used to run one suite, or every suite for "all",
    from the default configs with optional samples and tol overrides.

    Parameter:
    - **suite** (STR): Suite id or "all". **(Required)**
    - **seed** (INT): Unsigned 64-bit seed. **(Required)**
    - **samples** (INT): Sample count override. **(Optional)**
    - **tol** (FLOAT): Tolerance override. **(Optional)**

    Return:
    - **reports** (LIST): Suite reports.

    """
    cli_logger.debug("Calling verify method for %s", suite)

    if suite == cli_configuration.ALL_SUITES:
        suites: list[Suite] = list(Suite)

    else:
        try:
            suites = [Suite(suite)]

        except ValueError as err:
            raise DomainError(
                f"{cli_response_message.UNKNOWN_SUITE}, got {suite!r}"
            ) from err

    return [
        verify_view.run_suite(
            SuiteConfig.default(item, seed, samples=samples, tol=tol)
        )
        for item in suites
    ]


def _round(payload: Any, precision: int) -> Any:
    if isinstance(payload, bool):
        return payload

    if isinstance(payload, float):
        return format_significant(payload, precision)

    if isinstance(payload, dict):
        return {
            key: _round(value, precision) for key, value in payload.items()
        }

    if isinstance(payload, (list, tuple)):
        return [_round(value, precision) for value in payload]

    return payload


def eval_payload(record: EvalRecord, precision: int) -> dict[str, Any]:
    return _round(record.model_dump(mode="json"), precision)


def table_payload(
    rows: list[dict[str, float]], precision: int
) -> list[dict[str, float]]:
    return _round(rows, precision)


def verify_payload(
    reports: list[VerificationReport], precision: int
) -> list[dict[str, Any]]:
    return [_round(report.to_record(), precision) for report in reports]


def render_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, allow_nan=False) + "\n"


def render_csv(header: tuple[str, ...], rows: list[dict[str, Any]]) -> str:
    """
    Render CSV

    Description:
    - This function is used to write rows with a header line, CRLF line
    endings and '.' decimals; missing fields are left empty.

    Parameter:
    - **header** (TUPLE): Column names. **(Required)**
    - **rows** (LIST): Row records. **(Required)**

    Return:
    - **text** (STR): CSV document.

    """

    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=header, restval="")
    writer.writeheader()

    for row in rows:
        writer.writerow(
            {
                key: str(value).lower() if isinstance(value, bool) else value
                for key, value in row.items()
                if key in header
            }
        )

    return buffer.getvalue()


def render_eval(record: EvalRecord, fmt: OutputFormat) -> str:
    payload: dict[str, Any] = eval_payload(record, fmt.precision)

    if fmt.format is FormatKind.JSON:
        return render_json(payload)

    row: dict[str, Any] = {
        key: value for key, value in payload.items() if key != "inputs"
    }
    row.update(payload["inputs"])

    return render_csv(cli_configuration.EVAL_HEADER, [row])


def render_table(
    request: TableRequest, rows: list[dict[str, float]], fmt: OutputFormat
) -> str:
    payload: list[dict[str, float]] = table_payload(rows, fmt.precision)

    if fmt.format is FormatKind.JSON:
        return render_json(payload)

    header: tuple[str, ...] = (
        ("x", "value")
        if request.target is TableTarget.V
        else ("x", "r", "value")
    )

    return render_csv(header, payload)


def render_reports(
    reports: list[VerificationReport], fmt: OutputFormat
) -> str:
    payload: list[dict[str, Any]] = verify_payload(reports, fmt.precision)

    if fmt.format is FormatKind.JSON:
        return render_json(payload)

    return render_csv(cli_configuration.VERIFY_HEADER, payload)


class CliView:
    """
    CLI View Class

    Description:
    - This class is responsible for the views shared by the command line and
    the HTTP mirror.

    """

    evaluate = staticmethod(evaluate)
    tabulate = staticmethod(tabulate)
    verify = staticmethod(verify)
    eval_payload = staticmethod(eval_payload)
    table_payload = staticmethod(table_payload)
    verify_payload = staticmethod(verify_payload)
    render_eval = staticmethod(render_eval)
    render_table = staticmethod(render_table)
    render_reports = staticmethod(render_reports)


cli_view = CliView()
