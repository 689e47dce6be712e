"""
    CLI Pydantic Schemas

    Description:
    - This module contains command request, output format and record
    schemas.

"""

# Importing Python Packages
from pydantic import Field, model_validator

# Importing FastAPI Packages

# Importing Project Files
from apps.base import BaseDomainSchema
from .configuration import (
    EvalTarget,
    FormatKind,
    TableTarget,
    cli_configuration,
)
from .response_message import cli_response_message


# -----------------------------------------------------------------------------


class OutputFormat(BaseDomainSchema):
    """
    Output Format Schema

    Description:
    - This schema is used to select JSON or CSV and the number of
    significant digits printed.

    """

    format: FormatKind = Field(default=FormatKind.JSON)
    precision: int = Field(
        default=cli_configuration.DEFAULT_PRECISION,
        ge=cli_configuration.MIN_PRECISION,
        le=cli_configuration.MAX_PRECISION,
    )


class EvalRequest(BaseDomainSchema):
    """
    Eval Request Schema

    Description:
    - This schema is used to validate the arguments of eval.

    """

    target: EvalTarget = Field(examples=[EvalTarget.V])
    x: float = Field(gt=0, allow_inf_nan=False, examples=[2.0])
    r: float | None = Field(
        default=None, ge=0, allow_inf_nan=False, examples=[1.0]
    )
    b: float | None = Field(
        default=None, gt=0, allow_inf_nan=False, examples=[1.0]
    )

    @model_validator(mode="after")
    def check_required(self) -> "EvalRequest":
        if self.target.value in cli_configuration.SHIFT_TARGETS and (
            self.r is None
        ):
            raise ValueError(cli_response_message.SHIFT_REQUIRED)

        if self.target.value in cli_configuration.BOUND_TARGETS and (
            self.b is None
        ):
            raise ValueError(cli_response_message.BOUND_REQUIRED)

        return self


class TableRequest(BaseDomainSchema):
    """
    Table Request Schema

    Description:
    - This schema is used to validate the arguments of table.

    """

    target: TableTarget = Field(examples=[TableTarget.V])
    x_start: float = Field(gt=0, allow_inf_nan=False, examples=[1.0])
    x_end: float = Field(gt=0, allow_inf_nan=False, examples=[5.0])
    step: float = Field(gt=0, allow_inf_nan=False, examples=[1.0])
    r: float | None = Field(
        default=None, ge=0, allow_inf_nan=False, examples=[1.0]
    )

    @model_validator(mode="after")
    def check_grid(self) -> "TableRequest":
        if self.x_start > self.x_end:
            raise ValueError(cli_response_message.INVALID_RANGE)

        if (self.x_end - self.x_start) / self.step >= (
            cli_configuration.MAX_GRID_POINTS
        ):
            raise ValueError(
                f"{cli_response_message.GRID_TOO_LARGE} "
                f"({cli_configuration.MAX_GRID_POINTS})"
            )

        if self.target.value in cli_configuration.SHIFT_TARGETS and (
            self.r is None
        ):
            raise ValueError(cli_response_message.SHIFT_REQUIRED)

        return self


class EvalRecord(BaseDomainSchema):
    """
    Eval Record Schema

    Description:
    - This schema is used to return one evaluated quantity.
    - value is signed for the coboundary residual and positive otherwise.

    """

    target: EvalTarget
    inputs: dict[str, float]
    value: float
    method: str
    error_estimate: float = Field(ge=0)
