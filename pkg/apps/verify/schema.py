"""
    Verify Pydantic Schemas

    Description:
    - This module contains suite configuration and report schemas.

"""

# Importing Python Packages
from typing import Any
from pydantic import Field, model_validator

# Importing FastAPI Packages

# Importing Project Files
from apps.base import BaseDomainSchema
from .configuration import Suite, verify_configuration
from .response_message import verify_response_message


# -----------------------------------------------------------------------------


class SuiteConfig(BaseDomainSchema):
    """
    Suite Config Schema

    Description:
    - This schema is used to describe one suite run.

    """

    suite: Suite = Field(examples=[Suite.COBOUNDARY])
    samples: int = Field(ge=1, examples=[10_000])
    seed: int = Field(
        default=verify_configuration.DEFAULT_SEED,
        ge=0,
        lt=verify_configuration.SEED_LIMIT,
    )
    tol: float = Field(gt=0, allow_inf_nan=False, examples=[1e-10])
    x_range: tuple[float, float] = Field(examples=[(0.05, 50.0)])
    r_range: tuple[float, float] = Field(examples=[(0.0, 10.0)])

    @model_validator(mode="after")
    def check_ranges(self) -> "SuiteConfig":
        """
        Check Ranges

        Description:
        - This method is used to reject empty or non-positive ranges.

        """

        x_low, x_high = self.x_range
        r_low, r_high = self.r_range

        if not 0.0 < x_low <= x_high < float("inf"):
            raise ValueError(verify_response_message.INVALID_X_RANGE)

        if not 0.0 <= r_low <= r_high < float("inf"):
            raise ValueError(verify_response_message.INVALID_R_RANGE)

        return self

    @classmethod
    def default(
        cls,
        suite: Suite,
        seed: int = verify_configuration.DEFAULT_SEED,
        **overrides: Any,
    ) -> "SuiteConfig":
        """
        Default

        Description:
        - This method is used to build the documented default config of a
        suite, optionally overriding samples or tol.

        Parameter:
        - **suite** (Suite): Suite id. **(Required)**
        - **seed** (INT): Generator seed. **(Optional)**
        - **overrides** (DICT): Field overrides; None values are ignored.
        **(Optional)**

        Return:
        - **config** (SuiteConfig): Suite config.

        """

        fields: dict[str, Any] = dict(
            verify_configuration.SUITE_DEFAULTS[Suite(suite)]
        )
        fields.update(
            {
                key: value
                for key, value in overrides.items()
                if value is not None
            }
        )

        return cls(suite=suite, seed=seed, **fields)


class WorstCase(BaseDomainSchema):
    """
    Worst Case Schema

    Description:
    - This schema is used to record the inputs of one sample and its
    relative residual; residual is None when the sample errored.

    """

    inputs: tuple[float, ...]
    residual: float | None = Field(default=None, ge=0)
    error: str | None = None


class VerificationReport(BaseDomainSchema):
    """
    Verification Report Schema

    Description:
    - This schema is used to return the outcome of a property check.
    - passed holds iff max_relative_residual <= tol and no sample errored.

    """

    suite: str
    samples: int = Field(ge=0)
    seed: int = Field(ge=0, lt=verify_configuration.SEED_LIMIT)
    tol: float = Field(gt=0)
    max_relative_residual: float = Field(ge=0)
    worst_cases: list[WorstCase]
    passed: bool
    elapsed_ms: float = Field(ge=0)

    def to_record(self) -> dict[str, Any]:
        """
        To Record

        Description:
        - This method is used to serialize the report with its fixed field
        order; error appears on a worst case only when the sample errored.

        Return:
        - **record** (DICT): JSON-ready report.

        """

        record: dict[str, Any] = self.model_dump(mode="json")
        record["worst_cases"] = [
            {
                "inputs": list(case.inputs),
                "residual": case.residual,
                **({"error": case.error} if case.error is not None else {}),
            }
            for case in self.worst_cases
        ]

        return record
