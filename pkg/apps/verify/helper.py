"""
    Verify Helper Module

    Description:
    - This module contains sample capture and report aggregation shared by
    the suites and the direct checks of other modules.

"""

# Importing Python Packages
import logging
import math
import time
from typing import Callable, Iterable
from pydantic import ValidationError

# Importing FastAPI Packages

# Importing Project Files
from core.exceptions import BallVolumeError
from .configuration import verify_configuration
from .response_message import verify_response_message
from .schema import VerificationReport, WorstCase


verify_helper_logger = logging.getLogger(__name__)


# -----------------------------------------------------------------------------


def evaluate_sample(
    inputs: Iterable[float], compute: Callable[[], float]
) -> WorstCase:
    """
    Evaluate Sample

    Description:
    - This function is used to run one sample and capture its residual or
    its error without aborting the run.

    Parameter:
    - **inputs** (ITERABLE): Sample inputs recorded in the report.
    **(Required)**
    - **compute** (CALLABLE): Returns the relative residual of the sample.
    **(Required)**

    Return:
    - **outcome** (WorstCase): Inputs with residual, or with error.

    """

    inputs = tuple(float(value) for value in inputs)

    try:
        residual: float = float(compute())

    except (
        BallVolumeError,
        ValidationError,
        ArithmeticError,
        ValueError,
    ) as err:
        verify_helper_logger.debug("Sample %s errored: %s", inputs, err)
        return WorstCase(inputs=inputs, error=f"{type(err).__name__}: {err}")

    if not math.isfinite(residual):
        return WorstCase(
            inputs=inputs, error=verify_response_message.NON_FINITE_RESIDUAL
        )

    return WorstCase(inputs=inputs, residual=abs(residual))


def _severity(outcome: WorstCase) -> tuple:
    if outcome.residual is None:
        return (0, 0.0, outcome.inputs)

    return (1, -outcome.residual, outcome.inputs)


def build_report(
    suite: str,
    seed: int,
    tol: float,
    outcomes: list[WorstCase],
    started: float,
) -> VerificationReport:
    """
    Build Report

    Description:
    - This function is used to aggregate sample outcomes into a report.
    - Aggregation depends only on the multiset of outcomes: the maximum and
    a canonically sorted worst-case list.

    Parameter:
    - **suite** (STR): Suite or check id. **(Required)**
    - **seed** (INT): Seed that produced the samples. **(Required)**
    - **tol** (FLOAT): Pass threshold on the relative residual.
    **(Required)**
    - **outcomes** (LIST): Sample outcomes. **(Required)**
    - **started** (FLOAT): time.perf_counter() at the start of the run.
    **(Required)**

    Return:
    - **report** (VerificationReport): Aggregated report.

    """

    residuals: list[float] = [
        outcome.residual
        for outcome in outcomes
        if outcome.residual is not None
    ]
    errored: bool = len(residuals) < len(outcomes)
    max_residual: float = max(residuals, default=0.0)
    worst: list[WorstCase] = sorted(outcomes, key=_severity)[
        : verify_configuration.WORST_CASE_COUNT
    ]
    passed: bool = not errored and max_residual <= tol

    if not passed:
        verify_helper_logger.info(
            "%s: %s (max residual %.3e, tol %.1e)",
            verify_response_message.SUITE_FAILED,
            suite,
            max_residual,
            tol,
        )

    return VerificationReport(
        suite=suite,
        samples=len(outcomes),
        seed=seed,
        tol=tol,
        max_relative_residual=max_residual,
        worst_cases=worst,
        passed=passed,
        elapsed_ms=(time.perf_counter() - started) * 1000.0,
    )
