"""
    Quadrature View Module

    Description:
    - This module is responsible for adaptive Gauss-Kronrod integration.
    - Half-line integrals substitute u = exp(t), which turns the u^p
    behavior at zero into exponential decay in t, and truncate the real line
    geometrically.

"""

# Importing Python Packages
import heapq
import logging
import math
from typing import Callable
import numpy as np

# Importing FastAPI Packages

# Importing Project Files
from core.exceptions import ConvergenceError, DomainError
from .configuration import quadrature_configuration
from .response_message import quadrature_response_message
from .schema import Integrand, QuadratureResult


quadrature_logger = logging.getLogger(__name__)

_kronrod: np.ndarray = quadrature_configuration.KRONROD_NODES
_kronrod_weights: np.ndarray = quadrature_configuration.KRONROD_WEIGHTS

# 15 abscissae on [-1, 1] in ascending order with matching weights
NODES: np.ndarray = np.concatenate(
    (-_kronrod[:7], _kronrod[7:], _kronrod[6::-1])
)
WEIGHTS_KRONROD: np.ndarray = np.concatenate(
    (_kronrod_weights[:7], _kronrod_weights[7:], _kronrod_weights[6::-1])
)
WEIGHTS_GAUSS: np.ndarray = np.zeros(15)
for _index, _position in enumerate((1, 3, 5)):
    WEIGHTS_GAUSS[_position] = quadrature_configuration.GAUSS_WEIGHTS[_index]
    WEIGHTS_GAUSS[14 - _position] = quadrature_configuration.GAUSS_WEIGHTS[
        _index
    ]
WEIGHTS_GAUSS[7] = quadrature_configuration.GAUSS_WEIGHTS[3]


# -----------------------------------------------------------------------------


def _check_tolerances(abs_tol: float, rel_tol: float) -> None:
    if not (abs_tol > 0.0 and rel_tol > 0.0):
        raise DomainError(quadrature_response_message.INVALID_TOLERANCE)


def _guarded(function: Callable[[float], float]) -> Callable[[float], float]:
    """
    Wrap an integrand so that overflow or a non-finite value becomes a
    DomainError naming the offending point.

    """

    def evaluate(u: float) -> float:
        try:
            value: float = float(function(u))

        except (OverflowError, ZeroDivisionError) as err:
            raise DomainError(
                f"{quadrature_response_message.NON_FINITE_INTEGRAND}{u!r}"
            ) from err

        if not math.isfinite(value):
            raise DomainError(
                f"{quadrature_response_message.NON_FINITE_INTEGRAND}{u!r}"
            )

        return value

    return evaluate


def _substituted(f: Integrand) -> Callable[[float], float]:
    """
    Integrand in t = ln(u): g(t) = f(exp(t)) * exp(t).

    """

    evaluate = _guarded(f.function)

    def g(t: float) -> float:
        u: float = math.exp(t)
        return evaluate(u) * u

    return g


def kronrod_panel(
    g: Callable[[float], float], lo: float, hi: float
) -> tuple[float, float, float]:
    """
    Kronrod Panel

    Description:
    - This function is used to apply the 15-point Kronrod rule on one panel
    with the QUADPACK error estimate against the embedded 7-point Gauss rule.

    Parameter:
    - **g** (Callable): Integrand. **(Required)**
    - **lo** (FLOAT): Left end. **(Required)**
    - **hi** (FLOAT): Right end. **(Required)**

    Return:
    - **value** (FLOAT): Kronrod estimate.
    - **error** (FLOAT): Error estimate.
    - **magnitude** (FLOAT): Integral of |g| on the panel.

    """

    center: float = 0.5 * (lo + hi)
    half: float = 0.5 * (hi - lo)
    values: np.ndarray = np.fromiter(
        (g(float(t)) for t in center + half * NODES), dtype=float, count=15
    )

    kronrod: float = float(WEIGHTS_KRONROD @ values)
    gauss: float = float(WEIGHTS_GAUSS @ values)
    mean: float = 0.5 * kronrod

    magnitude: float = float(WEIGHTS_KRONROD @ np.abs(values)) * abs(half)
    spread: float = float(WEIGHTS_KRONROD @ np.abs(values - mean)) * abs(half)
    error: float = abs((kronrod - gauss) * half)

    if spread != 0.0 and error != 0.0:
        error = spread * min(1.0, (200.0 * error / spread) ** 1.5)

    epsilon: float = quadrature_configuration.EPSILON
    if magnitude > quadrature_configuration.UNDERFLOW / (50.0 * epsilon):
        error = max(50.0 * epsilon * magnitude, error)

    return kronrod * half, error, magnitude


def _adaptive(
    g: Callable[[float], float],
    intervals: list[tuple[float, float]],
    abs_tol: float,
    rel_tol: float,
) -> tuple[float, float, int, bool]:
    """
    Globally adaptive bisection: always split the panel with the largest
    error until the summed error meets max(abs_tol, rel_tol * |value|).

    """

    heap: list[tuple[float, float, float, float]] = []
    total: float = 0.0
    error: float = 0.0

    for lo, hi in intervals:
        value, panel_error, _ = kronrod_panel(g, lo, hi)
        heapq.heappush(heap, (-panel_error, lo, hi, value))
        total += value
        error += panel_error

    subdivisions: int = 0
    converged: bool = False

    while True:
        if error <= max(abs_tol, rel_tol * abs(total)):
            converged = True
            break

        if subdivisions >= quadrature_configuration.MAX_SUBDIVISIONS:
            break

        negative_error, lo, hi, value = heapq.heappop(heap)
        middle: float = 0.5 * (lo + hi)

        if not lo < middle < hi:
            heapq.heappush(heap, (negative_error, lo, hi, value))
            break

        total -= value
        error += negative_error

        for left, right in ((lo, middle), (middle, hi)):
            part, part_error, _ = kronrod_panel(g, left, right)
            heapq.heappush(heap, (-part_error, left, right, part))
            total += part
            error += part_error

        subdivisions += 1

    total = math.fsum(item[3] for item in heap)
    error = math.fsum(-item[0] for item in heap)

    return total, error, subdivisions, converged


def _expand(
    g: Callable[[float], float],
    start: float,
    direction: float,
    limit: float,
    reference: float,
    tolerances: tuple[float, float],
    tail: Callable[[float], float] | None = None,
) -> tuple[list[tuple[float, float]], float, float, float, bool]:
    """
    Grow panels of doubling width away from start until the remainder falls
    below TRUNCATION_FRACTION of the tolerance or the limit is reached.

    Without a tail model the remainder is dropped and bounded by the last
    panel's magnitude. With one, tail(outer) is the analytic remainder past
    the last panel; it is bounded by its size times the relative mismatch
    between the model and the last panel, or by the last panel when the
    model misses it entirely. Returns the panels, their summed
    value, the analytic remainder, the remainder bound, and whether
    truncation succeeded.

    """

    abs_tol, rel_tol = tolerances
    panels: list[tuple[float, float]] = []
    running: float = reference
    inner: float = start
    width: float = 1.0

    while True:
        outer: float = inner + direction * width
        outer = max(outer, limit) if direction < 0 else min(outer, limit)

        lo, hi = (outer, inner) if direction < 0 else (inner, outer)
        value, error, magnitude = kronrod_panel(g, lo, hi)
        panels.append((lo, hi))
        running += value

        if tail is None:
            correction: float = 0.0
            remainder: float = magnitude

        else:
            correction = tail(outer)
            mismatch: float = (
                abs(value - (tail(inner) - correction)) / magnitude
                if magnitude > 0.0
                else 0.0
            )
            remainder = (
                abs(correction) * mismatch
                if mismatch < 1.0
                else max(abs(correction), magnitude)
            )

        threshold: float = quadrature_configuration.TRUNCATION_FRACTION * max(
            abs_tol, rel_tol * abs(running + correction)
        )

        if tail is None and magnitude + error < threshold:
            return panels, running - reference, correction, remainder, True

        if tail is not None and remainder + error < threshold:
            return panels, running - reference, correction, remainder, True

        if outer == limit:
            return panels, running - reference, correction, remainder, False

        inner = outer
        width *= 2.0


def _power_tail(
    g: Callable[[float], float], order: float
) -> Callable[[float], float]:
    """
    Integral of g below t when g(t) ~ C exp((p + 1) t).

    """

    return lambda t: g(t) / (order + 1.0)


def integrate_half_line(
    f: Integrand,
    abs_tol: float = quadrature_configuration.ABS_TOL,
    rel_tol: float = quadrature_configuration.REL_TOL,
) -> QuadratureResult:
    """
    Integrate Half Line

    Description:
    - This function is used to integrate f over (0, inf).
    - The caller asserts decay at infinity; the behavior u^p at zero comes
    from the integrand.
    - When converged, |value - integral| <= max(abs_tol, rel_tol * |value|).

    Parameter:
    - **f** (Integrand): Integrand with singularity order p > -1.
    **(Required)**
    - **abs_tol** (FLOAT): Absolute tolerance. **(Optional)**
    - **rel_tol** (FLOAT): Relative tolerance. **(Optional)**

    Return:
    - **result** (QuadratureResult): Value, error estimate, subdivisions and
    convergence flag.

    """
    quadrature_logger.debug("Calling integrate_half_line method")

    _check_tolerances(abs_tol, rel_tol)

    g = _substituted(f)
    tolerances: tuple[float, float] = (abs_tol, rel_tol)
    start: float = quadrature_configuration.T_START
    core, _, _ = kronrod_panel(g, -start, start)

    lower, lower_value, lower_correction, lower_bound, lower_ok = _expand(
        g,
        -start,
        -1.0,
        quadrature_configuration.T_MIN,
        core,
        tolerances,
        tail=_power_tail(g, f.singularity_order_at_zero),
    )
    upper, _, _, upper_bound, upper_ok = _expand(
        g,
        start,
        1.0,
        quadrature_configuration.T_MAX,
        core + lower_value + lower_correction,
        tolerances,
    )

    intervals: list[tuple[float, float]] = (
        lower[::-1] + [(-start, start)] + upper
    )
    value, error, subdivisions, converged = _adaptive(
        g, intervals, abs_tol, rel_tol
    )

    if not (lower_ok and upper_ok):
        quadrature_logger.warning(
            quadrature_response_message.TRUNCATION_NOT_CONVERGED
        )

    return QuadratureResult(
        value=value + lower_correction,
        error_estimate=error + lower_bound + upper_bound,
        subdivisions_used=subdivisions,
        converged=converged and lower_ok and upper_ok,
    )


def integrate_interval(
    f: Integrand,
    lo: float,
    hi: float,
    abs_tol: float = quadrature_configuration.ABS_TOL,
    rel_tol: float = quadrature_configuration.REL_TOL,
) -> QuadratureResult:
    """
    Integrate Interval

    Description:
    - This function is used to integrate f over (lo, hi).
    - lo = 0 uses the u = exp(t) substitution so a u^p singularity is
    integrated exactly like on the half line; lo > 0 integrates directly.

    Parameter:
    - **f** (Integrand): Integrand. **(Required)**
    - **lo** (FLOAT): Left end, lo >= 0. **(Required)**
    - **hi** (FLOAT): Right end, lo < hi < inf. **(Required)**
    - **abs_tol** (FLOAT): Absolute tolerance. **(Optional)**
    - **rel_tol** (FLOAT): Relative tolerance. **(Optional)**

    Return:
    - **result** (QuadratureResult): Value, error estimate, subdivisions and
    convergence flag.

    """
    quadrature_logger.debug("Calling integrate_interval method")

    _check_tolerances(abs_tol, rel_tol)

    if not (0.0 <= lo < hi < math.inf):
        raise DomainError(
            f"{quadrature_response_message.INVALID_INTERVAL}, "
            f"got ({lo!r}, {hi!r})"
        )

    start: float = math.log(hi)

    if lo > 0.0 or start - 1.0 <= quadrature_configuration.T_MIN:
        value, error, subdivisions, converged = _adaptive(
            _guarded(f.function), [(lo, hi)], abs_tol, rel_tol
        )
        return QuadratureResult(
            value=value,
            error_estimate=error,
            subdivisions_used=subdivisions,
            converged=converged,
        )

    g = _substituted(f)
    lower, _, lower_correction, lower_bound, lower_ok = _expand(
        g,
        start,
        -1.0,
        quadrature_configuration.T_MIN,
        0.0,
        (abs_tol, rel_tol),
        tail=_power_tail(g, f.singularity_order_at_zero),
    )
    value, error, subdivisions, converged = _adaptive(
        g, lower[::-1], abs_tol, rel_tol
    )

    return QuadratureResult(
        value=value + lower_correction,
        error_estimate=error + lower_bound,
        subdivisions_used=subdivisions,
        converged=converged and lower_ok,
    )


def converged_value(result: QuadratureResult) -> float:
    """
    Converged Value

    Description:
    - This function is used by callers that need a value to turn
    non-convergence into ConvergenceError.

    Parameter:
    - **result** (QuadratureResult): Quadrature result. **(Required)**

    Return:
    - **value** (FLOAT): result.value.

    """

    if not result.converged:
        raise ConvergenceError(
            f"{quadrature_response_message.NOT_CONVERGED}: value "
            f"{result.value!r}, error estimate {result.error_estimate!r}, "
            f"{result.subdivisions_used} subdivisions"
        )

    return result.value


class QuadratureView:
    """
    Quadrature View Class

    Description:
    - This class is responsible for the quadrature views.

    """

    kronrod_panel = staticmethod(kronrod_panel)
    integrate_half_line = staticmethod(integrate_half_line)
    integrate_interval = staticmethod(integrate_interval)
    converged_value = staticmethod(converged_value)


quadrature_view = QuadratureView()
