"""
    Cocycles Tests

    Description:
    - Checks the R and T cocycles, the cocycle identity and the beta
    coboundary relating them.

"""

# Importing Python Packages
import math
import pytest
from hypothesis import given, strategies as st

# Importing FastAPI Packages

# Importing Project Files
from apps.cocycles.configuration import CocycleKind
from apps.cocycles.view import (
    ball_cocycle_T,
    beta,
    coboundary_form_residual,
    coboundary_residual,
    cocycle,
    cocycle_residual,
    cocycles_view,
    evaluate_cocycle,
    radial_cocycle_R,
)
from apps.measures.schema import DimObject, DimShift
from apps.measures.view import functor_morphism, mellin_gamma_functor
from core.exceptions import DomainError, GammaUnderflowError


# -----------------------------------------------------------------------------


dimensions = st.floats(min_value=0.05, max_value=50.0)
shifts = st.floats(min_value=0.0, max_value=10.0)


@pytest.mark.parametrize(
    "function, x, r, expected",
    [
        (radial_cocycle_R, 2.0, 1.0, math.pi),
        (ball_cocycle_T, 2.0, 1.0, math.pi / 2.0),
        (radial_cocycle_R, 1.0, 0.5, math.pi),
        (ball_cocycle_T, 1.0, 0.5, math.pi / 2.0),
        (ball_cocycle_T, 3.0, 0.5, 3.0 * math.pi / 8.0),
    ],
)
def test_cocycle_examples(function, x, r, expected):
    assert function(x, r) == pytest.approx(expected, rel=1e-13)


@given(dimensions)
def test_zero_shift_is_exactly_one(x):
    assert radial_cocycle_R(x, 0.0) == 1.0
    assert ball_cocycle_T(x, 0.0) == 1.0


@pytest.mark.parametrize("kind", list(CocycleKind))
@given(x=dimensions, r=shifts, s=shifts)
def test_cocycle_identity(kind, x, r, s):
    residual = cocycle_residual(kind, x, r, s)

    assert abs(residual) <= 1e-10 * cocycle(kind, x, r + s)


@given(dimensions, shifts)
def test_coboundary_relation(x, r):
    assert abs(coboundary_residual(x, r)) <= 1e-11 * (1.0 + (x + 2 * r) / x)
    assert abs(coboundary_form_residual(x, r)) <= (
        1e-11 * ball_cocycle_T(x, r)
    )


def test_coboundary_examples():
    assert coboundary_residual(2.0, 1.0) == pytest.approx(0.0, abs=1e-14)
    assert beta(3.5) == 3.5


@given(dimensions, shifts)
def test_radial_cocycle_is_functor_morphism(x, r):
    morphism = functor_morphism(
        mellin_gamma_functor(), DimShift(source=DimObject(x=x), r=r)
    )

    assert radial_cocycle_R(x, r) == pytest.approx(morphism.A, rel=1e-12)


@pytest.mark.parametrize(
    "x, r",
    [(0.0, 1.0), (-2.0, 1.0), (math.nan, 1.0), (2.0, -1.0), (2.0, math.inf)],
)
def test_invalid_arguments(x, r):
    with pytest.raises(DomainError):
        radial_cocycle_R(x, r)

    with pytest.raises(DomainError):
        ball_cocycle_T(x, r)


def test_invalid_beta_and_second_shift():
    with pytest.raises(DomainError):
        beta(0.0)

    with pytest.raises(DomainError):
        cocycle_residual(CocycleKind.R, 1.0, 1.0, -1.0)

def test_evaluate_cocycle():
    evaluation = evaluate_cocycle(CocycleKind.T, 2.0, 1.0)

    assert evaluation.kind is CocycleKind.T
    assert (evaluation.x, evaluation.r) == (2.0, 1.0)
    assert evaluation.value == pytest.approx(math.pi / 2.0, rel=1e-13)


@pytest.mark.parametrize("kind", [CocycleKind.R, CocycleKind.T])
def test_cocycle_underflow_raises(kind):
    with pytest.raises(GammaUnderflowError):
        cocycle(kind, 2.0, 600.0)


def test_cocycles_view_delegates():
    assert cocycles_view.radial_cocycle_R(2.0, 1.0) == radial_cocycle_R(
        2.0, 1.0
    )
    assert cocycles_view.ball_cocycle_T(2.0, 1.0) == ball_cocycle_T(2.0, 1.0)
    assert cocycles_view.beta(3.5) == beta(3.5)
