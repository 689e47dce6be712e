"""
    Observables Tests

    Description:
    - Checks the ball volume, sublevel masses and the Gaussian observables,
    including the quadrature cross-checks.

"""

# Importing Python Packages
import math
import pytest
from hypothesis import given, strategies as st

# Importing FastAPI Packages

# Importing Project Files
from apps.cocycles.view import ball_cocycle_T
from apps.measures.schema import HomogeneousRadialMeasure
from apps.observables.configuration import ObservableMethod
from apps.observables.view import (
    ball_volume_peak,
    ball_volume_V,
    euclidean_gaussian_integral,
    gaussian_observable,
    gaussian_partial_observable,
    is_unimodal,
    observables_view,
    sublevel_mass,
    transport_consistency,
    unit_interval_observable,
    unit_sphere_area,
)
from core.exceptions import (
    DomainError,
    GammaOverflowError,
    GammaUnderflowError,
)


# -----------------------------------------------------------------------------


@pytest.mark.parametrize(
    "x, expected",
    [
        (1.0, 2.0),
        (2.0, math.pi),
        (3.0, 4.0 * math.pi / 3.0),
        (4.0, math.pi**2 / 2.0),
        (5.0, 8.0 * math.pi**2 / 15.0),
    ],
)
def test_ball_volume_golden_values(x, expected):
    assert ball_volume_V(x) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("x", [0.0, -1.0, math.nan, math.inf])
def test_ball_volume_rejects_bad_dimension(x):
    with pytest.raises(DomainError):
        ball_volume_V(x)


@pytest.mark.parametrize("x", [440.0, 2000.0, 1e4])
def test_ball_volume_underflow_raises(x):
    with pytest.raises(GammaUnderflowError):
        ball_volume_V(x)


def test_ball_volume_large_dimension_stays_positive():
    assert 0.0 < ball_volume_V(400.0) < 1e-270
    assert ball_volume_V(400.0) == pytest.approx(
        math.exp(200.0 * math.log(math.pi) - math.lgamma(201.0)), rel=1e-11
    )


def test_unit_interval_observable_underflow_raises(mellin_measure):
    with pytest.raises(GammaUnderflowError):
        unit_interval_observable(mellin_measure(2000.0))


def test_large_dimension_observables_use_log_coefficient(mellin_measure):
    m = mellin_measure(1200.0)

    assert m.is_log_scale
    assert gaussian_observable(m).value == pytest.approx(
        math.exp(600.0 * math.log(math.pi)), rel=1e-10
    )
    assert sublevel_mass(m, 100.0).value == pytest.approx(
        math.exp(
            600.0 * math.log(math.pi)
            - math.lgamma(600.0)
            + math.log(2.0 / 1200.0)
            + 600.0 * math.log(100.0)
        ),
        rel=1e-10,
    )


def test_unit_sphere_area():
    assert unit_sphere_area(2.0) == pytest.approx(2.0 * math.pi, rel=1e-13)
    assert unit_sphere_area(3.0) == pytest.approx(4.0 * math.pi, rel=1e-13)

    for x in (0.3, 1.7, 6.0, 11.5):
        assert unit_sphere_area(x) == pytest.approx(
            x * ball_volume_V(x), rel=1e-12
        )


@pytest.mark.parametrize("x", [0.05, 0.5, 1.0, 2.0, 7.5, 30.0])
def test_unit_interval_observable_is_ball_volume(mellin_measure, x):
    observable = unit_interval_observable(mellin_measure(x))

    assert observable.method is ObservableMethod.CLOSED_FORM
    assert observable.error_estimate == 0.0
    assert observable.value == pytest.approx(ball_volume_V(x), rel=1e-12)


def test_sublevel_mass_examples(mellin_measure):
    assert sublevel_mass(mellin_measure(2.0), 4.0).value == pytest.approx(
        4.0 * math.pi, rel=1e-13
    )
    assert sublevel_mass(
        HomogeneousRadialMeasure(x=1.0, coeff=1.0), 9.0
    ).value == pytest.approx(6.0, rel=1e-14)


@pytest.mark.parametrize("b", [0.0, -1.0, math.nan, math.inf, -math.inf])
def test_sublevel_mass_rejects_bad_bound(mellin_measure, b):
    with pytest.raises(DomainError):
        sublevel_mass(mellin_measure(2.0), b)


@pytest.mark.parametrize("b", [0.0, math.nan, -math.inf])
def test_gaussian_partial_rejects_bad_bound(mellin_measure, b):
    with pytest.raises(DomainError):
        gaussian_partial_observable(mellin_measure(2.0), b)


@given(
    st.floats(min_value=0.1, max_value=20.0),
    st.floats(min_value=0.01, max_value=100.0),
    st.floats(min_value=0.1, max_value=10.0),
)
def test_sublevel_mass_scales_with_bound(x, b, factor):
    m = HomogeneousRadialMeasure(x=x, coeff=1.0)

    assert sublevel_mass(m, factor * b).value == pytest.approx(
        factor ** (x / 2.0) * sublevel_mass(m, b).value, rel=1e-11
    )


@pytest.mark.parametrize("x", [0.2, 1.0, 3.0, 9.5])
def test_sublevel_mass_by_quadrature(mellin_measure, x):
    m = mellin_measure(x)
    closed = sublevel_mass(m, 2.5)
    integrated = sublevel_mass(m, 2.5, ObservableMethod.QUADRATURE)

    assert integrated.method is ObservableMethod.QUADRATURE
    assert integrated.value == pytest.approx(closed.value, rel=1e-8)


@pytest.mark.parametrize(
    "x, expected",
    [(1.0, math.sqrt(math.pi)), (2.0, math.pi), (6.0, math.pi**3)],
)
def test_gaussian_observable_examples(mellin_measure, x, expected):
    assert gaussian_observable(mellin_measure(x)).value == pytest.approx(
        expected, rel=1e-13
    )


@pytest.mark.parametrize("x", [0.1, 1.0, 4.0, 12.0, 40.0])
def test_gaussian_observable_by_quadrature(mellin_measure, x):
    m = mellin_measure(x)

    assert gaussian_observable(
        m, ObservableMethod.QUADRATURE
    ).value == pytest.approx(gaussian_observable(m).value, rel=1e-8)


def test_gaussian_partial_examples():
    assert gaussian_partial_observable(
        HomogeneousRadialMeasure(x=2.0, coeff=1.0), 1.0
    ).value == pytest.approx(-math.expm1(-1.0), rel=1e-13)
    assert gaussian_partial_observable(
        HomogeneousRadialMeasure(x=1.0, coeff=1.0), 4.0
    ).value == pytest.approx(math.sqrt(math.pi) * math.erf(2.0), rel=1e-12)


def test_gaussian_partial_at_infinity(mellin_measure):
    m = mellin_measure(3.0)

    assert gaussian_partial_observable(m, math.inf).value == pytest.approx(
        gaussian_observable(m).value, rel=1e-14
    )
    assert gaussian_partial_observable(
        m, math.inf, ObservableMethod.QUADRATURE
    ).value == pytest.approx(math.pi**1.5, rel=1e-8)


@pytest.mark.parametrize("x, b", [(0.5, 0.3), (2.0, 1.0), (5.0, 7.0)])
def test_gaussian_partial_by_quadrature(mellin_measure, x, b):
    m = mellin_measure(x)

    assert gaussian_partial_observable(
        m, b, ObservableMethod.QUADRATURE
    ).value == pytest.approx(
        gaussian_partial_observable(m, b).value, rel=1e-8
    )


def test_gaussian_partial_is_increasing(mellin_measure):
    m = mellin_measure(2.5)
    values = [
        gaussian_partial_observable(m, b).value
        for b in (0.1, 0.5, 1.0, 2.0, 5.0, 20.0)
    ]

    assert all(left < right for left, right in zip(values, values[1:]))
    assert values[-1] < gaussian_observable(m).value


def test_gaussian_observable_overflow():
    with pytest.raises(GammaOverflowError):
        gaussian_observable(HomogeneousRadialMeasure(x=400.0, coeff=1.0))


@given(
    st.floats(min_value=0.05, max_value=50.0),
    st.floats(min_value=0.0, max_value=10.0),
)
def test_transport_consistency(x, r):
    assert abs(transport_consistency(x, r)) <= 1e-11 * ball_cocycle_T(x, r)


def test_transport_consistency_rejects_bad_shift():
    with pytest.raises(DomainError):
        transport_consistency(2.0, -1.0)


def test_ball_volume_peak():
    peak = ball_volume_peak()

    assert peak.x == pytest.approx(5.2569464, abs=1e-6)
    assert peak.value == pytest.approx(ball_volume_V(peak.x))
    assert peak.value > ball_volume_V(5.0)
    assert peak.value > ball_volume_V(6.0)


def test_ball_volume_is_unimodal():
    assert is_unimodal()
    assert is_unimodal(50, (1.0, 5.0))

    with pytest.raises(DomainError):
        is_unimodal(2)


@pytest.mark.parametrize("n", [1, 2, 3, 6])
def test_euclidean_gaussian_integral(mellin_measure, n):
    integral = euclidean_gaussian_integral(n)

    assert integral.method is ObservableMethod.QUADRATURE
    assert integral.value == pytest.approx(math.pi ** (n / 2.0), rel=1e-9)
    assert integral.value == pytest.approx(
        gaussian_observable(mellin_measure(float(n))).value, rel=1e-9
    )


@pytest.mark.parametrize("n", [0, -1, 2.0, True])
def test_euclidean_gaussian_integral_rejects_bad_dimension(n):
    with pytest.raises(DomainError):
        euclidean_gaussian_integral(n)


def test_observables_view_delegates(mellin_measure):
    assert observables_view.ball_volume_V(3.0) == ball_volume_V(3.0)
    assert observables_view.sublevel_mass(
        mellin_measure(2.0), 4.0
    ) == sublevel_mass(mellin_measure(2.0), 4.0)
