"""
    Verify Configuration Module

    Description:
    - This module is responsible for suite ids, default suite configs and
    generator constants.

"""

# Importing Python Packages
import math
from enum import Enum

# Importing FastAPI Packages

# Importing Project Files


# -----------------------------------------------------------------------------


class Suite(str, Enum):
    """
    Suite Enum

    Description:
    - This enum is used to define the verification suites.

    """

    COCYCLE_R: str = "cocycle_R"
    COCYCLE_T: str = "cocycle_T"
    COBOUNDARY: str = "coboundary"
    NORMALIZATION: str = "normalization"
    SCALING_COVARIANCE: str = "scaling_covariance"
    FUNCTORIALITY_GENERIC: str = "functoriality_generic"
    CATEGORY_LAWS: str = "category_laws"
    GOLDEN_VOLUMES: str = "golden_volumes"
    TRANSPORT_CONSISTENCY: str = "transport_consistency"


class VerifyConfiguration:
    """
    Verify Settings Class

    Description:
    - This class is used to define the default config of every suite, the
    report size and the generator constants.
    - Closed-form suites default to 1e-10 relative, quadrature-backed
    suites to 1e-7.

    """

    WORST_CASE_COUNT: int = 5
    DEFAULT_SEED: int = 0
    SEED_LIMIT: int = 2**64

    # splitmix64 seeding, xorshift64* stream
    MASK_64: int = 0xFFFFFFFFFFFFFFFF
    SPLITMIX_GAMMA: int = 0x9E3779B97F4A7C15
    SPLITMIX_MULTIPLIER_1: int = 0xBF58476D1CE4E5B9
    SPLITMIX_MULTIPLIER_2: int = 0x94D049BB133111EB
    XORSHIFT_MULTIPLIER: int = 0x2545F4914F6CDD1D
    XORSHIFT_FALLBACK_STATE: int = 0x9E3779B97F4A7C15
    UNIFORM_SCALE: float = 2.0**-53

    CLOSED_FORM_TOL: float = 1e-10
    QUADRATURE_TOL: float = 1e-7

    # Classical unit-ball volumes V(1..5)
    GOLDEN_VOLUMES: dict[int, float] = {
        1: 2.0,
        2: math.pi,
        3: 4.0 * math.pi / 3.0,
        4: math.pi**2 / 2.0,
        5: 8.0 * math.pi**2 / 15.0,
    }

    # Random coefficient functions exp(a0 + a1 sin(a2 x) + a3 ln(1 + x))
    COEFFICIENT_OFFSET_RANGE: tuple[float, float] = (-2.0, 2.0)
    COEFFICIENT_AMPLITUDE_RANGE: tuple[float, float] = (-1.0, 1.0)
    COEFFICIENT_FREQUENCY_RANGE: tuple[float, float] = (0.1, 2.0)
    COEFFICIENT_GROWTH_RANGE: tuple[float, float] = (-2.0, 2.0)

    SUITE_DEFAULTS: dict[Suite, dict] = {
        Suite.COCYCLE_R: {
            "samples": 10_000,
            "tol": CLOSED_FORM_TOL,
            "x_range": (0.05, 50.0),
            "r_range": (0.0, 10.0),
        },
        Suite.COCYCLE_T: {
            "samples": 10_000,
            "tol": CLOSED_FORM_TOL,
            "x_range": (0.05, 50.0),
            "r_range": (0.0, 10.0),
        },
        Suite.COBOUNDARY: {
            "samples": 10_000,
            "tol": CLOSED_FORM_TOL,
            "x_range": (0.05, 50.0),
            "r_range": (0.0, 10.0),
        },
        Suite.NORMALIZATION: {
            "samples": 50,
            "tol": QUADRATURE_TOL,
            "x_range": (0.1, 40.0),
            "r_range": (0.0, 0.0),
        },
        Suite.SCALING_COVARIANCE: {
            "samples": 20,
            "tol": QUADRATURE_TOL,
            "x_range": (0.1, 40.0),
            "r_range": (0.0, 3.0),
        },
        Suite.FUNCTORIALITY_GENERIC: {
            "samples": 20,
            "tol": CLOSED_FORM_TOL,
            "x_range": (0.05, 50.0),
            "r_range": (0.0, 10.0),
        },
        Suite.CATEGORY_LAWS: {
            "samples": 1_000,
            "tol": CLOSED_FORM_TOL,
            "x_range": (0.05, 50.0),
            "r_range": (0.0, 10.0),
        },
        Suite.GOLDEN_VOLUMES: {
            "samples": 5,
            "tol": 1e-12,
            "x_range": (1.0, 5.0),
            "r_range": (0.0, 0.0),
        },
        Suite.TRANSPORT_CONSISTENCY: {
            "samples": 10_000,
            "tol": 1e-11,
            "x_range": (0.05, 50.0),
            "r_range": (0.0, 10.0),
        },
    }


verify_configuration = VerifyConfiguration()
