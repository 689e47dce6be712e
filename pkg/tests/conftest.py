"""
    Pytest Configuration Module

    Description:
    - This module registers the hypothesis profiles and shared fixtures.
    - Select a profile with HYPOTHESIS_PROFILE (default, ci).

"""

# Importing Python Packages
import os
import pytest
from hypothesis import HealthCheck, settings

# Importing FastAPI Packages
from fastapi.testclient import TestClient

# Importing Project Files
from apps.measures.schema import CoefficientFunction, DimObject
from apps.measures.view import functor_object, mellin_gamma_functor
from main import app


# -----------------------------------------------------------------------------


settings.register_profile(
    "default",
    max_examples=100,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile(
    "ci",
    max_examples=300,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def mellin_gamma() -> CoefficientFunction:
    return mellin_gamma_functor()


@pytest.fixture
def constant_one() -> CoefficientFunction:
    return CoefficientFunction(c=lambda x: 1.0, name="one")


@pytest.fixture
def mellin_measure(mellin_gamma):
    def build(x: float):
        return functor_object(mellin_gamma, DimObject(x=x))

    return build


@pytest.fixture(scope="session")
def client() -> TestClient:
    return TestClient(app)

