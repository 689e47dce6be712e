"""
    Quadrature Pydantic Schemas

    Description:
    - This module contains the integrand and result types of quadrature.

"""

# Importing Python Packages
from typing import Callable
from pydantic import Field

# Importing FastAPI Packages

# Importing Project Files
from apps.base import BaseDomainSchema
from .configuration import quadrature_configuration


# -----------------------------------------------------------------------------


class Integrand(BaseDomainSchema):
    """
    Integrand Schema

    Description:
    - This schema is used to wrap a real function of u > 0 together with
    its behavior u^p near zero.
    - p is supplied by the caller and is used for the substitution and the
    tail estimate.

    """

    function: Callable[[float], float]
    singularity_order_at_zero: float = Field(
        default=0.0, gt=-1, allow_inf_nan=False, examples=[-0.5]
    )

    def __call__(self, u: float) -> float:
        return self.function(u)


class QuadratureResult(BaseDomainSchema):
    """
    Quadrature Result Schema

    Description:
    - This schema is used to return an integral with its error estimate.
    - converged is False when the subdivision budget or a truncation bound
    was exhausted; value is then the best estimate reached.

    """

    value: float
    error_estimate: float = Field(ge=0)
    subdivisions_used: int = Field(
        ge=0, le=quadrature_configuration.MAX_SUBDIVISIONS
    )
    converged: bool = True
