"""
    Special Functions Pydantic Schemas

    Description:
    - This module contains the argument type of the Gamma family.

"""

# Importing Python Packages
from pydantic import Field

# Importing FastAPI Packages

# Importing Project Files
from apps.base import BaseDomainSchema


# -----------------------------------------------------------------------------


class GammaArg(BaseDomainSchema):
    """
    Gamma Argument Schema

    Description:
    - This schema is used to validate an argument of Gamma.
    - Only (0, inf) is needed, so no reflection formula exists.

    """

    value: float = Field(gt=0, allow_inf_nan=False, examples=[1.0])
