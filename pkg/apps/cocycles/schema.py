"""
    Cocycles Pydantic Schemas

    Description:
    - This module contains the cocycle evaluation schema.

"""

# Importing Python Packages
import math
from pydantic import Field

# Importing FastAPI Packages

# Importing Project Files
from apps.base import BaseDomainSchema
from .configuration import CocycleKind


# -----------------------------------------------------------------------------


class CocycleEval(BaseDomainSchema):
    """
    Cocycle Evaluation Schema

    Description:
    - This schema is used to return the value of a cocycle on the shift
    x -> x + 2r.

    """

    kind: CocycleKind = Field(examples=[CocycleKind.R])
    x: float = Field(gt=0, allow_inf_nan=False, examples=[2.0])
    r: float = Field(ge=0, allow_inf_nan=False, examples=[1.0])
    value: float = Field(gt=0, allow_inf_nan=False, examples=[math.pi])
