"""
    Observables Pydantic Schemas

    Description:
    - This module contains observable value schemas.

"""

# Importing Python Packages
import math
from pydantic import Field

# Importing FastAPI Packages

# Importing Project Files
from apps.base import BaseDomainSchema
from .configuration import ObservableMethod


# -----------------------------------------------------------------------------


class ObservableValue(BaseDomainSchema):
    """
    Observable Value Schema

    Description:
    - This schema is used to return an observable with the method that
    produced it.
    - error_estimate is zero for closed forms.

    """

    value: float = Field(gt=0, allow_inf_nan=False, examples=[math.pi])
    method: ObservableMethod = Field(examples=[ObservableMethod.CLOSED_FORM])
    error_estimate: float = Field(default=0.0, ge=0, examples=[0.0])


class VolumePeak(BaseDomainSchema):
    """
    Volume Peak Schema

    Description:
    - This schema is used to return the maximizer of the ball volume and
    the maximum.

    """

    x: float = Field(gt=0, examples=[5.2569464])
    value: float = Field(gt=0, examples=[5.2777680])
