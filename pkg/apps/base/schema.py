"""
    Base Pydantic Schema

    Description:
    - This module contains the base schema of every domain type.

"""

# Importing Python Packages
from pydantic import BaseModel, ConfigDict

# Importing FastAPI Packages

# Importing Project Files


# -----------------------------------------------------------------------------


class BaseDomainSchema(BaseModel):
    """
    Base Domain Schema

    Description:
    - This schema is the parent of all domain types.
    - Domain values are immutable after construction.

    """

    # Settings Configuration
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)
