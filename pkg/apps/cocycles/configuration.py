"""
    Cocycles Configuration Module

    Description:
    - This module is responsible for cocycle constants.

"""

# Importing Python Packages
import math
from enum import Enum

# Importing FastAPI Packages

# Importing Project Files


# -----------------------------------------------------------------------------


class CocycleKind(str, Enum):
    """
    Cocycle Kind Enum

    Description:
    - This enum is used to choose between the radial-integration cocycle R
    and the ball-volume cocycle T.

    """

    R: str = "R"
    T: str = "T"


class CocyclesConfiguration:
    """
    Cocycles Settings Class

    Description:
    - This class is used to define cocycle constants.

    """

    LOG_PI: float = math.log(math.pi)

    # Gamma argument offset: 0 for R, 1 for T
    GAMMA_OFFSET: dict[CocycleKind, float] = {
        CocycleKind.R: 0.0,
        CocycleKind.T: 1.0,
    }


cocycles_configuration = CocyclesConfiguration()
