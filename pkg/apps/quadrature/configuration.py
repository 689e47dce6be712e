"""
    Quadrature Configuration Module

    Description:
    - This module is responsible for quadrature rules and tolerances.

"""

# Importing Python Packages
import sys
import numpy as np

# Importing FastAPI Packages

# Importing Project Files


# -----------------------------------------------------------------------------


class QuadratureConfiguration:
    """
    Quadrature Settings Class

    Description:
    - This class is used to define the 7-point Gauss / 15-point Kronrod pair
    (QUADPACK qk15) and the adaptive driver defaults.

    """

    ABS_TOL: float = 1e-12
    REL_TOL: float = 1e-10
    MAX_SUBDIVISIONS: int = 2_000

    # Kronrod abscissae on [0, 1); odd indices are the Gauss abscissae
    KRONROD_NODES: np.ndarray = np.array(
        [
            0.991455371120812639206854697526329,
            0.949107912342758524526189684047851,
            0.864864423359769072789712788640926,
            0.741531185599394439863864773280788,
            0.586087235467691130294144845693013,
            0.405845151377397166906606412076961,
            0.207784955007898467600689403773245,
            0.000000000000000000000000000000000,
        ]
    )
    KRONROD_WEIGHTS: np.ndarray = np.array(
        [
            0.022935322010529224963732008058970,
            0.063092092629978553290700663189204,
            0.104790010322250183839876322541518,
            0.140653259715525918745189590510238,
            0.169004726639267902826583426598550,
            0.190350578064785409913256402421014,
            0.204432940075298892414161999234649,
            0.209482141084727828012999174891714,
        ]
    )
    GAUSS_WEIGHTS: np.ndarray = np.array(
        [
            0.129484966168869693270611432679082,
            0.279705391489276667901467771423780,
            0.381830050505118944950369775488975,
            0.417959183673469387755102040816327,
        ]
    )

    EPSILON: float = sys.float_info.epsilon
    UNDERFLOW: float = sys.float_info.min

    # Truncation of t = ln(u) for the half-line substitution
    T_START: float = 1.0
    T_MIN: float = -700.0
    T_MAX: float = 64.0
    TRUNCATION_FRACTION: float = 0.01


quadrature_configuration = QuadratureConfiguration()
