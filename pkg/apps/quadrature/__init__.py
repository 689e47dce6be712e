"""
    Quadrature Module

    Description:
    - This module contains adaptive integration on (0, inf) and on finite
    intervals.

"""
