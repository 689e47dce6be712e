"""
    Measures Module

    Description:
    - This module contains the dimension-shift category, homogeneous radial
    measures, density morphisms and the functors between them.

"""
