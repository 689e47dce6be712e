"""
    Observables Module

    Description:
    - This module contains scalar observables of homogeneous radial
    measures and the continuous-dimension ball volume.

"""
