"""
    Special Functions Module

    Description:
    - This module contains the Gamma-function family.

"""
