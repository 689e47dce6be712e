"""
    Cocycles Module

    Description:
    - This module contains the radial and ball-volume cocycles and the
    coboundary function relating them.

"""
