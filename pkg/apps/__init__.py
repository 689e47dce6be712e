"""
    Apps Module

    Description:
    - This module contains apps routers.

"""
