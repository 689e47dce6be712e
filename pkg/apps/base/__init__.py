"""
    Base Module

    Description:
    - This module contains the base schema shared by all apps.

"""

from .schema import BaseDomainSchema
