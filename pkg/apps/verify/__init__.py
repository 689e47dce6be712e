"""
    Verify Module

    Description:
    - This module contains the seeded property-verification engine and its
    reports.

"""
