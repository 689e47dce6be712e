"""
    Tests Module

    Description:
    - This module contains the pytest suite of every app.

"""
