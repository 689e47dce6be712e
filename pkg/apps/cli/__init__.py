"""
    CLI Module

    Description:
    - This module contains the command-line surface (eval, table, verify)
    and its HTTP mirror.

"""
