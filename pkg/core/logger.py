"""
    Logger Module

    Description:
    - This module is used to configure project logging.

"""

# Importing Python Packages
import logging
import sys

# Importing FastAPI Packages

# Importing Project Files
from .configuration import core_configuration


# -----------------------------------------------------------------------------


def configure_logging(level: str | None = None) -> None:
    """
    Configure Logging

    Description:
    - This function is used to attach a stderr handler to the root logger.
    - stdout is reserved for data.

    Parameter:
    - **level** (STR): Log level name, defaults to configured level.
    **(Optional)**

    Return:
    - **None**

    """

    logging.basicConfig(
        level=(level or core_configuration.LOG_LEVEL).upper(),
        format=core_configuration.LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )
