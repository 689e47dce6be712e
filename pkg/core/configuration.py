"""
    Core Configuration Module

    Description:
    - This module is responsible for core configuration and read values from
    environment variables.

"""

# Importing Python Packages
from pydantic_settings import BaseSettings, SettingsConfigDict

# Importing FastAPI Packages

# Importing Project Files

# -----------------------------------------------------------------------------


class CoreConfiguration(BaseSettings):
    """
    Core Settings Class

    Description:
    - This class is used to load core configurations from environment.
    - Every field has a default, so no environment is required.

    """

    # Project Configuration

    PROJECT_TITLE: str = "Mellin-Gamma Ball Volume"
    PROJECT_DESCRIPTION: str = (
        "Mellin-Gamma radial measures, dimension-shift cocycles and "
        "continuous-dimension ball volume"
    )

    VERSION: str = "1.0.0"

    DOCS_URL: str = "/docs"
    REDOC_URL: str = "/redoc"

    # Logging Configuration

    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"

    # Settings Configuration
    model_config = SettingsConfigDict(env_prefix="BALLVOLUME_")


core_configuration = CoreConfiguration()
