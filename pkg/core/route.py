"""
    FastAPI Route module

    Description:
    - This module is used to create routes for application.

"""

# Importing Python Packages

# Importing FastAPI Packages
from fastapi import APIRouter

# Importing Project Files
from apps.cli.route import router as cli_router


# Router Object to Create Routes
router = APIRouter(prefix="/v1")


# -----------------------------------------------------------------------------


# Include all file routes
router.include_router(cli_router)
