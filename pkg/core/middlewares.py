"""
    Middlewares Module

    Description:
    - This module contains all middlewares used in project.

"""

# Importing Python Packages
import logging
from pydantic import ValidationError

# Importing FastAPI Packages
from fastapi import Request, Response, status
from fastapi.responses import JSONResponse
from fastapi.exceptions import HTTPException

# Importing Project Files
from .exceptions import (
    CoefficientError,
    ComposabilityError,
    ConvergenceError,
    DomainError,
    GammaOverflowError,
    GammaUnderflowError,
)
from .response_message import core_response_message


exception_logger = logging.getLogger(__name__)


# -----------------------------------------------------------------------------


async def exception_handling(request: Request, call_next):
    """
    Exception Handling Middleware

    Description:
    - This function is used to map project errors to HTTP responses.

    Parameter:
    - **request** (Request): Request object. **(Required)**
    - **call_next** (Callable): Next function to be called. **(Required)**

    Return:
    - **response** (Response): Response object.

    """
    exception_logger.debug("Calling exception_handling middleware")

    try:
        response: Response = await call_next(request)

    except (DomainError, ComposabilityError, CoefficientError) as err:
        return JSONResponse(
            status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
            content={
                "detail": f"{core_response_message.INVALID_ARGUMENT}: {err}"
            },
        )

    except ValidationError as err:
        return JSONResponse(
            status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
            content={
                "detail": core_response_message.INVALID_ARGUMENT,
                "errors": [
                    {"loc": list(error["loc"]), "msg": error["msg"]}
                    for error in err.errors()
                ],
            },
        )

    except (
        GammaOverflowError,
        GammaUnderflowError,
        ConvergenceError,
    ) as err:
        exception_logger.error(
            "Evaluation failed for %s", request.url.path, exc_info=True
        )
        return JSONResponse(
            status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
            content={
                "detail": f"{core_response_message.EVALUATION_ERROR}: {err}"
            },
        )

    except HTTPException as err:
        exception_logger.exception(msg=err)
        return JSONResponse(
            status_code=err.status_code, content={"detail": err.detail}
        )

    except Exception as err:
        exception_logger.exception(msg=err)
        return JSONResponse(
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
            content={"detail": core_response_message.INTERNAL_SERVER_ERROR},
        )

    return response
