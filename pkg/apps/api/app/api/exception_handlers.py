"""Exception handlers globales para FastAPI.

Todas las respuestas de error comparten el cuerpo
{"error": {"code", "message", "correlation_id"}}.
"""

from typing import Any, Optional, Union

from fastapi import Request, status
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from starlette.exceptions import HTTPException as StarletteHTTPException

from app.utils.exceptions import (
    BoundViolation,
    ConstraintError,
    InvalidParameters,
    IsonError,
    UnderflowError,
    VerificationError,
    WordSyntaxError,
)
from app.utils.logging_config import get_logger

logger = get_logger(__name__)

# Errores causados por la entrada del cliente
INPUT_ERRORS = (InvalidParameters, UnderflowError, BoundViolation, ConstraintError, WordSyntaxError)


def _error_body(
    code: str,
    message: str,
    correlation_id: Optional[str],
    **extra: Any,
) -> dict[str, Any]:
    return {"error": {"code": code, "message": message, "correlation_id": correlation_id, **extra}}


def status_for(exc: IsonError) -> int:
    """Código HTTP de un error de dominio."""
    if isinstance(exc, INPUT_ERRORS):
        return status.HTTP_422_UNPROCESSABLE_ENTITY
    if isinstance(exc, VerificationError):
        return status.HTTP_404_NOT_FOUND
    return status.HTTP_500_INTERNAL_SERVER_ERROR


async def ison_error_handler(request: Request, exc: Union[IsonError, Exception]) -> JSONResponse:
    """
    Handler para la jerarquía IsonError.

    Args:
        request: Request HTTP
        exc: Error de dominio

    Returns:
        JSONResponse con 422 (entrada), 404 (suite desconocida) o 500
    """
    correlation_id = getattr(request.state, "correlation_id", None)
    status_code = (
        status_for(exc) if isinstance(exc, IsonError) else status.HTTP_500_INTERNAL_SERVER_ERROR
    )

    extra: dict[str, Any] = {}
    if isinstance(exc, WordSyntaxError):
        extra = {"position": exc.position, "expected": list(exc.expected)}

    log = logger.warning if status_code < 500 else logger.error
    log(
        "Error de dominio capturado",
        extra={
            "error_type": type(exc).__name__,
            "error_message": str(exc),
            "status_code": status_code,
            "path": request.url.path,
            "method": request.method,
        },
    )
    return JSONResponse(
        status_code=status_code,
        content=_error_body(type(exc).__name__, str(exc), correlation_id, **extra),
    )


async def http_exception_handler(
    request: Request, exc: Union[StarletteHTTPException, Exception]
) -> JSONResponse:
    """Handler para HTTPException de Starlette/FastAPI."""
    correlation_id = getattr(request.state, "correlation_id", None)
    if not isinstance(exc, StarletteHTTPException):
        return await generic_exception_handler(request, exc)

    logger.warning(
        "HTTPException capturada",
        extra={"status_code": exc.status_code, "detail": exc.detail, "path": request.url.path},
    )
    message = exc.detail if isinstance(exc.detail, str) else "Error HTTP"
    return JSONResponse(
        status_code=exc.status_code,
        content=_error_body(f"HTTP_{exc.status_code}", message, correlation_id),
    )


async def validation_exception_handler(
    request: Request, exc: Union[RequestValidationError, Exception]
) -> JSONResponse:
    """Handler para errores de validación de Pydantic en el cuerpo o la query."""
    correlation_id = getattr(request.state, "correlation_id", None)
    if not isinstance(exc, RequestValidationError):
        return await generic_exception_handler(request, exc)

    errors = [
        {
            "field": ".".join(str(loc) for loc in error.get("loc", [])),
            "message": error.get("msg"),
            "type": error.get("type"),
        }
        for error in exc.errors()
    ]
    logger.warning(
        "Error de validación de request",
        extra={"errors": errors, "path": request.url.path, "method": request.method},
    )
    return JSONResponse(
        status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
        content=_error_body(
            "VALIDATION_ERROR",
            "Error de validación en los datos de entrada",
            correlation_id,
            details=errors,
        ),
    )


async def generic_exception_handler(request: Request, exc: Exception) -> JSONResponse:
    """Handler para excepciones no manejadas."""
    correlation_id = getattr(request.state, "correlation_id", None)
    logger.error(
        "Excepción no manejada capturada",
        extra={
            "error_type": type(exc).__name__,
            "error_message": str(exc),
            "path": request.url.path,
            "method": request.method,
        },
        exc_info=True,
    )
    return JSONResponse(
        status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
        content=_error_body(
            "INTERNAL_SERVER_ERROR", "Error interno del servidor", correlation_id
        ),
    )
