"""Correlation ID por request, visible en logs y en el header de respuesta."""

import contextvars
import uuid
from typing import Callable

from fastapi import Request
from starlette.middleware.base import BaseHTTPMiddleware
from starlette.responses import Response

CORRELATION_HEADER = "X-Correlation-ID"

correlation_id_context: contextvars.ContextVar[str] = contextvars.ContextVar(
    "correlation_id", default=""
)


class CorrelationIDMiddleware(BaseHTTPMiddleware):
    """Propaga el X-Correlation-ID recibido o genera uno nuevo."""

    async def dispatch(self, request: Request, call_next: Callable) -> Response:
        correlation_id = request.headers.get(CORRELATION_HEADER) or uuid.uuid4().hex
        request.state.correlation_id = correlation_id

        token = correlation_id_context.set(correlation_id)
        try:
            response = await call_next(request)
        finally:
            correlation_id_context.reset(token)

        response.headers[CORRELATION_HEADER] = correlation_id
        return response


def get_correlation_id() -> str:
    """Correlation ID del request en curso, o "" fuera de un request."""
    return correlation_id_context.get("")
