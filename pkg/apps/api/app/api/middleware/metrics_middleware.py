"""Middleware que registra latencia y conteo de requests HTTP."""

import time
from typing import Callable

from fastapi import Request
from starlette.middleware.base import BaseHTTPMiddleware
from starlette.responses import Response

from app.utils.metrics import record_request_metrics


def _endpoint_label(request: Request) -> str:
    """Plantilla de la ruta (/api/v1/verify/{suite}) para acotar la cardinalidad."""
    route = request.scope.get("route")
    return getattr(route, "path", None) or request.url.path


class MetricsMiddleware(BaseHTTPMiddleware):
    async def dispatch(self, request: Request, call_next: Callable) -> Response:
        start = time.perf_counter()
        response = await call_next(request)
        record_request_metrics(
            method=request.method,
            endpoint=_endpoint_label(request),
            status_code=response.status_code,
            duration=time.perf_counter() - start,
        )
        return response
