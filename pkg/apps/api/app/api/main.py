"""
Punto de entrada de la API FastAPI de IsoN.

Expone por HTTP los mismos verbos que la CLI. Ejecutar con:
uvicorn app.api.main:app (desde apps/api).
"""

import os

from fastapi import FastAPI
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from starlette.exceptions import HTTPException as StarletteHTTPException

from app import __version__
from app.api import exception_handlers
from app.api.middleware.correlation_id import CorrelationIDMiddleware
from app.api.middleware.metrics_middleware import MetricsMiddleware
from app.api.routers import congruence, elements, equations, health, metrics, orders, verify
from app.utils.config import load_env_file
from app.utils.exceptions import IsonError
from app.utils.logging_config import get_logger, setup_logging

# .env en la raíz del repositorio (desarrollo local)
load_env_file()

setup_logging()
logger = get_logger(__name__)

app = FastAPI(
    title="IsoN API",
    description="Cálculo exacto en el monoide inverso IN∞ de isometrías parciales cofinitas de ℕ",
    version=__version__,
    docs_url="/docs",
    redoc_url="/redoc",
)

# CORS primero para que procese los OPTIONS antes que el resto
allowed_origins = [
    origin.strip()
    for origin in os.getenv("ISON_CORS_ORIGINS", "http://localhost:3000").split(",")
    if origin.strip()
]
app.add_middleware(
    CORSMiddleware,
    allow_origins=allowed_origins,
    allow_methods=["GET", "POST", "OPTIONS"],
    allow_headers=["Content-Type", "X-Correlation-ID"],
    expose_headers=["X-Correlation-ID"],
)

# El último agregado es el más externo: el correlation ID envuelve a las métricas
app.add_middleware(MetricsMiddleware)
app.add_middleware(CorrelationIDMiddleware)

# Exception handlers globales (más específicos primero)
app.add_exception_handler(IsonError, exception_handlers.ison_error_handler)
app.add_exception_handler(StarletteHTTPException, exception_handlers.http_exception_handler)
app.add_exception_handler(RequestValidationError, exception_handlers.validation_exception_handler)
app.add_exception_handler(Exception, exception_handlers.generic_exception_handler)

app.include_router(health.router, prefix="/api/v1", tags=["Health"])
app.include_router(metrics.router, prefix="/api/v1", tags=["Metrics"])
app.include_router(elements.router, prefix="/api/v1", tags=["Elements"])
app.include_router(orders.router, prefix="/api/v1", tags=["Orders"])
app.include_router(equations.router, prefix="/api/v1", tags=["Equations"])
app.include_router(congruence.router, prefix="/api/v1", tags=["Congruence"])
app.include_router(verify.router, prefix="/api/v1", tags=["Verification"])

logger.debug("API IsoN inicializada", extra={"version": __version__, "cors": allowed_origins})


@app.get("/")
async def root() -> dict[str, str]:
    """Endpoint raíz con información de la API."""
    return {
        "name": "IsoN API",
        "version": __version__,
        "docs": "/docs",
        "health": "/api/v1/health",
    }
