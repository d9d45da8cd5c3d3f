"""Router para exponer métricas de Prometheus."""

from fastapi import APIRouter
from fastapi.responses import Response
from prometheus_client import CONTENT_TYPE_LATEST

from app.utils.metrics import get_metrics

router = APIRouter()


@router.get("/metrics")
async def metrics() -> Response:
    """Contadores de requests, suites de verificación y candidatos de los resolvedores."""
    return Response(content=get_metrics(), media_type=CONTENT_TYPE_LATEST)
