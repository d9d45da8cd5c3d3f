"""Router de health check."""

from fastapi import APIRouter

from app import __version__
from app.services.verification import SUITE_IDS

router = APIRouter()


@router.get("/health")
async def health_check() -> dict[str, object]:
    """Estado del servicio y suites disponibles."""
    return {"status": "healthy", "service": "ison-api", "version": __version__, "suites": list(SUITE_IDS)}
