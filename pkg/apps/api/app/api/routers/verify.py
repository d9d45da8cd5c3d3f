"""Router de suites de verificación."""

from typing import Optional

from fastapi import APIRouter, Query
from pydantic import ValidationError

from app.services.verification import SuiteReport, VerifyOptions, get_suite, run_suite_safe
from app.utils.config import parse_bounds
from app.utils.constants import DEFAULT_SAMPLED_TRIPLES
from app.utils.exceptions import ConfigurationError, InvalidParameters

router = APIRouter(prefix="/verify")


def _optional_bounds(text: Optional[str]) -> Optional[tuple[int, int]]:
    """None para ausente o "default"; si no, `K,M`."""
    if not text or text == "default":
        return None
    return parse_bounds(text)


# Sin async: la suite es CPU y corre en el threadpool de Starlette
@router.get("/{suite}", response_model=SuiteReport)
def verify(
    suite: str,
    bounds: Optional[str] = Query(None, description="Cotas 'K,M' o 'default' (ISON_BOUNDS)"),
    triples: Optional[str] = Query(None, description="Cotas 'K,M' de los triples exhaustivos"),
    samples: int = Query(DEFAULT_SAMPLED_TRIPLES, ge=0, description="Triples muestreados"),
    max_i: Optional[int] = Query(None, description="Potencia e índice máximos de las identidades de conmutación"),
) -> SuiteReport:
    """
    Ejecutar una suite por identificador o alias numerado (p. ej. lemma-2.12).

    Raises:
        VerificationError: Suite desconocida (404)
        InvalidParameters: Cotas mal formadas (422)
    """
    selected = get_suite(suite)
    try:
        options = VerifyOptions.from_env(
            bounds=_optional_bounds(bounds),
            triple_bounds=_optional_bounds(triples),
            sampled_triples=samples,
            max_index=max_i,
        )
    except (ValidationError, ConfigurationError) as e:
        raise InvalidParameters(str(e)) from e
    return run_suite_safe(selected, options)
