"""Suites de verificación de IsoN.

Cada suite recorre una enumeración acotada y contrasta las operaciones con
oráculos directos. `verify all` las ejecuta en un pool de hilos; un fallo
inesperado dentro de una suite se reporta como suite fallida y no se propaga.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Optional

from app.services.verification.algebra import (
    BicyclicSuite,
    CanonicalFormSuite,
    FiltrationSuite,
    InverseMonoidSuite,
)
from app.services.verification.base import (
    BaseSuite,
    SuiteReport,
    VerificationSuite,
    VerifyOptions,
)
from app.services.verification.congruences import (
    GreenSuite,
    GroupCongruenceSuite,
    SimplicitySuite,
)
from app.services.verification.ordering import ChainsSuite, CommutationSuite, PartialOrderSuite
from app.services.verification.solving import EquationsSuite
from app.services.verification.topology import ZeroTopologySuite
from app.services.verification.words import WordlangSuite
from app.utils.config import get_verify_workers
from app.utils.exceptions import VerificationError
from app.utils.logging_config import get_logger

logger = get_logger(__name__)


def get_suites() -> list[VerificationSuite]:
    """Todas las suites en orden de registro."""
    return [
        InverseMonoidSuite(),
        CanonicalFormSuite(),
        BicyclicSuite(),
        FiltrationSuite(),
        CommutationSuite(),
        PartialOrderSuite(),
        ChainsSuite(),
        EquationsSuite(),
        GroupCongruenceSuite(),
        SimplicitySuite(),
        GreenSuite(),
        ZeroTopologySuite(),
        WordlangSuite(),
    ]


SUITE_IDS: tuple[str, ...] = tuple(suite.name for suite in get_suites())

# Identificadores numerados de los resultados que cubre cada suite
SUITE_ALIASES: dict[str, str] = {
    "lemma-2.1": "simplicity",
    "cor-2.3": "canonical-form",
    "prop-2.4": "canonical-form",
    "prop-2.6": "partial-order",
    "prop-2.7": "partial-order",
    "lemma-2.14": "partial-order",
    "lemma-2.8": "chains",
    "lemma-2.9": "chains",
    "prop-2.11": "chains",
    "prop-2.13": "chains",
    "cor-2.15": "chains",
    "lemma-2.16": "chains",
    "lemma-2.12": "commutation",
    "def-3.1": "equations",
    "lemma-3.9": "zero-topology",
}


def resolve_suite_id(name: str) -> str:
    """Identificador de suite para `name`, que puede ser un alias numerado."""
    return SUITE_ALIASES.get(name, name)


def get_suite(name: str) -> VerificationSuite:
    """
    Buscar una suite por identificador.

    Raises:
        VerificationError: Si el identificador no existe
    """
    suite_id = resolve_suite_id(name)
    for suite in get_suites():
        if suite.name == suite_id:
            return suite
    raise VerificationError(
        f"Suite desconocida {name!r}; disponibles: {', '.join(SUITE_IDS)}, all "
        f"o un alias ({', '.join(SUITE_ALIASES)})"
    )


def run_suite_safe(suite: VerificationSuite, options: VerifyOptions) -> SuiteReport:
    """
    Ejecutar una suite sin propagar excepciones.

    Una suite que lanza se reporta como fallida con el mensaje de la excepción.
    """
    start = time.perf_counter()
    try:
        return suite.run(options)
    except Exception as e:  # Degradación: la corrida continúa con las demás suites
        logger.warning(
            "Suite de verificación abortada",
            extra={"suite": suite.name, "error": str(e)},
            exc_info=True,
        )
        return SuiteReport(
            suite=suite.name,
            passed=False,
            checked=0,
            failures=[f"{type(e).__name__}: {e}"],
            elapsed_ms=round((time.perf_counter() - start) * 1000, 3),
            bounds=str(options.bounds),
        )


def run_suites(
    names: Iterable[str],
    options: VerifyOptions,
    workers: Optional[int] = None,
) -> list[SuiteReport]:
    """
    Ejecutar las suites pedidas; "all" selecciona todas.

    Args:
        names: Identificadores de suite, alias numerados o "all"
        options: Cotas, semilla y cantidad de triples muestreados
        workers: Hilos del pool; por defecto ISON_VERIFY_WORKERS

    Returns:
        Reportes en el orden pedido ("all" usa el orden de registro)

    Raises:
        VerificationError: Si algún identificador no existe
    """
    requested = list(names)
    if "all" in requested:
        suites = get_suites()
    else:
        # Varios alias pueden apuntar a la misma suite; cada una corre una vez
        unique = dict.fromkeys(resolve_suite_id(name) for name in requested)
        suites = [get_suite(name) for name in unique]
    pool_size = workers or get_verify_workers()
    logger.info(
        "Iniciando verificación",
        extra={"suites": [s.name for s in suites], "workers": pool_size, "bounds": str(options.bounds)},
    )
    with ThreadPoolExecutor(max_workers=pool_size) as executor:
        return list(executor.map(lambda suite: run_suite_safe(suite, options), suites))


__all__ = [
    "BaseSuite",
    "SuiteReport",
    "VerificationSuite",
    "VerifyOptions",
    "SUITE_ALIASES",
    "SUITE_IDS",
    "get_suites",
    "get_suite",
    "resolve_suite_id",
    "run_suite_safe",
    "run_suites",
]
