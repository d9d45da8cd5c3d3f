"""Interfaz base para las suites de verificación.

Cada suite recorre una enumeración acotada y compara las operaciones de la
librería contra oráculos directos. Una suite nunca lanza hacia el llamador:
el registro la ejecuta en modo degradado (ver run_suite_safe).
"""

from __future__ import annotations

import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Callable, Protocol, Union, runtime_checkable

from pydantic import BaseModel, ConfigDict, Field

from app.models.isometry import Isometry, compose
from app.services.equations import EnumBounds
from app.utils.config import get_default_bounds, get_sample_seed
from app.utils.constants import (
    COMMUTATION_MAX_POWER,
    DEFAULT_SAMPLED_TRIPLES,
    DEFAULT_TRIPLE_BOUNDS,
    MAX_REPORTED_FAILURES,
    SMALL_UNIVERSE_BOUNDS,
)
from app.utils.logging_config import get_logger
from app.utils.metrics import record_suite_result

logger = get_logger(__name__)


class VerifyOptions(BaseModel):
    """Parámetros de una corrida de verificación."""

    model_config = ConfigDict(frozen=True)

    bounds: EnumBounds
    # Asociatividad exhaustiva
    triple_bounds: EnumBounds
    # Triples de congruencia, sándwiches, ecuaciones y topología
    small_bounds: EnumBounds = Field(default_factory=lambda: EnumBounds.of(SMALL_UNIVERSE_BOUNDS))
    sampled_triples: int = Field(default=DEFAULT_SAMPLED_TRIPLES, ge=0)
    seed: int
    # Potencia e índice máximos de las identidades de conmutación
    max_index: int = Field(default=COMMUTATION_MAX_POWER, ge=0)

    @classmethod
    def from_env(
        cls,
        bounds: tuple[int, int] | None = None,
        triple_bounds: tuple[int, int] | None = None,
        sampled_triples: int = DEFAULT_SAMPLED_TRIPLES,
        max_index: int | None = None,
    ) -> "VerifyOptions":
        """Completar los valores ausentes desde el entorno (ISON_BOUNDS, ISON_SAMPLE_SEED)."""
        return cls(
            bounds=EnumBounds.of(bounds or get_default_bounds()),
            triple_bounds=EnumBounds.of(triple_bounds or DEFAULT_TRIPLE_BOUNDS),
            sampled_triples=sampled_triples,
            seed=get_sample_seed(),
            max_index=COMMUTATION_MAX_POWER if max_index is None else max_index,
        )


class SuiteReport(BaseModel):
    """Resultado de una suite."""

    suite: str
    passed: bool
    checked: int = Field(ge=0)
    failures: list[str] = Field(default_factory=list)
    elapsed_ms: float = Field(ge=0)
    bounds: str


def capped(bounds: EnumBounds, cap: tuple[int, int]) -> EnumBounds:
    """Mínimo coordenada a coordenada entre bounds y cap."""
    return EnumBounds(
        max_complement=min(bounds.max_complement, cap[0]),
        max_offset=min(bounds.max_offset, cap[1]),
    )


def widened(bounds: EnumBounds, extra_complement: int, extra_offset: int) -> EnumBounds:
    return EnumBounds(
        max_complement=bounds.max_complement + extra_complement,
        max_offset=bounds.max_offset + extra_offset,
    )


class ProductTable:
    """
    Productos memorizados sobre elementos internados como enteros.

    Dos índices son iguales si y solo si los elementos lo son, así que
    (ab)c = a(bc) se compara entre enteros.
    """

    def __init__(self) -> None:
        self.elements: list[Isometry] = []
        self._index: dict[Isometry, int] = {}
        self._products: dict[tuple[int, int], int] = {}

    def intern(self, g: Isometry) -> int:
        idx = self._index.get(g)
        if idx is None:
            idx = self._index[g] = len(self.elements)
            self.elements.append(g)
        return idx

    def product(self, x: int, y: int) -> int:
        key = (x, y)
        result = self._products.get(key)
        if result is None:
            result = self.intern(compose(self.elements[x], self.elements[y]))
            self._products[key] = result
        return result


@dataclass
class CheckCollector:
    """Cuenta instancias verificadas y guarda los primeros fallos."""

    checked: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)

    def check(self, condition: bool, describe: Union[str, Callable[[], str]]) -> bool:
        self.checked += 1
        if not condition:
            self.failed += 1
            if len(self.failures) < MAX_REPORTED_FAILURES:
                self.failures.append(describe() if callable(describe) else describe)
        return condition


@runtime_checkable
class VerificationSuite(Protocol):
    """Protocolo que debe cumplir toda suite de verificación."""

    @property
    def name(self) -> str:
        """Identificador de la suite (para CLI, logs y métricas)."""
        ...

    @property
    def description(self) -> str:
        ...

    def run(self, options: VerifyOptions) -> SuiteReport:
        ...


class BaseSuite(ABC):
    """Clase base: mide tiempo, registra métricas y arma el SuiteReport."""

    def __init__(self, suite_name: str, description: str) -> None:
        self._name = suite_name
        self._description = description

    @property
    def name(self) -> str:
        return self._name

    @property
    def description(self) -> str:
        return self._description

    def run(self, options: VerifyOptions) -> SuiteReport:
        start = time.perf_counter()
        collector = CheckCollector()
        self.check_all(collector, options)
        elapsed = time.perf_counter() - start

        record_suite_result(self.name, collector.checked, collector.failed, elapsed)
        logger.info(
            "Suite de verificación finalizada",
            extra={
                "suite": self.name,
                "checked": collector.checked,
                "failed": collector.failed,
                "elapsed_ms": round(elapsed * 1000, 3),
            },
        )
        return SuiteReport(
            suite=self.name,
            passed=collector.failed == 0,
            checked=collector.checked,
            failures=collector.failures,
            elapsed_ms=round(elapsed * 1000, 3),
            bounds=str(options.bounds),
        )

    @abstractmethod
    def check_all(self, collector: CheckCollector, options: VerifyOptions) -> None:
        """Ejecutar todos los chequeos registrándolos en `collector`."""
        ...
