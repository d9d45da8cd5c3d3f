"""Resolución de ecuaciones a·x = b y x·c = d, y enumeración acotada.

Ambos conjuntos de soluciones son finitos: el desplazamiento de x queda
forzado y la parte libre de su dominio es un subconjunto del complemento
finito de ran a. La enumeración acotada alimenta todos los oráculos.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import chain, combinations
from typing import Iterable, Iterator

from pydantic import BaseModel, ConfigDict, Field

from app.models.cofinite import (
    CofiniteSet,
    complement_list,
    min_member,
    normalize,
    subset_of,
    translate,
)
from app.models.isometry import Isometry, compose, format_iso, invert
from app.utils.logging_config import get_logger
from app.utils.metrics import record_solver_candidates

logger = get_logger(__name__)


class EnumBounds(BaseModel):
    """
    Cotas de la enumeración de escritorio.

    Un elemento pertenece a E(K, M) si min dom - 1 <= M, |shift| <= M,
    dom tiene a lo sumo K huecos por encima de su mínimo y la parte finita
    de dom tiene a lo sumo K + 1 miembros.
    """

    model_config = ConfigDict(frozen=True)

    max_complement: int = Field(ge=0, description="Cota K de huecos por encima de min dom")
    max_offset: int = Field(ge=0, description="Cota M de |shift| y de min dom - 1")

    def __str__(self) -> str:
        return f"{self.max_complement},{self.max_offset}"

    @classmethod
    def of(cls, bounds: "EnumBounds | tuple[int, int]") -> "EnumBounds":
        """Aceptar EnumBounds o una tupla (K, M)."""
        if isinstance(bounds, EnumBounds):
            return bounds
        return cls(max_complement=bounds[0], max_offset=bounds[1])


def _domain_patterns(max_complement: int) -> list[CofiniteSet]:
    """Dominios relativos con mínimo 1: ℕ primero, luego por (cola, miembros)."""
    patterns = [CofiniteSet((), 1)]
    for n0 in range(3, 2 * max_complement + 3):
        candidates = range(2, n0 - 1)
        for size in range(0, max_complement + 1):
            for rest in combinations(candidates, size):
                members = (1, *rest)
                holes = n0 - 1 - len(members)
                if holes <= max_complement:
                    patterns.append(CofiniteSet(members, n0))
    return patterns


@lru_cache(maxsize=32)
def _enumerate_cached(max_complement: int, max_offset: int) -> tuple[Isometry, ...]:
    elements = []
    for pattern in _domain_patterns(max_complement):
        for m in range(1, max_offset + 2):
            dom = translate(pattern, m - 1)
            for c in range(max(-max_offset, 1 - m), max_offset + 1):
                elements.append(Isometry(dom, c))
    elements.sort(key=lambda g: (g.min_dom, g.dom.tail_start, g.dom.finite_part, g.shift))
    logger.debug(
        "Enumeración acotada construida",
        extra={
            "max_complement": max_complement,
            "max_offset": max_offset,
            "count": len(elements),
        },
    )
    return tuple(elements)


def enumerate_elements(bounds: EnumBounds | tuple[int, int]) -> list[Isometry]:
    """
    Todos los elementos de E(K, M), sin repetidos y en orden determinista.

    Args:
        bounds: Cotas (K, M)

    Returns:
        Lista ordenada por (min dom, cola, parte finita, shift)
    """
    b = EnumBounds.of(bounds)
    return list(_enumerate_cached(b.max_complement, b.max_offset))


def enumerate_idempotents(bounds: EnumBounds | tuple[int, int]) -> list[Isometry]:
    """Idempotentes de E(K, M)."""
    return [g for g in enumerate_elements(bounds) if g.shift == 0]


def _sorted_unique(elements: Iterable[Isometry]) -> list[Isometry]:
    return sorted(set(elements), key=format_iso)


def _powerset(items: list[int]) -> Iterator[tuple[int, ...]]:
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


def solution_bound(a: Isometry) -> int:
    """Cota estructural 2^{|ℕ ∖ ran a|} de |{x : a·x = b}|."""
    return 2 ** len(complement_list(a.ran))


def _solve_left_counted(a: Isometry, b: Isometry, side: str) -> list[Isometry]:
    if not subset_of(b.dom, a.dom):
        record_solver_candidates(side, 0)
        return []
    shift = b.shift - a.shift
    forced = translate(b.dom, a.shift)
    free = complement_list(a.ran)

    solutions = []
    candidates = 0
    for extra in _powerset(free):
        candidates += 1
        dom = normalize(set(forced.finite_part) | set(extra), forced.tail_start)
        if min_member(dom) + shift < 1:
            continue
        x = Isometry(dom, shift)
        if compose(a, x) == b:
            solutions.append(x)

    record_solver_candidates(side, candidates)
    logger.debug(
        "Ecuación resuelta",
        extra={"side": side, "candidates": candidates, "solutions": len(solutions)},
    )
    return solutions


def solve_left(a: Isometry, b: Isometry) -> list[Isometry]:
    """
    Todas las soluciones de a·x = b.

    El desplazamiento de x es b.shift - a.shift; dom x ∩ ran a es dom b
    trasladado por a.shift y el resto de dom x es cualquier subconjunto del
    complemento de ran a. Cada candidato se recompone antes de aceptarlo.

    Args:
        a: Factor izquierdo conocido
        b: Lado derecho

    Returns:
        Soluciones sin repetidos, ordenadas por su forma textual
    """
    return _sorted_unique(_solve_left_counted(a, b, "left"))


def solve_right(c: Isometry, d: Isometry) -> list[Isometry]:
    """
    Todas las soluciones de x·c = d, vía c⁻¹·x⁻¹ = d⁻¹.

    Returns:
        Soluciones sin repetidos, ordenadas por su forma textual
    """
    return _sorted_unique(invert(y) for y in _solve_left_counted(invert(c), invert(d), "right"))


def solve_sandwich(a: Isometry, c: Isometry, k: Isometry) -> list[Isometry]:
    """Todas las soluciones de a·x·c = k (finitas a ambos lados)."""
    solutions: set[Isometry] = set()
    for y in solve_left(a, k):
        solutions.update(solve_right(c, y))
    return _sorted_unique(solutions)


def brute_force_left(a: Isometry, b: Isometry, universe: Iterable[Isometry]) -> list[Isometry]:
    """{x ∈ universe : a·x = b} por búsqueda directa."""
    return _sorted_unique(x for x in universe if compose(a, x) == b)


def brute_force_right(c: Isometry, d: Isometry, universe: Iterable[Isometry]) -> list[Isometry]:
    """{x ∈ universe : x·c = d} por búsqueda directa."""
    return _sorted_unique(x for x in universe if compose(x, c) == d)
