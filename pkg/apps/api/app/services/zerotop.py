"""El semigrupo S⁰ con cero adjunto y sus dos topologías extremas.

En la topología discreta todo punto es aislado. En τ_Ac los puntos de S son
aislados y los entornos básicos del cero son {𝟎} ∪ (S ∖ F) con F finito,
así que un entorno se representa exactamente por su conjunto excluido F.
La continuidad separada se comprueba reduciendo entornos con los
resolvedores de ecuaciones.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, Union

from app.models.isometry import Isometry, compose
from app.services.equations import (
    EnumBounds,
    enumerate_elements,
    solve_left,
    solve_right,
    solve_sandwich,
)
from app.utils.logging_config import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class Zero:
    """El cero adjunto 𝟎."""

    def __str__(self) -> str:
        return "Z"


ZERO = Zero()

ZElem = Union[Zero, Isometry]


def zmul(x: ZElem, y: ZElem) -> ZElem:
    """Producto en S⁰: 𝟎 absorbe, si no se compone."""
    if isinstance(x, Zero) or isinstance(y, Zero):
        return ZERO
    return compose(x, y)


@dataclass(frozen=True, slots=True)
class CofiniteNbhd:
    """Entorno básico {𝟎} ∪ (S ∖ excluded) del cero en τ_Ac."""

    excluded: frozenset[Isometry] = field(default_factory=frozenset)

    def contains(self, x: ZElem) -> bool:
        return isinstance(x, Zero) or x not in self.excluded

    @classmethod
    def excluding(cls, elements: Iterable[Isometry]) -> "CofiniteNbhd":
        return cls(frozenset(elements))


@dataclass(frozen=True, slots=True)
class FiniteZSet:
    """Subconjunto finito de S⁰ (abierto en el modelo discreto)."""

    members: frozenset = field(default_factory=frozenset)

    def contains(self, x: ZElem) -> bool:
        return x in self.members


class TopologyModel(str, Enum):
    """Modelos topológicos extremos de S⁰."""

    DISCRETE = "discrete"
    TAU_AC = "tau_ac"


def is_neighborhood_of_zero(model: TopologyModel, points: CofiniteNbhd | FiniteZSet) -> bool:
    """
    Decidir si `points` es entorno de 𝟎 en el modelo dado.

    En el modelo discreto basta con contener a 𝟎; en τ_Ac además debe
    excluir solo un conjunto finito de S.
    """
    if not points.contains(ZERO):
        return False
    if model is TopologyModel.DISCRETE:
        return True
    return isinstance(points, CofiniteNbhd)


def is_isolated(model: TopologyModel, x: ZElem) -> bool:
    """Los puntos de S son aislados en ambos modelos; 𝟎 solo en el discreto."""
    return model is TopologyModel.DISCRETE or not isinstance(x, Zero)


def is_compact(model: TopologyModel) -> bool:
    """τ_Ac es compacta; la discreta sobre un conjunto infinito no."""
    return model is TopologyModel.TAU_AC


def shrink_neighborhood(g: Isometry, U: CofiniteNbhd) -> CofiniteNbhd:
    """
    Entorno V con g·V ⊆ U y V·g ⊆ U.

    V excluye, además de lo que excluye U, a K_g = {x : g·x ∈ F} ∪ {x : x·g ∈ F}
    con F = excluded(U), que es finito por los resolvedores.
    """
    removed: set[Isometry] = set()
    for k in U.excluded:
        removed.update(solve_left(g, k))
        removed.update(solve_right(g, k))
    logger.debug(
        "Entorno reducido",
        extra={"excluded": len(U.excluded), "removed": len(removed - U.excluded)},
    )
    return CofiniteNbhd(U.excluded | frozenset(removed))


def continuity_violations(
    g: Isometry,
    U: CofiniteNbhd,
    bounds: EnumBounds | tuple[int, int],
    V: Optional[CofiniteNbhd] = None,
) -> list[Isometry]:
    """Elementos x ∈ V dentro de la enumeración con g·x ∉ U o x·g ∉ U."""
    nbhd = V if V is not None else shrink_neighborhood(g, U)
    return [
        x
        for x in enumerate_elements(bounds)
        if x not in nbhd.excluded
        and (compose(g, x) in U.excluded or compose(x, g) in U.excluded)
    ]


def check_separate_continuity(
    g: Isometry,
    U: CofiniteNbhd,
    bounds: EnumBounds | tuple[int, int],
    V: Optional[CofiniteNbhd] = None,
) -> bool:
    """
    Comprobar g·V ⊆ U y V·g ⊆ U sobre la enumeración acotada.

    Args:
        g: Elemento fijo
        U: Entorno objetivo
        bounds: Cotas de la enumeración donde se comprueba
        V: Entorno a comprobar; por defecto shrink_neighborhood(g, U)
    """
    return not continuity_violations(g, U, bounds, V)


def shrink_sandwich(left: Isometry, right: Isometry, U: CofiniteNbhd) -> CofiniteNbhd:
    """Entorno V con left·V·right ⊆ U."""
    removed: set[Isometry] = set()
    for k in U.excluded:
        removed.update(solve_sandwich(left, right, k))
    return CofiniteNbhd(U.excluded | frozenset(removed))


def check_sandwich_continuity(
    left: Isometry,
    right: Isometry,
    U: CofiniteNbhd,
    bounds: EnumBounds | tuple[int, int],
) -> bool:
    """Comprobar left·V·right ⊆ U sobre la enumeración acotada."""
    V = shrink_sandwich(left, right, U)
    return all(
        compose(compose(left, x), right) not in U.excluded
        for x in enumerate_elements(bounds)
        if x not in V.excluded
    )


def symmetric_difference_check(
    U: CofiniteNbhd, V: CofiniteNbhd
) -> tuple[frozenset[Isometry], frozenset[Isometry]]:
    """
    Las diferencias (U ∖ V, V ∖ U) entre dos entornos básicos.

    Ambas son finitas: U ∖ V = excluded(V) ∖ excluded(U) y viceversa.
    """
    return V.excluded - U.excluded, U.excluded - V.excluded


def discrete_smoke_check(bounds: EnumBounds | tuple[int, int]) -> bool:
    """En el modelo discreto zmul coincide con compose y 𝟎 absorbe."""
    elements = enumerate_elements(bounds)
    for x in elements:
        if zmul(ZERO, x) != ZERO or zmul(x, ZERO) != ZERO:
            return False
        for y in elements:
            if zmul(x, y) != compose(x, y):
                return False
    return zmul(ZERO, ZERO) == ZERO
