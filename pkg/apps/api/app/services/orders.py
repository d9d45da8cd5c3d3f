"""Órdenes parciales sobre IN∞: el orden natural ≼ y el orden ≪.

γ ≪ δ si existe k >= 0 con γ = βᵏ·δ·αᵏ. El conjunto ↓≪γ es una ω-cadena
que se recorre de forma perezosa con ChainCursor. También vive aquí el
cálculo de conmutación entre potencias de α/β y los idempotentes ε.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Optional

from app.models.cofinite import subset_of, translate
from app.models.isometry import (
    CanonicalForm,
    Isometry,
    alpha_pow,
    beta_pow,
    bicyclic,
    canonical_form,
    compose,
    compose_all,
    epsilon,
    format_eps,
)
from app.utils.exceptions import BoundViolation, InvalidParameters


# ---------------------------------------------------------------------------
# Orden natural
# ---------------------------------------------------------------------------


def natural_leq(s: Isometry, t: Isometry) -> bool:
    """s ≼ t: s es una restricción de t."""
    return s.shift == t.shift and subset_of(s.dom, t.dom)


def natural_leq_oracle(s: Isometry, t: Isometry, idempotents: Iterable[Isometry]) -> bool:
    """
    Versión existencial de ≼: busca e idempotente con s = t·e.

    Args:
        s: Elemento menor candidato
        t: Elemento mayor candidato
        idempotents: Universo finito de idempotentes donde buscar el testigo

    Returns:
        True si algún e del universo cumple s = t·e
    """
    return any(compose(t, e) == s for e in idempotents)


# ---------------------------------------------------------------------------
# Orden ≪ y conjugación
# ---------------------------------------------------------------------------


def conjugate_down(g: Isometry, k: int) -> Isometry:
    """βᵏ·g·αᵏ: mismo desplazamiento, dominio trasladado en +k."""
    if k < 0:
        raise InvalidParameters(f"k debe ser no negativo, se recibió {k}")
    return Isometry(translate(g.dom, k), g.shift)


def conjugate_up(g: Isometry, k: int) -> Optional[Isometry]:
    """
    αᵏ·g·βᵏ, definido solo si mantiene a ↓≪g dentro de ↓≪(αᵏgβᵏ).

    Returns:
        El conjugado, o None si min dom - 1 < k o min ran - 1 < k
    """
    if k < 0:
        raise InvalidParameters(f"k debe ser no negativo, se recibió {k}")
    if g.min_dom - 1 < k or g.min_ran - 1 < k:
        return None
    return Isometry(translate(g.dom, -k), g.shift)


def ll_leq_canonical(cf_g: CanonicalForm, cf_d: CanonicalForm) -> bool:
    """g ≪ d sobre formas canónicas: misma clase e i_g - i_d = j_g - j_d >= 0."""
    if cf_g.coset != cf_d.coset:
        return False
    k = cf_g.i - cf_d.i
    return k >= 0 and cf_g.j - cf_d.j == k


def ll_leq(g: Isometry, d: Isometry) -> bool:
    """g ≪ d decidido por formas canónicas."""
    return ll_leq_canonical(canonical_form(g), canonical_form(d))


def ll_leq_oracle(g: Isometry, d: Isometry, max_k: int) -> bool:
    """Búsqueda directa de k <= max_k con g = βᵏ·d·αᵏ, componiendo."""
    for k in range(max_k + 1):
        if compose_all((beta_pow(k), d, alpha_pow(k))) == g:
            return True
    return False


@dataclass(frozen=True, slots=True)
class ChainCursor:
    """Posición k dentro de la ω-cadena ↓≪base."""

    base: Isometry
    index: int = 0

    def __post_init__(self) -> None:
        if self.index < 0:
            raise InvalidParameters(f"index debe ser no negativo, se recibió {self.index}")

    @property
    def element(self) -> Isometry:
        return conjugate_down(self.base, self.index)

    def advance(self, steps: int = 1) -> "ChainCursor":
        return ChainCursor(self.base, self.index + steps)

    def take(self, n: int) -> list[Isometry]:
        """Los n elementos siguientes de la cadena, empezando en el actual."""
        return [conjugate_down(self.base, self.index + k) for k in range(n)]


def chain_top(g: Isometry) -> Isometry:
    """Elemento ≪-maximal por encima de g."""
    cf = canonical_form(g)
    top = conjugate_up(g, min(cf.i, cf.j))
    assert top is not None
    return top


def coset_of(g: Isometry) -> tuple[tuple[int, ...], int]:
    """Datos (A, n0) de ⟨A[n0)⟩ que contienen a g; (∅, 0) es 𝒞ℕ."""
    return canonical_form(g).coset


def coset_transport(g0: Isometry, d: Isometry) -> tuple[Isometry, Isometry]:
    """
    Elementos bicíclicos (u, v) con u·g0·v = d dentro de un mismo ⟨A[n0)⟩.

    Raises:
        InvalidParameters: Si g0 y d pertenecen a clases distintas
    """
    cf0 = canonical_form(g0)
    cf = canonical_form(d)
    if cf0.coset != cf.coset:
        raise InvalidParameters(
            f"{g0} y {d} pertenecen a clases distintas: {cf0.coset} != {cf.coset}"
        )
    return bicyclic(cf.i, cf0.i), bicyclic(cf0.j, cf.j)


def chain_stability(g: Isometry, i: int, depth: int) -> bool:
    """βⁱ·η·αⁱ ∈ ↓≪g para los primeros `depth` elementos η de ↓≪g."""
    return all(ll_leq(conjugate_down(eta, i), g) for eta in ChainCursor(g).take(depth))


def sandwich_holds(
    g0: Isometry,
    left: tuple[int, int],
    right: tuple[int, int],
    depth: int,
) -> Optional[bool]:
    """
    Verificar que el sándwich bicíclico respeta ↓≪.

    Con L = β^{i1}α^{j1} y R = β^{i2}α^{j2}, si g0 y L·g0·R están en la misma
    clase entonces L·η·R ≪ L·g0·R para todo η ∈ ↓≪g0 (primeros `depth`).

    Returns:
        None si g0 y L·g0·R están en clases distintas; si no, el resultado
    """
    lhs = bicyclic(*left)
    rhs = bicyclic(*right)
    top = compose_all((lhs, g0, rhs))
    if coset_of(top) != coset_of(g0):
        return None
    return all(
        ll_leq(compose_all((lhs, eta, rhs)), top) for eta in ChainCursor(g0).take(depth)
    )


# ---------------------------------------------------------------------------
# Conmutación de potencias con idempotentes ε
# ---------------------------------------------------------------------------


class CommutationClause(IntEnum):
    """Las cuatro reglas de conmutación entre αᵖ/β^q y ε^{n0}_A[i)."""

    ALPHA_LEFT = 1  # αᵖ·ε[i) = ε[i-p)·αᵖ, p <= i
    BETA_LEFT = 2  # β^q·ε[i) = ε[i+q)·β^q
    ALPHA_RIGHT = 3  # ε[i)·αᵖ = αᵖ·ε[i+p)
    BETA_RIGHT = 4  # ε[i)·β^q = β^q·ε[i-q), q <= i


@dataclass(frozen=True, slots=True)
class CommutationRewrite:
    """Resultado de mover una potencia a través de un idempotente ε."""

    clause: CommutationClause
    power: int
    rewritten_index: int
    lhs: Isometry
    rhs: Isometry
    lhs_word: str
    rhs_word: str

    def holds(self) -> bool:
        return self.lhs == self.rhs


def commute_eps(
    clause: CommutationClause | int,
    power: int,
    A: Iterable[int],
    n0: int,
    i: int,
) -> CommutationRewrite:
    """
    Reescribir el par (potencia, ε) según la cláusula indicada.

    Args:
        clause: Cláusula 1-4 (ver CommutationClause)
        power: Exponente p o q
        A: Conjunto excepcional de ε
        n0: Inicio de cola relativo de ε
        i: Índice de ε

    Returns:
        CommutationRewrite con ambos lados evaluados

    Raises:
        BoundViolation: Si power > i en las cláusulas 1 y 4
        InvalidParameters: Si los parámetros de ε no son válidos
    """
    clause = CommutationClause(clause)
    if power < 0:
        raise InvalidParameters(f"La potencia debe ser no negativa, se recibió {power}")
    members = tuple(sorted(set(A)))
    eps = epsilon(members, n0, i)

    if clause in (CommutationClause.ALPHA_LEFT, CommutationClause.BETA_RIGHT) and power > i:
        raise BoundViolation(
            f"La cláusula {int(clause)} exige potencia <= i, se recibió {power} > {i}"
        )

    if clause is CommutationClause.ALPHA_LEFT:
        gen, gen_word, new_i = alpha_pow(power), f"a^{power}", i - power
        lhs, new_eps = compose(gen, eps), epsilon(members, n0, new_i)
        rhs = compose(new_eps, gen)
        lhs_word = f"{gen_word} {format_eps(members, n0, i)}"
        rhs_word = f"{format_eps(members, n0, new_i)} {gen_word}"
    elif clause is CommutationClause.BETA_LEFT:
        gen, gen_word, new_i = beta_pow(power), f"b^{power}", i + power
        lhs, new_eps = compose(gen, eps), epsilon(members, n0, new_i)
        rhs = compose(new_eps, gen)
        lhs_word = f"{gen_word} {format_eps(members, n0, i)}"
        rhs_word = f"{format_eps(members, n0, new_i)} {gen_word}"
    elif clause is CommutationClause.ALPHA_RIGHT:
        gen, gen_word, new_i = alpha_pow(power), f"a^{power}", i + power
        lhs, new_eps = compose(eps, gen), epsilon(members, n0, new_i)
        rhs = compose(gen, new_eps)
        lhs_word = f"{format_eps(members, n0, i)} {gen_word}"
        rhs_word = f"{gen_word} {format_eps(members, n0, new_i)}"
    else:
        gen, gen_word, new_i = beta_pow(power), f"b^{power}", i - power
        lhs, new_eps = compose(eps, gen), epsilon(members, n0, new_i)
        rhs = compose(gen, new_eps)
        lhs_word = f"{format_eps(members, n0, i)} {gen_word}"
        rhs_word = f"{gen_word} {format_eps(members, n0, new_i)}"

    return CommutationRewrite(clause, power, new_i, lhs, rhs, lhs_word, rhs_word)
