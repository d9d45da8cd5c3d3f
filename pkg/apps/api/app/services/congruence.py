"""Congruencia mínima de grupo, testigos de simplicidad y relaciones de Green.

El cociente IN∞/𝔠_mg es ℤ(+) y la proyección es el desplazamiento de la cola.
"""

from __future__ import annotations

from typing import Optional

from app.models.cofinite import min_member, ray, translate
from app.models.isometry import (
    Isometry,
    alpha_pow,
    beta_pow,
    canonical_form,
    compose,
    compose_all,
    epsilon,
    restriction_identity,
)
from app.utils.exceptions import UnderflowError
from app.utils.logging_config import get_logger

logger = get_logger(__name__)


def mg_image(g: Isometry) -> int:
    """Imagen de g en ℤ(+) bajo IN∞ → IN∞/𝔠_mg."""
    return g.shift


def mg_related(g: Isometry, d: Isometry) -> tuple[bool, Optional[Isometry]]:
    """
    Decidir g 𝔠_mg d y construir el idempotente testigo.

    El testigo es la identidad de [m) con m mínimo: uno más que el mayor
    punto donde los dominios difieren.

    Returns:
        (True, e) con e·g = e·d, o (False, None) si los desplazamientos difieren
    """
    if g.shift != d.shift:
        return False, None
    if g.tail_dom != d.tail_dom:
        # max(tail) - 1 pertenece solo al dominio de cola menor
        m = max(g.tail_dom, d.tail_dom)
    else:
        differing = set(g.dom.finite_part) ^ set(d.dom.finite_part)
        m = max(differing) + 1 if differing else 1
    return True, restriction_identity(ray(m))


def mg_related_oracle(g: Isometry, d: Isometry, max_tail: int) -> bool:
    """Búsqueda de un testigo e = id[m) con m <= max_tail y e·g = e·d."""
    for m in range(1, max_tail + 1):
        e = restriction_identity(ray(m))
        if compose(e, g) == compose(e, d):
            return True
    return False


def simple_witness(g: Isometry, d: Isometry) -> tuple[Isometry, Isometry]:
    """
    Construir (u, v) con u·g·v = d.

    g se aplana a 𝕀 = αᵖ·g·β^{p+s} con p = n^d_g - 1 y s el desplazamiento
    de g; luego d = ε^{n0}_A[i)·βⁱ·𝕀·αʲ según la forma canónica de d.

    Args:
        g: Elemento de partida
        d: Elemento objetivo

    Returns:
        Par (u, v) con u = ε^{n0}_A[i)·βⁱ·αᵖ y v = β^{p+s}·αʲ
    """
    p = g.tail_dom - 1
    cf = canonical_form(d)
    u = compose_all((epsilon(cf.A, cf.n0, cf.i), beta_pow(cf.i), alpha_pow(p)))
    v = compose(beta_pow(p + g.shift), alpha_pow(cf.j))
    logger.debug(
        "Testigo de simplicidad construido",
        extra={"flatten_power": p, "target_i": cf.i, "target_j": cf.j},
    )
    return u, v


# ---------------------------------------------------------------------------
# Relaciones de Green
# ---------------------------------------------------------------------------


def green_R(g: Isometry, d: Isometry) -> bool:
    """g R d: mismo dominio."""
    return g.dom == d.dom


def green_L(g: Isometry, d: Isometry) -> bool:
    """g L d: mismo rango."""
    return g.ran == d.ran


def green_H(g: Isometry, d: Isometry) -> bool:
    return green_R(g, d) and green_L(g, d)


def green_D(g: Isometry, d: Isometry) -> bool:
    """g D d: los dominios son trasladados uno del otro dentro de ℕ."""
    c = min_member(d.dom) - min_member(g.dom)
    try:
        return translate(g.dom, c) == d.dom
    except UnderflowError:
        return False


def green_J(g: Isometry, d: Isometry) -> bool:
    """IN∞ es simple: J es la relación universal (ver simple_witness)."""
    return True


def is_congruence_pair(a: Isometry, b: Isometry, c: Isometry) -> bool:
    """Si a 𝔠_mg b entonces ca 𝔠_mg cb y ac 𝔠_mg bc."""
    if not mg_related(a, b)[0]:
        return True
    return (
        mg_related(compose(c, a), compose(c, b))[0]
        and mg_related(compose(a, c), compose(b, c))[0]
    )


__all__ = [
    "mg_image",
    "mg_related",
    "mg_related_oracle",
    "simple_witness",
    "green_R",
    "green_L",
    "green_H",
    "green_D",
    "green_J",
    "is_congruence_pair",
]
