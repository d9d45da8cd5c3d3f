"""Forma textual canónica de los elementos de S⁰."""

from __future__ import annotations

from app.models.isometry import canonical_form, format_eps, format_iso
from app.services.zerotop import ZElem, Zero


def format_element(x: ZElem) -> str:
    """
    Palabra canónica `eps(A={...};n0=N)[i) b^i a^j`.

    Se omite eps cuando A = ∅ y las potencias nulas; 𝕀 es "I" y 𝟎 es "Z".
    """
    if isinstance(x, Zero):
        return "Z"
    cf = canonical_form(x)
    parts = []
    if cf.A:
        parts.append(format_eps(cf.A, cf.n0, cf.i))
    if cf.i:
        parts.append(f"b^{cf.i}")
    if cf.j:
        parts.append(f"a^{cf.j}")
    return " ".join(parts) if parts else "I"


def format_raw(x: ZElem) -> str:
    """Forma cruda `iso(dom=...; shift=c)`; 𝟎 es "Z"."""
    if isinstance(x, Zero):
        return "Z"
    return format_iso(x)
