"""Lenguaje de palabras sobre α (a), β (b), 𝕀 (I), 𝟎 (Z) e idempotentes eps.

Es el formato externo de elementos para la CLI y la API.
"""

from app.models.isometry import Isometry
from app.services.wordlang.ast import GenWord
from app.services.wordlang.evaluator import eval_word
from app.services.wordlang.formatter import format_element, format_raw
from app.services.wordlang.parser import parse
from app.services.zerotop import ZElem, Zero
from app.utils.exceptions import ConstraintError


def read_element(text: str) -> ZElem:
    """parse + eval_word."""
    return eval_word(parse(text))


def read_isometry(text: str) -> Isometry:
    """
    Leer una palabra que debe denotar un elemento de IN∞ (no el cero).

    Raises:
        ConstraintError: Si la palabra evalúa a Z
    """
    x = read_element(text)
    if isinstance(x, Zero):
        raise ConstraintError(f"{text!r} evalúa a Z; se esperaba un elemento de IN∞")
    return x


__all__ = [
    "GenWord",
    "parse",
    "eval_word",
    "format_element",
    "format_raw",
    "read_element",
    "read_isometry",
]
