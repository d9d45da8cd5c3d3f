"""Evaluación de palabras en S⁰."""

from __future__ import annotations

from functools import reduce

from app.models.isometry import Isometry, alpha, beta, epsilon, identity
from app.services.wordlang.ast import (
    EpsLiteral,
    GenWord,
    Generator,
    IsoLiteral,
    Power,
    Product,
)
from app.services.zerotop import ZERO, ZElem, zmul
from app.utils.exceptions import ConstraintError, InvalidParameters


def _power(x: ZElem, exponent: int) -> ZElem:
    """xⁿ por cuadrados sucesivos; x⁰ = 𝕀 para todo x."""
    result: ZElem = identity()
    base = x
    while exponent:
        if exponent & 1:
            result = zmul(result, base)
        exponent >>= 1
        if exponent:
            base = zmul(base, base)
    return result


def eval_word(word: GenWord) -> ZElem:
    """
    Evaluar una palabra en S⁰, de izquierda a derecha.

    Raises:
        ConstraintError: Si un literal eps/iso no define un elemento válido
    """
    if isinstance(word, Generator):
        if word.name == "a":
            return alpha()
        if word.name == "b":
            return beta()
        if word.name == "I":
            return identity()
        return ZERO
    if isinstance(word, EpsLiteral):
        try:
            return epsilon(word.A, word.n0, word.i)
        except InvalidParameters as e:
            raise ConstraintError(str(e)) from e
    if isinstance(word, IsoLiteral):
        try:
            return Isometry(word.dom, word.shift)
        except InvalidParameters as e:
            raise ConstraintError(str(e)) from e
    if isinstance(word, Power):
        return _power(eval_word(word.base), word.exponent)
    if isinstance(word, Product):
        return reduce(zmul, (eval_word(f) for f in word.factors))
    raise TypeError(f"Nodo desconocido: {word!r}")
