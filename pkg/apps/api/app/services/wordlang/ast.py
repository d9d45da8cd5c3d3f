"""Árbol sintáctico de palabras sobre los generadores."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Union

from app.models.cofinite import CofiniteSet

GeneratorName = Literal["a", "b", "I", "Z"]


@dataclass(frozen=True, slots=True)
class Generator:
    """a = α, b = β, I = 𝕀, Z = 𝟎."""

    name: GeneratorName


@dataclass(frozen=True, slots=True)
class EpsLiteral:
    """eps(A={...};n0=N)[i)."""

    A: tuple[int, ...]
    n0: int
    i: int


@dataclass(frozen=True, slots=True)
class IsoLiteral:
    """iso(dom=<conjunto>; shift=c)."""

    dom: CofiniteSet
    shift: int


@dataclass(frozen=True, slots=True)
class Power:
    base: "GenWord"
    exponent: int


@dataclass(frozen=True, slots=True)
class Product:
    """Yuxtaposición; se evalúa de izquierda a derecha."""

    factors: tuple["GenWord", ...]


GenWord = Union[Generator, EpsLiteral, IsoLiteral, Power, Product]
