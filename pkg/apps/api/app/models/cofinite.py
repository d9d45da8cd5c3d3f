"""Conjuntos cofinitos de ℕ = {1, 2, 3, ...}.

Un conjunto cofinito se guarda como una parte finita por debajo de una cola
[t) = {t, t+1, ...}. La forma normalizada es única: t es mínimo, es decir,
t - 1 nunca es miembro. La igualdad es igualdad estructural.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional

from app.utils.exceptions import InvalidParameters, UnderflowError


@dataclass(frozen=True, slots=True)
class CofiniteSet:
    """Subconjunto cofinito finite_part ∪ [tail_start, ∞) en forma normal."""

    finite_part: tuple[int, ...]
    tail_start: int

    def __post_init__(self) -> None:
        if self.tail_start < 1:
            raise InvalidParameters(f"tail_start debe ser >= 1, se recibió {self.tail_start}")
        previous = 0
        for m in self.finite_part:
            if m <= previous:
                raise InvalidParameters(
                    f"finite_part debe ser estrictamente creciente y >= 1: {self.finite_part}"
                )
            previous = m
        if self.finite_part and self.finite_part[-1] >= self.tail_start - 1:
            raise InvalidParameters(
                f"({set(self.finite_part)}, {self.tail_start}) no está normalizado"
            )

    def __str__(self) -> str:
        if not self.finite_part:
            return f"[{self.tail_start})"
        members = ",".join(str(m) for m in self.finite_part)
        return f"{{{members}}}+[{self.tail_start})"

    def to_dict(self) -> dict:
        """Convertir a diccionario."""
        return {"finite_part": list(self.finite_part), "tail_start": self.tail_start}

    @classmethod
    def from_dict(cls, data: dict) -> "CofiniteSet":
        """Crear desde diccionario (normaliza)."""
        return normalize(data.get("finite_part", ()), int(data["tail_start"]))


def normalize(finite_part: Iterable[int], tail_start: int) -> CofiniteSet:
    """
    Construir la forma normal de finite_part ∪ [tail_start, ∞).

    Los miembros contiguos a la cola se absorben en ella.

    Args:
        finite_part: Miembros (positivos) listados por debajo o dentro de la cola
        tail_start: Inicio de la cola, >= 1

    Returns:
        CofiniteSet normalizado con el mismo conjunto de miembros

    Raises:
        InvalidParameters: Si tail_start < 1 o algún miembro es < 1
    """
    if tail_start < 1:
        raise InvalidParameters(f"tail_start debe ser >= 1, se recibió {tail_start}")
    members = set(finite_part)
    if members and min(members) < 1:
        raise InvalidParameters(f"Los miembros deben ser >= 1: {sorted(members)}")
    t = tail_start
    while t > 1 and (t - 1) in members:
        t -= 1
    return CofiniteSet(tuple(sorted(m for m in members if m < t)), t)


def naturals() -> CofiniteSet:
    """ℕ completo, [1)."""
    return CofiniteSet((), 1)


def ray(start: int) -> CofiniteSet:
    """El rayo [start) = {start, start+1, ...}."""
    return CofiniteSet((), start)


def member(s: CofiniteSet, n: int) -> bool:
    """Pertenencia de n a s."""
    return n >= s.tail_start or n in s.finite_part


def min_member(s: CofiniteSet) -> int:
    """Mínimo de s (siempre existe: s es cofinito)."""
    return s.finite_part[0] if s.finite_part else s.tail_start


def intersect(s1: CofiniteSet, s2: CofiniteSet) -> CofiniteSet:
    """Intersección normalizada; siempre cofinita."""
    if s1 == s2:
        return s1
    # Por debajo de la cola mayor solo quedan miembros de alguna parte finita.
    below = {x for x in s1.finite_part if member(s2, x)}
    below.update(x for x in s2.finite_part if member(s1, x))
    return normalize(below, max(s1.tail_start, s2.tail_start))


def union(s1: CofiniteSet, s2: CofiniteSet) -> CofiniteSet:
    """Unión normalizada."""
    t = min(s1.tail_start, s2.tail_start)
    return normalize(set(s1.finite_part) | set(s2.finite_part), t)


def translate(s: CofiniteSet, c: int) -> CofiniteSet:
    """
    Trasladar s por c: {x + c : x ∈ s}.

    Raises:
        UnderflowError: Si algún miembro queda fuera de ℕ
    """
    if c == 0:
        return s
    if min_member(s) + c < 1:
        raise UnderflowError(
            f"Trasladar {s} por {c} saca el miembro {min_member(s)} fuera de ℕ"
        )
    return CofiniteSet(tuple(m + c for m in s.finite_part), s.tail_start + c)


def translate_clipped(s: CofiniteSet, c: int) -> CofiniteSet:
    """{x + c : x ∈ s, x + c >= 1}; descarta en silencio lo que sale de ℕ."""
    if c >= 0 or min_member(s) + c >= 1:
        return translate(s, c)
    tail = max(s.tail_start + c, 1)
    return normalize((m + c for m in s.finite_part if m + c >= 1), tail)


def complement_list(s: CofiniteSet) -> list[int]:
    """ℕ ∖ s en orden creciente."""
    present = set(s.finite_part)
    return [x for x in range(1, s.tail_start) if x not in present]


def subset_of(s1: CofiniteSet, s2: CofiniteSet) -> bool:
    """s1 ⊆ s2."""
    # En forma normal tail_start - 1 nunca es miembro.
    if s1.tail_start < s2.tail_start:
        return False
    return all(member(s2, x) for x in s1.finite_part)


def equals(s1: CofiniteSet, s2: CofiniteSet) -> bool:
    """Igualdad de conjuntos (estructural por la forma normal)."""
    return s1 == s2


def holes_above_min(s: CofiniteSet) -> int:
    """Cantidad de no-miembros entre min(s) y el inicio de la cola."""
    return s.tail_start - min_member(s) - len(s.finite_part)


_SET_RE = re.compile(r"^\s*(?:\{\s*([0-9,\s]*)\}\s*\+\s*)?\[\s*([0-9]+)\s*\)\s*$")


def parse_cofinite(text: str) -> CofiniteSet:
    """
    Parsear la forma textual `{m1,m2,...}+[t)` o `[t)`.

    Raises:
        InvalidParameters: Si el texto no respeta el formato
    """
    match = _SET_RE.match(text)
    if not match:
        raise InvalidParameters(f"Conjunto cofinito inválido: {text!r}")
    raw_members: Optional[str] = match.group(1)
    members = [int(p) for p in raw_members.split(",") if p.strip()] if raw_members else []
    return normalize(members, int(match.group(2)))
