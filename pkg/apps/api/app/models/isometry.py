"""Isometrías parciales cofinitas de ℕ: el monoide inverso IN∞.

Toda isometría parcial con dominio cofinito es una traslación x ↦ x + c sobre
su dominio, así que un elemento queda determinado por (dom, shift). La
composición actúa por la derecha: x(γδ) = ((x)γ)δ.

Convención de desplazamientos de la forma canónica ε^{n0}_A[i)·βⁱαʲ:
i = min dom - 1, j = min ran - 1 y dom = {i + a : a ∈ A} ∪ [i + n0).
Con A = ∅ se toma n0 = 0 y dom = [i + 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from app.models.cofinite import (
    CofiniteSet,
    intersect,
    min_member,
    naturals,
    normalize,
    ray,
    translate,
    translate_clipped,
)
from app.utils.exceptions import InvalidParameters


@dataclass(frozen=True, slots=True)
class Isometry:
    """Elemento de IN∞: traslación por `shift` restringida a `dom`."""

    dom: CofiniteSet
    shift: int

    def __post_init__(self) -> None:
        if min_member(self.dom) + self.shift < 1:
            raise InvalidParameters(
                f"El rango de iso(dom={self.dom}; shift={self.shift}) sale de ℕ"
            )

    @property
    def ran(self) -> CofiniteSet:
        return translate(self.dom, self.shift)

    @property
    def min_dom(self) -> int:
        """n̲^d: mínimo del dominio."""
        return min_member(self.dom)

    @property
    def min_ran(self) -> int:
        """n̲^r: mínimo del rango."""
        return min_member(self.dom) + self.shift

    @property
    def tail_dom(self) -> int:
        """n^d: menor m con [m) ⊆ dom."""
        return self.dom.tail_start

    @property
    def tail_ran(self) -> int:
        """n^r: imagen de n^d."""
        return self.dom.tail_start + self.shift

    def __str__(self) -> str:
        return format_iso(self)


@dataclass(frozen=True, slots=True)
class CanonicalForm:
    """Representación canónica única (A, n0, i, j) de un elemento."""

    A: tuple[int, ...]
    n0: int
    i: int
    j: int

    def __post_init__(self) -> None:
        validate_eps_parameters(self.A, self.n0, self.i)
        if self.j < 0:
            raise InvalidParameters(f"j debe ser no negativo, se recibió {self.j}")

    @property
    def coset(self) -> tuple[tuple[int, ...], int]:
        """Datos excepcionales (A, n0); (∅, 0) es 𝒞ℕ."""
        return self.A, self.n0

    def to_dict(self) -> dict:
        """Convertir a diccionario."""
        return {"A": list(self.A), "n0": self.n0, "i": self.i, "j": self.j}


def validate_eps_parameters(A: Iterable[int], n0: int, i: int) -> tuple[int, ...]:
    """
    Validar los parámetros de ε^{n0}_A[i).

    Returns:
        A como tupla ordenada

    Raises:
        InvalidParameters: Si se viola min A = 1, n0 >= max A + 2 o
            (A = ∅ y n0 != 0), o si i < 0
    """
    members = tuple(sorted(set(A)))
    if i < 0:
        raise InvalidParameters(f"i debe ser no negativo, se recibió {i}")
    if not members:
        if n0 != 0:
            raise InvalidParameters(f"Con A = ∅ se exige n0 = 0, se recibió n0={n0}")
        return members
    if members[0] != 1:
        raise InvalidParameters(f"min A debe ser 1, se recibió A={set(members)}")
    if n0 < members[-1] + 2:
        raise InvalidParameters(
            f"n0 debe ser >= max A + 2 = {members[-1] + 2}, se recibió n0={n0}"
        )
    return members


# ---------------------------------------------------------------------------
# Generadores y constructores
# ---------------------------------------------------------------------------


def identity() -> Isometry:
    """𝕀 = α⁰ = β⁰."""
    return Isometry(naturals(), 0)


def alpha() -> Isometry:
    """α: n ↦ n + 1 con dom ℕ."""
    return Isometry(naturals(), 1)


def beta() -> Isometry:
    """β: n ↦ n - 1 con dom [2)."""
    return Isometry(ray(2), -1)


def alpha_pow(j: int) -> Isometry:
    """αʲ."""
    if j < 0:
        raise InvalidParameters(f"Exponente negativo: {j}")
    return Isometry(naturals(), j)


def beta_pow(i: int) -> Isometry:
    """βⁱ."""
    if i < 0:
        raise InvalidParameters(f"Exponente negativo: {i}")
    return Isometry(ray(i + 1), -i)


def bicyclic(i: int, j: int) -> Isometry:
    """βⁱαʲ, elemento de 𝒞ℕ con dom [i + 1)."""
    if i < 0 or j < 0:
        raise InvalidParameters(f"Exponentes negativos: i={i}, j={j}")
    return Isometry(ray(i + 1), j - i)


def epsilon(A: Iterable[int], n0: int, i: int) -> Isometry:
    """
    ε^{n0}_A[i): identidad de i + A[n0).

    Raises:
        InvalidParameters: Si los parámetros violan min A = 1 o n0 >= max A + 2
    """
    members = validate_eps_parameters(A, n0, i)
    if not members:
        return Isometry(ray(i + 1), 0)
    return Isometry(normalize((i + a for a in members), i + n0), 0)


def restriction_identity(s: CofiniteSet) -> Isometry:
    """Idempotente: identidad de s."""
    return Isometry(s, 0)


# ---------------------------------------------------------------------------
# Operaciones
# ---------------------------------------------------------------------------


def compose(g: Isometry, d: Isometry) -> Isometry:
    """g·d: primero g, después d."""
    dom = intersect(g.dom, translate_clipped(d.dom, -g.shift))
    return Isometry(dom, g.shift + d.shift)


def compose_all(elements: Iterable[Isometry]) -> Isometry:
    """Producto de izquierda a derecha; el producto vacío es 𝕀."""
    result = identity()
    for element in elements:
        result = compose(result, element)
    return result


def invert(g: Isometry) -> Isometry:
    """Inverso en el monoide inverso: dom = ran g, shift = -shift."""
    return Isometry(g.ran, -g.shift)


def is_idempotent(g: Isometry) -> bool:
    """Idempotente si y solo si es una identidad parcial."""
    return g.shift == 0


def is_bicyclic(g: Isometry) -> bool:
    """Pertenencia a 𝒞ℕ: el dominio es un rayo."""
    return not g.dom.finite_part


def noise(g: Isometry) -> int:
    """n^d - n̲^d."""
    return g.tail_dom - g.min_dom


def in_filtration(g: Isometry, k: int) -> bool:
    """Pertenencia a IN∞^[k]."""
    return noise(g) <= k


def eval_at(g: Isometry, n: int) -> Optional[int]:
    """(n)g, o None si n ∉ dom g."""
    if n >= g.dom.tail_start or n in g.dom.finite_part:
        return n + g.shift
    return None


def canonical_form(g: Isometry) -> CanonicalForm:
    """
    Representación canónica γ = ε^{n0}_A[i)·βⁱαʲ.

    Args:
        g: Elemento de IN∞

    Returns:
        CanonicalForm con i = min dom - 1 y j = min ran - 1
    """
    i = g.min_dom - 1
    j = g.min_ran - 1
    if not g.dom.finite_part:
        return CanonicalForm((), 0, i, j)
    A = tuple(m - i for m in g.dom.finite_part)
    return CanonicalForm(A, g.dom.tail_start - i, i, j)


def rebuild(cf: CanonicalForm) -> Isometry:
    """Inversa de canonical_form: ε^{n0}_A[i)·βⁱαʲ."""
    return compose(epsilon(cf.A, cf.n0, cf.i), bicyclic(cf.i, cf.j))


def bicyclic_inverse_witness(g: Isometry) -> Isometry:
    """
    γ₀ = β^{j}α^{i} en 𝒞ℕ que invierte a g sobre su dominio.

    Cumple g·γ₀ = id(dom g), γ₀·g = id(ran g) y γ₀·g·γ₀ = g⁻¹.
    """
    cf = canonical_form(g)
    return bicyclic(cf.j, cf.i)


def format_iso(g: Isometry) -> str:
    """Forma textual cruda `iso(dom={...}+[t); shift=c)`."""
    return f"iso(dom={g.dom}; shift={g.shift})"


def format_eps(A: Iterable[int], n0: int, i: int) -> str:
    """Literal `eps(A={...};n0=N)[i)` de la gramática de palabras."""
    members = ",".join(str(a) for a in sorted(A))
    return f"eps(A={{{members}}};n0={n0})[{i})"
