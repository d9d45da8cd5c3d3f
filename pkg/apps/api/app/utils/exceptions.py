"""Excepciones personalizadas para IsoN."""

from typing import Iterable


class IsonError(Exception):
    """Excepción base para errores de dominio de IsoN."""

    pass


class InvalidParameters(IsonError):
    """Parámetros inválidos para un conjunto cofinito, isometría o idempotente ε."""

    pass


class UnderflowError(IsonError):
    """Una traslación saca algún miembro fuera de ℕ = {1, 2, 3, ...}."""

    pass


class BoundViolation(IsonError):
    """Se violó la cota de una identidad de conmutación (p > i o q > i)."""

    pass


class ConstraintError(IsonError):
    """Literal eps(...) o iso(...) sintácticamente correcto pero con parámetros inválidos."""

    pass


class WordSyntaxError(IsonError):
    """Error de sintaxis en una palabra sobre los generadores."""

    def __init__(self, position: int, expected: Iterable[str], found: str = "") -> None:
        self.position = position
        self.expected = tuple(sorted(set(expected)))
        self.found = found
        detail = f"se esperaba uno de {', '.join(self.expected)}"
        if found:
            detail += f", se encontró {found!r}"
        super().__init__(f"Error de sintaxis en la posición {position}: {detail}")


class VerificationError(IsonError):
    """Error en procesos de verificación (suite desconocida, cotas mal formadas)."""

    pass


class ConfigurationError(IsonError):
    """Variable de entorno con formato inválido."""

    pass
