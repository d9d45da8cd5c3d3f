"""Lectura de configuración desde variables de entorno.

Los valores se leen en cada llamada para permitir cambios sin reiniciar,
igual que la validación de claves de la API.
"""

import os
from pathlib import Path

from dotenv import load_dotenv

from app.utils.constants import (
    DEFAULT_MAX_COMPLEMENT,
    DEFAULT_MAX_OFFSET,
    DEFAULT_SAMPLE_SEED,
    DEFAULT_VERIFY_WORKERS,
)
from app.utils.exceptions import ConfigurationError


def load_env_file() -> None:
    """Cargar .env desde la raíz del repositorio si existe (desarrollo local)."""
    env_path = Path(__file__).resolve().parents[4] / ".env"
    if env_path.exists():
        load_dotenv(env_path)


def parse_bounds(text: str) -> tuple[int, int]:
    """
    Parsear un par de cotas "K,M".

    Args:
        text: Texto con dos enteros no negativos separados por coma

    Returns:
        Tupla (max_complement, max_offset)

    Raises:
        ConfigurationError: Si el formato es inválido
    """
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ConfigurationError(
            f"Cotas inválidas {text!r}: se esperaba 'K,M' con enteros no negativos"
        )
    return int(parts[0]), int(parts[1])


def get_default_bounds() -> tuple[int, int]:
    """Cotas por defecto; ISON_BOUNDS las sobrescribe."""
    raw = os.getenv("ISON_BOUNDS", "").strip()
    if not raw:
        return DEFAULT_MAX_COMPLEMENT, DEFAULT_MAX_OFFSET
    return parse_bounds(raw)


def get_verify_workers() -> int:
    """Cantidad de hilos para ejecutar suites de verificación."""
    raw = os.getenv("ISON_VERIFY_WORKERS", "").strip()
    if not raw:
        return DEFAULT_VERIFY_WORKERS
    if not raw.isdigit() or int(raw) < 1:
        raise ConfigurationError(f"ISON_VERIFY_WORKERS inválido: {raw!r}")
    return int(raw)


def get_sample_seed() -> int:
    """Semilla de muestreo y fuzzing."""
    raw = os.getenv("ISON_SAMPLE_SEED", "").strip()
    if not raw:
        return DEFAULT_SAMPLE_SEED
    try:
        return int(raw)
    except ValueError as e:
        raise ConfigurationError(f"ISON_SAMPLE_SEED inválido: {raw!r}") from e
