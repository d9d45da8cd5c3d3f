"""
Configuración compartida de pytest para IsoN.
Fixtures y configuración común para todos los tests.
"""

import os
import sys
from pathlib import Path

import pytest

# Agregar apps/api al PYTHONPATH para imports
project_root = Path(__file__).parent.parent
api_path = project_root / "apps" / "api"
sys.path.insert(0, str(api_path))

# Los tests no dependen del .env local
os.environ.setdefault("LOG_LEVEL", "WARNING")
os.environ.pop("ISON_BOUNDS", None)
os.environ.pop("ISON_SAMPLE_SEED", None)

from app.models.isometry import Isometry, bicyclic, compose, epsilon  # noqa: E402
from app.services.equations import EnumBounds  # noqa: E402
from app.services.verification import VerifyOptions  # noqa: E402


@pytest.fixture(scope="session")
def small_bounds() -> EnumBounds:
    """E(1, 2): 36 elementos, suficiente para chequeos cuadráticos rápidos."""
    return EnumBounds(max_complement=1, max_offset=2)


@pytest.fixture(scope="session")
def fast_options() -> VerifyOptions:
    """Opciones de verificación reducidas para correr suites dentro de pytest."""
    return VerifyOptions(
        bounds=EnumBounds(max_complement=1, max_offset=2),
        triple_bounds=EnumBounds(max_complement=0, max_offset=1),
        small_bounds=EnumBounds(max_complement=0, max_offset=1),
        sampled_triples=200,
        seed=20211,
    )


@pytest.fixture(scope="session")
def sample_element() -> Isometry:
    """ε^3_{1}[1)·β¹α³: dom {2} ∪ [4), desplazamiento 2."""
    return compose(epsilon((1,), 3, 1), bicyclic(1, 3))


@pytest.fixture(scope="function")
def mock_env_vars(monkeypatch: pytest.MonkeyPatch) -> None:
    """Fixture para fijar las variables de entorno de IsoN."""
    monkeypatch.setenv("ISON_BOUNDS", "1,2")
    monkeypatch.setenv("ISON_SAMPLE_SEED", "7")
    monkeypatch.setenv("ISON_VERIFY_WORKERS", "2")
