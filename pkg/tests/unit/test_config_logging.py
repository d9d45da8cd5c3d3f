"""
Tests unitarios para configuración, logging estructurado y métricas.
"""

import json
import logging
import sys

import pytest

from app.api.middleware.correlation_id import correlation_id_context
from app.services.equations import solve_left
from app.models.isometry import alpha, identity
from app.utils.config import (
    get_default_bounds,
    get_sample_seed,
    get_verify_workers,
    parse_bounds,
)
from app.utils.constants import DEFAULT_MAX_COMPLEMENT, DEFAULT_MAX_OFFSET, DEFAULT_SAMPLE_SEED
from app.utils.exceptions import ConfigurationError, IsonError, WordSyntaxError
from app.utils.logging_config import JSONFormatter
from app.utils.metrics import get_metrics


class TestConfig:
    """Tests de lectura de variables de entorno."""

    def test_parse_bounds(self) -> None:
        assert parse_bounds("3,4") == (3, 4)
        assert parse_bounds(" 2 , 5 ") == (2, 5)

    @pytest.mark.parametrize("text", ["3", "3,4,5", "-1,2", "a,b", ""])
    def test_parse_bounds_rejects(self, text: str) -> None:
        with pytest.raises(ConfigurationError):
            parse_bounds(text)

    def test_defaults_without_env(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.delenv("ISON_BOUNDS", raising=False)
        monkeypatch.delenv("ISON_SAMPLE_SEED", raising=False)
        assert get_default_bounds() == (DEFAULT_MAX_COMPLEMENT, DEFAULT_MAX_OFFSET)
        assert get_sample_seed() == DEFAULT_SAMPLE_SEED

    def test_env_overrides(self, mock_env_vars: None) -> None:
        assert get_default_bounds() == (1, 2)
        assert get_sample_seed() == 7
        assert get_verify_workers() == 2

    def test_invalid_workers(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("ISON_VERIFY_WORKERS", "0")
        with pytest.raises(ConfigurationError):
            get_verify_workers()

    def test_configuration_error_is_domain_error(self) -> None:
        assert issubclass(ConfigurationError, IsonError)


class TestJSONFormatter:
    """Tests del formatter JSON."""

    def _record(self, **extra) -> logging.LogRecord:
        record = logging.LogRecord("app.test", logging.INFO, __file__, 1, "Mensaje %s", ("x",), None)
        for key, value in extra.items():
            setattr(record, key, value)
        return record

    def test_basic_fields_and_extra(self) -> None:
        data = json.loads(JSONFormatter().format(self._record(suite="bicyclic", checked=3)))
        assert data["level"] == "INFO"
        assert data["logger"] == "app.test"
        assert data["message"] == "Mensaje x"
        assert data["suite"] == "bicyclic"
        assert data["checked"] == 3
        assert "correlation_id" not in data

    def test_correlation_id_from_context(self) -> None:
        token = correlation_id_context.set("abc123")
        try:
            data = json.loads(JSONFormatter().format(self._record()))
        finally:
            correlation_id_context.reset(token)
        assert data["correlation_id"] == "abc123"

    def test_exception_info(self) -> None:
        try:
            raise WordSyntaxError(2, ["nat"])
        except WordSyntaxError:
            record = logging.LogRecord(
                "app.test", logging.ERROR, __file__, 1, "falló", (), sys.exc_info()
            )
        data = json.loads(JSONFormatter().format(record))
        assert data["exception"]["type"] == "WordSyntaxError"
        assert "posición 2" in data["exception"]["message"]


class TestMetrics:
    def test_solver_candidates_exported(self) -> None:
        solve_left(alpha(), identity())
        assert b"ison_solver_candidates_total" in get_metrics()
