"""Métricas de observabilidad usando Prometheus."""

from prometheus_client import Counter, Histogram, generate_latest

# Métricas de latencia HTTP
request_duration = Histogram(
    "http_request_duration_seconds",
    "Duración de requests HTTP en segundos",
    ["method", "endpoint", "status"],
    buckets=(0.01, 0.05, 0.1, 0.25, 0.5, 1.0, 2.5, 5.0, 10.0),
)

# Métricas de requests HTTP
request_total = Counter(
    "http_requests_total",
    "Total de requests HTTP",
    ["method", "endpoint", "status"],
)

# Métricas de suites de verificación
verification_checks = Counter(
    "ison_verification_checks_total",
    "Total de instancias verificadas por suite",
    ["suite"],
)

verification_failures = Counter(
    "ison_verification_failures_total",
    "Total de instancias que fallaron por suite",
    ["suite"],
)

verification_duration = Histogram(
    "ison_verification_duration_seconds",
    "Duración de cada suite de verificación",
    ["suite"],
    buckets=(0.1, 0.5, 1.0, 2.5, 5.0, 10.0, 30.0, 60.0),
)

# Candidatos explorados por los resolvedores de ecuaciones
solver_candidates = Counter(
    "ison_solver_candidates_total",
    "Candidatos evaluados por los resolvedores a·x=b y x·c=d",
    ["side"],
)


def get_metrics() -> bytes:
    """
    Obtener métricas en formato Prometheus.

    Returns:
        Bytes con métricas en formato Prometheus
    """
    return generate_latest()


def record_request_metrics(
    method: str,
    endpoint: str,
    status_code: int,
    duration: float,
) -> None:
    """
    Registrar métricas de un request HTTP.

    Args:
        method: Método HTTP (GET, POST, etc.)
        endpoint: Endpoint (ej: /api/v1/elements/eval)
        status_code: Código de estado HTTP
        duration: Duración en segundos
    """
    normalized_endpoint = endpoint.split("?")[0]
    request_duration.labels(
        method=method, endpoint=normalized_endpoint, status=status_code
    ).observe(duration)
    request_total.labels(
        method=method, endpoint=normalized_endpoint, status=status_code
    ).inc()


def record_suite_result(suite: str, checked: int, failed: int, duration: float) -> None:
    """
    Registrar el resultado de una suite de verificación.

    Args:
        suite: Identificador de la suite
        checked: Instancias verificadas
        failed: Instancias que fallaron
        duration: Duración en segundos
    """
    verification_checks.labels(suite=suite).inc(checked)
    if failed:
        verification_failures.labels(suite=suite).inc(failed)
    verification_duration.labels(suite=suite).observe(duration)


def record_solver_candidates(side: str, count: int) -> None:
    """Registrar candidatos evaluados por un resolvedor ("left" o "right")."""
    solver_candidates.labels(side=side).inc(count)
