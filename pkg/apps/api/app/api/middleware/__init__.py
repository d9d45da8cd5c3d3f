"""Middleware HTTP: correlation ID y métricas."""
