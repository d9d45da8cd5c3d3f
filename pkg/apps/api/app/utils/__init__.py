"""Utilidades de IsoN."""
