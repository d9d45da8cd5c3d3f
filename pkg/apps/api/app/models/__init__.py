"""Modelos de dominio de IsoN: conjuntos cofinitos e isometrías parciales."""
