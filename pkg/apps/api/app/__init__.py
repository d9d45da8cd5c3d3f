"""
IsoN - Aritmética exacta en el monoide inverso IN∞

Isometrías parciales cofinitas de ℕ, con cero adjunto.

Versión: 1.0.0
"""

__version__ = "1.0.0"
__version_info__ = (1, 0, 0)
