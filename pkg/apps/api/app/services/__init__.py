"""Servicios de IsoN: órdenes, congruencias, ecuaciones, topología y palabras."""

from app.services.congruence import mg_image, mg_related, simple_witness
from app.services.equations import (
    EnumBounds,
    enumerate_elements,
    solve_left,
    solve_right,
)
from app.services.orders import (
    ChainCursor,
    coset_of,
    conjugate_down,
    conjugate_up,
    ll_leq,
    natural_leq,
)
from app.services.zerotop import ZERO, CofiniteNbhd, shrink_neighborhood, zmul

__all__ = [
    "mg_image",
    "mg_related",
    "simple_witness",
    "EnumBounds",
    "enumerate_elements",
    "solve_left",
    "solve_right",
    "ChainCursor",
    "coset_of",
    "conjugate_down",
    "conjugate_up",
    "ll_leq",
    "natural_leq",
    "ZERO",
    "CofiniteNbhd",
    "shrink_neighborhood",
    "zmul",
]
