"""Router de órdenes parciales y ω-cadenas."""

from typing import Literal

from fastapi import APIRouter
from pydantic import BaseModel, Field

from app.services.orders import ChainCursor, chain_top, coset_of, ll_leq, natural_leq
from app.services.wordlang import format_element, read_isometry

router = APIRouter(prefix="/orders")


class PairRequest(BaseModel):
    left: str = Field(..., min_length=1)
    right: str = Field(..., min_length=1)


class OrderResponse(BaseModel):
    order: Literal["nat", "ll"]
    holds: bool


class ChainRequest(BaseModel):
    word: str = Field(..., min_length=1)
    take: int = Field(5, ge=1, le=1000, description="Cantidad de elementos de ↓≪g")


class ChainResponse(BaseModel):
    chain: list[str]
    top: str = Field(..., description="Elemento ≪-maximal por encima de g")
    A: list[int]
    n0: int


@router.post("/chain", response_model=ChainResponse)
async def chain(request: ChainRequest) -> ChainResponse:
    """Primeros elementos de la ω-cadena ↓≪g, su tope y su clase."""
    g = read_isometry(request.word)
    A, n0 = coset_of(g)
    return ChainResponse(
        chain=[format_element(eta) for eta in ChainCursor(g).take(request.take)],
        top=format_element(chain_top(g)),
        A=list(A),
        n0=n0,
    )


@router.post("/{order}", response_model=OrderResponse)
async def compare(order: Literal["nat", "ll"], request: PairRequest) -> OrderResponse:
    """Decidir left ≼ right (nat) o left ≪ right (ll)."""
    g, d = read_isometry(request.left), read_isometry(request.right)
    holds = natural_leq(g, d) if order == "nat" else ll_leq(g, d)
    return OrderResponse(order=order, holds=holds)
