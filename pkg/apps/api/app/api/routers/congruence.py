"""Router de la congruencia mínima de grupo y los testigos de simplicidad."""

from typing import Optional

from fastapi import APIRouter
from pydantic import BaseModel, Field

from app.services.congruence import mg_image, mg_related, simple_witness
from app.services.wordlang import format_element, read_isometry

router = APIRouter(prefix="/congruence")


class PairRequest(BaseModel):
    left: str = Field(..., min_length=1)
    right: str = Field(..., min_length=1)


class MgRelResponse(BaseModel):
    related: bool
    witness: Optional[str] = Field(None, description="Idempotente e con e·g = e·d")
    left_image: int
    right_image: int


class WitnessResponse(BaseModel):
    u: str
    v: str


@router.post("/mg-rel", response_model=MgRelResponse)
def mg_rel(request: PairRequest) -> MgRelResponse:
    """Decidir g 𝔠_mg d y devolver el testigo idempotente."""
    g, d = read_isometry(request.left), read_isometry(request.right)
    related, witness = mg_related(g, d)
    return MgRelResponse(
        related=related,
        witness=format_element(witness) if witness is not None else None,
        left_image=mg_image(g),
        right_image=mg_image(d),
    )


@router.post("/simple-witness", response_model=WitnessResponse)
def witness(request: PairRequest) -> WitnessResponse:
    """Par (u, v) con u·left·v = right."""
    u, v = simple_witness(read_isometry(request.left), read_isometry(request.right))
    return WitnessResponse(u=format_element(u), v=format_element(v))
