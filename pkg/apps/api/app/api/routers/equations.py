"""Router de resolución de ecuaciones a·x = b y x·c = d."""

from typing import Literal

from fastapi import APIRouter
from pydantic import BaseModel, Field

from app.models.isometry import invert
from app.services.equations import solution_bound, solve_left, solve_right
from app.services.wordlang import format_element, read_isometry
from app.utils.logging_config import get_logger

logger = get_logger(__name__)

router = APIRouter(prefix="/equations")


class SolveRequest(BaseModel):
    """a·x = b (side=left) o x·c = d (side=right)."""

    side: Literal["left", "right"]
    known: str = Field(..., min_length=1, description="a (left) o c (right)")
    rhs: str = Field(..., min_length=1, description="b (left) o d (right)")


class SolveResponse(BaseModel):
    side: Literal["left", "right"]
    solutions: list[str]
    bound: int = Field(..., ge=1, description="Cota estructural 2^|ℕ ∖ ran a|")


# Sin async: la búsqueda crece como 2^|ℕ ∖ ran a| y corre en el threadpool
@router.post("/solve", response_model=SolveResponse)
def solve(request: SolveRequest) -> SolveResponse:
    """Todas las soluciones, ordenadas por su forma cruda."""
    known, rhs = read_isometry(request.known), read_isometry(request.rhs)
    if request.side == "left":
        solutions, bound = solve_left(known, rhs), solution_bound(known)
    else:
        solutions, bound = solve_right(known, rhs), solution_bound(invert(known))
    logger.info(
        "Ecuación resuelta vía API",
        extra={"side": request.side, "solutions": len(solutions)},
    )
    return SolveResponse(
        side=request.side,
        solutions=[format_element(x) for x in solutions],
        bound=bound,
    )
