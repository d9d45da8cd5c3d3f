"""Router de elementos: evaluación, forma canónica, producto e inverso."""

from fastapi import APIRouter
from pydantic import BaseModel, Field

from app.models.isometry import canonical_form, invert, noise
from app.services.wordlang import format_element, format_raw, read_element, read_isometry
from app.services.zerotop import Zero, zmul
from app.utils.logging_config import get_logger

logger = get_logger(__name__)

router = APIRouter(prefix="/elements")


class WordRequest(BaseModel):
    """Un elemento escrito en el lenguaje de palabras."""

    word: str = Field(..., min_length=1, description="Palabra, p. ej. 'b^2 a' o 'iso(dom=[3); shift=-1)'")


class ComposeRequest(BaseModel):
    words: list[str] = Field(..., min_length=1, description="Factores, de izquierda a derecha")


class ElementResponse(BaseModel):
    """Elemento en forma canónica y en forma cruda."""

    word: str
    raw: str


class CanonicalResponse(BaseModel):
    word: str
    A: list[int]
    n0: int = Field(..., ge=0)
    i: int = Field(..., ge=0)
    j: int = Field(..., ge=0)
    noise: int = Field(..., ge=0, description="n^d - n̲^d")


def _element_response(x) -> ElementResponse:
    return ElementResponse(word=format_element(x), raw=format_raw(x))


@router.post("/eval", response_model=ElementResponse)
async def eval_word(request: WordRequest) -> ElementResponse:
    """Evaluar una palabra en S⁰."""
    return _element_response(read_element(request.word))


@router.post("/canon", response_model=CanonicalResponse)
async def canon(request: WordRequest) -> CanonicalResponse:
    """Forma canónica ε^{n0}_A[i)·βⁱαʲ de un elemento de IN∞."""
    g = read_isometry(request.word)
    cf = canonical_form(g)
    return CanonicalResponse(
        word=format_element(g), A=list(cf.A), n0=cf.n0, i=cf.i, j=cf.j, noise=noise(g)
    )


@router.post("/compose", response_model=ElementResponse)
async def compose_words(request: ComposeRequest) -> ElementResponse:
    """Producto de los factores de izquierda a derecha."""
    product = read_element(request.words[0])
    for word in request.words[1:]:
        product = zmul(product, read_element(word))
    logger.debug("Producto calculado", extra={"factors": len(request.words)})
    return _element_response(product)


@router.post("/invert", response_model=ElementResponse)
async def invert_word(request: WordRequest) -> ElementResponse:
    """Inverso en el monoide inverso; Z es su propio inverso."""
    x = read_element(request.word)
    return _element_response(x if isinstance(x, Zero) else invert(x))
