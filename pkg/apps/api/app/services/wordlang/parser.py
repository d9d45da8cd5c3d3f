"""Parser descendente recursivo de palabras.

Gramática:

    word   := term { term }
    term   := atom [ '^' nat ]
    atom   := 'a' | 'b' | 'I' | 'Z' | eps | iso | '(' word ')'
    eps    := 'eps' '(' 'A' '=' set ';' 'n0' '=' nat ')' '[' nat ')'
    iso    := 'iso' '(' 'dom' '=' cofset ';' 'shift' '=' int ')'
    set    := '{' [ nat { ',' nat } ] '}'
    cofset := [ set '+' ] '[' nat ')'
    int    := [ '+' | '-' ] nat
"""

from __future__ import annotations

from app.models.cofinite import normalize
from app.models.isometry import Isometry, validate_eps_parameters
from app.services.wordlang.ast import (
    EpsLiteral,
    GenWord,
    Generator,
    IsoLiteral,
    Power,
    Product,
)
from app.services.wordlang.lexer import Token, tokenize
from app.utils.constants import MAX_NESTING_DEPTH, MAX_NUMERAL_DIGITS
from app.utils.exceptions import ConstraintError, InvalidParameters, WordSyntaxError

ATOM_START = frozenset({"a", "b", "I", "Z", "eps", "iso", "("})


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = tokenize(text)
        self.index = 0
        self.depth = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _fail(self, expected) -> WordSyntaxError:
        tok = self.current
        return WordSyntaxError(tok.position, expected, found=tok.text)

    def expect(self, kind: str) -> Token:
        tok = self.current
        if tok.kind != kind:
            raise self._fail({kind})
        self.index += 1
        return tok

    def accept(self, kind: str) -> bool:
        if self.current.kind == kind:
            self.index += 1
            return True
        return False

    def nat(self) -> int:
        tok = self.expect("nat")
        if len(tok.text) > MAX_NUMERAL_DIGITS:
            raise ConstraintError(
                f"Número de más de {MAX_NUMERAL_DIGITS} dígitos en la posición {tok.position}"
            )
        return int(tok.text)

    # word := term { term }
    def word(self, closing: str) -> GenWord:
        if self.current.kind not in ATOM_START:
            raise self._fail(ATOM_START)
        factors = [self.term()]
        while self.current.kind in ATOM_START:
            factors.append(self.term())
        if self.current.kind != closing:
            raise self._fail(ATOM_START | {closing})
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def term(self) -> GenWord:
        atom = self.atom()
        if self.accept("^"):
            return Power(atom, self.nat())
        return atom

    def atom(self) -> GenWord:
        tok = self.current
        if tok.kind in ("a", "b", "I", "Z"):
            self.index += 1
            return Generator(tok.kind)  # type: ignore[arg-type]
        if tok.kind == "eps":
            return self.eps()
        if tok.kind == "iso":
            return self.iso()
        if tok.kind == "(":
            if self.depth >= MAX_NESTING_DEPTH:
                raise WordSyntaxError(tok.position, ATOM_START - {"("}, found=tok.text)
            self.depth += 1
            self.index += 1
            inner = self.word(")")
            self.expect(")")
            self.depth -= 1
            return inner
        raise self._fail(ATOM_START)

    def set_literal(self) -> tuple[int, ...]:
        self.expect("{")
        members: list[int] = []
        if self.current.kind == "nat":
            members.append(self.nat())
            while self.accept(","):
                members.append(self.nat())
        self.expect("}")
        return tuple(members)

    def eps(self) -> EpsLiteral:
        start = self.expect("eps").position
        self.expect("(")
        self.expect("A")
        self.expect("=")
        A = self.set_literal()
        self.expect(";")
        self.expect("n0")
        self.expect("=")
        n0 = self.nat()
        self.expect(")")
        self.expect("[")
        i = self.nat()
        self.expect(")")
        try:
            members = validate_eps_parameters(A, n0, i)
        except InvalidParameters as e:
            raise ConstraintError(f"Literal eps inválido en la posición {start}: {e}") from e
        return EpsLiteral(members, n0, i)

    def iso(self) -> IsoLiteral:
        start = self.expect("iso").position
        self.expect("(")
        self.expect("dom")
        self.expect("=")
        members: tuple[int, ...] = ()
        if self.current.kind == "{":
            members = self.set_literal()
            self.expect("+")
        elif self.current.kind != "[":
            raise self._fail({"{", "["})
        self.expect("[")
        tail = self.nat()
        self.expect(")")
        self.expect(";")
        self.expect("shift")
        self.expect("=")
        sign = -1 if self.accept("-") else 1
        if sign == 1:
            self.accept("+")
        shift = sign * self.nat()
        self.expect(")")
        try:
            dom = normalize(members, tail)
            Isometry(dom, shift)
        except InvalidParameters as e:
            raise ConstraintError(f"Literal iso inválido en la posición {start}: {e}") from e
        return IsoLiteral(dom, shift)


def parse(text: str) -> GenWord:
    """
    Parsear una palabra completa.

    Args:
        text: Palabra en la gramática de este módulo

    Returns:
        Árbol GenWord

    Raises:
        WordSyntaxError: Con la posición (base 0) y los tokens esperados, también
            cuando los paréntesis anidan más de MAX_NESTING_DEPTH niveles
        ConstraintError: Si un literal eps/iso tiene parámetros inválidos o un
            número supera MAX_NUMERAL_DIGITS dígitos
    """
    parser = _Parser(text)
    word = parser.word("eof")
    parser.expect("eof")
    return word
