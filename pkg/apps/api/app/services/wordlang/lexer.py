"""Analizador léxico de la gramática de palabras.

Las palabras clave se reconocen por prefijo más largo, de modo que "ab" son
dos generadores y no un identificador.
"""

from __future__ import annotations

from dataclasses import dataclass

from app.utils.exceptions import WordSyntaxError

KEYWORDS = ("shift", "eps", "iso", "dom", "n0", "a", "b", "I", "Z", "A")
PUNCTUATION = "^(){}[];=,+-"
DIGITS = "0123456789"


@dataclass(frozen=True, slots=True)
class Token:
    kind: str  # palabra clave, signo de puntuación, "nat" o "eof"
    text: str
    position: int


def tokenize(text: str) -> list[Token]:
    """
    Dividir `text` en tokens con su posición (base 0).

    Raises:
        WordSyntaxError: Ante un carácter que no inicia ningún token
    """
    tokens: list[Token] = []
    pos = 0
    length = len(text)
    while pos < length:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch in DIGITS:
            start = pos
            while pos < length and text[pos] in DIGITS:
                pos += 1
            tokens.append(Token("nat", text[start:pos], start))
            continue
        if ch in PUNCTUATION:
            tokens.append(Token(ch, ch, pos))
            pos += 1
            continue
        keyword = next((k for k in KEYWORDS if text.startswith(k, pos)), None)
        if keyword is None:
            raise WordSyntaxError(pos, ("a", "b", "I", "Z", "eps", "iso", "("), found=ch)
        tokens.append(Token(keyword, keyword, pos))
        pos += len(keyword)
    tokens.append(Token("eof", "", length))
    return tokens
