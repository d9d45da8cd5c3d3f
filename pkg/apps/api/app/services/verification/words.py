"""Suite del lenguaje de palabras: ida y vuelta, errores y fuzzing."""

from __future__ import annotations

import random
from typing import Optional

from app.models.isometry import bicyclic, identity
from app.services.equations import enumerate_elements
from app.services.orders import CommutationClause, commute_eps
from app.services.verification.base import BaseSuite, CheckCollector, VerifyOptions
from app.services.verification.ordering import commutation_cosets
from app.services.wordlang import format_element, format_raw, read_element
from app.services.zerotop import ZERO
from app.utils.constants import FUZZ_ALPHABET, FUZZ_MAX_LENGTH, FUZZ_STRINGS
from app.utils.exceptions import IsonError, WordSyntaxError


class WordlangSuite(BaseSuite):
    def __init__(self) -> None:
        super().__init__(
            "wordlang",
            "Parser y formato: ida y vuelta, posiciones de error y robustez ante entradas al azar",
        )

    def check_all(self, collector: CheckCollector, options: VerifyOptions) -> None:
        check = collector.check

        check(read_element("a b") == identity(), "'a b' no evalúa a I")
        check(read_element("Z^0") == identity(), "'Z^0' no evalúa a I")
        try:
            read_element("a^")
            check(False, "'a^' debería fallar")
        except WordSyntaxError as e:
            check(e.position == 2, lambda: f"'a^' falla en la posición {e.position} y no en 2")

        for x in [ZERO, *enumerate_elements(options.bounds)]:
            canonical = format_element(x)
            check(
                read_element(canonical) == x,
                lambda: f"ida y vuelta falla para {canonical!r}",
            )
            raw = format_raw(x)
            check(read_element(raw) == x, lambda: f"ida y vuelta cruda falla para {raw!r}")

        for i in range(7):
            for j in range(7):
                word = f"b^{i} a^{j}"
                check(
                    read_element(word) == bicyclic(i, j),
                    lambda: f"{word!r} no evalúa a β^{i}α^{j}",
                )

        for A, n0 in commutation_cosets(2, 5):
            for clause in CommutationClause:
                rewrite = commute_eps(clause, 1, A, n0, 2)
                check(
                    read_element(rewrite.lhs_word) == rewrite.lhs
                    and read_element(rewrite.rhs_word) == rewrite.rhs,
                    lambda: f"{rewrite.lhs_word!r} / {rewrite.rhs_word!r} mal evaluadas",
                )

        hostile = ("a^²", "(" * 3000 + "a" + ")" * 3000, "a^" + "9" * 5000)
        rng = random.Random(options.seed)
        fuzzed = (
            "".join(rng.choice(FUZZ_ALPHABET) for _ in range(rng.randint(0, FUZZ_MAX_LENGTH)))
            for _ in range(FUZZ_STRINGS)
        )
        for text in (*hostile, *fuzzed):
            crash = _unexpected_error(text)
            check(crash is None, lambda: f"{text[:40]!r} produjo {crash}")


def _unexpected_error(text: str) -> Optional[str]:
    """Error no IsonError que produce `text`, o None."""
    try:
        read_element(text)
    except IsonError:
        return None
    except Exception as e:  # noqa: BLE001
        return f"{type(e).__name__}: {e}"
    return None
