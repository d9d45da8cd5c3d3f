"""
Tests unitarios para el lenguaje de palabras: parser, evaluación y formato.
"""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from app.models.cofinite import CofiniteSet
from app.models.isometry import (
    Isometry,
    alpha_pow,
    bicyclic,
    epsilon,
    identity,
    restriction_identity,
)
from app.services.equations import enumerate_elements
from app.services.wordlang import (
    format_element,
    format_raw,
    parse,
    read_element,
    read_isometry,
)
from app.services.wordlang.ast import Generator, Power, Product
from app.services.zerotop import ZERO
from app.utils.constants import MAX_NESTING_DEPTH, MAX_NUMERAL_DIGITS
from app.utils.exceptions import ConstraintError, IsonError, WordSyntaxError

elements = st.sampled_from(enumerate_elements((2, 3)))


class TestParse:
    """Tests del parser."""

    def test_product_of_generators(self) -> None:
        assert parse("a b") == Product((Generator("a"), Generator("b")))
        assert parse("ab") == parse("a b")

    def test_power(self) -> None:
        assert parse("a^3") == Power(Generator("a"), 3)

    def test_missing_exponent(self) -> None:
        with pytest.raises(WordSyntaxError) as exc_info:
            parse("a^")
        assert exc_info.value.position == 2
        assert "nat" in exc_info.value.expected

    def test_unknown_character(self) -> None:
        with pytest.raises(WordSyntaxError) as exc_info:
            parse("a x")
        assert exc_info.value.position == 2

    def test_unbalanced_parenthesis(self) -> None:
        with pytest.raises(WordSyntaxError):
            parse("(a b")

    def test_empty_word(self) -> None:
        with pytest.raises(WordSyntaxError) as exc_info:
            parse("")
        assert exc_info.value.position == 0

    def test_invalid_eps_is_constraint_error(self) -> None:
        with pytest.raises(ConstraintError):
            parse("eps(A={2};n0=4)[0)")

    def test_invalid_iso_is_constraint_error(self) -> None:
        with pytest.raises(ConstraintError):
            parse("iso(dom=[1); shift=-1)")

    @pytest.mark.parametrize("text", ["a^²", "eps(A={1};n0=³)[0)", "b^٣", "a^1²"])
    def test_non_ascii_digits_are_syntax_errors(self, text: str) -> None:
        """Los dígitos Unicode que no son 0-9 no forman números."""
        with pytest.raises(WordSyntaxError) as exc_info:
            read_element(text)
        assert exc_info.value.found in {"²", "³", "٣"}

    def test_deep_nesting_is_syntax_error(self) -> None:
        """Un anidamiento excesivo se rechaza sin agotar la pila."""
        with pytest.raises(WordSyntaxError) as exc_info:
            read_element("(" * 3000 + "a" + ")" * 3000)
        assert exc_info.value.position == MAX_NESTING_DEPTH

    def test_nesting_within_limit(self) -> None:
        depth = MAX_NESTING_DEPTH
        assert read_element("(" * depth + "a b" + ")" * depth) == identity()

    def test_oversized_numeral_is_constraint_error(self) -> None:
        with pytest.raises(ConstraintError):
            read_element("a^" + "9" * 5000)

    def test_large_exponent_within_limit(self) -> None:
        assert read_element("b^" + "9" * MAX_NUMERAL_DIGITS + " a^" + "9" * MAX_NUMERAL_DIGITS) == bicyclic(
            10**MAX_NUMERAL_DIGITS - 1, 10**MAX_NUMERAL_DIGITS - 1
        )


class TestEvaluate:
    """Tests de la evaluación en S⁰."""

    def test_examples(self) -> None:
        assert read_element("a b") == identity()
        assert read_element("b a") == restriction_identity(CofiniteSet((), 2))
        assert read_element("(a b)^4 a^2") == alpha_pow(2)

    def test_zero(self) -> None:
        assert read_element("a Z b") == ZERO
        assert read_element("Z^0") == identity()

    def test_literals(self, sample_element: Isometry) -> None:
        assert read_element("eps(A={1};n0=3)[1) b a^3") == sample_element
        assert read_element("iso(dom={2}+[4); shift=+2)") == sample_element
        assert read_element("eps(A={};n0=0)[2)") == epsilon((), 0, 2)

    def test_read_isometry_rejects_zero(self) -> None:
        with pytest.raises(ConstraintError):
            read_isometry("Z a")


class TestFormat:
    """Tests del formato canónico y crudo."""

    def test_canonical_examples(self, sample_element: Isometry) -> None:
        assert format_element(identity()) == "I"
        assert format_element(ZERO) == "Z"
        assert format_element(bicyclic(2, 0)) == "b^2"
        assert format_element(sample_element) == "eps(A={1};n0=3)[1) b^1 a^3"

    def test_raw(self, sample_element: Isometry) -> None:
        assert format_raw(sample_element) == "iso(dom={2}+[4); shift=2)"
        assert format_raw(ZERO) == "Z"

    @given(elements)
    def test_canonical_and_raw_round_trip(self, g: Isometry) -> None:
        assert read_element(format_element(g)) == g
        assert read_element(format_raw(g)) == g

    @given(
        st.text(
            alphabet=st.one_of(st.sampled_from("abIZeps^(){}[];=,+-0123 An"), st.characters()),
            max_size=20,
        )
    )
    def test_fuzz_only_domain_errors(self, text: str) -> None:
        try:
            read_element(text)
        except IsonError:
            pass
