"""
Tests unitarios para IN∞: generadores, composición, inverso y forma canónica.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.models.cofinite import CofiniteSet, naturals, ray
from app.models.isometry import (
    CanonicalForm,
    Isometry,
    alpha,
    alpha_pow,
    beta,
    beta_pow,
    bicyclic,
    bicyclic_inverse_witness,
    canonical_form,
    compose,
    compose_all,
    epsilon,
    eval_at,
    format_eps,
    format_iso,
    identity,
    in_filtration,
    invert,
    is_bicyclic,
    is_idempotent,
    noise,
    rebuild,
    restriction_identity,
)
from app.services.equations import enumerate_elements
from app.utils.exceptions import InvalidParameters

ELEMENTS = enumerate_elements((2, 3))
elements = st.sampled_from(ELEMENTS)


class TestGenerators:
    """Tests de α, β y sus potencias."""

    def test_alpha_beta_is_identity(self) -> None:
        """α·β = 𝕀."""
        assert compose(alpha(), beta()) == identity()

    def test_beta_alpha_is_restricted_identity(self) -> None:
        """β·α es la identidad de [2)."""
        assert compose(beta(), alpha()) == restriction_identity(ray(2))

    def test_powers_are_products(self) -> None:
        assert compose_all([alpha()] * 3) == alpha_pow(3)
        assert compose_all([beta()] * 3) == beta_pow(3)
        assert compose(beta_pow(2), alpha_pow(5)) == bicyclic(2, 5)

    def test_empty_product_is_identity(self) -> None:
        assert compose_all([]) == identity()

    def test_negative_exponent_rejected(self) -> None:
        with pytest.raises(InvalidParameters):
            alpha_pow(-1)
        with pytest.raises(InvalidParameters):
            bicyclic(1, -2)

    def test_range_must_stay_in_naturals(self) -> None:
        with pytest.raises(InvalidParameters):
            Isometry(naturals(), -1)


class TestEpsilon:
    """Tests de los idempotentes ε^{n0}_A[i)."""

    def test_epsilon_domain(self) -> None:
        """ε^3_{1}[1) es la identidad de {2} ∪ [4)."""
        assert epsilon((1,), 3, 1) == restriction_identity(CofiniteSet((2,), 4))

    def test_empty_exceptional_set(self) -> None:
        assert epsilon((), 0, 2) == restriction_identity(ray(3))

    @pytest.mark.parametrize(
        "A, n0, i",
        [((2,), 4, 0), ((1,), 2, 0), ((), 3, 0), ((1,), 3, -1)],
    )
    def test_invalid_parameters(self, A: tuple, n0: int, i: int) -> None:
        with pytest.raises(InvalidParameters):
            epsilon(A, n0, i)

    def test_format_eps(self) -> None:
        assert format_eps((1,), 3, 1) == "eps(A={1};n0=3)[1)"


class TestCanonicalForm:
    """Tests de la forma canónica y su reconstrucción."""

    def test_example(self, sample_element: Isometry) -> None:
        """ε^3_{1}[1)·β¹α³ tiene forma (A={1}, n0=3, i=1, j=3)."""
        assert canonical_form(sample_element) == CanonicalForm((1,), 3, 1, 3)
        assert sample_element.dom == CofiniteSet((2,), 4)
        assert sample_element.shift == 2

    def test_bicyclic_has_empty_coset(self) -> None:
        assert canonical_form(bicyclic(2, 1)) == CanonicalForm((), 0, 2, 1)

    def test_to_dict(self) -> None:
        assert CanonicalForm((1,), 3, 1, 3).to_dict() == {"A": [1], "n0": 3, "i": 1, "j": 3}

    @given(elements)
    def test_rebuild_round_trip(self, g: Isometry) -> None:
        assert rebuild(canonical_form(g)) == g

    @given(elements)
    def test_second_form(self, g: Isometry) -> None:
        """γ = βⁱαʲ·ε^{n0}_A[j)."""
        cf = canonical_form(g)
        assert compose(bicyclic(cf.i, cf.j), epsilon(cf.A, cf.n0, cf.j)) == g


class TestInverseMonoid:
    """Tests de los axiomas de monoide inverso."""

    @given(elements, elements, elements)
    @settings(max_examples=300)
    def test_associativity(self, a: Isometry, b: Isometry, c: Isometry) -> None:
        assert compose(compose(a, b), c) == compose(a, compose(b, c))

    @given(elements)
    def test_inverse_axioms(self, g: Isometry) -> None:
        inv = invert(g)
        assert compose_all((g, inv, g)) == g
        assert compose_all((inv, g, inv)) == inv
        assert compose(g, inv) == restriction_identity(g.dom)

    @given(elements, elements, st.integers(min_value=1, max_value=15))
    def test_pointwise_composition(self, g: Isometry, d: Isometry, n: int) -> None:
        """(n)(g·d) = ((n)g)d."""
        image = eval_at(g, n)
        expected = None if image is None else eval_at(d, image)
        assert eval_at(compose(g, d), n) == expected

    @given(elements, elements)
    def test_idempotents_commute(self, e: Isometry, f: Isometry) -> None:
        e, f = compose(e, invert(e)), compose(f, invert(f))
        assert is_idempotent(e) and is_idempotent(f)
        assert compose(e, f) == compose(f, e)

    @given(elements)
    def test_bicyclic_inverse_witness(self, g: Isometry) -> None:
        w = bicyclic_inverse_witness(g)
        assert is_bicyclic(w)
        assert compose(g, w) == restriction_identity(g.dom)
        assert compose(w, g) == restriction_identity(g.ran)
        assert compose_all((w, g, w)) == invert(g)


class TestFiltration:
    """Tests del ruido y la filtración IN∞^[k]."""

    def test_noise_values(self, sample_element: Isometry) -> None:
        assert noise(bicyclic(3, 1)) == 0
        assert noise(sample_element) == 2

    def test_noise_one_never_occurs(self) -> None:
        assert all(noise(g) != 1 for g in ELEMENTS)

    def test_strict_inclusion_witness(self) -> None:
        w = epsilon((1,), 4, 0)
        assert in_filtration(w, 3) and not in_filtration(w, 2)

    @given(elements, elements)
    def test_closed_under_composition(self, g: Isometry, d: Isometry) -> None:
        assert noise(compose(g, d)) <= max(noise(g), noise(d))


class TestFormat:
    def test_format_iso(self, sample_element: Isometry) -> None:
        assert format_iso(sample_element) == "iso(dom={2}+[4); shift=2)"
        assert str(beta()) == "iso(dom=[2); shift=-1)"
