"""
Tests unitarios para S⁰, el cero adjunto y la topología τ_Ac.
"""

import pytest

from app.models.isometry import alpha, beta, identity
from app.services.zerotop import (
    ZERO,
    CofiniteNbhd,
    FiniteZSet,
    TopologyModel,
    check_sandwich_continuity,
    check_separate_continuity,
    continuity_violations,
    discrete_smoke_check,
    is_compact,
    is_isolated,
    is_neighborhood_of_zero,
    shrink_neighborhood,
    symmetric_difference_check,
    zmul,
)


class TestZeroProduct:
    """Tests de zmul."""

    def test_zero_absorbs(self) -> None:
        assert zmul(ZERO, alpha()) == ZERO
        assert zmul(beta(), ZERO) == ZERO
        assert zmul(ZERO, ZERO) == ZERO

    def test_product_of_elements(self) -> None:
        assert zmul(alpha(), beta()) == identity()
        assert str(ZERO) == "Z"

    def test_discrete_smoke(self, small_bounds) -> None:
        assert discrete_smoke_check(small_bounds)


class TestModels:
    """Tests de los hechos de cada modelo topológico."""

    def test_compactness(self) -> None:
        assert is_compact(TopologyModel.TAU_AC)
        assert not is_compact(TopologyModel.DISCRETE)

    @pytest.mark.parametrize("model", list(TopologyModel))
    def test_elements_are_isolated(self, model: TopologyModel) -> None:
        assert is_isolated(model, alpha())

    def test_zero_isolated_only_when_discrete(self) -> None:
        assert is_isolated(TopologyModel.DISCRETE, ZERO)
        assert not is_isolated(TopologyModel.TAU_AC, ZERO)

    def test_neighborhoods_of_zero(self) -> None:
        singleton = FiniteZSet(frozenset({ZERO}))
        assert is_neighborhood_of_zero(TopologyModel.DISCRETE, singleton)
        assert not is_neighborhood_of_zero(TopologyModel.TAU_AC, singleton)
        assert is_neighborhood_of_zero(TopologyModel.TAU_AC, CofiniteNbhd.excluding([alpha()]))
        assert not is_neighborhood_of_zero(
            TopologyModel.DISCRETE, FiniteZSet(frozenset({alpha()}))
        )


class TestSeparateContinuity:
    """Tests de la reducción de entornos U ↦ V."""

    def test_shrink_excludes_solutions(self) -> None:
        """Para g = α y U = S⁰ ∖ {𝕀}, V debe excluir además a β."""
        U = CofiniteNbhd.excluding([identity()])
        V = shrink_neighborhood(alpha(), U)
        assert V.excluded == frozenset({identity(), beta()})
        assert symmetric_difference_check(U, V) == (frozenset({beta()}), frozenset())

    def test_shrunk_neighborhood_is_continuous(self, small_bounds) -> None:
        U = CofiniteNbhd.excluding([identity()])
        assert check_separate_continuity(alpha(), U, small_bounds)

    def test_unshrunk_neighborhood_fails(self, small_bounds) -> None:
        U = CofiniteNbhd.excluding([identity()])
        assert continuity_violations(alpha(), U, small_bounds, V=U) == [beta()]
        assert not check_separate_continuity(alpha(), U, small_bounds, V=U)

    def test_empty_exclusion_is_unchanged(self) -> None:
        U = CofiniteNbhd()
        assert shrink_neighborhood(alpha(), U) == U

    def test_sandwich_continuity(self, small_bounds) -> None:
        U = CofiniteNbhd.excluding([identity(), alpha()])
        assert check_sandwich_continuity(beta(), alpha(), U, small_bounds)
        assert check_sandwich_continuity(alpha(), beta(), U, small_bounds)
