"""
Tests unitarios para el registro de suites de verificación.

Cada suite se corre con cotas reducidas (fixture fast_options).
"""

import pytest

from app.services.verification import (
    SUITE_ALIASES,
    SUITE_IDS,
    BaseSuite,
    SuiteReport,
    VerificationSuite,
    VerifyOptions,
    get_suite,
    get_suites,
    run_suite_safe,
    run_suites,
)
from app.services.verification.algebra import BicyclicSuite
from app.models.isometry import compose
from app.services.verification.base import CheckCollector, ProductTable, capped, widened
from app.services.verification.ordering import commutation_cosets
from app.services.equations import EnumBounds, enumerate_elements
from app.utils.constants import COMMUTATION_MAX_POWER, DEFAULT_TRIPLE_BOUNDS, SMALL_UNIVERSE_BOUNDS
from app.utils.exceptions import VerificationError


class ExplodingSuite(BaseSuite):
    """Suite que falla con una excepción inesperada."""

    def __init__(self) -> None:
        super().__init__("exploding", "Lanza siempre")

    def check_all(self, collector: CheckCollector, options: VerifyOptions) -> None:
        raise RuntimeError("boom")


class TestRegistry:
    """Tests del registro de suites."""

    def test_suite_order(self) -> None:
        assert SUITE_IDS == (
            "inverse-monoid",
            "canonical-form",
            "bicyclic",
            "filtration",
            "commutation",
            "partial-order",
            "chains",
            "equations",
            "group-congruence",
            "simplicity",
            "green",
            "zero-topology",
            "wordlang",
        )

    def test_suites_follow_protocol(self) -> None:
        for suite in get_suites():
            assert isinstance(suite, VerificationSuite)
            assert suite.description

    def test_unknown_suite(self) -> None:
        with pytest.raises(VerificationError) as exc_info:
            get_suite("desconocida")
        assert "inverse-monoid" in str(exc_info.value)

    def test_run_suites_rejects_unknown(self, fast_options: VerifyOptions) -> None:
        with pytest.raises(VerificationError):
            run_suites(["bicyclic", "nope"], fast_options, workers=1)

    def test_numbered_aliases_resolve(self) -> None:
        """Cada alias numerado apunta a una suite registrada."""
        assert set(SUITE_ALIASES.values()) <= set(SUITE_IDS)
        assert get_suite("lemma-2.12").name == "commutation"
        assert get_suite("prop-2.7").name == "partial-order"
        assert get_suite("lemma-3.9").name == "zero-topology"

    def test_unknown_suite_lists_aliases(self) -> None:
        with pytest.raises(VerificationError) as exc_info:
            get_suite("lemma-9.99")
        assert "lemma-2.12" in str(exc_info.value)

    def test_aliases_of_one_suite_run_once(self, fast_options: VerifyOptions) -> None:
        reports = run_suites(["lemma-2.1", "simplicity", "lemma-2.12"], fast_options, workers=1)
        assert [r.suite for r in reports] == ["simplicity", "commutation"]
        assert all(r.passed for r in reports)


class TestSuites:
    """Cada suite pasa con cotas reducidas."""

    @pytest.mark.parametrize("suite_id", SUITE_IDS)
    def test_suite_passes(self, suite_id: str, fast_options: VerifyOptions) -> None:
        report = get_suite(suite_id).run(fast_options)
        assert report.passed, report.failures
        assert report.checked > 0
        assert report.suite == suite_id
        assert report.bounds == "1,2"

    def test_run_suites_keeps_requested_order(self, fast_options: VerifyOptions) -> None:
        reports = run_suites(["wordlang", "bicyclic"], fast_options, workers=2)
        assert [r.suite for r in reports] == ["wordlang", "bicyclic"]
        assert all(r.passed for r in reports)


class TestDegradedExecution:
    """Tests de run_suite_safe."""

    def test_exception_becomes_failed_report(self, fast_options: VerifyOptions) -> None:
        report = run_suite_safe(ExplodingSuite(), fast_options)
        assert isinstance(report, SuiteReport)
        assert not report.passed
        assert report.checked == 0
        assert report.failures == ["RuntimeError: boom"]

    def test_run_suites_degrades_single_suite(
        self, fast_options: VerifyOptions, mocker
    ) -> None:
        """Una suite que lanza no impide que las demás se ejecuten."""
        mocker.patch.object(
            BicyclicSuite, "check_all", side_effect=ValueError("cota rota")
        )
        reports = run_suites(["bicyclic", "filtration"], fast_options, workers=2)
        assert [r.passed for r in reports] == [False, True]
        assert reports[0].failures == ["ValueError: cota rota"]


class TestHelpers:
    """Tests de utilidades de la verificación."""

    def test_collector_caps_failures(self) -> None:
        collector = CheckCollector()
        for k in range(25):
            collector.check(False, lambda k=k: f"fallo {k}")
        collector.check(True, "nunca se guarda")
        assert collector.checked == 26
        assert collector.failed == 25
        assert len(collector.failures) == 10
        assert collector.failures[0] == "fallo 0"

    def test_capped_and_widened(self) -> None:
        bounds = EnumBounds(max_complement=3, max_offset=4)
        assert str(capped(bounds, (2, 3))) == "2,3"
        assert str(widened(bounds, 1, 2)) == "4,6"

    def test_commutation_cosets(self) -> None:
        cosets = commutation_cosets(1, 4)
        assert cosets[0] == ((), 0)
        assert ((1,), 3) in cosets
        assert ((1,), 4) in cosets
        assert ((1, 2), 4) not in cosets

    def test_options_from_env(self, mock_env_vars: None) -> None:
        options = VerifyOptions.from_env()
        assert options.bounds == EnumBounds(max_complement=1, max_offset=2)
        assert options.seed == 7
        assert options.triple_bounds == EnumBounds.of(DEFAULT_TRIPLE_BOUNDS)
        assert options.small_bounds == EnumBounds.of(SMALL_UNIVERSE_BOUNDS)
        assert options.max_index == COMMUTATION_MAX_POWER

    def test_options_max_index(self, mock_env_vars: None) -> None:
        assert VerifyOptions.from_env(max_index=2).max_index == 2

    def test_product_table_matches_compose(self) -> None:
        """Los productos por índice coinciden con compose y se internan una vez."""
        table = ProductTable()
        elements = enumerate_elements((1, 2))
        ids = [table.intern(x) for x in elements]
        assert ids == list(range(len(elements)))
        assert table.intern(elements[3]) == 3
        for a, x in zip(ids, elements):
            for b, y in zip(ids, elements):
                assert table.elements[table.product(a, b)] == compose(x, y)
        assert len(set(table.elements)) == len(table.elements)
