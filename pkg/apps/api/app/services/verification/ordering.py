"""Suites sobre la conmutación con ε, los órdenes ≼ y ≪ y las ω-cadenas."""

from __future__ import annotations

from collections import defaultdict

from app.models.isometry import bicyclic, canonical_form, compose_all, epsilon
from app.services.equations import enumerate_elements, enumerate_idempotents
from app.services.orders import (
    ChainCursor,
    CommutationClause,
    chain_stability,
    chain_top,
    commute_eps,
    conjugate_down,
    conjugate_up,
    coset_of,
    coset_transport,
    ll_leq,
    ll_leq_canonical,
    ll_leq_oracle,
    natural_leq,
    natural_leq_oracle,
    sandwich_holds,
)
from app.services.verification.base import BaseSuite, CheckCollector, VerifyOptions, widened
from app.utils.constants import (
    BICYCLIC_MAX_EXPONENT,
    CHAIN_DEPTH,
    COMMUTATION_MAX_A_SIZE,
    COMMUTATION_MAX_N0,
    CONJUGATION_SEARCH_DEPTH,
    CONJUGATION_STABILITY_MAX,
    SANDWICH_DEPTH,
    SANDWICH_MAX_EXPONENT,
    STABILITY_DEPTH,
)
from app.utils.exceptions import BoundViolation


def commutation_cosets(max_a_size: int, max_n0: int) -> list[tuple[tuple[int, ...], int]]:
    """Todos los (A, n0) con |A| <= max_a_size y n0 <= max_n0, incluido (∅, 0)."""
    cosets: list[tuple[tuple[int, ...], int]] = [((), 0)]
    for n0 in range(3, max_n0 + 1):
        # A ⊆ [1, n0 - 2] con 1 ∈ A
        candidates = range(2, n0 - 1)
        stack: list[tuple[int, ...]] = [(1,)]
        while stack:
            A = stack.pop()
            cosets.append((A, n0))
            if len(A) < max_a_size:
                stack.extend(A + (x,) for x in candidates if x > A[-1])
    return sorted(cosets)


class CommutationSuite(BaseSuite):
    def __init__(self) -> None:
        super().__init__(
            "commutation",
            "Las cuatro identidades de conmutación de αᵖ/β^q con ε^{n0}_A[i)",
        )

    def check_all(self, collector: CheckCollector, options: VerifyOptions) -> None:
        check = collector.check

        example = commute_eps(CommutationClause.BETA_LEFT, 2, (1,), 3, 1)
        check(
            example.rewritten_index == 3 and example.holds(),
            "β²·ε^3_{1}[1) no se reescribe como ε^3_{1}[3)·β²",
        )

        top = options.max_index
        for A, n0 in commutation_cosets(COMMUTATION_MAX_A_SIZE, COMMUTATION_MAX_N0):
            for clause in CommutationClause:
                bounded = clause in (CommutationClause.ALPHA_LEFT, CommutationClause.BETA_RIGHT)
                for power in range(top + 1):
                    for i in range(top + 1):
                        try:
                            rewrite = commute_eps(clause, power, A, n0, i)
                        except BoundViolation:
                            check(
                                bounded and power > i,
                                lambda: f"BoundViolation inesperado: cláusula {int(clause)}, "
                                f"p={power}, i={i}, A={A}, n0={n0}",
                            )
                            continue
                        check(
                            not (bounded and power > i),
                            lambda: f"Falta BoundViolation: cláusula {int(clause)}, p={power}, i={i}",
                        )
                        check(
                            rewrite.holds(),
                            lambda: f"{rewrite.lhs_word} != {rewrite.rhs_word}",
                        )


class PartialOrderSuite(BaseSuite):
    def __init__(self) -> None:
        super().__init__(
            "partial-order",
            "≪ es orden parcial, coincide con ≼ en 𝒞ℕ y la decisión canónica coincide con la búsqueda",
        )

    def check_all(self, collector: CheckCollector, options: VerifyOptions) -> None:
        check = collector.check

        elements = enumerate_elements(options.bounds)
        forms = [canonical_form(g) for g in elements]
        # en E(K, M) todo k con g ≪ d cumple k <= M
        depth = max(CONJUGATION_SEARCH_DEPTH, options.bounds.max_offset)
        below: list[set[int]] = []
        for d_idx, d in enumerate(elements):
            orbit = set(ChainCursor(d).take(depth + 1))
            cf_d = forms[d_idx]
            down = set()
            for g_idx, g in enumerate(elements):
                decided = ll_leq_canonical(forms[g_idx], cf_d)
                searched = g in orbit
                check(
                    decided == searched,
                    lambda: f"g ≪ d decidido={decided} búsqueda={searched} para g={g}, d={d}",
                )
                if searched:
                    check(
                        forms[g_idx].coset == cf_d.coset,
                        lambda: f"comparables en clases distintas: g={g}, d={d}",
                    )
                if decided:
                    down.add(g_idx)
            below.append(down)

        for d_idx, d in enumerate(elements):
            check(d_idx in below[d_idx], lambda: f"≪ no es reflexiva en {d}")
            for g_idx in below[d_idx]:
                if g_idx != d_idx:
                    check(
                        d_idx not in below[g_idx],
                        lambda: f"≪ no es antisimétrica en {elements[g_idx]}, {d}",
                    )
                for h_idx in below[g_idx]:
                    check(
                        h_idx in below[d_idx],
                        lambda: f"≪ no es transitiva: {elements[h_idx]}, {elements[g_idx]}, {d}",
                    )

        for e in enumerate_idempotents(options.bounds):
            cf_e = canonical_form(e)
            for f in enumerate_idempotents(options.bounds):
                cf_f = canonical_form(f)
                expected = cf_e.coset == cf_f.coset and cf_e.i >= cf_f.i
                check(
                    ll_leq(e, f) == expected,
                    lambda: f"idempotentes: e ≪ f mal decidido para e={e}, f={f}",
                )

        top = BICYCLIC_MAX_EXPONENT
        for i1 in range(top + 1):
            for j1 in range(top + 1):
                x = bicyclic(i1, j1)
                for i2 in range(top + 1):
                    for j2 in range(top + 1):
                        y = bicyclic(i2, j2)
                        expected = j2 <= j1 and i1 - i2 == j1 - j2
                        check(
                            ll_leq(x, y) == natural_leq(x, y) == expected,
                            lambda: f"≪ y ≼ difieren en 𝒞ℕ para β^{i1}α^{j1}, β^{i2}α^{j2}",
                        )

        small = enumerate_elements(options.small_bounds)
        idempotents = enumerate_idempotents(
            widened(options.small_bounds, 0, options.small_bounds.max_offset)
        )
        for s in small:
            for t in small:
                check(
                    natural_leq(s, t) == natural_leq_oracle(s, t, idempotents),
                    lambda: f"≼ decidido != búsqueda de idempotente para s={s}, t={t}",
                )
                check(
                    ll_leq(s, t) == ll_leq_oracle(s, t, depth),
                    lambda: f"≪ decidido != búsqueda por composición para s={s}, t={t}",
                )

        for g in elements:
            maximal = g.min_dom == 1 or g.min_ran == 1
            check(
                (conjugate_up(g, 1) is None) == maximal,
                lambda: f"maximalidad mal detectada para {g}",
            )


class ChainsSuite(BaseSuite):
    def __init__(self) -> None:
        super().__init__(
            "chains",
            "↓≪γ es una ω-cadena estricta, cerrada en su clase, estable y compatible con sándwiches",
        )

    def check_all(self, collector: CheckCollector, options: VerifyOptions) -> None:
        check = collector.check
        elements = enumerate_elements(options.bounds)

        for g in elements:
            chain = ChainCursor(g).take(CHAIN_DEPTH)
            coset = coset_of(g)
            check(len(set(chain)) == CHAIN_DEPTH, lambda: f"↓≪g con repetidos para {g}")
            for k in range(CHAIN_DEPTH - 1):
                upper, lower = chain[k], chain[k + 1]
                check(
                    ll_leq(lower, upper) and not ll_leq(upper, lower),
                    lambda: f"↓≪g no decrece estrictamente en k={k} para {g}",
                )
            check(ll_leq(chain[-1], chain[0]), lambda: f"extremos de ↓≪g no comparables para {g}")
            check(
                all(coset_of(eta) == coset for eta in chain),
                lambda: f"↓≪g sale de su clase para {g}",
            )
            for k in range(CONJUGATION_STABILITY_MAX + 1):
                check(
                    conjugate_up(conjugate_down(g, k), k) == g,
                    lambda: f"conjugate_up(conjugate_down(g, {k}), {k}) != g para {g}",
                )
                check(
                    chain_stability(g, k, STABILITY_DEPTH),
                    lambda: f"βⁱ·↓≪g·αⁱ ⊄ ↓≪g con i={k} para {g}",
                )
            top = chain_top(g)
            check(
                ll_leq(g, top) and conjugate_up(top, 1) is None,
                lambda: f"chain_top no es maximal sobre {g}",
            )

        exponents = range(SANDWICH_MAX_EXPONENT + 1)
        pairs = [(i, j) for i in exponents for j in exponents]
        for g0 in elements:
            for left in pairs:
                for right in pairs:
                    result = sandwich_holds(g0, left, right, SANDWICH_DEPTH)
                    if result is None:
                        continue
                    check(
                        result,
                        lambda: f"sándwich β^{left[0]}α^{left[1]}·η·β^{right[0]}α^{right[1]} "
                        f"falla para g0={g0}",
                    )

        by_coset = defaultdict(list)
        for g in elements:
            by_coset[coset_of(g)].append(g)
        for group in by_coset.values():
            for g0 in group[:CONJUGATION_STABILITY_MAX]:
                for d in group:
                    u, v = coset_transport(g0, d)
                    check(
                        compose_all((u, g0, v)) == d,
                        lambda: f"coset_transport falla para g0={g0}, d={d}",
                    )

        check(
            conjugate_down(epsilon((1,), 3, 1), 2) == epsilon((1,), 3, 3),
            "β²·ε^3_{1}[1)·α² != ε^3_{1}[3)",
        )
