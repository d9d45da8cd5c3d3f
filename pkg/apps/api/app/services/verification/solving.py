"""Suite de ecuaciones: los resolvedores contra búsqueda directa."""

from __future__ import annotations

from collections import defaultdict

from app.models.isometry import alpha, beta, compose, compose_all, identity, invert
from app.services.equations import (
    enumerate_elements,
    solution_bound,
    solve_left,
    solve_right,
    solve_sandwich,
)
from app.services.verification.base import (
    BaseSuite,
    CheckCollector,
    VerifyOptions,
    capped,
    widened,
)
from app.utils.constants import REDUCED_BOUNDS


class EquationsSuite(BaseSuite):
    def __init__(self) -> None:
        super().__init__(
            "equations",
            "a·x = b y x·c = d: completitud contra búsqueda directa, simetría y cota 2^|ℕ∖ran a|",
        )

    def check_all(self, collector: CheckCollector, options: VerifyOptions) -> None:
        check = collector.check

        check(solve_left(alpha(), identity()) == [beta()], "solve_left(α, 𝕀) != [β]")
        check(solve_right(beta(), identity()) == [alpha()], "solve_right(β, 𝕀) != [α]")

        sides = enumerate_elements(capped(options.bounds, REDUCED_BOUNDS))
        reduced = capped(options.bounds, REDUCED_BOUNDS)
        universe = enumerate_elements(widened(reduced, 2, 3))
        universe_set = set(universe)

        for a in sides:
            check(solve_left(identity(), a) == [a], lambda: f"solve_left(𝕀, b) != [b] para b={a}")
            check(solve_right(identity(), a) == [a], lambda: f"solve_right(𝕀, d) != [d] para d={a}")

            # Búsqueda directa agrupada por producto
            left_hits: dict = defaultdict(set)
            right_hits: dict = defaultdict(set)
            for x in universe:
                left_hits[compose(a, x)].add(x)
                right_hits[compose(x, a)].add(x)

            for b in sides:
                solutions = solve_left(a, b)
                found = set(solutions)
                brute = left_hits.get(b, set())
                check(
                    found & universe_set == brute,
                    lambda: f"solve_left({a}, {b}) no coincide con la búsqueda directa",
                )
                check(
                    all(compose(a, x) == b for x in solutions),
                    lambda: f"solve_left({a}, {b}) devuelve un x con a·x != b",
                )
                check(
                    len(solutions) <= solution_bound(a),
                    lambda: f"|solve_left({a}, {b})| supera 2^|ℕ∖ran a|",
                )
                check(
                    all(x.shift == b.shift - a.shift for x in solutions),
                    lambda: f"solve_left({a}, {b}) con desplazamiento no forzado",
                )
                if solutions:
                    mirrored = {invert(x) for x in solve_right(invert(a), invert(b))}
                    check(
                        mirrored == found,
                        lambda: f"simetría a·x = b ⟺ x⁻¹·a⁻¹ = b⁻¹ falla para a={a}, b={b}",
                    )

                right = solve_right(a, b)
                check(
                    set(right) & universe_set == right_hits.get(b, set()),
                    lambda: f"solve_right({a}, {b}) no coincide con la búsqueda directa",
                )
                check(
                    all(compose(x, a) == b for x in right),
                    lambda: f"solve_right({a}, {b}) devuelve un x con x·c != d",
                )
                check(
                    len(right) <= solution_bound(invert(a)),
                    lambda: f"|solve_right({a}, {b})| supera 2^|ℕ∖dom c|",
                )

        small = enumerate_elements(options.small_bounds)
        sandwich_universe = enumerate_elements(widened(options.small_bounds, 1, 1))
        for a in small:
            for c in small:
                hits: dict = defaultdict(set)
                for x in sandwich_universe:
                    hits[compose_all((a, x, c))].add(x)
                for k in small:
                    solutions = solve_sandwich(a, c, k)
                    check(
                        all(compose_all((a, x, c)) == k for x in solutions),
                        lambda: f"solve_sandwich({a}, {c}, {k}) devuelve un x con a·x·c != k",
                    )
                    check(
                        hits.get(k, set()) <= set(solutions),
                        lambda: f"solve_sandwich({a}, {c}, {k}) omite soluciones",
                    )
