"""Suite de S⁰: continuidad separada en τ_Ac y el extremo discreto."""

from __future__ import annotations

import random
from collections import defaultdict

from app.models.isometry import alpha, beta, compose, identity, is_idempotent
from app.services.equations import enumerate_elements
from app.services.verification.base import (
    BaseSuite,
    CheckCollector,
    VerifyOptions,
    capped,
    widened,
)
from app.services.zerotop import (
    ZERO,
    CofiniteNbhd,
    FiniteZSet,
    TopologyModel,
    check_sandwich_continuity,
    check_separate_continuity,
    discrete_smoke_check,
    is_compact,
    is_isolated,
    is_neighborhood_of_zero,
    shrink_neighborhood,
    symmetric_difference_check,
    zmul,
)
from app.utils.constants import REDUCED_BOUNDS, TOPOLOGY_MAX_EXCLUDED, TOPOLOGY_SAMPLED_SETS


class ZeroTopologySuite(BaseSuite):
    def __init__(self) -> None:
        super().__init__(
            "zero-topology",
            "S⁰ con τ_Ac: reducción de entornos, continuidad separada y diferencias finitas",
        )

    def check_all(self, collector: CheckCollector, options: VerifyOptions) -> None:
        check = collector.check

        check(zmul(ZERO, alpha()) == ZERO, "𝟎·α != 𝟎")
        check(zmul(alpha(), beta()) == identity(), "α·β != 𝕀 en S⁰")
        check(zmul(ZERO, ZERO) == ZERO, "𝟎·𝟎 != 𝟎")
        check(is_compact(TopologyModel.TAU_AC), "τ_Ac debería ser compacta")
        check(not is_compact(TopologyModel.DISCRETE), "la topología discreta no es compacta")
        check(not is_isolated(TopologyModel.TAU_AC, ZERO), "𝟎 no es aislado en τ_Ac")
        check(is_isolated(TopologyModel.TAU_AC, alpha()), "α es aislado en τ_Ac")
        check(
            not is_neighborhood_of_zero(TopologyModel.TAU_AC, FiniteZSet(frozenset({ZERO}))),
            "{𝟎} no es entorno de 𝟎 en τ_Ac",
        )
        check(
            is_neighborhood_of_zero(TopologyModel.DISCRETE, FiniteZSet(frozenset({ZERO}))),
            "{𝟎} es entorno de 𝟎 en el modelo discreto",
        )
        check(discrete_smoke_check(options.small_bounds), "zmul no coincide con compose")

        V = shrink_neighborhood(alpha(), CofiniteNbhd.excluding([identity()]))
        check({identity(), beta()} <= V.excluded, lambda: f"excluded(V) = {V.excluded} sin 𝕀 y β")

        reduced = capped(options.bounds, REDUCED_BOUNDS)
        universe_bounds = widened(reduced, 2, 3)
        pool = enumerate_elements(reduced)
        universe = enumerate_elements(universe_bounds)
        rng = random.Random(options.seed)
        sizes = [rng.randint(2, TOPOLOGY_MAX_EXCLUDED) for _ in range(TOPOLOGY_SAMPLED_SETS)]
        sampled = [
            CofiniteNbhd.excluding(rng.sample(pool, min(size, len(pool)))) for size in sizes
        ]
        neighborhoods = [CofiniteNbhd()] + [CofiniteNbhd.excluding([k]) for k in pool] + sampled
        mutated: set = set()

        for g in enumerate_elements(options.small_bounds):
            # x ↦ g·x y x ↦ x·g invertidos sobre el universo
            left_hits: dict = defaultdict(set)
            right_hits: dict = defaultdict(set)
            for x in universe:
                left_hits[compose(g, x)].add(x)
                right_hits[compose(x, g)].add(x)

            for U in neighborhoods:
                V = shrink_neighborhood(g, U)
                offending = set()
                for k in U.excluded:
                    offending |= left_hits.get(k, set()) | right_hits.get(k, set())
                escaped = offending - V.excluded
                check(
                    not escaped,
                    lambda: f"g·V ⊄ U o V·g ⊄ U para g={g}: {sorted(map(str, escaped))[:3]}",
                )
                check(U.excluded <= V.excluded, lambda: f"V ⊄ U para g={g}")
                gained, lost = symmetric_difference_check(U, V)
                check(
                    gained == V.excluded - U.excluded and not lost,
                    lambda: f"diferencias de entornos inesperadas para g={g}",
                )
                if not U.excluded:
                    check(V == U, lambda: f"reducir el entorno total cambia V para g={g}")
                if len(U.excluded) == 1 and is_idempotent(g) and g in U.excluded:
                    check(
                        offending <= V.excluded,
                        lambda: f"excluded(V) omite soluciones de e·x = e o x·e = e para e={g}",
                    )

                # Mutación: quitar un elemento de K_g debe romper la continuidad
                removable = sorted((offending & V.excluded) - U.excluded, key=str)
                if removable and g not in mutated:
                    mutated.add(g)
                    corrupted = CofiniteNbhd(V.excluded - {removable[0]})
                    check(
                        not check_separate_continuity(g, U, universe_bounds, corrupted),
                        lambda: f"la mutación de V no se detecta para g={g}",
                    )

        for left, right in ((beta(), alpha()), (alpha(), beta())):
            for U in sampled:
                check(
                    check_sandwich_continuity(left, right, U, reduced),
                    lambda: f"{left}·V·{right} ⊄ U con excluded(U) de tamaño {len(U.excluded)}",
                )

        if len(pool) >= 5:
            a_set = CofiniteNbhd.excluding(pool[:2])
            b_set = CofiniteNbhd.excluding(pool[2:5])
            gained, lost = symmetric_difference_check(a_set, b_set)
            check(
                (len(gained), len(lost)) == (3, 2),
                lambda: f"diferencias de tamaños {len(gained)}, {len(lost)} en lugar de 3, 2",
            )

        small = enumerate_elements(options.small_bounds)
        zs = [ZERO] + small
        for x in zs:
            for y in zs:
                xy = zmul(x, y)
                for z in zs:
                    check(
                        zmul(xy, z) == zmul(x, zmul(y, z)),
                        lambda: f"zmul no es asociativo en {x}, {y}, {z}",
                    )
