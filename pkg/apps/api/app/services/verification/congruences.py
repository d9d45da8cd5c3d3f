"""Suites sobre 𝔠_mg, la simplicidad de IN∞ y las relaciones de Green."""

from __future__ import annotations

from app.models.cofinite import ray, translate
from app.models.isometry import (
    alpha_pow,
    beta_pow,
    bicyclic,
    compose,
    compose_all,
    identity,
    invert,
    is_idempotent,
    restriction_identity,
)
from app.services.congruence import (
    green_D,
    green_H,
    green_J,
    green_L,
    green_R,
    is_congruence_pair,
    mg_image,
    mg_related,
    mg_related_oracle,
    simple_witness,
)
from app.services.equations import enumerate_elements, enumerate_idempotents
from app.services.verification.base import BaseSuite, CheckCollector, VerifyOptions, capped
from app.utils.constants import BICYCLIC_MAX_EXPONENT, MG_WITNESS_MAX_TAIL, REDUCED_BOUNDS
from app.utils.exceptions import UnderflowError


def _translation_search(g, d, radius: int) -> bool:
    """Oráculo de D: algún c con |c| <= radius y dom g + c = dom d."""
    for c in range(-radius, radius + 1):
        try:
            if translate(g.dom, c) == d.dom:
                return True
        except UnderflowError:
            continue
    return False


class GroupCongruenceSuite(BaseSuite):
    def __init__(self) -> None:
        super().__init__(
            "group-congruence",
            "IN∞/𝔠_mg ≅ ℤ(+): aditividad, testigos idempotentes y compatibilidad",
        )

    def check_all(self, collector: CheckCollector, options: VerifyOptions) -> None:
        check = collector.check
        top = options.bounds.max_offset

        for n in range(top + 1):
            check(mg_image(alpha_pow(n)) == n, lambda: f"α^{n} no se proyecta en {n}")
            check(mg_image(beta_pow(n)) == -n, lambda: f"β^{n} no se proyecta en {-n}")

        for e in enumerate_idempotents(options.bounds):
            check(mg_image(e) == 0, lambda: f"idempotente {e} fuera del núcleo")

        elements = enumerate_elements(options.bounds)
        for g in elements:
            for d in elements:
                check(
                    mg_image(compose(g, d)) == mg_image(g) + mg_image(d),
                    lambda: f"la proyección no es aditiva en g={g}, d={d}",
                )

        reduced = enumerate_elements(capped(options.bounds, REDUCED_BOUNDS))
        for g in reduced:
            for d in reduced:
                related, witness = mg_related(g, d)
                check(
                    related == (g.shift == d.shift),
                    lambda: f"g 𝔠_mg d mal decidido para g={g}, d={d}",
                )
                check(
                    related == mg_related_oracle(g, d, MG_WITNESS_MAX_TAIL),
                    lambda: f"decisión de 𝔠_mg != búsqueda de testigo para g={g}, d={d}",
                )
                if witness is not None:
                    check(
                        is_idempotent(witness) and compose(witness, g) == compose(witness, d),
                        lambda: f"testigo {witness} inválido para g={g}, d={d}",
                    )

        small = enumerate_elements(options.small_bounds)
        for a in small:
            for b in small:
                for c in small:
                    check(
                        is_congruence_pair(a, b, c),
                        lambda: f"𝔠_mg no es congruencia en a={a}, b={b}, c={c}",
                    )

        for i in range(BICYCLIC_MAX_EXPONENT + 1):
            for j in range(BICYCLIC_MAX_EXPONENT + 1):
                x = bicyclic(i, j)
                deep = restriction_identity(ray(MG_WITNESS_MAX_TAIL + i))
                check(
                    mg_related(x, compose(deep, x))[0],
                    lambda: f"β^{i}α^{j} no relacionado con su restricción profunda",
                )


class SimplicitySuite(BaseSuite):
    def __init__(self) -> None:
        super().__init__(
            "simplicity",
            "IN∞ es simple: u·g·v = d con testigos explícitos",
        )

    def check_all(self, collector: CheckCollector, options: VerifyOptions) -> None:
        check = collector.check

        reduced = enumerate_elements(capped(options.bounds, REDUCED_BOUNDS))
        for g in reduced:
            for d in reduced:
                u, v = simple_witness(g, d)
                check(
                    compose_all((u, g, v)) == d,
                    lambda: f"simple_witness({g}, {d}) no cumple u·g·v = d",
                )
                check(green_J(g, d), lambda: f"J no es universal en g={g}, d={d}")

        for g in enumerate_elements(options.bounds):
            for target in (compose(g, invert(g)), compose(invert(g), g), identity()):
                u, v = simple_witness(g, target)
                check(
                    compose_all((u, g, v)) == target,
                    lambda: f"simple_witness({g}, {target}) no cumple u·g·v = d",
                )
                u, v = simple_witness(target, g)
                check(
                    compose_all((u, target, v)) == g,
                    lambda: f"simple_witness({target}, {g}) no cumple u·g·v = d",
                )


class GreenSuite(BaseSuite):
    def __init__(self) -> None:
        super().__init__("green", "Relaciones R, L, H, D, J de IN∞")

    def check_all(self, collector: CheckCollector, options: VerifyOptions) -> None:
        check = collector.check

        check(green_D(identity(), restriction_identity(ray(2))), "𝕀 y id[2) no son D-equivalentes")
        check(
            not green_R(identity(), restriction_identity(ray(2))),
            "𝕀 y id[2) no deberían ser R-equivalentes",
        )

        reduced = enumerate_elements(capped(options.bounds, REDUCED_BOUNDS))
        radius = 2 * options.bounds.max_offset + 2
        for g in reduced:
            right_unit = compose(g, invert(g))
            left_unit = compose(invert(g), g)
            check(green_D(g, g), lambda: f"D no es reflexiva en {g}")
            for d in reduced:
                r = green_R(g, d)
                l = green_L(g, d)  # noqa: E741
                check(
                    r == (right_unit == compose(d, invert(d))),
                    lambda: f"R != (gg⁻¹ = dd⁻¹) para g={g}, d={d}",
                )
                check(
                    l == (left_unit == compose(invert(d), d)),
                    lambda: f"L != (g⁻¹g = d⁻¹d) para g={g}, d={d}",
                )
                check(green_H(g, d) == (r and l), lambda: f"H != R ∩ L para g={g}, d={d}")
                related = green_D(g, d)
                check(
                    related == _translation_search(g, d, radius),
                    lambda: f"D decidido != búsqueda de traslación para g={g}, d={d}",
                )
                check(related == green_D(d, g), lambda: f"D no es simétrica en g={g}, d={d}")
                if r or l:
                    check(related, lambda: f"R ∪ L ⊄ D en g={g}, d={d}")

        small = enumerate_elements(options.small_bounds)
        for a in small:
            for b in small:
                if not green_D(a, b):
                    continue
                for c in small:
                    if green_D(b, c):
                        check(green_D(a, c), lambda: f"D no es transitiva en {a}, {b}, {c}")
