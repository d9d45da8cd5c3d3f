"""Suites sobre la estructura de monoide inverso, formas canónicas y filtración."""

from __future__ import annotations

import random

from app.models.cofinite import ray
from app.models.isometry import (
    alpha,
    beta,
    bicyclic,
    bicyclic_inverse_witness,
    canonical_form,
    compose,
    compose_all,
    epsilon,
    eval_at,
    identity,
    in_filtration,
    invert,
    is_bicyclic,
    is_idempotent,
    noise,
    rebuild,
    restriction_identity,
)
from app.services.equations import enumerate_elements, enumerate_idempotents
from app.services.verification.base import (
    BaseSuite,
    CheckCollector,
    ProductTable,
    VerifyOptions,
    capped,
)
from app.utils.constants import BICYCLIC_MAX_EXPONENT, POINTWISE_MAX_POINT, REDUCED_BOUNDS


class InverseMonoidSuite(BaseSuite):
    def __init__(self) -> None:
        super().__init__(
            "inverse-monoid",
            "Asociatividad, axiomas de inverso, evaluación puntual e idempotentes",
        )

    def check_all(self, collector: CheckCollector, options: VerifyOptions) -> None:
        check = collector.check

        check(compose(alpha(), beta()) == identity(), "α·β != 𝕀")
        check(
            compose(beta(), alpha()) == restriction_identity(ray(2)),
            "β·α != identidad de [2)",
        )
        check(invert(alpha()) == beta(), "α⁻¹ != β")

        # Triples exhaustivos con tabla de productos
        table = ProductTable()
        small = [table.intern(x) for x in enumerate_elements(options.triple_bounds)]
        rows = {b: [table.product(b, c) for c in small] for b in small}
        for a in small:
            for b in small:
                ab = table.product(a, b)
                for c, bc in zip(small, rows[b]):
                    check(
                        table.product(ab, c) == table.product(a, bc),
                        lambda: f"(ab)c != a(bc) para a={table.elements[a]}, "
                        f"b={table.elements[b]}, c={table.elements[c]}",
                    )

        elements = enumerate_elements(options.bounds)
        rng = random.Random(options.seed)
        for _ in range(options.sampled_triples):
            a, b, c = rng.choice(elements), rng.choice(elements), rng.choice(elements)
            check(
                compose(compose(a, b), c) == compose(a, compose(b, c)),
                lambda: f"(ab)c != a(bc) para a={a}, b={b}, c={c}",
            )

        for g in elements:
            inv = invert(g)
            check(compose_all((g, inv, g)) == g, lambda: f"g·g⁻¹·g != g para {g}")
            check(compose_all((inv, g, inv)) == inv, lambda: f"g⁻¹·g·g⁻¹ != g⁻¹ para {g}")
            check(
                compose(g, inv) == restriction_identity(g.dom),
                lambda: f"g·g⁻¹ no es la identidad de dom g para {g}",
            )
            check(
                compose(inv, g) == restriction_identity(g.ran),
                lambda: f"g⁻¹·g no es la identidad de ran g para {g}",
            )

        reduced = enumerate_elements(capped(options.bounds, REDUCED_BOUNDS))
        for g in reduced:
            for d in reduced:
                product = compose(g, d)
                for n in range(1, POINTWISE_MAX_POINT + 1):
                    image = eval_at(g, n)
                    expected = None if image is None else eval_at(d, image)
                    check(
                        eval_at(product, n) == expected,
                        lambda: f"({n})(g·d) != (({n})g)d para g={g}, d={d}",
                    )

        idempotents = enumerate_idempotents(options.bounds)
        for e in idempotents:
            check(is_idempotent(compose(e, e)), lambda: f"e·e no es idempotente para {e}")
            for f in idempotents:
                check(
                    compose(e, f) == compose(f, e),
                    lambda: f"e·f != f·e para e={e}, f={f}",
                )


class CanonicalFormSuite(BaseSuite):
    def __init__(self) -> None:
        super().__init__(
            "canonical-form",
            "Representación ε^{n0}_A[i)·βⁱαʲ: ida y vuelta, ambas formas, no unicidad",
        )

    def check_all(self, collector: CheckCollector, options: VerifyOptions) -> None:
        check = collector.check

        g = compose(epsilon((1,), 3, 1), bicyclic(1, 3))
        cf = canonical_form(g)
        check(
            (cf.A, cf.n0, cf.i, cf.j) == ((1,), 3, 1, 3),
            lambda: f"forma canónica de {g} es {cf.to_dict()}",
        )

        for g in enumerate_elements(options.bounds):
            cf = canonical_form(g)
            check(rebuild(cf) == g, lambda: f"rebuild(canonical_form(g)) != g para {g}")
            check(
                canonical_form(rebuild(cf)) == cf,
                lambda: f"canonical_form(rebuild(cf)) != cf para {cf.to_dict()}",
            )
            check(
                compose(bicyclic(cf.i, cf.j), epsilon(cf.A, cf.n0, cf.j)) == g,
                lambda: f"βⁱαʲ·ε[j) != g para {g}",
            )
            for k in range(min(cf.i, cf.j) + 1):
                check(
                    compose(epsilon(cf.A, cf.n0, cf.i), bicyclic(cf.i - k, cf.j - k)) == g,
                    lambda: f"ε[i)·β^(i-{k})α^(j-{k}) != g para {g}",
                )
            check(noise(invert(g)) == noise(g), lambda: f"ruido de g⁻¹ != ruido de g para {g}")


class BicyclicSuite(BaseSuite):
    def __init__(self) -> None:
        super().__init__(
            "bicyclic",
            "Fórmula de multiplicación bicíclica y testigo bicíclico del inverso",
        )

    def check_all(self, collector: CheckCollector, options: VerifyOptions) -> None:
        check = collector.check
        top = BICYCLIC_MAX_EXPONENT
        for k in range(top + 1):
            for l in range(top + 1):  # noqa: E741
                left = bicyclic(k, l)
                check(is_bicyclic(left), lambda: f"β^{k}α^{l} fuera de 𝒞ℕ")
                for m in range(top + 1):
                    for n in range(top + 1):
                        low = min(l, m)
                        expected = bicyclic(k + m - low, l + n - low)
                        check(
                            compose(left, bicyclic(m, n)) == expected,
                            lambda: f"β^{k}α^{l}·β^{m}α^{n} no coincide con la fórmula",
                        )

        for g in enumerate_elements(options.bounds):
            w = bicyclic_inverse_witness(g)
            check(is_bicyclic(w), lambda: f"testigo fuera de 𝒞ℕ para {g}")
            check(
                compose(g, w) == restriction_identity(g.dom),
                lambda: f"g·γ₀ != id(dom g) para {g}",
            )
            check(
                compose(w, g) == restriction_identity(g.ran),
                lambda: f"γ₀·g != id(ran g) para {g}",
            )
            check(compose_all((w, g, w)) == invert(g), lambda: f"γ₀·g·γ₀ != g⁻¹ para {g}")


class FiltrationSuite(BaseSuite):
    def __init__(self) -> None:
        super().__init__("filtration", "Ruido y la serie 𝒞ℕ = IN∞^[0] = IN∞^[1] ⊊ IN∞^[2] ⊊ ...")

    def check_all(self, collector: CheckCollector, options: VerifyOptions) -> None:
        check = collector.check

        for g in enumerate_elements(options.bounds):
            level = noise(g)
            check((level == 0) == is_bicyclic(g), lambda: f"ruido 0 != pertenencia a 𝒞ℕ para {g}")
            check(level != 1, lambda: f"ruido 1 para {g}")
            check(in_filtration(g, level), lambda: f"{g} fuera de su nivel de ruido")
            if level > 0:
                check(
                    not in_filtration(g, level - 1),
                    lambda: f"{g} dentro de un nivel menor a su ruido",
                )
            check(noise(invert(g)) == level, lambda: f"inversión cambia el ruido de {g}")

        reduced = enumerate_elements(capped(options.bounds, REDUCED_BOUNDS))
        for g in reduced:
            for d in reduced:
                check(
                    noise(compose(g, d)) <= max(noise(g), noise(d)),
                    lambda: f"IN∞^[k] no cerrado bajo composición en g={g}, d={d}",
                )

        for k in range(1, 7):
            w = epsilon((1,), k + 2, 0)
            check(
                in_filtration(w, k + 1) and not in_filtration(w, k),
                lambda: f"IN∞^[{k}] = IN∞^[{k + 1}] con testigo {w}",
            )
