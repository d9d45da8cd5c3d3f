"""Interfaz de línea de comandos de IsoN.

Uso: python -m app <verbo> [argumentos] [--json] [--verbose]

Los elementos se escriben en el lenguaje de palabras (a, b, I, Z, eps(...),
iso(...)). Códigos de salida: 0 éxito, 1 error de dominio o verificación
fallida, 2 error de uso.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Sequence

from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from app.models.isometry import canonical_form, invert
from app.services.congruence import (
    green_D,
    green_H,
    green_J,
    green_L,
    green_R,
    mg_image,
    mg_related,
    simple_witness,
)
from app.services.equations import EnumBounds, enumerate_elements, solve_left, solve_right
from app.services.orders import ChainCursor, coset_of, ll_leq, natural_leq
from app.services.verification import SUITE_ALIASES, SUITE_IDS, VerifyOptions, run_suites
from app.services.wordlang import format_element, read_element, read_isometry
from app.services.zerotop import (
    CofiniteNbhd,
    Zero,
    check_separate_continuity,
    shrink_neighborhood,
    zmul,
)
from app.utils.config import get_default_bounds, load_env_file, parse_bounds
from app.utils.constants import DEFAULT_SAMPLED_TRIPLES
from app.utils.exceptions import (
    ConfigurationError,
    InvalidParameters,
    IsonError,
    VerificationError,
)
from app.utils.logging_config import get_logger, setup_logging

logger = get_logger(__name__)

VERBS = (
    "eval",
    "canon",
    "compose",
    "invert",
    "order",
    "chain",
    "coset",
    "mg",
    "mg-rel",
    "green",
    "simple-witness",
    "solve",
    "enum",
    "tau-ac",
    "verify",
)

GREEN_RELATIONS: dict[str, Callable] = {
    "R": green_R,
    "L": green_L,
    "H": green_H,
    "D": green_D,
    "J": green_J,
}


@dataclass
class Outcome:
    """Resultado de un verbo: registro JSON y salida legible."""

    inputs: dict[str, Any]
    result: Any
    lines: list[str] = field(default_factory=list)
    table: Optional[Table] = None
    exit_code: int = 0


def _fmt_bool(value: bool) -> str:
    return "true" if value else "false"


def _fmt_coset(coset: tuple[tuple[int, ...], int]) -> str:
    A, n0 = coset
    return f"A={{{','.join(str(a) for a in A)}}}; n0={n0}"


def _bounds_arg(text: str) -> Optional[tuple[int, int]]:
    """Cotas `K,M`; "default" deja las del entorno."""
    if text == "default":
        return None
    try:
        return parse_bounds(text)
    except ConfigurationError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


# ---------------------------------------------------------------------------
# Verbos
# ---------------------------------------------------------------------------


def cmd_eval(args: argparse.Namespace) -> Outcome:
    value = format_element(read_element(args.word))
    return Outcome({"word": args.word}, value, [value])


def cmd_canon(args: argparse.Namespace) -> Outcome:
    g = read_isometry(args.word)
    cf = canonical_form(g)
    word = format_element(g)
    line = f"A={{{','.join(str(a) for a in cf.A)}}}; n0={cf.n0}; i={cf.i}; j={cf.j}"
    return Outcome({"word": args.word}, {**cf.to_dict(), "word": word}, [word, line])


def cmd_compose(args: argparse.Namespace) -> Outcome:
    product = read_element(args.words[0])
    for word in args.words[1:]:
        product = zmul(product, read_element(word))
    value = format_element(product)
    return Outcome({"words": args.words}, value, [value])


def cmd_invert(args: argparse.Namespace) -> Outcome:
    x = read_element(args.word)
    value = format_element(x if isinstance(x, Zero) else invert(x))
    return Outcome({"word": args.word}, value, [value])


def cmd_order(args: argparse.Namespace) -> Outcome:
    g, d = read_isometry(args.left), read_isometry(args.right)
    holds = natural_leq(g, d) if args.kind == "nat" else ll_leq(g, d)
    return Outcome(
        {"kind": args.kind, "left": args.left, "right": args.right}, holds, [_fmt_bool(holds)]
    )


def cmd_chain(args: argparse.Namespace) -> Outcome:
    g = read_isometry(args.word)
    chain = [format_element(eta) for eta in ChainCursor(g).take(args.take)]
    return Outcome({"word": args.word, "take": args.take}, chain, chain)


def cmd_coset(args: argparse.Namespace) -> Outcome:
    A, n0 = coset_of(read_isometry(args.word))
    return Outcome({"word": args.word}, {"A": list(A), "n0": n0}, [_fmt_coset((A, n0))])


def cmd_mg(args: argparse.Namespace) -> Outcome:
    image = mg_image(read_isometry(args.word))
    return Outcome({"word": args.word}, image, [str(image)])


def cmd_mg_rel(args: argparse.Namespace) -> Outcome:
    related, witness = mg_related(read_isometry(args.left), read_isometry(args.right))
    witness_word = format_element(witness) if witness is not None else None
    line = _fmt_bool(related) + (f" {witness_word}" if witness_word else "")
    return Outcome(
        {"left": args.left, "right": args.right},
        {"related": related, "witness": witness_word},
        [line],
    )


def cmd_green(args: argparse.Namespace) -> Outcome:
    relation = GREEN_RELATIONS[args.relation]
    holds = relation(read_isometry(args.left), read_isometry(args.right))
    return Outcome(
        {"relation": args.relation, "left": args.left, "right": args.right},
        holds,
        [_fmt_bool(holds)],
    )


def cmd_simple_witness(args: argparse.Namespace) -> Outcome:
    u, v = simple_witness(read_isometry(args.source), read_isometry(args.target))
    u_word, v_word = format_element(u), format_element(v)
    return Outcome(
        {"source": args.source, "target": args.target},
        {"u": u_word, "v": v_word},
        [f"u = {u_word}", f"v = {v_word}"],
    )


def cmd_solve(args: argparse.Namespace) -> Outcome:
    known, rhs = read_isometry(args.known), read_isometry(args.rhs)
    solver = solve_left if args.side == "left" else solve_right
    solutions = [format_element(x) for x in solver(known, rhs)]
    return Outcome(
        {"side": args.side, "known": args.known, "rhs": args.rhs}, solutions, solutions
    )


def cmd_enum(args: argparse.Namespace) -> Outcome:
    default_k, default_m = get_default_bounds()
    try:
        bounds = EnumBounds(
            max_complement=default_k if args.max_complement is None else args.max_complement,
            max_offset=default_m if args.max_offset is None else args.max_offset,
        )
    except ValidationError as e:
        raise InvalidParameters(f"Cotas de enumeración inválidas: {e.errors()[0]['msg']}") from e
    words = [format_element(g) for g in enumerate_elements(bounds)]
    return Outcome({"bounds": str(bounds)}, words, words)


def cmd_tau_ac(args: argparse.Namespace) -> Outcome:
    g = read_isometry(args.word)
    U = CofiniteNbhd.excluding(read_isometry(w) for w in args.exclude)
    inputs = {"action": args.action, "word": args.word, "exclude": args.exclude}
    if args.action == "shrink":
        V = shrink_neighborhood(g, U)
        excluded = sorted(format_element(x) for x in V.excluded)
        return Outcome(inputs, excluded, excluded)
    bounds = args.bounds or get_default_bounds()
    holds = check_separate_continuity(g, U, bounds)
    inputs["bounds"] = f"{bounds[0]},{bounds[1]}"
    return Outcome(inputs, holds, [_fmt_bool(holds)])


def cmd_verify(args: argparse.Namespace) -> Outcome:
    try:
        options = VerifyOptions.from_env(
            bounds=args.bounds,
            triple_bounds=args.triples,
            sampled_triples=args.samples,
            max_index=args.max_i,
        )
    except ValidationError as e:
        raise VerificationError(f"Opciones de verificación inválidas: {e.errors()[0]['msg']}") from e
    reports = run_suites(args.suites, options, workers=args.workers)

    table = Table(title=f"Verificación (cotas {options.bounds})")
    table.add_column("suite")
    table.add_column("estado")
    table.add_column("chequeos", justify="right")
    lines: list[str] = []
    for report in reports:
        table.add_row(report.suite, "PASS" if report.passed else "FAIL", str(report.checked))
        lines.extend(f"{report.suite}: {failure}" for failure in report.failures)

    passed = all(r.passed for r in reports)
    return Outcome(
        {
            "suites": args.suites,
            "bounds": str(options.bounds),
            "triples": str(options.triple_bounds),
            "max_i": options.max_index,
        },
        [r.model_dump() for r in reports],
        lines,
        table=table,
        exit_code=0 if passed else 1,
    )


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    """Parser con un subcomando por verbo."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Registro JSON {verb, inputs, result, elapsed_ms}")
    common.add_argument("--verbose", action="store_true", help="Logs DEBUG en stderr")

    parser = argparse.ArgumentParser(
        prog="ison",
        description="Cálculo exacto en el monoide inverso IN∞ de isometrías parciales cofinitas de ℕ",
    )
    sub = parser.add_subparsers(dest="verb", metavar="{" + ",".join(VERBS) + "}", required=True)

    def verb(name: str, handler: Callable[[argparse.Namespace], Outcome], help_text: str):
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        p.set_defaults(handler=handler)
        return p

    verb("eval", cmd_eval, "Evaluar una palabra").add_argument("word")
    verb("canon", cmd_canon, "Forma canónica ε^{n0}_A[i)·βⁱαʲ").add_argument("word")
    verb("compose", cmd_compose, "Producto de izquierda a derecha").add_argument("words", nargs="+")
    verb("invert", cmd_invert, "Inverso").add_argument("word")

    p = verb("order", cmd_order, "Orden natural (nat) u orden ≪ (ll)")
    p.add_argument("kind", choices=("nat", "ll"))
    p.add_argument("left")
    p.add_argument("right")

    p = verb("chain", cmd_chain, "Primeros elementos de ↓≪g")
    p.add_argument("word")
    p.add_argument("--take", type=int, default=5)

    verb("coset", cmd_coset, "Clase ⟨A[n0)⟩ del elemento").add_argument("word")
    verb("mg", cmd_mg, "Imagen en ℤ(+)").add_argument("word")

    p = verb("mg-rel", cmd_mg_rel, "Relación 𝔠_mg con testigo")
    p.add_argument("left")
    p.add_argument("right")

    p = verb("green", cmd_green, "Relaciones de Green")
    p.add_argument("relation", choices=tuple(GREEN_RELATIONS))
    p.add_argument("left")
    p.add_argument("right")

    p = verb("simple-witness", cmd_simple_witness, "Par (u, v) con u·g·v = d")
    p.add_argument("source")
    p.add_argument("target")

    p = verb("solve", cmd_solve, "Resolver a·x = b (left) o x·c = d (right)")
    p.add_argument("side", choices=("left", "right"))
    p.add_argument("known")
    p.add_argument("rhs")

    p = verb(
        "enum",
        cmd_enum,
        "Enumeración acotada E(K, M): min dom - 1 <= M, |shift| <= M, a lo sumo K huecos "
        "sobre min dom y a lo sumo K + 1 miembros finitos en dom",
    )
    p.add_argument("--max-complement", type=int, default=None, help="K: huecos y tamaño de la parte finita")
    p.add_argument("--max-offset", type=int, default=None, help="M: mínimo del dominio y desplazamiento")

    p = verb("tau-ac", cmd_tau_ac, "Entornos del cero en τ_Ac")
    p.add_argument("action", choices=("shrink", "check"))
    p.add_argument("word")
    p.add_argument("--exclude", nargs="*", default=[])
    p.add_argument("--bounds", type=_bounds_arg, default=None)

    p = verb("verify", cmd_verify, "Ejecutar suites de verificación")
    p.add_argument(
        "suites",
        nargs="+",
        metavar="suite",
        help=f"{', '.join(SUITE_IDS)}, all o un alias numerado ({', '.join(SUITE_ALIASES)})",
    )
    p.add_argument("--bounds", type=_bounds_arg, default=None, help="K,M o default (ISON_BOUNDS)")
    p.add_argument("--triples", type=_bounds_arg, default=None, help="K,M de los triples exhaustivos")
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLED_TRIPLES)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument(
        "--max-i", type=int, default=None, help="Potencia e índice máximos de las identidades de conmutación"
    )

    return parser


def main(argv: Optional[Sequence[str]] = None, console: Optional[Console] = None) -> int:
    """
    Punto de entrada de la CLI.

    Args:
        argv: Argumentos (por defecto sys.argv[1:])
        console: Consola rich de salida (por defecto stdout)

    Returns:
        Código de salida
    """
    load_env_file()
    args = build_parser().parse_args(argv)
    setup_logging("DEBUG" if args.verbose else "WARNING")
    out = console or Console(highlight=False, soft_wrap=True, emoji=False)

    start = time.perf_counter()
    try:
        outcome = args.handler(args)
    except IsonError as e:
        logger.debug("Error de dominio", extra={"verb": args.verb, "error": str(e)})
        print(f"error: {e}", file=sys.stderr)
        return 1
    elapsed_ms = round((time.perf_counter() - start) * 1000, 3)

    if args.json:
        record = {
            "verb": args.verb,
            "inputs": outcome.inputs,
            "result": outcome.result,
            "elapsed_ms": elapsed_ms,
        }
        out.print(json.dumps(record, ensure_ascii=False), markup=False)
    else:
        if outcome.table is not None:
            out.print(outcome.table)
        for line in outcome.lines:
            out.print(line, markup=False)
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
