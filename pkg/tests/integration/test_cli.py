"""
Tests de integración para la CLI `python -m app`.

Verifica la salida legible, el registro --json y los códigos de salida.
"""

import json

import pytest

from app.cli import main


def run(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, list[str], str]:
    """Ejecutar la CLI y devolver (código, líneas de stdout, stderr)."""
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.splitlines(), captured.err


def test_eval_identity(capsys: pytest.CaptureFixture[str]) -> None:
    """`eval "a b"` imprime I."""
    assert run(capsys, "eval", "a b")[:2] == (0, ["I"])


def test_canon_prints_word_and_parameters(capsys: pytest.CaptureFixture[str]) -> None:
    code, lines, _ = run(capsys, "canon", "iso(dom={2}+[4); shift=2)")
    assert code == 0
    assert lines == ["eps(A={1};n0=3)[1) b^1 a^3", "A={1}; n0=3; i=1; j=3"]


def test_compose_and_invert(capsys: pytest.CaptureFixture[str]) -> None:
    assert run(capsys, "compose", "b", "a")[1] == ["b^1 a^1"]
    assert run(capsys, "invert", "a^2")[1] == ["b^2"]
    assert run(capsys, "invert", "Z")[1] == ["Z"]


def test_orders_and_chain(capsys: pytest.CaptureFixture[str]) -> None:
    assert run(capsys, "order", "ll", "b^3 a^4", "b a^2")[1] == ["true"]
    assert run(capsys, "order", "nat", "I", "b a")[1] == ["false"]
    assert run(capsys, "chain", "a", "--take", "3")[1] == ["a^1", "b^1 a^2", "b^2 a^3"]


def test_group_congruence(capsys: pytest.CaptureFixture[str]) -> None:
    assert run(capsys, "mg", "b^2 a^5")[1] == ["3"]
    assert run(capsys, "mg-rel", "b a^2", "b^3 a^4")[1] == ["true b^3 a^3"]
    assert run(capsys, "mg-rel", "a", "b")[1] == ["false"]


def test_green_and_coset(capsys: pytest.CaptureFixture[str]) -> None:
    assert run(capsys, "green", "D", "I", "b a")[1] == ["true"]
    assert run(capsys, "green", "R", "I", "b a")[1] == ["false"]
    assert run(capsys, "coset", "eps(A={1};n0=3)[2)")[1] == ["A={1}; n0=3"]


def test_simple_witness(capsys: pytest.CaptureFixture[str]) -> None:
    code, lines, _ = run(capsys, "simple-witness", "a", "eps(A={1};n0=3)[1) b a^3")
    assert code == 0
    assert lines == ["u = eps(A={1};n0=3)[1) b^1", "v = b^1 a^3"]


def test_solve(capsys: pytest.CaptureFixture[str]) -> None:
    """α·x = 𝕀 tiene solución única β; x·β = 𝕀 tiene solución única α."""
    assert run(capsys, "solve", "left", "a", "I")[1] == ["b^1"]
    assert run(capsys, "solve", "right", "b", "I")[1] == ["a^1"]


def test_enum_sizes(capsys: pytest.CaptureFixture[str]) -> None:
    code, lines, _ = run(capsys, "enum", "--max-complement", "1", "--max-offset", "2")
    assert code == 0
    assert len(lines) == 36
    assert lines[0] == "I"


def test_tau_ac(capsys: pytest.CaptureFixture[str]) -> None:
    assert run(capsys, "tau-ac", "shrink", "a", "--exclude", "I")[1] == ["I", "b^1"]
    assert run(capsys, "tau-ac", "check", "a", "--exclude", "I", "--bounds", "1,2")[1] == ["true"]


def test_json_record(capsys: pytest.CaptureFixture[str]) -> None:
    code, lines, _ = run(capsys, "compose", "a", "b", "--json")
    assert code == 0
    record = json.loads("".join(lines))
    assert record["verb"] == "compose"
    assert record["inputs"] == {"words": ["a", "b"]}
    assert record["result"] == "I"
    assert record["elapsed_ms"] >= 0


def test_domain_error_exit_code(capsys: pytest.CaptureFixture[str]) -> None:
    """Un error de dominio sale con código 1 y mensaje en stderr."""
    code, lines, err = run(capsys, "canon", "Z")
    assert code == 1
    assert lines == []
    assert err.startswith("error:")


def test_syntax_error_exit_code(capsys: pytest.CaptureFixture[str]) -> None:
    code, _, err = run(capsys, "eval", "a^")
    assert code == 1
    assert "posición 2" in err


def test_invalid_enum_bounds(capsys: pytest.CaptureFixture[str]) -> None:
    assert run(capsys, "enum", "--max-complement", "-1")[0] == 1


def test_usage_error(capsys: pytest.CaptureFixture[str]) -> None:
    """Un verbo desconocido es error de uso (código 2)."""
    with pytest.raises(SystemExit) as exc_info:
        main(["frobnicate"])
    assert exc_info.value.code == 2


def test_verify_single_suite(capsys: pytest.CaptureFixture[str]) -> None:
    code, lines, _ = run(
        capsys,
        "verify",
        "bicyclic",
        "--bounds",
        "1,2",
        "--triples",
        "0,1",
        "--samples",
        "50",
        "--workers",
        "1",
    )
    assert code == 0
    output = "\n".join(lines)
    assert "bicyclic" in output
    assert "PASS" in output


def test_verify_unknown_suite(capsys: pytest.CaptureFixture[str]) -> None:
    code, _, err = run(capsys, "verify", "nope", "--bounds", "1,2")
    assert code == 1
    assert "Suite desconocida" in err


def test_eval_rejects_non_ascii_digits(capsys: pytest.CaptureFixture[str]) -> None:
    """Un exponente con dígitos Unicode es error de dominio, no una excepción."""
    code, lines, err = run(capsys, "eval", "a^²")
    assert code == 1
    assert lines == []
    assert "posición 2" in err


def test_eval_rejects_deep_nesting(capsys: pytest.CaptureFixture[str]) -> None:
    code, _, err = run(capsys, "eval", "(" * 3000 + "a" + ")" * 3000)
    assert code == 1
    assert "sintaxis" in err


def test_verify_numbered_alias_with_max_i(capsys: pytest.CaptureFixture[str]) -> None:
    """`verify lemma-2.12 --max-i 6` corre la suite de conmutación."""
    code, lines, _ = run(capsys, "verify", "lemma-2.12", "--max-i", "6", "--workers", "1", "--json")
    assert code == 0
    record = json.loads("\n".join(lines))
    assert record["inputs"]["max_i"] == 6
    assert [r["suite"] for r in record["result"]] == ["commutation"]
    assert record["result"][0]["passed"]
    assert record["result"][0]["checked"] > 0


def test_verify_default_bounds(capsys: pytest.CaptureFixture[str], mock_env_vars: None) -> None:
    """`--bounds default` toma las cotas de ISON_BOUNDS."""
    code, lines, _ = run(
        capsys, "verify", "bicyclic", "--bounds", "default", "--samples", "0", "--workers", "1", "--json"
    )
    assert code == 0
    record = json.loads("\n".join(lines))
    assert record["inputs"]["bounds"] == "1,2"
    assert record["inputs"]["triples"] == "2,3"


def test_verify_negative_max_i(capsys: pytest.CaptureFixture[str]) -> None:
    code, _, err = run(capsys, "verify", "commutation", "--max-i", "-1")
    assert code == 1
    assert "inválidas" in err


def test_enum_help_documents_bounds(capsys: pytest.CaptureFixture[str]) -> None:
    """La ayuda de `enum` explica el tope de K + 1 miembros finitos."""
    with pytest.raises(SystemExit) as exc_info:
        main(["enum", "--help"])
    assert exc_info.value.code == 0
    text = " ".join(capsys.readouterr().out.split())
    assert "a lo sumo K + 1 miembros finitos en dom" in text
