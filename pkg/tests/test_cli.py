"""Test the qcli subcommands in-process."""

import io
import json

import pytest

from conftest import EXAMPLES
from qseries.cli.main import main
from qseries.cli.render import CommandResult
from qseries.services.run_journal import read_runs, totals

ROOT_OF_UNITY = str(EXAMPLES / "root_of_unity.yaml")
GENERIC = str(EXAMPLES / "generic.yaml")
CENTER = str(EXAMPLES / "center_not_laurent.yaml")


def run(*argv, stdin=""):
    out = io.StringIO()
    code = main(list(argv), stdin=io.StringIO(stdin), stdout=out)
    return code, out.getvalue()


def run_json(*argv, stdin=""):
    code, text = run(*argv, stdin=stdin)
    assert code == 0, text
    return json.loads(text)


# ── lattice / spectrum ───────────────────────────────────────────────
def test_center():
    result = run_json("center", "--config", CENTER)
    assert result["command"] == "center"
    assert result["ok"] is True
    assert result["precision"] == 8
    data = result["data"]
    assert data["kernel_basis"] == [[1, -1, 0]]
    assert data["rank"] == 1
    assert data["index"] == "infinite"
    assert data["center_generators"] == ["x1*x2^-1"]
    assert data["simple"] is False


def test_center_at_root_of_unity():
    data = run_json("center", "--config", ROOT_OF_UNITY)["data"]
    assert data["kernel_basis"] == [[3, 0], [0, 3]]
    assert data["index"] == 9
    assert data["elementary_divisors"] == [3, 3]


def test_hprimes():
    result = run_json("hprimes", "--config", ROOT_OF_UNITY)
    assert result["summary"] == "4 H-primes: 0, <x1>, <x2>, <x1, x2>"
    assert len(result["data"]["h_primes"]) == 4


def test_generic_and_ufd():
    assert run_json("is-generic", "--config", GENERIC)["data"]["generic"] is True
    assert run_json("is-generic", "--config", CENTER)["summary"] == "not generic"
    ufd = run_json("is-ufd", "--config", GENERIC)["data"]
    assert ufd["ufd_verdict"] == "UFD"
    assert ufd["height_one"] == ["<x1>", "<x2>", "<x3>"]
    assert run_json("is-ufd", "--config", CENTER)["summary"] == "inconclusive"


def test_strata():
    result = run_json("strata", "--config", CENTER)
    assert result["summary"] == "8 strata, 6 simple"
    one = run_json("strata", "--config", CENTER, "--w", "1")
    assert one["summary"] == "1 strata, 1 simple"
    assert one["data"]["strata"][0]["w"] == [1]


def test_spectrum():
    data = run_json("spectrum", "--config", GENERIC)["data"]
    assert data["generic"] is True
    assert len(data["hasse"]) == 12
    assert data["dot"].startswith("digraph hprimes {")


def test_goldie():
    result = run_json("goldie", "--config", ROOT_OF_UNITY)
    assert result["data"]["goldie_bound"] == 3
    assert result["data"]["index"] == 9


def test_chain_check():
    data = run_json("chain-check", "--config", GENERIC, "1,2,3")["data"]
    assert data == {"w": [1, 2, 3], "length": 3, "chains": 6}


def test_chain_check_needs_generic(capsys):
    code, _ = run("chain-check", "--config", CENTER, "1,2")
    assert code == 2
    assert capsys.readouterr().err.startswith("[qcli] chain-check: ")


def test_schema_needs_no_config():
    schema = run_json("schema")["data"]["schema"]
    assert {"command", "summary", "data"} <= set(schema["properties"])


JSON_TYPES = {"string": str, "boolean": bool, "integer": int, "object": dict, "null": type(None)}
EVERY_COMMAND = [
    ("center", "--config", CENTER),
    ("spectrum", "--config", ROOT_OF_UNITY),
    ("strata", "--config", CENTER),
    ("hprimes", "--config", GENERIC),
    ("is-generic", "--config", GENERIC),
    ("is-ufd", "--config", GENERIC),
    ("goldie", "--config", ROOT_OF_UNITY),
    ("chain-check", "--config", GENERIC, "1,2"),
    ("dot", "--config", ROOT_OF_UNITY),
    ("schema",),
    ("mul", "--config", CENTER, "x1", "x2"),
    ("pow", "--config", ROOT_OF_UNITY, "(x1+x2)", "3"),
    ("inv", "--config", GENERIC, "1 - x1", "--precision", "3"),
    ("normal-check", "--config", GENERIC, "x1"),
    ("decompose", "--config", ROOT_OF_UNITY, "x1^2 + x2^2 + x1"),
    ("monomialize", "--config", GENERIC, "x1 + x1*x2"),
]


def _types_of(prop):
    options = prop.get("anyOf", [prop])
    return tuple(JSON_TYPES[o["type"]] for o in options if "type" in o)


@pytest.mark.parametrize("argv", EVERY_COMMAND, ids=lambda argv: argv[0])
def test_every_command_matches_the_envelope_schema(argv):
    schema = run_json("schema")["data"]["schema"]
    result = run_json(*argv)
    assert result["command"] == argv[0]
    assert set(schema["required"]) <= set(result)
    assert set(result) <= set(schema["properties"])
    for key, value in result.items():
        types = _types_of(schema["properties"][key])
        assert isinstance(value, types), key
        if isinstance(value, bool):
            assert bool in types, key
    assert CommandResult.model_validate(result).command == argv[0]



# ── series ───────────────────────────────────────────────────────────
def test_pow_collapses_at_root_of_unity():
    result = run_json("pow", "--config", ROOT_OF_UNITY, "(x1+x2)", "3")
    assert result["summary"] == "x1^3 + x2^3"
    assert result["precision"] == 4
    assert result["data"]["kind"] == "series"
    assert [t["exponent"] for t in result["data"]["terms"]] == [[3, 0], [0, 3]]


def test_negative_pow_gives_laurent():
    data = run_json("pow", "--config", GENERIC, "x1", "-2")["data"]
    assert data["kind"] == "laurent"
    assert data["series"] == "x1^-2"


def test_mul_and_inv():
    assert run_json("mul", "--config", CENTER, "x1", "x2")["summary"] == "x1*x2"
    assert run_json("inv", "--config", GENERIC, "1 - x1", "--precision", "3")["summary"] == "1 + x1 + x1^2"


def test_expression_from_stdin():
    result = run_json("pow", "--config", GENERIC, "-", "2", stdin="x1\n")
    assert result["summary"] == "x1^2"


def test_config_from_stdin():
    doc = "n: 2\nq:\n  - [{torsion: 0}]\n"
    result = run_json("hprimes", "--config", "-", stdin=doc)
    assert result["data"]["h_primes"][0]["label"] == "0"


def test_normal_check():
    assert run_json("normal-check", "--config", GENERIC, "x1")["data"]["verdict"] == "normal"
    assert run_json("normal-check", "--config", GENERIC, "x1 + x2")["data"]["verdict"] == "not normal"
    data = run_json("normal-check", "--config", GENERIC, "1 + x1")["data"]
    assert data["verdict"] == "normal to precision 8"
    assert data["certificate"] == "linear"


def test_decompose():
    data = run_json("decompose", "--config", ROOT_OF_UNITY, "x1^2 + x2^2 + x1")["data"]
    assert data["reassembles"] is True
    assert len(data["components"]) == 3


def test_monomialize():
    result = run_json("monomialize", "--config", GENERIC, "x1 + 3*x1*x2", "--torus", "2,3,5")
    assert result["summary"] == "x1, x1*x2"
    assert result["data"]["exponents"] == [[1, 0, 0], [1, 1, 0]]


# ── output and errors ────────────────────────────────────────────────
def test_text_output():
    code, text = run("center", "--config", CENTER, "--output", "text")
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "center: S has rank 1 with basis [(1, -1, 0)]  [d=8]"
    assert "  rank: 1" in lines


def test_dot_output():
    code, text = run("dot", "--config", ROOT_OF_UNITY, "--output", "dot")
    assert code == 0
    assert text.startswith("digraph hprimes {")
    assert "shape=ellipse" in text


def test_dot_output_needs_a_graph(capsys):
    code, text = run("mul", "--config", GENERIC, "x1", "x2", "--output", "dot")
    assert code == 2
    assert text == ""
    assert "--output dot is only available" in capsys.readouterr().err


def test_missing_config(capsys):
    code, _ = run("center")
    assert code == 2
    assert "--config is required" in capsys.readouterr().err


def test_missing_config_file(tmp_path, capsys):
    code, _ = run("center", "--config", str(tmp_path / "nope.yaml"))
    assert code == 2
    assert "config file not found" in capsys.readouterr().err


def test_computation_errors_exit_2(capsys):
    code, _ = run("inv", "--config", GENERIC, "x1 + x2")
    assert code == 2
    assert capsys.readouterr().err.startswith("[qcli] inv: ")
    code, _ = run("pow", "--config", GENERIC, "x1 +", "2")
    assert code == 2
    assert "(at position 4)" in capsys.readouterr().err


def test_precision_cap_is_an_error(capsys):
    code, _ = run("center", "--config", GENERIC, "--precision", "65")
    assert code == 2
    assert "exceed cap" in capsys.readouterr().err


def test_usage_errors_exit_1():
    with pytest.raises(SystemExit) as err:
        main(["no-such-command"], stdout=io.StringIO())
    assert err.value.code == 1


def test_out_file(tmp_path):
    target = tmp_path / "out" / "center.json"
    code, text = run("center", "--config", CENTER, "--out-file", str(target))
    assert code == 0
    assert target.read_text(encoding="utf-8") == text


def test_journal(tmp_path):
    journal = tmp_path / "runs.jsonl"
    run("center", "--config", CENTER, "--journal", str(journal))
    run("inv", "--config", GENERIC, "x1 + x2", "--journal", str(journal))
    runs = read_runs(journal)
    assert [r["command"] for r in runs] == ["center", "inv"]
    assert runs[0]["n"] == 3
    assert runs[0]["precision"] == 8
    assert runs[0]["status"] == "ok"
    assert runs[1]["status"] == "error"
    assert totals(journal)["failures"] == 1


def test_journal_from_environment(tmp_path, monkeypatch):
    journal = tmp_path / "env.jsonl"
    monkeypatch.setenv("QSERIES_JOURNAL", str(journal))
    run("schema")
    assert read_runs(journal)[0]["command"] == "schema"
