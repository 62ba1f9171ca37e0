import io
import json

import pytest

from bsgrowth.automata import build_Dn, from_json, to_json
from bsgrowth.cli import EXIT_BUDGET, EXIT_OK, EXIT_USAGE, main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_geodesic_text():
    code, text = run("geodesic", "-n", "3", "0", "5", "0")
    assert code == EXIT_OK
    assert "a^-1 t a^2 t^-1" in text
    assert "length  5" in text


def test_geodesic_json():
    code, text = run("geodesic", "-n", "2", "0", "8", "0", "--json")
    data = json.loads(text)
    assert code == EXIT_OK and data["length"] == 6 and data["minimal_vector"] == [0, 0, 2]


def test_geodesic_identity():
    code, text = run("geodesic", "-n", "4", "0", "0", "0", "--format", "json")
    assert json.loads(text)["word"] == "" and json.loads(text)["length"] == 0


def test_geodesic_normalizes_with_warning(capsys):
    code, text = run("geodesic", "-n", "2", "1", "4", "1", "--json")
    assert code == EXIT_OK
    assert json.loads(text)["normal_form"] == [0, 2, 0]
    assert "normalized" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ("geodesic", "-n", "1", "0", "0", "0"),
        ("geodesic", "-n", "3", "x", "0", "0"),
        ("geodesic", "-n", "3", "--", "-1", "0", "0"),
        ("automaton", "-n", "2", "xx"),
        ("spheres", "-n", "2", "-3"),
        ("growth",),
        ("growth", "-n", "3", "--dot"),
        ("frobnicate",),
    ],
)
def test_usage_errors(argv, capsys):
    code, _ = run(*argv)
    assert code == EXIT_USAGE


def test_spheres(spheres):
    assert run("spheres", "-n", "2", "1") == (EXIT_OK, "1 4\n")
    assert run("spheres", "-n", "2", "0") == (EXIT_OK, "1\n")
    code, text = run("spheres", "-n", "2", "8", "--json")
    assert json.loads(text)["spheres"] == spheres[2][:9]


def test_spheres_budget(capsys):
    code, text = run("spheres", "-n", "2", "30", "--budget", "1000")
    assert code == EXIT_BUDGET
    assert text.split() == [str(s) for s in [1, 4, 12, 26, 50, 98, 184, 336]]


def test_spheres_budget_from_env(monkeypatch, capsys):
    monkeypatch.setenv("BSG_NODE_BUDGET", "50")
    code, _ = run("spheres", "-n", "3", "10")
    assert code == EXIT_BUDGET


def test_automaton_exports():
    code, dot = run("automaton", "-n", "2", "on", "--dot")
    assert code == EXIT_OK and dot.startswith("digraph")
    assert sum(1 for line in dot.splitlines() if "circle]" in line) == 7
    code, text = run("automaton", "-n", "3", "dn", "--json")
    assert to_json(from_json(json.loads(text))) == json.loads(text)
    assert json.loads(text)["states"] == list(build_Dn(3).states)
    code, text = run("automaton", "-n", "3", "dn")
    assert code == EXIT_OK and "2 states" in text


def test_growth_outputs():
    code, text = run("growth", "-n", "3")
    assert code == EXIT_OK and "rate 2" in text
    code, text = run("growth", "-n", "2", "--json")
    assert json.loads(text)[0]["rate"] == pytest.approx(1.69562076955986, abs=1e-13)
    code, text = run("growth", "--table", "2..8", "--format", "csv")
    assert len(text.splitlines()) == 8
    code, text = run("growth", "--table", "--empirical", "30")
    assert "f(30)/f(29)" in text and len(text.splitlines()) == 7


def test_output_file(tmp_path):
    target = tmp_path / "o2.dot"
    assert main(["automaton", "-n", "2", "on", "--dot", "-o", str(target)]) == EXIT_OK
    assert target.read_text().startswith("digraph")


@pytest.mark.parametrize("n", [2, 3])
def test_verify_passes(n):
    code, text = run("verify", "-n", str(n), "-R", "6")
    assert code == EXIT_OK
    assert text.count("PASS") == 4


def test_verify_budget():
    code, text = run("verify", "-n", "3", "-R", "20", "--budget", "5000")
    assert code == EXIT_BUDGET and "ABORT" in text
