import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from scarfkit.cli import run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    text = out.getvalue()
    return code, (json.loads(text) if text else None)


@pytest.fixture
def matroid_json(m4):
    return m4.to_json()


ORDERS = {"X": ["x", "y"], "I": 2, "orders": [["x", "y"], ["y", "x"]]}


@pytest.fixture
def write(tmp_path):
    def _write(name, doc):
        p = tmp_path / name
        p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
        return str(p)

    return _write


def test_freudenthal_count():
    assert call("freudenthal", "--n", "2", "--N", "2", "--count") == (0, {"cells": 4})


def test_freudenthal_verify():
    code, doc = call("freudenthal", "--n", "3", "--N", "3", "--count", "--verify")
    assert code == 0
    assert doc == {"cells": 27, "closed_form": 27, "dominance": 27, "isomorphism": True}


def test_freudenthal_lists_simplices():
    code, doc = call("freudenthal", "--n", "1", "--N", "2")
    assert doc["simplices"] == [[[0], [1]], [[1], [2]]]


def test_validate_matroid_ok(write, matroid_json):
    code, doc = call("validate-matroid", write("m.json", matroid_json))
    assert code == 0 and doc["ok"]


def test_validate_matroid_missing_negation(write, matroid_json):
    bad = dict(matroid_json, circuits=matroid_json["circuits"][1:])
    code, doc = call("validate-matroid", write("bad.json", bad))
    assert code == 2
    assert doc["axiom"] == "ii" and doc["witness"]


def test_malformed_json_reports_line(write):
    code, doc = call("validate-matroid", write("broken.json", '{\n "a": 1,\n oops\n}'))
    assert code == 2
    assert doc["error"] == "malformed JSON" and doc["line"] == 3


def test_missing_file():
    code, doc = call("validate-matroid", "/nonexistent/m.json")
    assert code == 2 and doc["error"] == "cannot read file"


def test_ground_cap(write, matroid_json, monkeypatch):
    doc = {"matroid": matroid_json, "basis": ["v0", "v1"], "b": "b", "orders": ORDERS,
           "coloring": [["x", "v1"], ["y", "a"]]}
    path = write("m.json", doc)
    monkeypatch.setenv("SCARF_GROUND_CAP", "3")
    code, out = call("solve-matroid", "--input", path)
    assert code == 2 and "SCARF_GROUND_CAP" in out["error"]
    monkeypatch.setenv("SCARF_GROUND_CAP", "4")
    assert call("solve-matroid", "--input", path)[0] == 0


def test_brouwer_rotation():
    code, doc = call("brouwer", "--oracle", "rotation", "--n", "2", "--eps", "1e-3")
    assert code == 0
    assert max(abs(x - 1 / 3) for x in doc["point_float"]) <= 1e-3


def test_brouwer_constant_needs_point():
    assert call("brouwer", "--oracle", "constant", "--n", "2")[0] == 1
    code, doc = call("brouwer", "--oracle", "constant", "--n", "2", "--point", "1/2,1/4,1/4")
    assert [Fraction(a) for a in doc["point"]] == [Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)]


def test_kakutani_piecewise():
    code, doc = call("kakutani", "--oracle", "piecewise", "--n", "1")
    assert code == 0 and doc["point"] == ["1/2", "1/2"]


def test_solve_classical(write):
    path = write("c.json", {"orders": ORDERS, "coloring": {"x": 1, "y": 0}})
    code, doc = call("solve-classical", "--input", path)
    assert code == 0 and doc["count"] % 2 == 1
    code, doc = call("solve-classical", "--input", path, "--mode", "path")
    assert doc["solutions"] == [{"C": [0], "tau": ["y"], "basis": [], "coeffs": []}]


def test_solve_classical_unknown_theorem(write):
    path = write("c.json", {"orders": ORDERS, "coloring": {"x": 1, "y": 0}, "theorem": "nope"})
    assert call("solve-classical", "--input", path)[0] == 2


def test_solve_matroid(write, matroid_json):
    doc = {"matroid": matroid_json, "basis": ["v0", "v1"], "b": "b", "orders": ORDERS,
           "coloring": [["x", "v1"], ["y", "a"]]}
    path = write("m.json", doc)
    code, out = call("solve-matroid", "--input", path)
    assert code == 0 and out["count"] == 3
    code, out = call("solve-matroid", "--input", path, "--mode", "path", "--index", "1")
    assert out["solutions"][0]["basis"] == ["v0", "v1"]
    assert call("solve-matroid", "--input", path, "--index", "5")[0] == 1


def test_solve_vector(write):
    path = write("v.json", {"orders": ORDERS, "b": [1, 1], "coloring": {"x": [0, 1], "y": [2, 1]}})
    code, doc = call("solve-vector", "--input", path)
    assert code == 0
    assert doc["solution"]["coeffs"] == ["1/2", "1/2"]


def test_solve_hedgehog(write, matroid_json):
    base = {"matroid": matroid_json, "basis": ["v0", "v1"], "b": "b", "orders": ORDERS}
    code, doc = call("solve-hedgehog", "--input", write("h.json", {**base, "coloring": {"x": "v1", "y": "v0"}}))
    assert code == 0 and doc["solution"]["C"] == [0, 1]
    code, doc = call("solve-hedgehog", "--input", write("g.json", {**base, "coloring": {"x": "v0", "y": "v1"}}))
    assert code == 2


def test_missing_key(write):
    assert call("solve-vector", "--input", write("v.json", {"orders": ORDERS}))[0] == 2


def test_intersect(write):
    path = write("i.json", {"c": [[[0, 0], [2, 0], [0, 2]]], "d": [[["1/2", "1/2"]]]})
    assert call("intersect", "--input", path) == (0, {"c_dimension": 2, "d_dimension": 0, "intersection": 1})
    path = write("j.json", {"c": [[[0, 0], [2, 0], [0, 2]]], "d": [[[1, 0]]]})
    assert call("intersect", "--input", path)[0] == 2


def test_check_invariants_pass():
    code, doc = call("check-invariants", "--sizes", "small")
    assert code == 0 and doc["ok"]


@pytest.mark.parametrize("mutation,suite", [
    ("boundary-drop-face", "chains"),
    ("pivot-drop-down", "pivot_parity"),
    ("lex-flip-p", "lex_extension"),
])
def test_check_invariants_mutation(mutation, suite):
    code, doc = call("check-invariants", "--sizes", "small", "--mutate", mutation, "--only", suite)
    assert code == 2 and not doc["ok"]
    assert any(s["failures"] and s["witness"] is not None for s in doc["suites"])


def test_check_invariants_byte_stable():
    a, b = io.StringIO(), io.StringIO()
    run(["check-invariants", "--sizes", "small", "--seed", "7"], a)
    run(["check-invariants", "--sizes", "small", "--seed", "7"], b)
    assert a.getvalue() == b.getvalue()


@pytest.mark.parametrize("argv", [[], ["bogus"], ["freudenthal", "--n", "2"], ["check-invariants", "--only", "nope"]])
def test_usage_errors(argv):
    assert call(*argv)[0] == 1


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "scarfkit", "freudenthal", "--n", "2", "--N", "2", "--count"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout) == {"cells": 4}
