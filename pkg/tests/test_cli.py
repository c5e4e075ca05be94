import io
import json
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclobez import bezout, cli, document
from cyclobez.arith import ENV_BOUND
from cyclobez.bezout import Certificate
from cyclobez.intpoly import IntPoly


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


def test_phi_formats():
    assert run("phi", "12", "--format", "text") == (0, "x^4 - x^2 + 1\n")
    assert run("phi", "12") == (0, "x^4 - x^2 + 1\n")
    assert run("phi", "1", "--format", "coeffs") == (0, "-1 1\n")
    code, text = run("phi", "6", "--format", "json")
    assert code == 0 and json.loads(text) == {"n": 6, "coeffs": ["1", "-1", "1"]}


@pytest.mark.parametrize("n", ["6", "30", "105"])
def test_phi_methods_agree(n):
    outs = {run("phi", n, "--method", m)[1] for m in ("inductive", "moebius", "radical")}
    assert len(outs) == 1


def test_k_lines():
    assert run("k", "6", "3") == (0, "divisor quotient=2=2^1 k=2\n")
    assert run("k", "12", "2") == (0, "divisor quotient=6 k=1\n")
    assert run("k", "3", "2") == (0, "non-divisor k=1\n")
    assert run("k", "3", "6") == run("k", "6", "3")
    assert run("k", "24", "3") == (0, "divisor quotient=8=2^3 k=2\n")


def test_cert_and_verify_roundtrip(tmp_path):
    path = tmp_path / "c.json"
    code, _ = run("cert", "6", "3", "-o", str(path))
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc == {"format_version": 1, "m": 6, "n": 3, "k": 2, "a": ["1", "1"], "b": ["1", "-1"]}
    assert run("verify", str(path)) == (0, "OK k=2\n")


def test_cert_lattice_method():
    code, text = run("cert", "9", "3", "--method", "lattice")
    assert code == 0 and json.loads(text)["k"] == 3


def test_cert_equal_indices(capsys):
    assert run("cert", "5", "5")[0] == 2
    assert "indices must differ" in capsys.readouterr().err


def test_verify_failures(tmp_path):
    path = tmp_path / "c.json"
    run("cert", "6", "3", "-o", str(path))
    doc = json.loads(path.read_text())
    doc["b"][0] = "2"
    path.write_text(json.dumps(doc))
    assert run("verify", str(path)) == (1, "FAIL\n")

    full = document.render(bezout.certificate(12, 4))
    path.write_text(full[: len(full) // 2])
    assert run("verify", str(path))[0] == 2
    assert run("verify", str(tmp_path / "missing.json"))[0] == 2


@pytest.mark.parametrize(
    "doc",
    [
        {"format_version": 2, "m": 6, "n": 3, "k": 2, "a": ["1"], "b": ["1"]},
        {"format_version": 1, "m": 6, "n": 3, "k": 2, "a": [1, 1], "b": ["1"]},
        {"format_version": 1, "m": "6", "n": 3, "k": 2, "a": ["1"], "b": ["1"]},
        {"format_version": 1, "m": 6, "n": 3, "k": 2, "a": ["1.0"], "b": ["1"]},
        {"format_version": 1, "m": 6, "n": 3, "a": ["1"], "b": ["1"]},
        [1, 2, 3],
    ],
)
def test_verify_malformed(tmp_path, doc):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    assert run("verify", str(path))[0] == 2


def test_verify_swapped_indices_fail(tmp_path):
    doc = document.to_dict(bezout.certificate(6, 3))
    doc["m"], doc["n"] = 3, 6
    path = tmp_path / "sw.json"
    path.write_text(json.dumps(doc))
    assert run("verify", str(path)) == (1, "FAIL\n")


def test_table():
    code, text = run("table", "12")
    lines = text.splitlines()
    assert code == 0 and lines[0] == "m,n,class,k"
    assert "6,3,divisor-prime-power,2" in lines
    assert "12,2,divisor-composite,1" in lines
    assert "3,2,non-divisor,1" in lines
    assert len(lines) == 1 + 12 * 11 // 2
    body = [tuple(map(int, l.split(",")[:2])) for l in lines[1:]]
    assert body == sorted(body)
    for row in lines[1:]:
        m, n, _, k = row.split(",")
        assert int(k) == bezout.minimal_k(int(m), int(n))


def test_selftest_small():
    code, text = run("selftest", "--max", "12")
    assert code == 0 and text.endswith("selftest passed\n")
    code, text = run("selftest", "--max", "1")
    assert code == 0


def test_selftest_catches_broken_theorem(monkeypatch):
    monkeypatch.setattr(bezout, "minimal_k", lambda m, n: 1)
    code, text = run("selftest", "--max", "8")
    assert code != 0
    assert "theorem-vs-oracle" in text and "FAILED" in text


def test_deterministic_output():
    for argv in (("table", "15"), ("cert", "30", "12"), ("phi", "105", "--format", "json")):
        assert run(*argv) == run(*argv)


def test_robustness_exits(monkeypatch, capsys):
    assert run("k", "5", "5")[0] == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["k", "0", "3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["phi", "abc"])
    assert exc.value.code == 2
    monkeypatch.setenv(ENV_BOUND, "100")
    assert run("phi", "101")[0] == 2
    assert run("cert", "150", "3")[0] == 2
    assert "exceeds the bound" in capsys.readouterr().err


def test_internal_breach_exit(monkeypatch):
    monkeypatch.setattr(bezout, "verify", lambda c: False)
    assert run("cert", "6", "3")[0] == 3


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "cyclobez", "k", "6", "3"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "divisor quotient=2=2^1 k=2\n"


big = st.integers(min_value=-(10**80), max_value=10**80)


@given(
    st.integers(1, 10**6),
    st.integers(1, 10**6),
    st.integers(1, 10**6),
    st.lists(big, max_size=10),
    st.lists(big, max_size=10),
)
def test_document_roundtrip(m, n, k, a, b):
    c = Certificate(m, n, k, IntPoly(a), IntPoly(b))
    text = document.render(c)
    assert document.parse(text) == c
    assert "." not in text and "e+" not in text
