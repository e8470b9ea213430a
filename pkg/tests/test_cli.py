import json
import subprocess
import sys

import pytest

from srlink import datasets
from srlink.cli import main
from srlink.cli import repro


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_complex_commands(capsys):
    code, out, _ = run(capsys, "complex", "cm", "rp2.json", "--field", "Q")
    assert code == 0 and out.strip() == "Cohen-Macaulay: true"
    code, out, _ = run(capsys, "complex", "wvd", "ex45.json")
    assert code == 0 and out.strip() == "weakly vertex decomposable: false"
    code, out, _ = run(capsys, "complex", "info", "simplex3.json")
    assert "dimension: 2" in out and "pure: true" in out and "facets: 1" in out
    code, out, _ = run(capsys, "complex", "link", "square", "-k", "1")
    assert json.loads(out)["facets"] == [[2], [4]]


def test_assert_exit_codes(capsys):
    code, _, _ = run(capsys, "complex", "wvd", "ex45", "--assert")
    assert code == 2
    code, _, _ = run(capsys, "complex", "cm", "rp2", "--field", "GF2", "--assert")
    assert code == 2
    code, _, _ = run(capsys, "complex", "cm", "rp2", "--assert")
    assert code == 0


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 3,\n "facets": [[1,2]')
    code, _, err = run(capsys, "complex", "info", str(bad))
    assert code == 1 and "bad.json:2:" in err
    code, _, err = run(capsys, "complex", "info", str(tmp_path / "missing.json"))
    assert code == 1
    code, _, _ = run(capsys, "complex", "link", "square")
    assert code == 1
    code, _, _ = run(capsys, "complex", "cm", "rp2", "--field", "GF3")
    assert code == 1
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 1
    poly = tmp_path / "w.json"
    poly.write_text(json.dumps({"n": 2, "C": ["x1*"], "f": "x1", "B": ["x1"], "A": []}))
    code, _, err = run(capsys, "bdl", "verify", str(poly))
    assert code == 1 and "bad factor" in err


def test_bdl_verify(capsys):
    code, out, _ = run(capsys, "bdl", "verify", "ex23.json", "--assert")
    assert code == 0 and out.strip().endswith("verdict: valid")
    code, out, _ = run(capsys, "bdl", "verify", "ex23.json", "--json")
    assert json.loads(out)["verdict"] == "valid"


def test_bdl_vertex(capsys):
    code, out, _ = run(capsys, "bdl", "vertex", "square", "-k", "1")
    assert "B = (x3, x2*x4)" in out and "accepted" in out
    code, _, _ = run(capsys, "bdl", "vertex", "rp2", "-k", "1", "--assert")
    assert code == 2


def test_search_edge_and_recheck(capsys, tmp_path):
    cert = tmp_path / "c16.json"
    code, out, _ = run(
        capsys, "bdl", "search-edge", "--circulant", "16", "1,4,8", "--symmetry", "rotation",
        "--certificate", str(cert),
    )
    assert code == 0
    assert "no basic double G-link; 4 CM candidates eliminated" in out
    code, out, _ = run(capsys, "bdl", "recheck", str(cert))
    assert code == 0 and out.startswith("replay ok")
    d = json.loads(cert.read_text())
    d["cases"][3]["checks"][0]["expect"] = not d["cases"][3]["checks"][0]["expect"]
    cert.write_text(json.dumps(d))
    code, out, _ = run(capsys, "bdl", "recheck", str(cert))
    assert code == 2 and "FAILED" in out


def test_search_edge_graph_file(capsys):
    code, out, _ = run(capsys, "bdl", "search-edge", "path3")
    assert "no valid candidate (I(G) not unmixed)" in out
    code, out, _ = run(capsys, "bdl", "search-edge", "c4-2", "--assert")
    assert code == 2 and "verified BDL" in out
    code, _, _ = run(capsys, "bdl", "search-edge", "path3", "--symmetry", "rotation")
    assert code == 1


def test_refute_squarefree(capsys, tmp_path):
    cert = tmp_path / "d2.json"
    code, out, _ = run(
        capsys, "bdl", "refute-deg2", "ex45-ideal.json", "--mode", "squarefree-A", "--certificate", str(cert),
    )
    assert code == 0 and "verdict: refuted" in out
    code, _, _ = run(capsys, "bdl", "recheck", str(cert))
    assert code == 0
    code, _, err = run(capsys, "bdl", "refute-deg1", "ex23.json")
    assert code == 1


def test_biliaison(capsys):
    code, out, _ = run(capsys, "biliaison", "ex55", "--assert")
    assert code == 0 and "L monomial: false" in out


def test_repro_fast_targets(capsys):
    for t in ("example-2.3", "example-4.1-cm", "example-4.5-cm", "example-5.5", "prop-4.7"):
        code, out, _ = run(capsys, "repro", t)
        assert code == 0, out
        assert out.strip().endswith(f"{t}: PASS")
    code, _, _ = run(capsys, "repro", "nope")
    assert code == 1
    code, out, _ = run(capsys, "repro", "list")
    assert out.split() == list(repro.TARGETS)


def test_repro_mismatch_exit_code(capsys, monkeypatch):
    def broken(jobs=1):
        r = repro.ReproReport("example-2.3")
        r.expect("always wrong", 1, 2)
        return r

    monkeypatch.setitem(repro.TARGETS, "example-2.3", broken)
    code, out, _ = run(capsys, "repro", "example-2.3")
    assert code == 2 and "MISMATCH" in out


def test_repro_is_deterministic():
    a = repro.run("prop-3.6").certificates["search-edge"].dumps()
    b = repro.run("prop-3.6").certificates["search-edge"].dumps()
    assert a == b


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "srlink.cli", "complex", "cm", "square"], capture_output=True, text=True
    )
    assert out.returncode == 0 and "Cohen-Macaulay: true" in out.stdout


def test_bundled_data():
    names = datasets.names()
    for n in ("rp2.json", "rp2-ideal.json", "ex45.json", "c16.json", "ex23.json", "ex55.json", "simplex3.json"):
        assert n in names
    with pytest.raises(FileNotFoundError):
        datasets.path("nothing-here")


def test_complex_commands_accept_graphs(capsys):
    assert main(["complex", "wvd", "c16", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["weakly_vertex_decomposable"] is False
