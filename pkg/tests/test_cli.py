import io
import json
from pathlib import Path

import pytest

import golden
from quasitorsor import cli, verify
from quasitorsor.cli import load_fixture, run

FIX = Path(cli.__file__).with_name("fixtures")


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_analyze_torus():
    code, out, _ = invoke("analyze", str(FIX / "torus.rmap"))
    assert code == 0
    assert "bases: 4" in out.splitlines() and "jac: Z/4" in out.splitlines()
    assert "genus: 1" in out


def test_analyze_json_mirrors_text():
    _, text, _ = invoke("analyze", str(FIX / "k4.rmap"))
    _, js, _ = invoke("analyze", str(FIX / "k4.rmap"), "--format", "json")
    data = json.loads(js)
    assert data["bases"] == 16 and data["jac"] == "Z/4 + Z/4"
    assert [r["basis"] for r in data["basis-list"]] == \
        text.split("[basis-list]\nbasis\n")[1].split("\n[")[0].splitlines()


def test_jac_output():
    code, out, _ = invoke("jac", str(FIX / "torus.rmap"))
    lines = out.splitlines()
    assert code == 0 and lines[:2] == ["invariants: 4", "order: 4"]
    classes = [set(l.split()) for l in lines[4:]]
    assert sorted(map(sorted, classes)) == sorted(map(sorted, golden.CLASSES))


def test_malformed_input_exits_two(tmp_path):
    bad = tmp_path / "bad.rmap"
    bad.write_text("rmap 1\nn 2\nv 1+ 2+\nv 1- 1+\n")
    code, _, err = invoke("analyze", str(bad))
    assert code == 2 and err.startswith(f"{bad}:4:")


def test_missing_file_exits_one(tmp_path):
    code, _, err = invoke("analyze", str(tmp_path / "nothing.rmap"))
    assert code == 1 and "nothing.rmap" in err


def test_verify_b2():
    code, out, err = invoke("verify", "--all", str(FIX / "b2.rmap"))
    assert code == 0, err
    assert "\tfail\t" not in out


def test_bby_signature_file(tmp_path):
    path = tmp_path / "sigma.txt"
    path.write_text("".join(
        "sig " + " ".join(f"{k}:{v:+d}" for k, v in d.items()) + "\n" for d in golden.SIGMA))
    code, out, _ = invoke("bby", str(FIX / "torus.rmap"), "--signature", f"file:{path}")
    assert code == 0 and "acyclic: yes" in out
    rows = out.split("[bijection]\n")[1].split("\n[")[0].splitlines()[1:]
    assert {r.split("\t")[0]: r.split("\t")[1] for r in rows} == golden.TABLE_BETA


def test_bby_non_triangulating_exits_three(tmp_path):
    path = tmp_path / "sigma_prime.txt"
    lines = []
    for d in golden.SIGMA:
        if set(d) == {"3", "4"}:
            d = {k: -v for k, v in d.items()}
        lines.append("sig " + " ".join(f"{k}:{v:+d}" for k, v in d.items()))
    path.write_text("\n".join(lines) + "\n")
    code, out, err = invoke("bby", str(FIX / "torus.rmap"), "--signature", f"file:{path}")
    assert code == 3 and "acyclic: no" in out
    assert err.startswith("FAIL bby.triangulating")


def test_signature_file_errors(tmp_path):
    path = tmp_path / "s.txt"
    path.write_text("sig 1:+1 2:+1\n")
    code, _, err = invoke("bby", str(FIX / "torus.rmap"), "--signature", f"file:{path}")
    assert code == 2 and f"{path}:1:" in err


def test_bernardi_anchor():
    code, out, _ = invoke("bernardi", str(FIX / "torus.rmap"), "--anchor", "1-")
    assert code == 0 and "anchor: 1-" in out
    rows = out.split("[bijection]\n")[1].split("\n[")[0].splitlines()[1:]
    assert {r.split("\t")[0]: r.split("\t")[1] for r in rows} == golden.TABLE_BETA
    code, _, _ = invoke("bernardi", str(FIX / "torus.rmap"), "--anchor", "9+")
    assert code == 2


def test_bby_bernardi_signature_matches_bernardi_command():
    _, a, _ = invoke("bby", str(FIX / "torus.rmap"), "--signature", "bernardi:1-")
    _, b, _ = invoke("bernardi", str(FIX / "torus.rmap"), "--anchor", "1-")
    assert a.split("[bijection]")[1] == b.split("[bijection]")[1]


def test_duality_and_classes():
    code, out, _ = invoke("duality", str(FIX / "torus.rmap"))
    assert code == 0 and "result: pass" in out
    code, out, _ = invoke("classes", str(FIX / "c3.rmap"), "--format", "json")
    data = json.loads(out)
    assert data["class-count"] == 3 and sorted(r["size"] for r in data["classes"]) == [2, 3, 3]


def test_max_n_guard():
    code, _, err = invoke("analyze", str(FIX / "k4.rmap"), "--max-n", "3")
    assert code == 1 and "max-n" in err


def test_failing_check_is_named(monkeypatch):
    def broken(ctx):
        yield ("orthomat.pairing", False, "forced")
    monkeypatch.setattr(verify, "SUITES", [broken])
    code, _, err = invoke("verify", "--all", str(FIX / "edge.rmap"))
    assert code == 3 and err.startswith("FAIL orthomat.pairing")


def test_selftest():
    code, out, _ = invoke("selftest")
    assert code == 0 and "\tfail\t" not in out and "golden.torus-jac\tpass" in out


def test_determinism():
    a = invoke("verify", "--all", str(FIX / "torus.rmap"), "--seed", "5")
    b = invoke("verify", "--all", str(FIX / "torus.rmap"), "--seed", "5")
    assert a == b
    a = invoke("bernardi", str(FIX / "k4.rmap"), "--format", "json")
    assert a == invoke("bernardi", str(FIX / "k4.rmap"), "--format", "json")


def test_module_entry_point():
    import subprocess
    import sys
    res = subprocess.run([sys.executable, "-m", "quasitorsor", "jac", str(FIX / "c3.rmap")],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("invariants: 3")


def test_fixture_loader():
    assert load_fixture("edge").n == 1
