import json
import subprocess
import sys

import pytest

from coxweight.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_weight_info(capsys):
    code, out, _ = run(capsys, "weight", "info", "2,3,4;10")
    assert code == 0
    assert "Φ2^2·Φ5·Φ10^2" in out
    assert "14" in out and "S_{1,0}" in out


def test_weight_info_json(capsys):
    code, out, _ = run(capsys, "--json", "weight", "info", "2,3,5,5;15")
    assert code == 0
    data = json.loads(out)
    assert data["central_charge"] == "2"


def test_weight_info_rejects_large_degree(capsys):
    code, _, err = run(capsys, "weight", "info", "7;10")
    assert code == 2
    assert "degree exceeds D/2" in err


def test_weight_product(capsys):
    assert run(capsys, "weight", "product", "3,5;20", "1;5")[:2] == (0, "3,4,5;20\n")
    assert run(capsys, "weight", "product", "2,5;12", "3,4;12")[:2] == (0, "2,3,4,5;12\n")
    assert run(capsys, "weight", "product", "x", ";1")[0] == 2


def test_weight_factor(capsys):
    code, out, _ = run(capsys, "weight", "factor", "2,4,6,7;18")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 2
    firsts = {line.split()[0] for line in lines}
    assert firsts == {"(1;9)×(4,6,7;18)", "(1;3)×(2,4,7;18)"}
    assert run(capsys, "weight", "factor", "3,4,5,6;15")[1].strip() == "prime"
    out = run(capsys, "weight", "factor", "1,1;3")[1]
    assert "(1;3)×(1;3)" in out and "A2×A2" in out
    assert run(capsys, "weight", "factor", "2;5")[0] == 2


def test_poset_coxpoly(capsys, tmp_path):
    assert run(capsys, "poset", "coxpoly", "chain", "2")[1].splitlines()[0] == "1 + t + t^2"
    tam = run(capsys, "poset", "coxpoly", "tamari", "3")[1].splitlines()[1]
    dyck = run(capsys, "poset", "coxpoly", "dyck", "3")[1].splitlines()[1]
    assert tam == dyck
    path = tmp_path / "diamond.json"
    path.write_text(json.dumps({"size": 4, "covers": [[0, 1], [0, 2], [1, 3], [2, 3]]}))
    out = run(capsys, "poset", "coxpoly", "file", str(path))[1]
    assert out.splitlines()[1] == "Φ2^2·Φ6"
    data = json.loads(run(capsys, "poset", "coxpoly", "file", str(path), "--json", "--ascii")[1])
    assert data == {"size": 4, "coeffs": [1, 1, 0, 1, 1], "factored": "F2^2*F6", "remainder": [1]}


@pytest.mark.parametrize("family,n", [("tamari", "4"), ("dyck", "4"), ("green-cyclic", "3"), ("chain", "5")])
def test_gen_file_roundtrip(capsys, tmp_path, family, n):
    gen = run(capsys, "poset", "gen", family, n)[1]
    path = tmp_path / "p.json"
    path.write_text(gen)
    direct = run(capsys, "poset", "coxpoly", family, n, "--json")[1]
    via_file = run(capsys, "poset", "coxpoly", "file", str(path), "--json")[1]
    assert direct == via_file


def test_poset_errors(capsys, tmp_path):
    assert run(capsys, "poset", "gen", "nope", "3")[0] == 2
    assert run(capsys, "poset", "gen", "tamari", "x")[0] == 2
    assert run(capsys, "poset", "gen", "tamari", "11")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"size": 2, "covers": [[0, 1], [1, 0]]}')
    assert run(capsys, "poset", "coxpoly", "file", str(bad))[0] == 3
    bad.write_text("[1, 2")
    assert run(capsys, "poset", "coxpoly", "file", str(bad))[0] == 3
    assert run(capsys, "poset", "coxpoly", "file", str(tmp_path / "missing.json"))[0] == 2


def test_criterion(capsys):
    code, out, _ = run(capsys, "criterion", "tamari", "catalan", "1", "6")
    assert code == 0
    assert out.count("MATCH") == 6
    code, out, _ = run(capsys, "criterion", "green-cyclic", "cyclic-quiver", "--n-min", "2", "--n-max", "4", "--json")
    data = json.loads(out)
    assert code == 0 and data["all_match"]
    assert [r["poset_size"] for r in data["reports"]] == [4, 14, 50]
    code, _, err = run(capsys, "criterion", "dyck", "cyclic-quiver", "2", "3")
    assert code == 2 and "IncompatibleFamilies" in err
    assert run(capsys, "criterion", "tamari", "catalan", "5", "2")[0] == 2


def test_criterion_failure_exit(capsys, monkeypatch):
    import coxweight.criterion as crit

    monkeypatch.setattr(crit, "weight_family", lambda name, n: crit.wfam.family_weight("west", n))
    code, out, _ = run(capsys, "criterion", "tamari", "catalan", "3", "4")
    assert code == 1 and "FAIL" in out


def test_family(capsys):
    code, out, _ = run(capsys, "family", "catalan", "2", "5")
    assert code == 0
    for name in ["A2", "D5", "S_{1,0}", "D7×E6"]:
        assert name in out
    out = run(capsys, "family", "west", "2", "5")[1]
    for name in ["A2", "E6", "A2×Z11", "E7×Z13"]:
        assert name in out
    data = json.loads(run(capsys, "family", "asm", "--n-min", "2", "--n-max", "12", "--json")[1])
    assert all(r["is_weight"] for r in data["rows"])
    assert run(capsys, "family", "nope")[0] == 2


def test_tables_verify(capsys, tmp_path, monkeypatch):
    code, out, _ = run(capsys, "tables", "verify")
    assert code == 0 and "0 failures" in out
    table = json.loads(
        subprocess.run(
            [sys.executable, "-c", "from importlib import resources; print(resources.files('coxweight').joinpath('data/named_weights.json').read_text())"],
            capture_output=True,
            text=True,
            check=True,
        ).stdout
    )
    for e in table["entries"]:
        if e["name"] == "E7":
            e["weight"] = "2,3;8"
    path = tmp_path / "t.json"
    path.write_text(json.dumps(table), encoding="utf-8")
    monkeypatch.setenv("COXWEIGHT_TABLE_PATH", str(path))
    code, out, _ = run(capsys, "tables", "verify")
    assert code == 1 and "μ = 5 ≠ 7" in out
    monkeypatch.setenv("COXWEIGHT_TABLE_PATH", str(tmp_path / "missing.json"))
    assert run(capsys, "tables", "verify")[0] == 2


def test_json_is_deterministic():
    cmd = [sys.executable, "-m", "coxweight.cli", "--json", "weight", "info", "2,4,6,7;18"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b
    json.loads(a)


def test_usage_error_exit_code():
    proc = subprocess.run([sys.executable, "-m", "coxweight.cli", "weight"], capture_output=True)
    assert proc.returncode == 2
