import json

import pytest

from coxweight.weights.milnor_orlik import eigen_multiplicities
from coxweight.weights.naming import describe
from coxweight.weights.tables import (
    TableError,
    UnknownName,
    default_table,
    load_table,
    lookup_name,
    named_weight,
    subscript,
    verify_table,
)
from coxweight.weights.weight import (
    canonicalize,
    central_charge,
    is_weight,
    milnor_number,
    parse,
    product,
)


def test_named_weight():
    assert named_weight("E7") == parse("2,3;9")
    assert named_weight("S_{1,0}") == parse("2,3,4;10")
    assert named_weight("A_3") == parse("1;4")
    assert named_weight("D5") == parse("2,3;8")
    assert named_weight("A1") == parse(";1")
    with pytest.raises(UnknownName):
        named_weight("X9")


def test_lookup_name():
    assert lookup_name(parse("2,3,4;10")) == "S_{1,0}"
    assert lookup_name(parse("1;4")) == "A3"
    assert lookup_name(parse("2,4;8")) == "A3"
    assert lookup_name(parse("1,1;3")) == "D4"
    assert lookup_name(parse("3,4,5,6;15")) is None


def test_subscript():
    assert subscript("E7") == 7
    assert subscript("Z_{11}") == 11
    assert subscript("S_{1,0}") is None


def test_bundled_table_verifies():
    assert verify_table(default_table()) == []


def test_every_entry_is_a_weight_with_matching_eigenvalues():
    for e in default_table().entries:
        w = canonicalize(parse(e.weight))
        assert is_weight(w)
        assert eigen_multiplicities(w, "milnor_orlik") == eigen_multiplicities(w, "q_milnor")


def test_corrupted_entry_is_reported(tmp_path):
    data = json.loads((default_table_path()).read_text("utf-8"))
    for e in data["entries"]:
        if e["name"] == "E7":
            e["weight"] = "2,3;8"
    path = tmp_path / "table.json"
    path.write_text(json.dumps(data), encoding="utf-8")
    failures = verify_table(load_table(path))
    assert any("E7" in f and "μ = 5 ≠ 7" in f for f in failures)


def test_broken_product_is_reported(tmp_path):
    data = json.loads((default_table_path()).read_text("utf-8"))
    for e in data["entries"]:
        if e["name"] == "E6":
            e["product"] = ["A2", "A4"]
    path = tmp_path / "table.json"
    path.write_text(json.dumps(data), encoding="utf-8")
    assert any(f.startswith("E6:") for f in verify_table(load_table(path)))


def test_missing_table(tmp_path):
    with pytest.raises(TableError):
        load_table(tmp_path / "nope.json")


def test_env_override(tmp_path, monkeypatch):
    path = tmp_path / "t.json"
    path.write_text(json.dumps({"entries": [{"name": "E7", "weight": "2,3;9", "table": "dynkin"}]}), "utf-8")
    monkeypatch.setenv("COXWEIGHT_TABLE_PATH", str(path))
    assert len(load_table().entries) == 1


def test_products_multiplicative():
    entries = [canonicalize(parse(e.weight)) for e in default_table().entries]
    for a in entries[:12]:
        for b in entries[:12]:
            ab = product(a, b)
            assert milnor_number(ab) == milnor_number(a) * milnor_number(b)
            assert central_charge(ab) == central_charge(a) + central_charge(b)


def test_product_commutative_associative():
    entries = [canonicalize(parse(e.weight)) for e in default_table().entries][:8]
    for a in entries:
        assert canonicalize(canonicalize(a)) == canonicalize(a)
        for b in entries:
            assert product(a, b) == product(b, a)
            for c in entries[:4]:
                assert product(product(a, b), c) == product(a, product(b, c))


def test_describe():
    assert describe(parse("2,3,4,5;12")) == ["D7×E6"]
    assert describe(parse("1,1;3")) == ["A2×A2"]
    assert describe(parse("1,1;3"), ascii=True) == ["A2xA2"]
    assert describe(parse("2,3;8")) == ["D5"]
    assert describe(parse("2,4,6,7;18")) == ["A2×(2,4,7;18)", "A8×Q11"]


def default_table_path():
    from importlib import resources
    from pathlib import Path

    return Path(str(resources.files("coxweight").joinpath("data/named_weights.json")))
