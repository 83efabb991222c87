"""Named Weights: the bundled table, name lookup and table verification."""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .weight import Weight, WeightError, canonicalize, is_weight, milnor_number, parse, product_all

TABLE_ENV = "COXWEIGHT_TABLE_PATH"


class UnknownName(KeyError):
    pass


class TableError(RuntimeError):
    """The table data file is missing or unreadable."""


@dataclass(frozen=True)
class TableEntry:
    name: str
    weight: str
    table: str
    product: tuple[str, ...] = ()


@dataclass(frozen=True)
class ParametricEntry:
    name: str  # e.g. "A{n}"
    weight: str  # e.g. "1;n+1"
    table: str
    min_n: int

    def instantiate(self, n: int) -> Weight:
        if n < self.min_n:
            raise UnknownName(self.name.format(n=n))
        text = re.sub(r"(\d*)n([+-]\d+)?", lambda m: str(_affine(m, n)), self.weight)
        return parse(text)


def _affine(m: re.Match, n: int) -> int:
    coef = int(m.group(1)) if m.group(1) else 1
    off = int(m.group(2)) if m.group(2) else 0
    return coef * n + off


@dataclass
class NamedTable:
    entries: list[TableEntry]
    parametric: list[ParametricEntry]
    _by_key: dict[str, TableEntry] = field(init=False, repr=False)
    _by_weight: dict[Weight, str] = field(init=False, repr=False)

    def __post_init__(self):
        self._by_key = {normalize_name(e.name): e for e in self.entries}
        self._by_weight = {}
        for e in self.entries:
            try:
                w = canonicalize(parse(e.weight))
            except WeightError:
                continue
            self._by_weight.setdefault(w, e.name)

    def named_weight(self, name: str) -> Weight:
        key = normalize_name(name)
        if key in self._by_key:
            return canonicalize(parse(self._by_key[key].weight))
        for p in self.parametric:
            prefix = normalize_name(p.name.format(n=""))
            if key.startswith(prefix) and key[len(prefix):].isdigit():
                return canonicalize(p.instantiate(int(key[len(prefix):])))
        raise UnknownName(name)

    def lookup_name(self, w: Weight) -> str | None:
        c = canonicalize(w)
        if c in self._by_weight:
            return self._by_weight[c]
        for p in self.parametric:
            for n in _parametric_candidates(p, c):
                if n >= p.min_n and canonicalize(p.instantiate(n)) == c:
                    return p.name.format(n=n)
        return None


def _parametric_candidates(p: ParametricEntry, c: Weight) -> list[int]:
    """Indices ``n`` whose instance could canonicalize to ``c`` (total is n+1, 2n-2 or n-1)."""
    D = c.total
    cands = {D - 1, D + 1, (D + 2) // 2, 1}
    return sorted(n for n in cands if n >= 1)


def normalize_name(name: str) -> str:
    return re.sub(r"[_{}\s]", "", name).upper()


def table_path() -> Path | None:
    env = os.environ.get(TABLE_ENV)
    return Path(env) if env else None


def load_table(path: str | Path | None = None) -> NamedTable:
    if path is None:
        path = table_path()
    try:
        if path is None:
            text = resources.files("coxweight").joinpath("data/named_weights.json").read_text("utf-8")
        else:
            text = Path(path).read_text(encoding="utf-8")
        data = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise TableError(f"cannot read named-weight table: {exc}") from exc
    entries = [
        TableEntry(e["name"], e["weight"], e.get("table", ""), tuple(e.get("product", ())))
        for e in data.get("entries", [])
    ]
    parametric = [
        ParametricEntry(p["name"], p["weight"], p.get("table", ""), int(p.get("min_n", 1)))
        for p in data.get("parametric", [])
    ]
    return NamedTable(entries, parametric)


@lru_cache(maxsize=1)
def default_table() -> NamedTable:
    return load_table()


def named_weight(name: str) -> Weight:
    return default_table().named_weight(name)


def lookup_name(w: Weight) -> str | None:
    return default_table().lookup_name(w)


def subscript(name: str) -> int | None:
    """Single integer subscript of names like ``E7`` or ``Z11``; None otherwise."""
    m = re.fullmatch(r"[A-Z]_?\{?(\d+)\}?", name)
    return int(m.group(1)) if m else None


SUBSCRIPT_TABLES = {"dynkin", "unimodal", "bimodal"}


def verify_table(table: NamedTable, parametric_range: int = 30) -> list[str]:
    """Check every row; returns failure messages (empty when everything holds)."""
    failures: list[str] = []
    for e in table.entries:
        try:
            w = parse(e.weight)
        except WeightError as exc:
            failures.append(f"{e.name}: {exc}")
            continue
        if not is_weight(w):
            failures.append(f"{e.name}: {e.weight} is not a Weight")
        mu = milnor_number(w)
        k = subscript(e.name)
        if e.table in SUBSCRIPT_TABLES and k is not None and mu != k:
            failures.append(f"{e.name}: μ = {mu} ≠ {k}")
        if e.product:
            try:
                prod = product_all(table.named_weight(f) for f in e.product)
            except (UnknownName, WeightError) as exc:
                failures.append(f"{e.name}: bad product factor {exc}")
                continue
            if prod != canonicalize(w):
                failures.append(
                    f"{e.name}: {' × '.join(e.product)} = ({prod}) ≠ ({canonicalize(w)})"
                )
            expected = 1
            for f in e.product:
                expected *= milnor_number(table.named_weight(f))
            if mu != expected:
                failures.append(f"{e.name}: μ = {mu} ≠ {expected} from {' × '.join(e.product)}")
    for p in table.parametric:
        for n in range(p.min_n, p.min_n + parametric_range):
            w = p.instantiate(n)
            if not is_weight(w):
                failures.append(f"{p.name.format(n=n)}: {w} is not a Weight")
            if milnor_number(w) != n:
                failures.append(f"{p.name.format(n=n)}: μ = {milnor_number(w)} ≠ {n}")
            if table.lookup_name(w) != p.name.format(n=n):
                failures.append(f"{p.name.format(n=n)}: lookup returns {table.lookup_name(w)}")
    return failures
