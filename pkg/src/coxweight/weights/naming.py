"""Human-readable descriptions of Weights through named factors."""

from __future__ import annotations

import itertools

from .factor import Factorization, factorizations
from .tables import NamedTable, default_table
from .weight import Weight, canonicalize, format_weight, product_all

# composite table names kept whole when they appear among prime factors
MERGED_NAMES = ("E6", "E8")


def factor_label(w: Weight, table: NamedTable | None = None) -> str:
    table = table or default_table()
    return table.lookup_name(w) or f"({format_weight(w)})"


def _merge(factors: Factorization, table: NamedTable) -> list[str]:
    remaining = list(factors)
    labels: list[str] = []
    for name in MERGED_NAMES:
        target = table.named_weight(name)
        merged = True
        while merged:
            merged = False
            for size in (2, 3):
                for combo in itertools.combinations(range(len(remaining)), size):
                    if product_all(remaining[i] for i in combo) == target:
                        labels.append(name)
                        remaining = [f for i, f in enumerate(remaining) if i not in combo]
                        merged = True
                        break
                if merged:
                    break
    labels.extend(factor_label(f, table) for f in remaining)
    return sorted(labels, key=_label_key)


def _label_key(label: str):
    head = label.lstrip("(")
    digits = "".join(ch for ch in head[1:] if ch.isdigit())
    return (label.startswith("("), head[:1], int(digits) if digits else 0, label)


def describe(w: Weight, table: NamedTable | None = None, ascii: bool = False) -> list[str]:
    """Names for ``w``: its own table name when it is prime, else one string per factorization."""
    table = table or default_table()
    sep = "x" if ascii else "×"
    c = canonicalize(w)
    if not c.degrees:
        return [table.lookup_name(c) or "(;1)"]
    facs = factorizations(c)
    if len(facs) == 1 and len(facs[0]) == 1:
        return [factor_label(c, table)]
    return sorted({sep.join(_merge(f, table)) for f in facs})
