"""Weight families indexed by a size parameter ``n``."""

from __future__ import annotations

from typing import Callable

from .weight import Weight, canonicalize


def _finish(degrees, total, canonical: bool) -> Weight:
    w = Weight(degrees, total)
    return canonicalize(w) if canonical else w


def catalan_weight(n: int, canonical: bool = True) -> Weight:
    """``(2, 3, ..., n; 2n+2)``; Milnor number is the Catalan number."""
    _need(n, 1)
    return _finish(range(2, n + 1), 2 * n + 2, canonical)


def asm_weight(n: int, canonical: bool = True) -> Weight:
    """Union over ``0 <= k <= n-k-2`` of ``{3k+2, ..., n+k}``, total ``3n``."""
    _need(n, 1)
    degs = []
    k = 0
    while k <= n - k - 2:
        degs.extend(range(3 * k + 2, n + k + 1))
        k += 1
    return _finish(degs, 3 * n, canonical)


def west_weight(n: int, canonical: bool = True) -> Weight:
    """``(3, ..., n+1; 3n+3)``; counts two-stack sortable permutations."""
    _need(n, 1)
    return _finish(range(3, n + 2), 3 * n + 3, canonical)


def tamari_interval_weight(n: int, canonical: bool = True) -> Weight:
    """``(3, ..., n+1; 4n+4)``; counts intervals in the Tamari lattice."""
    _need(n, 1)
    return _finish(range(3, n + 2), 4 * n + 4, canonical)


def cyclic_quiver_weight(n: int, canonical: bool = True) -> Weight:
    """``(4, 2n, 6, 9, ..., 3n-3; 6n)``; Milnor number ``(3n-2) c_{n-1}``."""
    _need(n, 2)
    return _finish([4, 2 * n] + list(range(6, 3 * n - 2, 3)), 6 * n, canonical)


def _need(n: int, lo: int) -> None:
    if n < lo:
        raise ValueError(f"family index must be >= {lo}, got {n}")


WEIGHT_FAMILIES: dict[str, tuple[Callable[..., Weight], int]] = {
    "catalan": (catalan_weight, 1),
    "asm": (asm_weight, 1),
    "west": (west_weight, 1),
    "tamari-interval": (tamari_interval_weight, 1),
    "cyclic-quiver": (cyclic_quiver_weight, 2),
}


def family_weight(name: str, n: int, canonical: bool = True) -> Weight:
    key = name.replace("_", "-")
    if key not in WEIGHT_FAMILIES:
        raise KeyError(f"unknown weight family {name!r}; choose from {sorted(WEIGHT_FAMILIES)}")
    fn, _ = WEIGHT_FAMILIES[key]
    return fn(n, canonical=canonical)
