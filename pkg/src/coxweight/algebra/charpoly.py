"""Exact characteristic polynomials of integer matrices.

The polynomial is computed modulo a sequence of primes (Hessenberg reduction
followed by the Hessenberg determinant recurrence, both vectorised with
numpy int64) and lifted by Chinese remaindering. Enough primes are used to
exceed twice an a-priori bound on every coefficient, so the result is exact.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

import numpy as np

from .numtheory import is_probable_prime
from .polynomial import IntPolynomial

log = logging.getLogger(__name__)


def as_int_matrix(m) -> np.ndarray:
    """Square integer matrix as int64 when it fits, else an object array."""
    arr = np.asarray(m)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    if arr.dtype == object:
        vals = [int(x) for x in arr.ravel()]
        if all(-(1 << 62) < v < (1 << 62) for v in vals):
            return np.array(vals, dtype=np.int64).reshape(arr.shape)
        return np.array(vals, dtype=object).reshape(arr.shape)
    if not np.issubdtype(arr.dtype, np.integer) and arr.dtype != bool:
        raise TypeError(f"integer matrix required, got dtype {arr.dtype}")
    return arr.astype(np.int64)


def coefficient_bound(m: np.ndarray) -> int:
    """Upper bound on the absolute value of every characteristic-polynomial coefficient.

    The coefficient of ``t^(n-k)`` is a signed sum of principal k-minors; each
    minor is bounded by Hadamard's inequality, so the k-th elementary symmetric
    function of the row (or column) Euclidean norms bounds it.
    """
    n = m.shape[0]
    if n == 0:
        return 1

    def norms(axis: int) -> list[int]:
        out = []
        for vec in (m if axis == 0 else m.T):
            sq = sum(int(x) * int(x) for x in vec)
            r = math.isqrt(sq)
            out.append(r if r * r == sq else r + 1)
        return out

    best = None
    for rs in (norms(0), norms(1)):
        # elementary symmetric functions e_0..e_n of the norms
        e = [1] + [0] * n
        for i, r in enumerate(rs):
            if r == 0:
                continue
            for k in range(i + 1, 0, -1):
                e[k] += e[k - 1] * r
        best = e if best is None else [min(a, b) for a, b in zip(best, e)]
    return max(best)


def prime_bits(n: int) -> int:
    """Largest prime size with ``n * p^2 < 2^63`` so int64 dot products never overflow."""
    return min(31, (62 - max(n, 1).bit_length()) // 2)


def primes_below(limit: int):
    p = limit - 1 if limit % 2 == 0 else limit - 2
    while p > 2:
        if is_probable_prime(p):
            yield p
        p -= 2


def hessenberg_mod(m: np.ndarray, p: int) -> np.ndarray:
    """Upper Hessenberg form of ``m mod p`` by similarity transforms."""
    h = np.array(m % p, dtype=np.int64)
    n = h.shape[0]
    for j in range(n - 2):
        col = h[j + 1 :, j]
        nz = np.flatnonzero(col)
        if nz.size == 0:
            continue
        i = j + 1 + int(nz[0])
        if i != j + 1:
            h[[i, j + 1], :] = h[[j + 1, i], :]
            h[:, [i, j + 1]] = h[:, [j + 1, i]]
        inv = pow(int(h[j + 1, j]), p - 2, p)
        u = h[j + 2 :, j] * inv % p
        if not u.any():
            continue
        h[j + 2 :, j:] = (h[j + 2 :, j:] - np.outer(u, h[j + 1, j:])) % p
        h[:, j + 1] = (h[:, j + 1] + h[:, j + 2 :] @ u) % p
    return h


def hessenberg_charpoly_mod(h: np.ndarray, p: int) -> np.ndarray:
    """Coefficients (ascending) of ``det(tI - h) mod p`` for upper Hessenberg ``h``."""
    n = h.shape[0]
    polys = np.zeros((n + 1, n + 1), dtype=np.int64)
    polys[0, 0] = 1
    s = np.zeros(0, dtype=np.int64)  # s[i] = prod of subdiagonal entries i+1..m-1
    for m in range(1, n + 1):
        c = m - 1
        prev = polys[m - 1]
        cur = np.zeros(n + 1, dtype=np.int64)
        cur[1 : m + 1] = prev[:m]
        cur[:m] = (cur[:m] - h[c, c] * prev[:m]) % p
        if m > 1:
            sub = int(h[c, c - 1])
            s = np.append(s, 1) * sub % p
            a = h[: m - 1, c] * s % p
            corr = a @ polys[: m - 1, : m - 1] % p
            cur[: m - 1] = (cur[: m - 1] - corr) % p
        polys[m] = cur
    return polys[n]


def charpoly_mod(m: np.ndarray, p: int) -> np.ndarray:
    if m.dtype == object:
        m = np.array([[int(x) % p for x in row] for row in m], dtype=np.int64)
    return hessenberg_charpoly_mod(hessenberg_mod(m, p), p)


def _crt_lift(residues: Sequence[np.ndarray], primes: Sequence[int]) -> list[int]:
    """Symmetric-range Garner reconstruction of each coefficient."""
    vals = [int(x) for x in residues[0]]
    modulus = primes[0]
    for res, p in zip(residues[1:], primes[1:]):
        inv = pow(modulus % p, -1, p)
        for k, r in enumerate(res):
            vals[k] += modulus * ((int(r) - vals[k]) * inv % p)
        modulus *= p
    half = modulus // 2
    return [v - modulus if v > half else v for v in vals]


def charpoly(m, workers: int | None = None) -> IntPolynomial:
    """Monic characteristic polynomial ``det(tI - m)`` of a square integer matrix."""
    mat = as_int_matrix(m)
    n = mat.shape[0]
    if n == 0:
        return IntPolynomial.one()
    bound = coefficient_bound(mat)
    primes: list[int] = []
    modulus = 1
    for p in primes_below(1 << prime_bits(n)):
        primes.append(p)
        modulus *= p
        if modulus > 2 * bound:
            break
    log.debug("charpoly n=%d with %d primes (bound %d bits)", n, len(primes), bound.bit_length())
    if workers and workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            residues = list(pool.map(lambda p: charpoly_mod(mat, p), primes))
    else:
        residues = [charpoly_mod(mat, p) for p in primes]
    return IntPolynomial(_crt_lift(residues, primes))
