"""Slow but obviously-correct reference implementations used by the tests."""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np


def poly_divide_exact(num: list[int], den: list[int]) -> list[int]:
    """Schoolbook division of ascending coefficient lists; asserts zero remainder."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = Fraction(num[k + len(den) - 1], den[-1])
        assert c.denominator == 1
        q[k] = int(c)
        for i, d in enumerate(den):
            num[k + i] -= q[k] * d
    assert not any(num), "division left a remainder"
    return q


def poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def cyclotomic_by_division(d: int) -> list[int]:
    """Phi_d = (t^d - 1) / prod_{e | d, e < d} Phi_e, straight from the definition."""
    num = [-1] + [0] * (d - 1) + [1]
    den = [1]
    for e in range(1, d):
        if d % e == 0:
            den = poly_mul(den, cyclotomic_by_division(e))
    return poly_divide_exact(num, den)


def leverrier_charpoly(m) -> list[int]:
    """Faddeev-LeVerrier recurrence in exact integers; ascending coefficients of det(tI - m)."""
    a = [[int(x) for x in row] for row in np.asarray(m)]
    n = len(a)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        prod = [[sum(a[i][l] * mk[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            prod[i][i] += coeffs[n - k + 1]
        mk = prod
        am = [[sum(a[i][l] * mk[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        tr = sum(am[i][i] for i in range(n))
        assert tr % k == 0
        coeffs[n - k] = -tr // k
    return coeffs


def leq_by_brute_force(n: int, covers) -> np.ndarray:
    """Reflexive-transitive closure by repeated relaxation."""
    leq = np.eye(n, dtype=bool)
    for i, j in covers:
        leq[i, j] = True
    changed = True
    while changed:
        changed = False
        for i, j, k in itertools.product(range(n), repeat=3):
            if leq[i, j] and leq[j, k] and not leq[i, k]:
                leq[i, k] = True
                changed = True
    return leq


def catalan(n: int) -> int:
    from math import comb

    return comb(2 * n, n) // (n + 1)
