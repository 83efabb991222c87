"""Small number-theoretic helpers on Python integers."""

from __future__ import annotations

import math
from functools import lru_cache, reduce
from typing import Iterable


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n`` as ``((p, e), ...)`` with ``p`` ascending."""
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@lru_cache(maxsize=4096)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of ``n``, ascending."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


def mobius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def totient(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


def gcd_list(values: Iterable[int]) -> int:
    return reduce(math.gcd, values, 0)


def lcm_list(values: Iterable[int]) -> int:
    return reduce(math.lcm, values, 1)


def totients_upto(limit: int) -> list[int]:
    """Sieve of Euler's totient for ``0..limit``."""
    phi = list(range(limit + 1))
    for p in range(2, limit + 1):
        if phi[p] == p:
            for k in range(p, limit + 1, p):
                phi[k] -= phi[k] // p
    return phi


def _totient_lower_bound(x: int) -> float:
    # Rosser-Schoenfeld: phi(x) > x / (e^gamma lnln x + 3 / lnln x) for x >= 3
    ll = math.log(math.log(x))
    return x / (1.7810724179901979 * ll + 3.0 / ll)


def indices_with_totient_at_most(bound: int) -> list[int]:
    """All ``d >= 1`` with ``totient(d) <= bound``, ascending."""
    if bound < 1:
        return []
    hi = 64
    while _totient_lower_bound(hi) <= bound:
        hi *= 2
    lo = 32
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _totient_lower_bound(mid) <= bound:
            lo = mid
        else:
            hi = mid
    phi = totients_upto(hi)
    return [d for d in range(1, hi + 1) if phi[d] <= bound]


def is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for p in small:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True
