"""Prime factorizations in the Weight monoid.

Every factorization of a canonical Weight ``(d_1..d_m; D)`` splits the degree
multiset at the same ``D``, so the search runs over sub-multisets. A part is
admissible only when its cyclotomic exponent map is nonnegative, which is
checked before any polynomial gets expanded.
"""

from __future__ import annotations

import itertools
from collections import Counter
from functools import lru_cache

from ..algebra.cyclotomic import CyclotomicProduct
from .weight import Weight, degree_terms, is_weight, reduce_gcd

Factorization = tuple[Weight, ...]


@lru_cache(maxsize=None)
def _is_weight_at(degrees: tuple[int, ...], total: int) -> bool:
    return is_weight(Weight(degrees, total))


def _terms_product(counts: dict[int, int], terms: dict[int, CyclotomicProduct]) -> CyclotomicProduct:
    acc = CyclotomicProduct()
    for d, k in counts.items():
        if k:
            acc = acc * terms[d] ** k
    return acc


@lru_cache(maxsize=None)
def _factorizations(degrees: tuple[int, ...], total: int) -> frozenset[Factorization]:
    """All proper prime factorizations of ``(degrees; total)``, factors gcd-reduced."""
    if not degrees:
        return frozenset()
    counts = Counter(degrees)
    values = sorted(counts)
    terms = dict(zip(values, degree_terms(values, total)))
    first = values[0]
    found: set[Factorization] = set()
    # the part containing one copy of the smallest degree is a prime factor
    ranges = [range(1, counts[first] + 1)] + [range(counts[v] + 1) for v in values[1:]]
    for choice in itertools.product(*ranges):
        part = dict(zip(values, choice))
        size = sum(choice)
        if size == len(degrees):
            continue
        if not _terms_product(part, terms).is_polynomial():
            continue
        rest = {v: counts[v] - part[v] for v in values}
        if not _terms_product(rest, terms).is_polynomial():
            continue
        part_degs = tuple(d for d in values for _ in range(part[d]))
        rest_degs = tuple(d for d in values for _ in range(rest[d]))
        if not (_is_weight_at(part_degs, total) and _is_weight_at(rest_degs, total)):
            continue
        if not _is_prime_at(part_degs, total):
            continue
        head = reduce_gcd(Weight(part_degs, total))
        for tail in _all_factorizations(rest_degs, total):
            found.add(tuple(sorted((head,) + tail)))
    return frozenset(found)


@lru_cache(maxsize=None)
def _is_prime_at(degrees: tuple[int, ...], total: int) -> bool:
    return not _factorizations(degrees, total)


@lru_cache(maxsize=None)
def _all_factorizations(degrees: tuple[int, ...], total: int) -> frozenset[Factorization]:
    proper = _factorizations(degrees, total)
    if proper:
        return proper
    return frozenset({(reduce_gcd(Weight(degrees, total)),)})


def factorizations(w: Weight) -> list[Factorization]:
    """Every multiset of prime Weights whose product is ``w``, sorted.

    Works on the gcd-reduced representative, so degrees with ``2d = D`` count
    as degrees here (``(1;2)`` is prime). The unit has the empty factorization.
    """
    c = reduce_gcd(w)
    if not c.degrees:
        return [()]
    return sorted(_all_factorizations(c.degrees, c.total))


def is_prime(w: Weight) -> bool:
    c = reduce_gcd(w)
    return c.m >= 1 and _is_prime_at(c.degrees, c.total)
