"""Weights: degree data ``(d_1, ..., d_m; D)`` and the monoid built on them."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from ..algebra.cyclotomic import CyclotomicProduct, q_integer
from ..algebra.numtheory import gcd_list
from ..algebra.polynomial import IntPolynomial, reduce_mod_cyclic


class WeightError(ValueError):
    pass


class Malformed(WeightError):
    pass


class NonPositive(WeightError):
    pass


class DegreeTooLarge(WeightError):
    pass


class NotAWeight(WeightError):
    pass


@dataclass(frozen=True, order=True)
class Weight:
    """Degrees (kept sorted) and total degree ``D``; every degree must satisfy ``2d <= D``.

    Instances need not be canonical; see :func:`canonicalize`.
    """

    degrees: tuple[int, ...]
    total: int

    def __init__(self, degrees: Iterable[int], total: int):
        degs = tuple(sorted(int(d) for d in degrees))
        total = int(total)
        if total < 1 or any(d < 1 for d in degs):
            raise NonPositive(f"degrees and total must be positive: {degs}; {total}")
        too_big = [d for d in degs if 2 * d > total]
        if too_big:
            raise DegreeTooLarge(f"degree exceeds D/2: {too_big[0]} > {total}/2")
        object.__setattr__(self, "degrees", degs)
        object.__setattr__(self, "total", total)

    @property
    def m(self) -> int:
        return len(self.degrees)

    def __str__(self) -> str:
        return format_weight(self)

    def __repr__(self) -> str:
        return f"Weight({format_weight(self)!r})"

    def __mul__(self, other: Weight) -> Weight:
        return product(self, other)


UNIT = Weight((), 1)

_WEIGHT_RE = re.compile(r"^\(?\s*([0-9,\s-]*?)\s*;\s*(-?\d+)\s*\)?$")


def parse(text: str) -> Weight:
    """Parse ``"d1,...,dm;D"`` (parentheses optional, ``";D"`` for no degrees)."""
    match = _WEIGHT_RE.match(text.strip())
    if not match:
        raise Malformed(f"cannot parse weight {text!r}; expected 'd1,...,dm;D'")
    body, total = match.groups()
    parts = [p.strip() for p in body.split(",")] if body.strip() else []
    if any(not re.fullmatch(r"-?\d+", p) for p in parts):
        raise Malformed(f"cannot parse degrees in {text!r}")
    return Weight([int(p) for p in parts], int(total))


def format_weight(w: Weight) -> str:
    return ",".join(map(str, w.degrees)) + f";{w.total}"


def canonicalize(w: Weight) -> Weight:
    """Drop degrees with ``2d = D``, divide through by the common gcd, sort."""
    degs = [d for d in w.degrees if 2 * d != w.total]
    g = gcd_list(degs + [w.total])
    return Weight([d // g for d in degs], w.total // g)


def reduce_gcd(w: Weight) -> Weight:
    """Divide through by the common gcd but keep degrees with ``2d = D``."""
    g = gcd_list(list(w.degrees) + [w.total])
    return Weight([d // g for d in w.degrees], w.total // g)


def is_canonical(w: Weight) -> bool:
    return canonicalize(w) == w


def q_milnor(w: Weight) -> CyclotomicProduct:
    """``prod [D - d_i]_q / prod [d_i]_q`` as a cyclotomic exponent map."""
    num = CyclotomicProduct()
    den = CyclotomicProduct()
    for d in w.degrees:
        num = num * q_integer(w.total - d)
        den = den * q_integer(d)
    return num / den


def degree_terms(degrees: Iterable[int], total: int) -> list[CyclotomicProduct]:
    """Per-degree factors ``[D - d]_q / [d]_q``."""
    return [q_integer(total - d) / q_integer(d) for d in degrees]


def _positive_coeffs(poly: IntPolynomial) -> bool:
    return all(c >= 0 for c in poly.coeffs)


def is_weight(degrees: Iterable[int] | Weight, total: int | None = None) -> bool:
    """True when the q-Milnor quotient is a polynomial with nonnegative coefficients."""
    w = degrees if isinstance(degrees, Weight) else Weight(degrees, total)
    qm = q_milnor(w)
    if not qm.is_polynomial():
        return False
    return _positive_coeffs(qm.expand())


def is_weak_weight(degrees: Iterable[int] | Weight, total: int | None = None) -> bool:
    """True when ``prod (D - d_i)`` is divisible by ``prod d_i``."""
    w = degrees if isinstance(degrees, Weight) else Weight(degrees, total)
    return milnor_number(w).denominator == 1


def milnor_number(w: Weight) -> Fraction:
    num = math.prod(w.total - d for d in w.degrees)
    den = math.prod(w.degrees)
    return Fraction(num, den)


def product(a: Weight, b: Weight) -> Weight:
    """Monoid product over the ``lcm`` total degree, then canonicalized."""
    g = math.gcd(a.total, b.total)
    sa, sb = b.total // g, a.total // g
    return canonicalize(
        Weight([sa * x for x in a.degrees] + [sb * y for y in b.degrees], math.lcm(a.total, b.total))
    )


def product_all(weights: Iterable[Weight]) -> Weight:
    out = UNIT
    for w in weights:
        out = product(out, w)
    return out


def central_charge(w: Weight) -> Fraction:
    return Fraction(sum(w.total - 2 * d for d in w.degrees), w.total)


def cy_dimension(w: Weight) -> tuple[int, int]:
    """Calabi-Yau dimension pair ``(sum(D - 2 d_i), D)`` of the given representative."""
    return sum(w.total - 2 * d for d in w.degrees), w.total


def reduced_q_milnor(w: Weight) -> IntPolynomial:
    """Expanded q-Milnor polynomial folded modulo ``q^D - 1``."""
    qm = q_milnor(w)
    if not qm.is_polynomial():
        raise NotAWeight(f"{w} has a non-polynomial q-Milnor number")
    return reduce_mod_cyclic(qm.expand(), w.total)
