"""Characteristic polynomial of the monodromy from degree data."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from ..algebra.cyclotomic import CyclotomicProduct
from ..algebra.numtheory import divisors, mobius
from .weight import NotAWeight, Weight, WeightError, is_weight, reduced_q_milnor


class NonIntegralInversion(WeightError):
    pass


@dataclass(frozen=True)
class MilnorOrlikTrace:
    """Intermediate quantities of the computation, keyed by divisors of ``D``."""

    weight: Weight
    u: tuple[int, ...]
    chi: dict[int, Fraction]
    s: dict[int, int]
    result: CyclotomicProduct

    def to_json(self) -> dict:
        return {
            "u": list(self.u),
            "chi": {str(j): str(v) for j, v in self.chi.items()},
            "s": {str(j): v for j, v in self.s.items()},
            "result": dict(self.result),
        }


def milnor_orlik(w: Weight) -> MilnorOrlikTrace:
    D = w.total
    u = tuple(D // math.gcd(D, d) for d in w.degrees)
    divs = divisors(D)
    chi: dict[int, Fraction] = {}
    for j in divs:
        val = Fraction(1)
        for d, ui in zip(w.degrees, u):
            if j % ui == 0:
                val *= Fraction(d - D, d)
        chi[j] = val
    s: dict[int, int] = {}
    for j in divs:
        acc = sum((mobius(j // d) * chi[d] for d in divisors(j)), Fraction(0))
        q = acc / j
        if q.denominator != 1:
            raise NonIntegralInversion(f"{w}: j={j} does not divide {acc}")
        s[j] = int(q)
    sign = -1 if w.m % 2 else 1
    result = CyclotomicProduct.from_binomials({j: sign * sj for j, sj in s.items() if sj})
    return MilnorOrlikTrace(w, u, chi, s, result)


def monodromy_polynomial(w: Weight) -> CyclotomicProduct:
    return milnor_orlik(w).result


def eigen_multiplicities(
    w: Weight, method: Literal["milnor_orlik", "q_milnor"] = "milnor_orlik"
) -> dict[int, int]:
    """Multiplicity of ``exp(2 pi i k / D)`` as a monodromy eigenvalue, for ``k = 0..D-1``.

    The ``q_milnor`` route reads coefficient ``(k - sum d_i) mod D`` of the
    q-Milnor polynomial reduced modulo ``q^D - 1``.
    """
    if not is_weight(w):
        raise NotAWeight(f"{w} is not a Weight")
    D = w.total
    if method == "milnor_orlik":
        res = milnor_orlik(w).result
        return {k: res.get(D // math.gcd(k, D), 0) for k in range(D)}
    if method == "q_milnor":
        red = reduced_q_milnor(w)
        shift = sum(w.degrees)
        return {k: red[(k - shift) % D] for k in range(D)}
    raise ValueError(f"unknown method {method!r}")
