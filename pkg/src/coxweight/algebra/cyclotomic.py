"""Cyclotomic polynomials and exact products of them.

A :class:`CyclotomicProduct` stores ``prod_d Phi_d^{e_d}`` as its exponent map.
Products and quotients are pointwise sums and differences of exponents, so
q-integers and ratios of them stay exact and cheap until someone asks for
coefficients.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .numtheory import (
    divisors,
    factorize,
    indices_with_totient_at_most,
    is_probable_prime,
    mobius,
    totient,
)
from .polynomial import IntPolynomial, div_binomial, mul_binomial


class NegativeExponent(ValueError):
    """Expansion was requested for a product with a negative exponent."""


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPolynomial:
    """The ``d``-th cyclotomic polynomial.

    Equal to ``t^d - 1`` divided by every ``Phi_e`` with ``e`` a proper divisor;
    evaluated as ``prod_{j|d} (t^j - 1)^{mu(d/j)}`` which costs O(d) per factor.
    """
    if d < 1:
        raise ValueError(f"cyclotomic index must be positive, got {d}")
    return CyclotomicProduct({d: 1}).expand()


class CyclotomicProduct(Mapping[int, int]):
    """Exponent map ``d -> e_d`` representing ``prod_d Phi_d^{e_d}``."""

    __slots__ = ("_exps", "_hash")

    def __init__(self, exponents: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        exps: dict[int, int] = defaultdict(int)
        for d, e in items:
            if d < 1:
                raise ValueError(f"cyclotomic index must be positive, got {d}")
            exps[int(d)] += int(e)
        self._exps = {d: e for d, e in sorted(exps.items()) if e}
        self._hash = None

    @classmethod
    def from_binomials(cls, powers: Mapping[int, int]) -> CyclotomicProduct:
        """``prod_j (t^j - 1)^{s_j}`` re-expressed with cyclotomic exponents."""
        acc: dict[int, int] = defaultdict(int)
        for j, s in powers.items():
            for d in divisors(j):
                acc[d] += s
        return cls(acc)

    def to_binomials(self) -> dict[int, int]:
        """Inverse of :meth:`from_binomials` via Moebius inversion."""
        acc: dict[int, int] = defaultdict(int)
        for d, e in self._exps.items():
            for j in divisors(d):
                mu = mobius(d // j)
                if mu:
                    acc[j] += mu * e
        return {j: s for j, s in sorted(acc.items()) if s}

    # Mapping protocol
    def __getitem__(self, d: int) -> int:
        return self._exps[d]

    def get(self, d, default=0):
        return self._exps.get(d, default)

    def __iter__(self) -> Iterator[int]:
        return iter(self._exps)

    def __len__(self) -> int:
        return len(self._exps)

    def __eq__(self, other) -> bool:
        if isinstance(other, CyclotomicProduct):
            return self._exps == other._exps
        if isinstance(other, Mapping):
            return self._exps == {d: e for d, e in other.items() if e}
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._exps.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"CyclotomicProduct({self._exps})"

    # arithmetic
    def __mul__(self, other: CyclotomicProduct) -> CyclotomicProduct:
        return CyclotomicProduct(list(self._exps.items()) + list(other._exps.items()))

    def __truediv__(self, other: CyclotomicProduct) -> CyclotomicProduct:
        return CyclotomicProduct(
            list(self._exps.items()) + [(d, -e) for d, e in other._exps.items()]
        )

    def __pow__(self, k: int) -> CyclotomicProduct:
        return CyclotomicProduct({d: e * k for d, e in self._exps.items()})

    def is_polynomial(self) -> bool:
        return all(e > 0 for e in self._exps.values())

    @property
    def degree(self) -> int:
        return sum(e * totient(d) for d, e in self._exps.items())

    def value_at_one(self):
        """Value at ``t = 1`` when ``Phi_1`` is absent (``Phi_{p^k}(1) = p``)."""
        from fractions import Fraction

        if self._exps.get(1, 0) > 0:
            return 0
        if self._exps.get(1, 0) < 0:
            raise ZeroDivisionError("Phi_1 in the denominator")
        val = Fraction(1)
        for d, e in self._exps.items():
            fac = factorize(d)
            if len(fac) == 1:
                val *= Fraction(fac[0][0]) ** e
        return val.numerator if val.denominator == 1 else val

    def twist(self) -> CyclotomicProduct:
        """Exponents of ``prod Phi_d(-t)^{e_d}`` up to a global sign."""
        out: dict[int, int] = defaultdict(int)
        for d, e in self._exps.items():
            if d % 2:
                out[2 * d] += e
            elif d % 4 == 2:
                out[d // 2] += e
            else:
                out[d] += e
        return CyclotomicProduct(out)

    def expand(self) -> IntPolynomial:
        """Expanded polynomial; raises :class:`NegativeExponent` if not a polynomial."""
        neg = [d for d, e in self._exps.items() if e < 0]
        if neg:
            raise NegativeExponent(f"negative exponent for Phi_{neg[0]}")
        coeffs = [1]
        binom = self.to_binomials()
        for j, s in binom.items():
            for _ in range(max(s, 0)):
                coeffs = mul_binomial(coeffs, j)
        for j, s in binom.items():
            for _ in range(max(-s, 0)):
                coeffs = div_binomial(coeffs, j)
        return IntPolynomial(coeffs)

    def format(self, ascii: bool = False) -> str:
        """``Phi2^2·Phi5·Phi10^2`` style string; ``1`` for the empty product."""
        if not self._exps:
            return "1"
        sym, sep = ("F", "*") if ascii else ("Φ", "·")
        parts = []
        for d, e in self._exps.items():
            parts.append(f"{sym}{d}" if e == 1 else f"{sym}{d}^{e}")
        return sep.join(parts)

    def __str__(self) -> str:
        return self.format()


def q_integer(d: int) -> CyclotomicProduct:
    """``[d]_q = (q^d - 1)/(q - 1)`` as a product of cyclotomic polynomials."""
    if d < 1:
        raise ValueError(f"q-integer needs d >= 1, got {d}")
    return CyclotomicProduct({e: 1 for e in divisors(d) if e > 1})


def expand(p: CyclotomicProduct) -> IntPolynomial:
    return p.expand()


def _root_of_unity_mod_prime(d: int, floor: int = 1 << 40) -> tuple[int, int]:
    """A prime ``q = 1 mod d`` above ``floor`` and an element of order ``d``."""
    k = floor // d + 1
    while True:
        q = k * d + 1
        if is_probable_prime(q):
            break
        k += 1
    primes = [r for r, _ in factorize(d)]
    for a in range(2, q):
        w = pow(a, (q - 1) // d, q)
        if all(pow(w, d // r, q) != 1 for r in primes):
            return q, w
    raise AssertionError("unreachable")


@lru_cache(maxsize=None)
def _root_data(d: int) -> tuple[int, int]:
    return _root_of_unity_mod_prime(d)


def factor_cyclotomic(p: IntPolynomial) -> tuple[CyclotomicProduct, IntPolynomial]:
    """Split off every cyclotomic factor of ``p``.

    Returns the exponent map and the cyclotomic-free cofactor, so that
    ``expand(map) * cofactor == p``. Candidates ``Phi_d`` are screened by
    evaluating at a primitive ``d``-th root of unity modulo a prime, which
    never rejects a true factor; survivors are confirmed by exact division.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    exps: dict[int, int] = {}
    rest = p
    for d in indices_with_totient_at_most(max(rest.degree, 0)):
        if totient(d) > rest.degree:
            continue
        q, w = _root_data(d)
        while totient(d) <= rest.degree and rest.eval_mod(w, q) == 0:
            quot, rem = rest.divmod_monic(cyclotomic(d))
            if not rem.is_zero():
                break
            rest = quot
            exps[d] = exps.get(d, 0) + 1
    return CyclotomicProduct(exps), rest
