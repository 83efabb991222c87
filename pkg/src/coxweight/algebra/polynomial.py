"""Dense univariate polynomials with arbitrary-precision integer coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def _strip(coeffs: Sequence[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(int(c) for c in coeffs[:n])


@dataclass(frozen=True)
class IntPolynomial:
    """Coefficients in ascending degree; the zero polynomial has no coefficients."""

    coeffs: tuple[int, ...] = ()

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _strip(list(coeffs)))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        return cls([0] * degree + [coeff])

    @classmethod
    def one(cls) -> IntPolynomial:
        return cls([1])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPolynomial:
        result, base = IntPolynomial.one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod_monic(self, divisor: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Euclidean division by a divisor with leading coefficient +-1."""
        lead = divisor.leading()
        if lead not in (1, -1):
            raise ValueError("divisor must have leading coefficient +-1")
        dd = divisor.degree
        rem = list(self.coeffs)
        if len(rem) <= dd:
            return IntPolynomial(), self
        quot = [0] * (len(rem) - dd)
        dc = divisor.coeffs
        for k in range(len(rem) - 1, dd - 1, -1):
            q = rem[k] * lead
            if q:
                quot[k - dd] = q
                for i in range(dd + 1):
                    rem[k - dd + i] -= q * dc[i]
        return IntPolynomial(quot), IntPolynomial(rem[:dd])

    def exact_div(self, divisor: IntPolynomial) -> IntPolynomial:
        q, r = self.divmod_monic(divisor)
        if not r.is_zero():
            raise ArithmeticError("division is not exact")
        return q

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_mod(self, x: int, p: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % p
        return acc

    def substitute_sign(self) -> IntPolynomial:
        """The polynomial ``p(-t)``."""
        return IntPolynomial([-c if k % 2 else c for k, c in enumerate(self.coeffs)])

    def reciprocal(self) -> IntPolynomial:
        """``t^deg p(1/t)``."""
        return IntPolynomial(reversed(self.coeffs))

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def format(self, var: str = "t") -> str:
        """Ascending human-readable form, e.g. ``1 + t + t^2``."""
        if not self.coeffs:
            return "0"
        terms: list[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else var if k == 1 else f"{var}^{k}"
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms)

    def __str__(self) -> str:
        return self.format()


def mul_binomial(coeffs: list[int], j: int, sign: int = -1) -> list[int]:
    """Multiply by ``t^j + sign`` in place-free O(n)."""
    out = [0] * (len(coeffs) + j)
    for k, c in enumerate(coeffs):
        out[k + j] += c
        out[k] += sign * c
    return out


def div_binomial(coeffs: list[int], j: int) -> list[int]:
    """Exact division by ``t^j - 1``; raises if not exact."""
    n = len(coeffs)
    if n <= j:
        if any(coeffs):
            raise ArithmeticError("division by t^j - 1 is not exact")
        return []
    quot = [0] * (n - j)
    rem = list(coeffs)
    for k in range(n - 1, j - 1, -1):
        q = rem[k]
        if q:
            quot[k - j] = q
            rem[k - j] += q
            rem[k] = 0
    if any(rem[:j]):
        raise ArithmeticError("division by t^j - 1 is not exact")
    return quot


def reduce_mod_cyclic(p: IntPolynomial, D: int) -> IntPolynomial:
    """Representative of ``p`` modulo ``q^D - 1`` of degree below ``D``."""
    if D < 1:
        raise ValueError("D must be positive")
    out = [0] * D
    for k, c in enumerate(p.coeffs):
        out[k % D] += c
    return IntPolynomial(out)
