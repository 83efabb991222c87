"""Compare Coxeter polynomials of posets with monodromy polynomials of Weights."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .algebra.cyclotomic import CyclotomicProduct, factor_cyclotomic
from .algebra.polynomial import IntPolynomial
from .posets import families as pfam
from .posets.mutation import DEFAULT_SEED_CAP, cyclic_quiver_matrix, green_mutation_poset
from .posets.poset import Poset, coxeter_polynomial
from .weights import families as wfam
from .weights.milnor_orlik import NonIntegralInversion, milnor_orlik
from .weights.weight import NotAWeight, Weight, canonicalize, is_weight, milnor_number


class IncompatibleFamilies(ValueError):
    pass


def weight_coxeter_product(w: Weight) -> CyclotomicProduct:
    """Monodromy polynomial of the canonical form, twisted by ``t -> (-1)^(m-1) t``."""
    c = canonicalize(w)
    result = milnor_orlik(c).result
    return result if c.m % 2 == 1 else result.twist()


def weight_coxeter_polynomial(w: Weight) -> IntPolynomial:
    """Monic degree-mu polynomial that a poset matching ``w`` should have."""
    if not is_weight(w):
        raise NotAWeight(f"{w} is not a Weight")
    return weight_coxeter_product(w).expand()


@dataclass
class PolynomialView:
    poly: IntPolynomial
    factored: CyclotomicProduct
    remainder: IntPolynomial

    @classmethod
    def of(cls, poly: IntPolynomial) -> PolynomialView:
        fac, rem = factor_cyclotomic(poly)
        return cls(poly, fac, rem)

    def factored_string(self, ascii: bool = False) -> str:
        s = self.factored.format(ascii=ascii)
        if self.remainder.coeffs != (1,):
            s = f"{s}{'*' if ascii else '·'}({self.remainder.format()})"
        return s

    def to_json(self, ascii: bool = False) -> dict:
        return {
            "coeffs": self.poly.to_list(),
            "factored": self.factored_string(ascii),
            "remainder": self.remainder.to_list(),
        }


@dataclass
class CriterionReport:
    poset_size: int
    milnor_number: int
    size_match: bool
    poset_polynomial: PolynomialView
    weight_polynomial: PolynomialView
    match: bool
    diagnostics: list[str] = field(default_factory=list)
    n: int | None = None
    weight: Weight | None = None

    def to_json(self, ascii: bool = False) -> dict:
        out = {
            "poset_size": self.poset_size,
            "milnor_number": self.milnor_number,
            "size_match": self.size_match,
            "poset_polynomial": self.poset_polynomial.to_json(ascii),
            "weight_polynomial": self.weight_polynomial.to_json(ascii),
            "match": self.match,
            "diagnostics": list(self.diagnostics),
        }
        if self.n is not None:
            out["n"] = self.n
        if self.weight is not None:
            out["weight"] = str(self.weight)
        return out


def check(p: Poset, w: Weight, poset_poly: IntPolynomial | None = None) -> CriterionReport:
    """Run the Coxeter criterion for one poset against one Weight."""
    mu = milnor_number(w)
    if poset_poly is None:
        poset_poly = coxeter_polynomial(p)
    diagnostics: list[str] = []
    if mu.denominator != 1:
        diagnostics.append(f"Milnor number {mu} is not an integer")
    if is_weight(w):
        weight_poly = weight_coxeter_polynomial(w)
    else:
        diagnostics.append(f"{w} is not a Weight; compared against the twisted Milnor-Orlik product")
        weight_poly = IntPolynomial()
        try:
            prod = weight_coxeter_product(w)
        except NonIntegralInversion as exc:
            diagnostics.append(f"Milnor-Orlik inversion fails: {exc}")
        else:
            if prod.is_polynomial():
                weight_poly = prod.expand()
    size_match = p.size == mu
    if not size_match:
        diagnostics.append(f"size {p.size} differs from Milnor number {mu}")
    match = size_match and poset_poly == weight_poly
    pview = PolynomialView.of(poset_poly)
    wview = PolynomialView.of(weight_poly) if not weight_poly.is_zero() else PolynomialView(
        weight_poly, CyclotomicProduct(), IntPolynomial()
    )
    if pview.remainder.degree > 0:
        diagnostics.append("non-cyclotomic remainder in poset polynomial")
    if not match and not weight_poly.is_zero():
        sign = (-1) ** max(weight_poly.degree, 0)
        if poset_poly == weight_poly.substitute_sign() * sign:
            diagnostics.append("matches only under t ↦ −t")
        if poset_poly == weight_poly.reciprocal() or poset_poly == -weight_poly.reciprocal():
            diagnostics.append("matches the reciprocal polynomial")
    return CriterionReport(
        poset_size=p.size,
        milnor_number=int(mu) if mu.denominator == 1 else math.floor(mu),
        size_match=size_match,
        poset_polynomial=pview,
        weight_polynomial=wview,
        match=match,
        diagnostics=diagnostics,
        weight=canonicalize(w),
    )


def _green_cyclic(n: int, seed_cap: int = DEFAULT_SEED_CAP) -> Poset:
    return green_mutation_poset(cyclic_quiver_matrix(n), seed_cap=seed_cap)


POSET_FAMILIES: dict[str, Callable[..., Poset]] = {
    "tamari": pfam.tamari,
    "dyck": pfam.dyck_lattice,
    "green-cyclic": _green_cyclic,
    "chain": pfam.chain,
}

# poset family -> weight families it is indexed compatibly with, and the first n
COMPATIBLE: dict[tuple[str, str], int] = {
    ("tamari", "catalan"): 1,
    ("dyck", "catalan"): 1,
    ("green-cyclic", "cyclic-quiver"): 2,
    ("chain", "dynkin-a"): 1,
}


def _dynkin_a(n: int, canonical: bool = True) -> Weight:
    w = Weight([1], n + 1)
    return canonicalize(w) if canonical else w


def family_id(name: str) -> str:
    return name.strip().lower().replace("_", "-")


def weight_family(name: str, n: int) -> Weight:
    key = family_id(name)
    if key == "dynkin-a":
        return _dynkin_a(n)
    return wfam.family_weight(key, n)


def poset_family(name: str, n: int, seed_cap: int = DEFAULT_SEED_CAP) -> Poset:
    key = family_id(name)
    if key not in POSET_FAMILIES:
        raise KeyError(f"unknown poset family {name!r}; choose from {sorted(POSET_FAMILIES)}")
    if key == "green-cyclic":
        return _green_cyclic(n, seed_cap)
    return POSET_FAMILIES[key](n)


def check_family(
    posets: str, weights: str, n_range: Iterable[int], seed_cap: int = DEFAULT_SEED_CAP
) -> list[CriterionReport]:
    """One independent report per ``n``, ordered by ``n``."""
    pair = (family_id(posets), family_id(weights))
    if pair not in COMPATIBLE:
        raise IncompatibleFamilies(f"no indexing relates poset family {posets!r} and weights {weights!r}")
    lo = COMPATIBLE[pair]
    reports = []
    for n in sorted(set(n_range)):
        if n < lo:
            raise IncompatibleFamilies(f"{pair[0]}/{pair[1]} starts at n = {lo}")
        rep = check(poset_family(pair[0], n, seed_cap), weight_family(pair[1], n))
        rep.n = n
        if n == 1 and rep.weight is not None and not rep.weight.degrees:
            rep.diagnostics.append("n = 1 gives the empty Weight (listed as A1)")
        reports.append(rep)
    return reports
