"""Randomised invariants checked with hypothesis."""

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from coxweight.algebra.charpoly import charpoly
from coxweight.algebra.cyclotomic import CyclotomicProduct, factor_cyclotomic, q_integer
from coxweight.algebra.polynomial import IntPolynomial
from coxweight.posets.poset import Poset, coxeter_matrix, coxeter_polynomial, product
from coxweight.weights.weight import Weight, canonicalize, central_charge, milnor_number, product as wproduct

from oracles import leverrier_charpoly

SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@pytest.mark.parametrize("d", range(1, 201))
def test_q_integer_expands_to_ones(d):
    assert q_integer(d).expand().to_list() == [1] * d


def products(max_d=60, max_e=3, max_len=4):
    return st.dictionaries(st.integers(1, max_d), st.integers(1, max_e), max_size=max_len).map(CyclotomicProduct)


@SETTINGS
@given(products(), products())
def test_expand_is_multiplicative(a, b):
    assert (a * b).expand() == a.expand() * b.expand()


@SETTINGS
@given(products())
def test_factor_inverts_expand(p):
    fac, rem = factor_cyclotomic(p.expand())
    assert fac == p
    assert rem == IntPolynomial.one()


@st.composite
def int_matrices(draw, max_n=8, lo=-5, hi=5):
    n = draw(st.integers(1, max_n))
    flat = draw(st.lists(st.integers(lo, hi), min_size=n * n, max_size=n * n))
    return np.array(flat, dtype=np.int64).reshape(n, n)


@SETTINGS
@given(int_matrices(), st.randoms(use_true_random=False))
def test_charpoly_similarity_invariant(m, rnd):
    n = m.shape[0]
    perm = list(range(n))
    rnd.shuffle(perm)
    p = np.eye(n, dtype=np.int64)[perm]
    assert charpoly(p.T @ m @ p) == charpoly(m)


@SETTINGS
@given(int_matrices())
def test_charpoly_matches_leverrier(m):
    assert charpoly(m).to_list() == leverrier_charpoly(m)


@st.composite
def posets(draw, max_n=9):
    """Random poset whose identity order is a linear extension."""
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Poset.from_covers(n, [pq for pq, keep in zip(pairs, mask) if keep])


@SETTINGS
@given(posets())
def test_coxeter_palindromic_and_determinant(p):
    poly = coxeter_polynomial(p)
    assert poly.is_palindromic()
    det = round(np.linalg.det(coxeter_matrix(p).astype(float)))
    assert det == (-1) ** p.size
    assert poly.coeffs[0] == 1


@SETTINGS
@given(posets(), st.randoms(use_true_random=False))
def test_relabel_invariance(p, rnd):
    perm = list(range(p.size))
    rnd.shuffle(perm)
    assert coxeter_polynomial(p.relabel(perm)) == coxeter_polynomial(p)


@SETTINGS
@given(posets(max_n=5), posets(max_n=5))
def test_product_coxeter_matrix(p, q):
    assert np.array_equal(coxeter_matrix(product(p, q)), -np.kron(coxeter_matrix(p), coxeter_matrix(q)))


@st.composite
def weights(draw, max_total=40, max_m=4):
    total = draw(st.integers(2, max_total))
    degs = draw(st.lists(st.integers(1, total // 2), max_size=max_m))
    return Weight(degs, total)


@SETTINGS
@given(weights())
def test_canonicalize_idempotent(w):
    c = canonicalize(w)
    assert canonicalize(c) == c
    assert milnor_number(c) == milnor_number(w)


@SETTINGS
@given(weights(), weights())
def test_weight_product_homomorphisms(a, b):
    ab = wproduct(a, b)
    assert milnor_number(ab) == milnor_number(a) * milnor_number(b)
    assert central_charge(ab) == central_charge(a) + central_charge(b)
    assert ab == wproduct(b, a)
