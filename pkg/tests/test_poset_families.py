import itertools

import numpy as np
import pytest

from coxweight.posets.families import (
    SizeTooLarge,
    binary_trees,
    bracketing,
    chain,
    dyck_lattice,
    dyck_paths,
    right_rotations,
    tamari,
)
from coxweight.posets.poset import coxeter_polynomial

from oracles import catalan


def test_tamari_small():
    t1 = tamari(1)
    assert t1.size == 1
    t3 = tamari(3)
    assert t3.size == 5 and len(t3.covers()) == 5
    t4 = tamari(4)
    assert t4.size == 14
    assert len(t4.minimal_elements()) == 1 and len(t4.maximal_elements()) == 1


def test_tamari_bottom_is_left_comb():
    t = tamari(4)
    (bottom,) = t.minimal_elements()
    (top,) = t.maximal_elements()
    assert t.labels[bottom].startswith("(((")
    assert t.labels[top].endswith(")))")


def test_rotations_preserve_leaf_count():
    for tree in binary_trees(5):
        for r in right_rotations(tree):
            assert bracketing(r).count("x") == bracketing(tree).count("x")


@pytest.mark.parametrize("n", range(1, 9))
def test_sizes(n):
    assert len(binary_trees(n)) == catalan(n)
    assert len(dyck_paths(n)) == catalan(n)


def test_dyck_small():
    d2 = dyck_lattice(2)
    assert d2.size == 2 and len(d2.covers()) == 1
    assert dyck_lattice(1).size == 1
    assert set(dyck_lattice(2).labels) == {"UUDD", "UDUD"}


def test_dyck_order_is_pointwise_height():
    d = dyck_lattice(4)
    paths = dyck_paths(4)
    for i, j in itertools.product(range(d.size), repeat=2):
        assert d.leq[i, j] == all(a <= b for a, b in zip(paths[i], paths[j]))


@pytest.mark.parametrize("n", range(1, 7))
def test_tamari_and_dyck_share_polynomial(n):
    assert coxeter_polynomial(tamari(n)) == coxeter_polynomial(dyck_lattice(n))


def test_size_cap():
    with pytest.raises(SizeTooLarge):
        tamari(11)
    with pytest.raises(SizeTooLarge):
        dyck_lattice(11)


def test_tamari_is_a_lattice():
    t = tamari(4)
    leq = t.leq
    for a, b in itertools.combinations(range(t.size), 2):
        ub = np.flatnonzero(leq[a] & leq[b])
        least = [u for u in ub if all(leq[u, v] for v in ub)]
        assert len(least) == 1


def test_chain():
    assert chain(3).covers() == [(0, 1), (1, 2)]
