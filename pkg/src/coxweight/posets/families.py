"""Generators for the built-in poset families."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .poset import Poset, PosetError

MAX_CATALAN_SIZE = 10


class SizeTooLarge(PosetError):
    pass


def _check_size(n: int) -> None:
    if n < 1:
        raise PosetError(f"size must be at least 1, got {n}")
    if n > MAX_CATALAN_SIZE:
        raise SizeTooLarge(f"size {n} exceeds the cap {MAX_CATALAN_SIZE}")


# Binary trees: None is a leaf, (left, right) an inner node.


@lru_cache(maxsize=None)
def binary_trees(n: int) -> tuple:
    """All binary trees with ``n`` inner nodes, in a fixed recursive order."""
    if n == 0:
        return (None,)
    out = []
    for k in range(n):
        for left in binary_trees(k):
            for right in binary_trees(n - 1 - k):
                out.append((left, right))
    return tuple(out)


def bracketing(tree) -> str:
    if tree is None:
        return "x"
    return f"({bracketing(tree[0])}{bracketing(tree[1])})"


def right_rotations(tree):
    """Every tree obtained by one rotation ``((a b) c) -> (a (b c))``."""
    if tree is None:
        return
    left, right = tree
    if left is not None:
        a, b = left
        yield (a, (b, right))
    for new_left in right_rotations(left):
        yield (new_left, right)
    for new_right in right_rotations(right):
        yield (left, new_right)


def tamari(n: int) -> Poset:
    """Tamari lattice on binary trees with ``n`` inner nodes.

    A right rotation goes up, so the left comb is the minimum.
    """
    _check_size(n)
    trees = binary_trees(n)
    index = {t: i for i, t in enumerate(trees)}
    covers = [(i, index[s]) for i, t in enumerate(trees) for s in right_rotations(t)]
    return Poset.from_covers(len(trees), covers, [bracketing(t) for t in trees])


def dyck_paths(n: int) -> list[tuple[int, ...]]:
    """Dyck paths of semilength ``n`` as height sequences, up-steps tried first."""
    out = []

    def rec(heights: list[int], ups: int, downs: int):
        if ups == n and downs == n:
            out.append(tuple(heights))
            return
        h = heights[-1]
        if ups < n:
            heights.append(h + 1)
            rec(heights, ups + 1, downs)
            heights.pop()
        if downs < ups:
            heights.append(h - 1)
            rec(heights, ups, downs + 1)
            heights.pop()

    rec([0], 0, 0)
    return out


def _path_word(heights) -> str:
    return "".join("U" if b > a else "D" for a, b in zip(heights, heights[1:]))


def dyck_lattice(n: int) -> Poset:
    """Dyck paths ordered by being pointwise weakly below."""
    _check_size(n)
    paths = dyck_paths(n)
    h = np.array(paths, dtype=np.int8)
    m = len(paths)
    leq = np.empty((m, m), dtype=bool)
    step = max(1, 4_000_000 // (m * h.shape[1]))
    for start in range(0, m, step):
        block = h[start : start + step]
        leq[start : start + step] = (block[:, None, :] <= h[None, :, :]).all(axis=2)
    return Poset._trusted(leq, [_path_word(p) for p in paths])


def chain(k: int) -> Poset:
    if k < 1:
        raise PosetError("chain length must be positive")
    return Poset.chain(k)


def d4_star() -> Poset:
    """Three minimal elements below a common maximum."""
    return Poset.from_covers(4, [(0, 3), (1, 3), (2, 3)])


def diamond() -> Poset:
    from .poset import product

    return product(chain(2), chain(2))
