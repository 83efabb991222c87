"""Seed mutation and the oriented exchange graph of green mutations."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .poset import Poset, PosetError

DEFAULT_SEED_CAP = 1_000_000


class ExplosionGuard(PosetError):
    pass


@dataclass(frozen=True, eq=False)
class Seed:
    """Exchange matrix ``b`` together with the c-vectors as the columns of ``c``."""

    b: np.ndarray
    c: np.ndarray

    @classmethod
    def initial(cls, b) -> Seed:
        b = np.asarray(b, dtype=np.int64)
        return cls(b, np.eye(b.shape[0], dtype=np.int64))

    @property
    def rank(self) -> int:
        return self.b.shape[0]

    def is_green(self, k: int) -> bool:
        return bool((self.c[:, k] >= 0).all())

    def key(self) -> bytes:
        """Key invariant under simultaneous relabeling of the vertices."""
        cols = [tuple(self.c[:, j]) for j in range(self.rank)]
        perm = sorted(range(self.rank), key=cols.__getitem__)
        c = self.c[:, perm]
        b = self.b[np.ix_(perm, perm)]
        return np.concatenate([c.ravel(), b.ravel()]).astype(np.int64).tobytes()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Seed)
            and np.array_equal(self.b, other.b)
            and np.array_equal(self.c, other.c)
        )


def mutate(seed: Seed, k: int) -> Seed:
    """Matrix mutation at ``k`` of the stacked ``2n x n`` matrix ``[b; c]``."""
    n = seed.rank
    if not 0 <= k < n:
        raise IndexError(f"vertex {k} out of range")
    x = np.vstack([seed.b, seed.c])
    xk = x[:, k : k + 1]
    row_k = x[k : k + 1, :]
    new = x + np.sign(xk) * np.maximum(xk * row_k, 0)
    new[k, :] = -x[k, :]
    new[:, k] = -x[:, k]
    out = Seed(new[:n], new[n:])
    col = out.c[:, k]
    assert (col >= 0).all() or (col <= 0).all(), "c-vector lost sign coherence"
    return out


def cyclic_quiver_matrix(n: int) -> np.ndarray:
    """Exchange matrix of the oriented n-cycle; opposite arrows cancel when n = 2."""
    if n < 2:
        raise ValueError("cyclic quiver needs n >= 2")
    b = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        j = (i + 1) % n
        b[i, j] += 1
        b[j, i] -= 1
    return b


def green_mutation_poset(b, seed_cap: int = DEFAULT_SEED_CAP) -> Poset:
    """Poset of seeds reachable from the initial seed through green mutations."""
    start = Seed.initial(b)
    keys = {start.key(): 0}
    seeds = [start]
    covers: list[tuple[int, int]] = []
    queue = deque([0])
    while queue:
        i = queue.popleft()
        s = seeds[i]
        for k in range(s.rank):
            if not s.is_green(k):
                continue
            t = mutate(s, k)
            key = t.key()
            j = keys.get(key)
            if j is None:
                if len(seeds) >= seed_cap:
                    raise ExplosionGuard(f"more than {seed_cap} seeds reached")
                j = len(seeds)
                keys[key] = j
                seeds.append(t)
                queue.append(j)
            covers.append((i, j))
    return Poset.from_covers(len(seeds), covers)
