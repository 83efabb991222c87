"""Finite posets stored as dense order matrices, and their Coxeter matrices."""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from ..algebra.charpoly import charpoly
from ..algebra.polynomial import IntPolynomial


class PosetError(ValueError):
    pass


class CycleDetected(PosetError):
    pass


class MalformedPosetFile(PosetError):
    pass


def _reachability(n: int, covers: Iterable[tuple[int, int]]) -> np.ndarray:
    """Reflexive-transitive closure of a relation, via bitset propagation in topological order."""
    succ: list[set[int]] = [set() for _ in range(n)]
    indeg = [0] * n
    for a, b in covers:
        if not (0 <= a < n and 0 <= b < n):
            raise PosetError(f"cover ({a}, {b}) out of range for size {n}")
        if a == b:
            continue
        if b not in succ[a]:
            succ[a].add(b)
            indeg[b] += 1
    order = []
    stack = [v for v in range(n) if indeg[v] == 0]
    while stack:
        v = stack.pop()
        order.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    if len(order) != n:
        raise CycleDetected("cover relation contains a cycle")
    reach = [0] * n
    for v in reversed(order):
        bits = 1 << v
        for w in succ[v]:
            bits |= reach[w]
        reach[v] = bits
    nbytes = (n + 7) // 8
    raw = b"".join(r.to_bytes(nbytes, "little") for r in reach)
    packed = np.frombuffer(raw, dtype=np.uint8).reshape(n, nbytes)
    return np.unpackbits(packed, axis=1, count=n, bitorder="little").astype(bool)


@dataclass(frozen=True, eq=False)
class Poset:
    """A finite poset; ``leq[i, j]`` is true when element ``i <= j``."""

    leq: np.ndarray
    labels: tuple[str, ...] | None = field(default=None)

    def __post_init__(self):
        leq = np.array(self.leq, dtype=bool)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise PosetError("order matrix must be square")
        n = leq.shape[0]
        if not leq.diagonal().all():
            raise PosetError("relation is not reflexive")
        if (leq & leq.T).sum() != n:
            raise PosetError("relation is not antisymmetric")
        if n:
            f = leq.astype(np.float32)
            if ((f @ f > 0) & ~leq).any():
                raise PosetError("relation is not transitive")
        if self.labels is not None and len(self.labels) != n:
            raise PosetError("label count does not match size")
        leq.setflags(write=False)
        object.__setattr__(self, "leq", leq)
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))

    @classmethod
    def _trusted(cls, leq: np.ndarray, labels=None) -> Poset:
        """Wrap a matrix already known to be a partial order (skips the O(n^3) checks)."""
        obj = object.__new__(cls)
        leq = np.asarray(leq, dtype=bool)
        leq.setflags(write=False)
        object.__setattr__(obj, "leq", leq)
        object.__setattr__(obj, "labels", None if labels is None else tuple(labels))
        if labels is not None and len(obj.labels) != leq.shape[0]:
            raise PosetError("label count does not match size")
        return obj

    @classmethod
    def from_covers(cls, n: int, covers: Iterable[Sequence[int]], labels=None) -> Poset:
        """Reflexive-transitive closure of ``covers``; raises :class:`CycleDetected`."""
        return cls._trusted(_reachability(n, [(int(a), int(b)) for a, b in covers]), labels)

    @classmethod
    def chain(cls, k: int) -> Poset:
        return cls.from_covers(k, [(i, i + 1) for i in range(k - 1)])

    @classmethod
    def antichain(cls, k: int) -> Poset:
        return cls(np.eye(k, dtype=bool))

    @property
    def size(self) -> int:
        return self.leq.shape[0]

    def __len__(self) -> int:
        return self.size

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges ``(i, j)`` with ``i < j`` and nothing in between."""
        strict = self.leq & ~np.eye(self.size, dtype=bool)
        s = strict.astype(np.float32)
        two_step = (s @ s) > 0
        idx = np.argwhere(strict & ~two_step)
        return [(int(a), int(b)) for a, b in idx]

    def relabel(self, perm: Sequence[int]) -> Poset:
        """Poset whose element ``perm[i]`` is the old element ``i``."""
        perm = np.asarray(perm)
        inv = np.empty_like(perm)
        inv[perm] = np.arange(len(perm))
        labels = None if self.labels is None else tuple(self.labels[i] for i in inv)
        return Poset._trusted(self.leq[np.ix_(inv, inv)], labels)

    def dual(self) -> Poset:
        return Poset._trusted(self.leq.T.copy(), self.labels)

    def minimal_elements(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.leq.sum(axis=0) == 1)]

    def maximal_elements(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.leq.sum(axis=1) == 1)]

    # serialization
    def to_json(self) -> dict:
        out = {"size": self.size, "covers": [list(c) for c in self.covers()]}
        if self.labels is not None:
            out["labels"] = list(self.labels)
        return out

    @classmethod
    def from_json(cls, data) -> Poset:
        try:
            n = data["size"]
            covers = data["covers"]
            labels = data.get("labels")
            if not isinstance(n, int) or n < 0:
                raise MalformedPosetFile("size must be a nonnegative integer")
            pairs = []
            for c in covers:
                if len(c) != 2 or not all(isinstance(x, int) for x in c):
                    raise MalformedPosetFile(f"bad cover entry {c!r}")
                pairs.append((c[0], c[1]))
        except (KeyError, TypeError) as exc:
            raise MalformedPosetFile(f"malformed poset document: {exc}") from exc
        return cls.from_covers(n, pairs, labels)

    @classmethod
    def load(cls, path: str | Path) -> Poset:
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise MalformedPosetFile(f"{path}: {exc}") from exc
        return cls.from_json(data)

    def dump(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_json()), encoding="utf-8")


def linear_extension(p: Poset) -> list[int]:
    """Topological order; always removes the smallest-index minimal element."""
    n = p.size
    strict = p.leq & ~np.eye(n, dtype=bool)
    below = strict.sum(axis=0).tolist()
    succ = [np.flatnonzero(row).tolist() for row in strict]
    heap = [i for i in range(n) if below[i] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for w in succ[v]:
            below[w] -= 1
            if below[w] == 0:
                heapq.heappush(heap, w)
    return order


def exact_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Integer matrix product, using float64 BLAS when the result is provably exact."""
    k = a.shape[1]
    if a.dtype != object and b.dtype != object:
        amax = int(np.abs(a).max(initial=0))
        bmax = int(np.abs(b).max(initial=0))
        bound = amax * bmax * k
        if bound < 1 << 53:
            return np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)
        if bound < 1 << 62:
            return a.astype(np.int64) @ b.astype(np.int64)
    return a.astype(object) @ b.astype(object)


def unitriangular_inverse(u: np.ndarray) -> np.ndarray:
    """Exact inverse of an upper unitriangular integer matrix (block recursion)."""
    n = u.shape[0]
    if n <= 64:
        rows = [[int(x) for x in r] for r in u]
        out = [[0] * n for _ in range(n)]
        for i in range(n - 1, -1, -1):
            row = [0] * n
            row[i] = 1
            for k in range(i + 1, n):
                c = rows[i][k]
                if c:
                    rk = out[k]
                    for j in range(k, n):
                        if rk[j]:
                            row[j] -= c * rk[j]
            out[i] = row
        inv = np.array(out, dtype=object)
        if all(abs(int(x)) < 1 << 62 for x in inv.ravel()):
            return inv.astype(np.int64)
        return inv
    h = n // 2
    a_inv = unitriangular_inverse(u[:h, :h])
    d_inv = unitriangular_inverse(u[h:, h:])
    top_right = -exact_matmul(exact_matmul(a_inv, u[:h, h:]), d_inv)
    dtype = object if object in (a_inv.dtype, d_inv.dtype, top_right.dtype) else np.int64
    out = np.zeros((n, n), dtype=dtype)
    out[:h, :h] = a_inv
    out[h:, h:] = d_inv
    out[:h, h:] = top_right
    return out


def coxeter_matrix(p: Poset) -> np.ndarray:
    """``C = -L (L^{-1})^T`` with ``L`` the order matrix in a linear-extension basis."""
    order = linear_extension(p)
    lmat = p.leq[np.ix_(order, order)].astype(np.int64)
    mobius = unitriangular_inverse(lmat)
    return -exact_matmul(lmat, np.ascontiguousarray(mobius.T))


def coxeter_polynomial(p: Poset, workers: int | None = None) -> IntPolynomial:
    return charpoly(coxeter_matrix(p), workers=workers)


def product(p: Poset, q: Poset) -> Poset:
    """Cartesian product with componentwise order; pair ``(i, j)`` has index ``i*|q| + j``."""
    leq = np.kron(p.leq.astype(np.uint8), q.leq.astype(np.uint8)).astype(bool)
    labels = None
    if p.labels is not None and q.labels is not None:
        labels = tuple(f"({a},{b})" for a in p.labels for b in q.labels)
    return Poset._trusted(leq, labels)
