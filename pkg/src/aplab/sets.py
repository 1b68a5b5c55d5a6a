"""Dense subsets of {1, ..., n} and arithmetic progressions over them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np


class GroundSet:
    """An immutable subset of {1, ..., n} with dense membership storage.

    Membership is a uint8 array of length n + 1 indexed by element value
    (index 0 unused), which is exactly the layout the counting kernels
    consume. Instances are value objects: hashable, comparable, and safe
    to share between threads.
    """

    __slots__ = ("n", "_mask", "_size")

    def __init__(self, n, members=()):
        n = int(n)
        if n < 0:
            raise ValueError("universe size must be nonnegative")
        mask = np.zeros(n + 1, dtype=np.uint8)
        if not isinstance(members, np.ndarray):
            members = list(members)
        arr = np.asarray(members, dtype=np.int64)
        if arr.ndim > 1:
            raise ValueError("members must be a flat sequence of integers")
        if arr.size:
            lo, hi = int(arr.min()), int(arr.max())
            if lo < 1 or hi > n:
                bad = lo if lo < 1 else hi
                raise ValueError(f"element {bad} outside 1..{n}")
            mask[arr] = 1
        mask.setflags(write=False)
        self.n = n
        self._mask = mask
        self._size = int(mask.sum())

    @classmethod
    def from_mask(cls, mask):
        """Build from a membership array of length n + 1 (index 0 ignored)."""
        mask = np.asarray(mask)
        out = cls.__new__(cls)
        m = (mask != 0).astype(np.uint8)
        m[0] = 0
        m.setflags(write=False)
        out.n = len(m) - 1
        out._mask = m
        out._size = int(m.sum())
        return out

    @classmethod
    def full(cls, n):
        mask = np.ones(int(n) + 1, dtype=np.uint8)
        mask[0] = 0
        return cls.from_mask(mask)

    @classmethod
    def empty(cls, n):
        return cls(n)

    @property
    def size(self):
        """Number of members."""
        return self._size

    @property
    def mask(self):
        """Read-only uint8 membership array of length n + 1."""
        return self._mask

    def members(self):
        """Members in ascending order as an int64 array."""
        return np.flatnonzero(self._mask).astype(np.int64)

    def __contains__(self, x):
        return 1 <= x <= self.n and bool(self._mask[x])

    def __len__(self):
        return self._size

    def __iter__(self):
        return iter(self.members().tolist())

    def __eq__(self, other):
        if not isinstance(other, GroundSet):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self._mask, other._mask))

    def __hash__(self):
        return hash((self.n, self._mask.tobytes()))

    def __repr__(self):
        shown = self.members()[:8].tolist()
        ell = ", ..." if self._size > 8 else ""
        return f"GroundSet(n={self.n}, size={self._size}, members=[{', '.join(map(str, shown))}{ell}])"

    def _same_universe(self, other):
        if self.n != other.n:
            raise ValueError(f"universe mismatch: {self.n} != {other.n}")

    def is_subset_of(self, other):
        self._same_universe(other)
        return bool(np.all(self._mask <= other._mask))

    def union(self, other):
        self._same_universe(other)
        return GroundSet.from_mask(self._mask | other._mask)

    def intersection(self, other):
        self._same_universe(other)
        return GroundSet.from_mask(self._mask & other._mask)

    def difference(self, other):
        self._same_universe(other)
        return GroundSet.from_mask(self._mask & ~other._mask)

    def complement(self):
        return GroundSet.from_mask(1 - self._mask)


@dataclass(frozen=True)
class Progression:
    """A k-term arithmetic progression {a, a+d, ..., a+(k-1)d} with d >= 1."""

    a: int
    d: int
    k: int

    def __post_init__(self):
        if self.a < 1:
            raise ValueError("first element must be >= 1")
        if self.d < 1:
            raise ValueError("common difference must be >= 1")
        if self.k < 3:
            raise ValueError("length must be >= 3")

    @property
    def last(self):
        return self.a + (self.k - 1) * self.d

    def elements(self):
        return tuple(self.a + j * self.d for j in range(self.k))

    def fits(self, n):
        return self.last <= n


@dataclass(frozen=True)
class ProblemParams:
    """Instance parameters: universe n, subset size m, AP length k, threshold
    count k_prime, density alpha, and counting rate beta."""

    n: int
    m: int
    k: int
    k_prime: int
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        if self.k < 3:
            raise ValueError("k must be >= 3")
        if not 0 <= self.k_prime <= self.k:
            raise ValueError("k_prime must satisfy 0 <= k_prime <= k")
        if not 0 < self.m <= self.n:
            raise ValueError("m must satisfy 0 < m <= n")
        if not 0 < self.alpha <= 1:
            raise ValueError("alpha must lie in (0, 1]")
        if not 0 < self.beta < 1:
            raise ValueError("beta must lie in (0, 1)")
