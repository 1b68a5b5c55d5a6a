"""Exact counting of k-term arithmetic progressions in subsets of [n].

The central objects are the two counting functions

* ``count_aps(S, D, kp, k)``    - number of k-term APs A contained in D
  with ``|A & S| >= kp``;
* ``count_aps_through(x, S, D, kp, k)`` - number of k-term APs A in D
  through x with ``|A & (S - {x})| >= kp``.

Both reduce to backend kernels. ``degree_profile`` evaluates
``count_aps_through`` for every x at once and carries exact rational
moments of the resulting degree sequence. ``degree_sum_sides`` checks the
double-counting identity tying the degree sum to the stratified AP counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels
from .sets import GroundSet, Progression


def ap_count_in_interval(n, k):
    """Number of k-term APs with positive difference inside {1, ..., n}.

    Closed form: sum over d >= 1 of (n - (k-1)d) while positive, i.e.
    D*n - (k-1)*D*(D+1)/2 with D = floor((n-1)/(k-1)).
    """
    if k < 3:
        raise ValueError("k must be >= 3")
    if n < k:
        return 0
    dmax = (n - 1) // (k - 1)
    return dmax * n - (k - 1) * dmax * (dmax + 1) // 2


def enumerate_aps(D, k):
    """All k-term APs contained in D, ordered by (d, a).

    D may be a GroundSet or an int n meaning the full interval [n].
    """
    if isinstance(D, int):
        D = GroundSet.full(D)
    n = D.n
    mask = D.mask
    out = []
    dmax = (n - 1) // (k - 1) if k > 1 else 0
    for d in range(1, dmax + 1):
        for a in range(1, n - (k - 1) * d + 1):
            if all(mask[a + t * d] for t in range(k)):
                out.append(Progression(a, d, k))
    return out


def _as_ground(obj, n):
    if isinstance(obj, GroundSet):
        if obj.n != n:
            raise ValueError(f"ground set over [{obj.n}] used in universe [{n}]")
        return obj
    return GroundSet(n, obj)


def _check_pair(S, D, kp, k):
    if not isinstance(D, GroundSet):
        raise TypeError("D must be a GroundSet")
    if k < 3:
        raise ValueError("k must be >= 3")
    if not 0 <= kp <= k:
        raise ValueError("need 0 <= kp <= k")
    S = _as_ground(S, D.n)
    if not S.is_subset_of(D):
        raise ValueError("S must be a subset of D")
    return S


def count_aps(S, D, kp, k):
    """Number of k-term APs A with A subset of D and ``|A & S| >= kp``."""
    S = _check_pair(S, D, kp, k)
    n = D.n
    d_full = D.size == n
    b = kernels.active()
    if kp == 0:
        if d_full:
            return ap_count_in_interval(n, k)
        members = D.members()
        return int(b.count_inside(members, D.mask, n, k))
    if kp == k:
        members = S.members()
        if members.size < k:
            return 0
        return int(b.count_inside(members, S.mask, n, k))
    return int(b.count_scan(S.mask, D.mask, n, kp, k, d_full))


def count_aps_through(x, S, D, kp, k):
    """APs A in D through x with at least kp elements of S - {x}."""
    S = _check_pair(S, D, kp, k)
    n = D.n
    if not 1 <= x <= n:
        raise ValueError(f"x={x} outside [1, {n}]")
    d_full = D.size == n
    if not d_full and x not in D:
        return 0
    b = kernels.active()
    return int(b.count_through(x, S.mask, D.mask, n, kp, k, d_full))


@dataclass(frozen=True)
class DegreeProfile:
    """Per-element through-counts and exact moments of the degree sequence.

    counts[x] is count_aps_through(x, S, D, kp, k); zero for x outside D,
    index 0 unused. Moments average over the full universe, as exact
    Fractions: first_moment = (1/n) sum counts[x], second_moment =
    (1/n) sum counts[x]^2.
    """

    n: int
    kp: int
    k: int
    counts: np.ndarray
    total: int
    first_moment: Fraction
    second_moment: Fraction
    max_count: int

    @property
    def variance(self):
        return self.second_moment - self.first_moment * self.first_moment


def degree_profile(S, D, kp, k):
    """Evaluate count_aps_through for every x in [n] in one scan."""
    S = _check_pair(S, D, kp, k)
    n = D.n
    if n < 1:
        raise ValueError("universe must be nonempty")
    d_full = D.size == n
    b = kernels.active()
    counts = np.asarray(b.degree_scan(S.mask, D.mask, n, kp, k, d_full))
    counts = counts.copy()
    counts.setflags(write=False)
    total = int(counts.sum())
    sq = int(np.dot(counts, counts))
    first = Fraction(total, n)
    second = Fraction(sq, n)
    # Cauchy-Schwarz: E[Y^2] >= E[Y]^2 must hold for any exact profile.
    assert second >= first * first
    return DegreeProfile(
        n=n,
        kp=kp,
        k=k,
        counts=counts,
        total=total,
        first_moment=first,
        second_moment=second,
        max_count=int(counts.max()),
    )


def degree_sum_sides(S, D, kp, k):
    """Both sides of the degree-sum identity, plus the k * N>=kp variant.

    Returns (lhs, rhs_exact, rhs_uniform) where

    * lhs         = sum over x in D of count_aps_through(x, S, D, kp, k);
    * rhs_exact   = (k - kp) * N_eq + k * N_gt, with N_eq the number of
      APs meeting S in exactly kp points and N_gt in more than kp;
    * rhs_uniform = k * (N_eq + N_gt).

    An AP with |A & S| = j contributes, per element x of A, one to the
    through-count iff j - [x in S] >= kp; summed over its k elements that
    is 0 for j < kp, (k - kp) for j = kp (only the kp elements of S on A
    are excluded), and k for j > kp. Hence lhs == rhs_exact always, while
    rhs_uniform overshoots whenever N_eq > 0 and kp > 0.
    """
    prof = degree_profile(S, D, kp, k)
    n_ge = count_aps(S, D, kp, k)
    n_gt = count_aps(S, D, kp + 1, k) if kp < k else 0
    n_eq = n_ge - n_gt
    rhs_exact = (k - kp) * n_eq + k * n_gt
    rhs_uniform = k * n_ge
    return prof.total, rhs_exact, rhs_uniform
