"""Exhaustive enumeration of AP-free and AP-deficient m-subsets of [n].

A subset is AP-free when it contains no k-term AP, and deficient (for a
rate gamma) when it contains fewer than gamma * n^2 * (m/n)^k of them.
Both counters walk the lexicographic subset tree with elements added in
ascending order, so a new element x can only complete APs whose maximum
is x; that makes the AP-count increment a short scan over differences.

All counts are exact Python integers (they outgrow 64 bits quickly) and
every exhaustive walk is guarded by the node budget in ``budget``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .budget import BudgetExceededError, check_upfront, node_budget
from .sets import GroundSet, ProblemParams


def _completions(mask, x, k):
    """Number of k-APs with maximum x and all other elements in mask."""
    c = 0
    for d in range(1, (x - 1) // (k - 1) + 1):
        ok = True
        for t in range(1, k):
            if not mask[x - t * d]:
                ok = False
                break
        if ok:
            c += 1
    return c


def count_apfree_msets(n, k, m, budget_nodes=None):
    """Exact number of AP-free m-subsets of [n].

    DFS in ascending element order, extending only by elements that
    complete no k-AP with the prefix. Refuses upfront when C(n, m)
    exceeds the node budget.
    """
    if k < 3:
        raise ValueError("k must be >= 3")
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    if m > n:
        return 0
    if m == 0:
        return 1
    budget = node_budget(budget_nodes)
    check_upfront(comb(n, m), budget, f"enumerating {m}-subsets of [{n}]")
    mask = bytearray(n + 1)
    state = [0, 0]  # found, nodes

    def rec(start, depth):
        if depth == m:
            state[0] += 1
            return
        # need m - depth more elements from {x, ..., n}
        for x in range(start, n - (m - depth) + 2):
            if _completions(mask, x, k):
                continue
            state[1] += 1
            if state[1] > budget:
                raise BudgetExceededError(
                    "AP-free enumeration exceeded the node budget",
                    cost=state[1], budget=budget)
            mask[x] = 1
            rec(x + 1, depth + 1)
            mask[x] = 0

    rec(1, 0)
    return state[0]


def count_all_apfree_sets(n, k, budget_nodes=None):
    """Total number of AP-free subsets of [n], the empty set included.

    Plain subset DFS with no size bookkeeping; kept independent of
    count_apfree_msets so the two can cross-check each other.
    """
    if k < 3:
        raise ValueError("k must be >= 3")
    budget = node_budget(budget_nodes)
    mask = bytearray(n + 1)
    state = [0]

    def rec(start):
        state[0] += 1
        if state[0] > budget:
            raise BudgetExceededError(
                "AP-free subset enumeration exceeded the node budget",
                cost=state[0], budget=budget)
        for x in range(start, n + 1):
            if _completions(mask, x, k):
                continue
            mask[x] = 1
            rec(x + 1)
            mask[x] = 0

    rec(1)
    return state[0]


def ap_threshold(n, m, k, gamma):
    """The deficiency threshold gamma * n^2 * (m/n)^k, exact."""
    return Fraction(gamma) * n * n * Fraction(m, n) ** k


@dataclass(frozen=True)
class EnumerationResult:
    """Outcome of an exhaustive sweep over the m-subsets of [n]."""

    params: ProblemParams
    total_msets: int
    apfree_count: int
    deficient_count: int
    threshold: Fraction
    exhaustive: bool

    def __post_init__(self):
        if not 0 <= self.apfree_count <= self.total_msets:
            raise ValueError("apfree_count out of range")
        if not 0 <= self.deficient_count <= self.total_msets:
            raise ValueError("deficient_count out of range")
        # A set with zero APs falls below any positive threshold; at
        # threshold 0 nothing is deficient, so the chain does not apply.
        if self.threshold > 0 and self.apfree_count > self.deficient_count:
            raise ValueError("AP-free sets must be deficient when threshold > 0")

    @property
    def deficient_fraction(self):
        if self.total_msets == 0:
            return Fraction(0)
        return Fraction(self.deficient_count, self.total_msets)

    @property
    def beta_bound(self):
        """The comparison bound beta^m * C(n, m)."""
        return self.params.beta ** self.params.m * self.total_msets


def count_deficient_msets(n, k, m, gamma, alpha=1, beta=Fraction(1, 2),
                          budget_nodes=None):
    """Count m-subsets of [n] whose internal k-AP count is below threshold.

    Sweeps every m-subset once, carrying the AP count incrementally, and
    reports the AP-free count from the same walk. The threshold is
    gamma * n^2 * (m/n)^k; comparison is exact (strict less-than).
    """
    if k < 3:
        raise ValueError("k must be >= 3")
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n")
    gamma = Fraction(gamma)
    if gamma < 0:
        raise ValueError("gamma must be nonnegative")
    params = ProblemParams(n=n, m=m, k=k, k_prime=k, alpha=alpha, beta=beta)
    total = comb(n, m)
    threshold = ap_threshold(n, m, k, gamma)
    budget = node_budget(budget_nodes)
    check_upfront(total, budget, f"sweeping {m}-subsets of [{n}]")
    mask = bytearray(n + 1)
    state = [0, 0, 0]  # deficient, apfree, nodes

    def rec(start, depth, aps):
        if depth == m:
            if aps < threshold:
                state[0] += 1
            if aps == 0:
                state[1] += 1
            return
        for x in range(start, n - (m - depth) + 2):
            c = _completions(mask, x, k)
            state[2] += 1
            if state[2] > budget:
                raise BudgetExceededError(
                    "deficiency sweep exceeded the node budget",
                    cost=state[2], budget=budget)
            mask[x] = 1
            rec(x + 1, depth + 1, aps + c)
            mask[x] = 0

    rec(1, 0, 0)
    return EnumerationResult(params, total, state[1], state[0], threshold, True)


def dense_ap_lower_bound_check(D, k, gamma, alpha=None):
    """Whether D holds at least gamma * n^2 k-term APs entirely inside it.

    The k' = 0 base case of the counting induction: a dense set must carry
    a positive fraction of n^2 APs. When alpha is given, |D| >= alpha * n
    is enforced as a precondition.
    """
    if not isinstance(D, GroundSet):
        raise TypeError("D must be a GroundSet")
    n = D.n
    if alpha is not None and D.size < Fraction(alpha) * n:
        raise ValueError(f"|D| = {D.size} below the required density "
                         f"{alpha} * {n}")
    from .core import count_aps

    inside = count_aps(D, D, k, k)
    return inside >= Fraction(gamma) * n * n


def greedy_apfree_set(S, k):
    """Greedy AP-free subset of S: scan ascending, keep what fits.

    A fast lower-bound witness for the extremal search; the result is
    always AP-free but rarely maximum.
    """
    if not isinstance(S, GroundSet):
        raise TypeError("S must be a GroundSet")
    n = S.n
    mask = bytearray(n + 1)
    chosen = []
    for x in S.members():
        x = int(x)
        if not _completions(mask, x, k):
            mask[x] = 1
            chosen.append(x)
    return GroundSet(n, chosen)


def ternary_apfree_set(n):
    """Elements of [n] of the form 1 + (base-3 number with digits 0, 1).

    Contains no 3-term AP: if x + z = 2y with all three in the digit set,
    no carries occur in base 3, forcing x = y = z digitwise. A convenient
    structured test input.
    """
    out = []
    x = 0
    while x + 1 <= n:
        out.append(x + 1)
        # next integer whose base-3 digits stay in {0, 1}: binary increment
        # carried out in base 3
        p = 1
        y = x
        while (y // p) % 3 == 1:
            y -= p
            p *= 3
        y += p
        x = y
    return GroundSet(n, out)
