"""Executable instrumentation of the saturation and deletion machinery.

The pieces here make the abstract steps of the density-increment argument
runnable at desk scale: derived rational constants, saturated elements,
the advancing property with its adversarial deletion X, bad-sequence
classification, the sequential Z-building procedure, deletion families,
greedy second-moment descent, and the Paley-Zygmund check.

Every predicate compares exact rationals; nothing here goes through
floating point, so verdicts are reproducible bit for bit. The one
transcendental constant (e, inside lambda = beta^6/(100e)^3) is pinned
to the fixed rational 2718281828459045 / 10^15.

Two variants of the expected through-count mu_e coexist: the deletion
lemma normalizes by n(m/n)^k', while the saturation argument uses
k*n*(m'/3n)^(k'-1). ProofParams carries both under distinct names and
each consumer below states which one it reads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np

from .budget import BudgetExceededError, check_upfront, node_budget
from .core import count_aps, count_aps_through, degree_profile
from .sets import GroundSet, ProblemParams

E_RATIONAL = Fraction(2718281828459045, 10 ** 15)


@dataclass(frozen=True)
class ProofParams:
    """Derived rational constants of the increment argument.

    Everything recomputes exactly from (gamma', xi', beta, T, k, k', n, m);
    m is rounded down to a multiple of 2z when needed, with the original
    kept in m_requested.
    """

    n: int
    k: int
    k_prime: int
    m_requested: int
    m_used: int
    m_prime: int
    z: int
    T: Fraction
    gamma_prime: Fraction
    xi_prime: Fraction
    beta: Fraction
    lam: Fraction
    mu: Fraction
    mu_e_lemma: Fraction
    mu_e_proof: Fraction
    gamma: Fraction
    xi: Fraction

    def __post_init__(self):
        if self.z < 1:
            raise ValueError("z must be >= 1")
        if self.m_prime < 1:
            raise ValueError("m' must be >= 1")
        if self.m_used != 2 * self.z * self.m_prime:
            raise ValueError("m_used must equal 2z * m'")
        for name in ("T", "gamma_prime", "xi_prime", "beta", "lam", "mu",
                     "mu_e_lemma", "mu_e_proof", "gamma", "xi"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    @property
    def adjusted(self):
        """Whether m was rounded down to fit the 2z block structure."""
        return self.m_used != self.m_requested

    @property
    def saturation_threshold(self):
        """Default saturation cutoff gamma' * mu_e / 2, proof-body mu_e."""
        return self.gamma_prime * self.mu_e_proof / 2

    @property
    def deletion_cap(self):
        """Largest admissible per-block deletion size, floor(xi' m'/6)."""
        return int(self.xi_prime * self.m_prime / 6)


def derive_proof_params(params, gamma_prime, xi_prime, T):
    """Evaluate the derived constants of the argument, exactly.

    z = ceil(gamma'/(4T)); gamma = gamma'*k / (2*(6z)^k');
    xi = xi'/(12z); lambda = beta^6/(100e)^3; mu = n^2 (m/n)^k';
    mu_e in both variants. m is rounded down to a multiple of 2z.
    """
    if not isinstance(params, ProblemParams):
        raise TypeError("params must be a ProblemParams")
    gamma_prime = Fraction(gamma_prime)
    xi_prime = Fraction(xi_prime)
    T = Fraction(T)
    if gamma_prime <= 0 or xi_prime <= 0 or T <= 0:
        raise ValueError("gamma', xi' and T must be positive")
    n, m, k, kp = params.n, params.m, params.k, params.k_prime
    z = math.ceil(gamma_prime / (4 * T))
    m_prime = m // (2 * z)
    if m_prime < 1:
        raise ValueError(f"m = {m} is below one element per 2z = {2 * z} blocks")
    m_used = 2 * z * m_prime
    beta = params.beta
    lam = beta ** 6 / (100 * E_RATIONAL) ** 3
    mu = n * n * Fraction(m, n) ** kp
    mu_e_lemma = n * Fraction(m, n) ** kp
    mu_e_proof = k * n * Fraction(m_prime, 3 * n) ** (kp - 1)
    gamma = gamma_prime * k / (2 * (6 * z) ** kp)
    xi = xi_prime / (12 * z)
    return ProofParams(
        n=n, k=k, k_prime=kp, m_requested=m, m_used=m_used,
        m_prime=m_prime, z=z, T=T, gamma_prime=gamma_prime,
        xi_prime=xi_prime, beta=beta, lam=lam, mu=mu,
        mu_e_lemma=mu_e_lemma, mu_e_proof=mu_e_proof, gamma=gamma, xi=xi)


def saturated_set(S_hat, D, k, k_prime, threshold):
    """Elements x of D whose (k'-1)-of-k through-count meets the threshold.

    The set written T(S) in the argument: x counts as saturated when at
    least ``threshold`` k-APs through x meet S_hat \\ {x} in >= k'-1
    elements. threshold is typically gamma' * mu_e / 2.
    """
    if k_prime < 1:
        raise ValueError("saturation needs k' >= 1")
    threshold = Fraction(threshold)
    if S_hat.size == 0 and threshold > 0:
        return GroundSet.empty(D.n)
    prof = degree_profile(S_hat, D, k_prime - 1, k)
    out = [int(x) for x in D.members() if prof.counts[x] >= threshold]
    return GroundSet(D.n, out)


@dataclass(frozen=True)
class AdvancingVerdict:
    """Outcome of the advancing-property check for one block.

    advancing=True in exact mode means every admissible deletion X keeps
    clause A (AP count >= gamma*mu) or clause B (saturated set grows by
    more than n/z). In greedy mode only a candidate family of X's was
    tried, so a PASS is heuristic; mode records which happened.
    """

    advancing: bool
    mode: str
    witness: GroundSet | None
    tested: int
    downgraded: bool = False

    @property
    def heuristic(self):
        return self.mode == "greedy" and self.advancing


def _clauses_hold(base, S, X, D, pp, sat_before):
    """Clause A or clause B for one specific deletion X."""
    trial = base.union(S.difference(X))
    if count_aps(trial, D, pp.k_prime, pp.k) >= pp.gamma * pp.mu:
        return True
    sat_after = saturated_set(trial, D, pp.k, pp.k_prime,
                              pp.saturation_threshold)
    return sat_after.size > sat_before + Fraction(pp.n, pp.z)


def _greedy_deletions(S, base, D, pp, cap):
    """Candidate X family: top through-degree prefixes plus seeded draws."""
    n = D.n
    degs = []
    full = base.union(S)
    for x in S.members():
        x = int(x)
        degs.append((-count_aps_through(x, full, D, pp.k_prime - 1, pp.k), x))
    degs.sort()
    ordered = [x for _, x in degs]
    top = min(cap, len(ordered))
    cands = [GroundSet.empty(n)]
    for j in range(1, top + 1):
        cands.append(GroundSet(n, ordered[:j]))
    # a few fixed pseudorandom deletions of each admissible size
    rng = np.random.default_rng(97531)
    mem = S.members()
    for j in range(1, top + 1):
        for _ in range(3):
            pick = rng.choice(mem.size, size=j, replace=False)
            cands.append(GroundSet(n, [int(mem[i]) for i in pick]))
    return cands


def check_advancing(S, S_hat, D, pp, mode="exact", budget_nodes=None):
    """Is S advancing with respect to S_hat inside D?

    Exact mode quantifies over every X subseteq S with |X| <= xi'm'/6 and
    returns a FAIL witness X when one violates both clauses. If that
    enumeration exceeds the node budget the check downgrades to greedy
    (flagged). Greedy mode tries the documented adversary family only.
    """
    if S.size != pp.m_prime:
        raise ValueError(f"block size {S.size} != m' = {pp.m_prime}")
    cap = pp.deletion_cap
    budget = node_budget(budget_nodes)
    downgraded = False
    if mode == "exact":
        cost = sum(comb(S.size, j) for j in range(cap + 1))
        if cost > budget:
            mode = "greedy"
            downgraded = True
    if mode not in ("exact", "greedy"):
        raise ValueError("mode must be 'exact' or 'greedy'")
    sat_before = saturated_set(S_hat, D, pp.k, pp.k_prime,
                               pp.saturation_threshold).size
    tested = 0
    if mode == "exact":
        members = [int(x) for x in S.members()]
        for j in range(cap + 1):
            for Xs in combinations(members, j):
                X = GroundSet(D.n, Xs)
                tested += 1
                if not _clauses_hold(S_hat, S, X, D, pp, sat_before):
                    return AdvancingVerdict(False, "exact", X, tested)
        return AdvancingVerdict(True, "exact", None, tested)
    for X in _greedy_deletions(S, S_hat, D, pp, cap):
        tested += 1
        if not _clauses_hold(S_hat, S, X, D, pp, sat_before):
            return AdvancingVerdict(False, "greedy", X, tested, downgraded)
    return AdvancingVerdict(True, "greedy", None, tested, downgraded)


@dataclass(frozen=True)
class PartitionSequence:
    """Blocks S_1..S_2z with a kept-index set Z and per-block deletions."""

    blocks: tuple
    Z: frozenset
    deletions: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        object.__setattr__(self, "Z", frozenset(self.Z))
        object.__setattr__(self, "deletions", dict(self.deletions))

    def validate(self, pp, D=None):
        """Enforce the structural invariants against derived parameters."""
        if len(self.blocks) != 2 * pp.z:
            raise ValueError(f"need exactly 2z = {2 * pp.z} blocks")
        seen = set()
        for i, S in enumerate(self.blocks, start=1):
            if S.size != pp.m_prime:
                raise ValueError(f"block {i} has size {S.size} != m'")
            mem = set(int(x) for x in S.members())
            if seen & mem:
                raise ValueError(f"block {i} overlaps an earlier block")
            seen |= mem
            if D is not None and not mem <= set(int(x) for x in D.members()):
                raise ValueError(f"block {i} is not contained in D")
        if not self.Z <= set(range(1, len(self.blocks) + 1)):
            raise ValueError("Z must index blocks 1..2z")
        cap = pp.deletion_cap
        for i, X in self.deletions.items():
            if i not in self.Z:
                raise ValueError(f"deletion given for i = {i} outside Z")
            S = self.blocks[i - 1]
            if not set(X.members().tolist()) <= set(S.members().tolist()):
                raise ValueError(f"X_{i} is not a subset of S_{i}")
            if X.size > cap:
                raise ValueError(f"|X_{i}| = {X.size} above xi'm'/6 = {cap}")

    def deletion(self, i, n):
        return self.deletions.get(i, GroundSet.empty(n))

    def hat(self, i, n):
        """Accumulated prefix: union of S_j \\ X_j over j in Z, j <= i."""
        out = GroundSet.empty(n)
        for j in sorted(self.Z):
            if j > i:
                break
            out = out.union(self.blocks[j - 1].difference(self.deletion(j, n)))
        return out


@dataclass(frozen=True)
class BadSequenceReport:
    """Per-block advancing verdicts and the resulting bad/not-bad call."""

    is_bad: bool
    verdicts: tuple          # (block index, verdict) for i outside Z
    mode: str
    downgraded: bool


def classify_bad_sequence(seq, D, pp, mode="exact", budget_nodes=None):
    """Is seq (Z, X)-bad: does every block outside Z fail to advance?

    Blocks inside Z are skipped (vacuous when Z covers everything). The
    first advancing block outside Z settles the question, but all
    verdicts gathered on the way are reported.
    """
    seq.validate(pp, D)
    n = D.n
    verdicts = []
    is_bad = True
    downgraded = False
    for i in range(1, len(seq.blocks) + 1):
        if i in seq.Z:
            continue
        v = check_advancing(seq.blocks[i - 1], seq.hat(i - 1, n), D, pp,
                            mode=mode, budget_nodes=budget_nodes)
        verdicts.append((i, v))
        downgraded = downgraded or v.downgraded
        if v.advancing:
            is_bad = False
            break
    return BadSequenceReport(is_bad, tuple(verdicts), mode, downgraded)


def find_bad_certificate(blocks, D, pp, budget_nodes=None):
    """Search all (Z, X) with |Z| <= z making the sequence bad; tiny scale.

    Exhausts Z subsets and admissible per-block deletions, so the cost
    explodes quickly; the upfront budget check refuses anything beyond
    toy sizes. Returns a valid PartitionSequence or None.
    """
    budget = node_budget(budget_nodes)
    nb = len(blocks)
    cap = pp.deletion_cap
    per_block = sum(comb(pp.m_prime, j) for j in range(cap + 1))
    total = sum(comb(nb, r) * per_block ** r for r in range(pp.z + 1))
    check_upfront(total, budget, "bad-certificate search")
    n = D.n
    indices = list(range(1, nb + 1))
    for r in range(pp.z + 1):
        for Z in combinations(indices, r):
            pools = []
            for i in Z:
                mem = [int(x) for x in blocks[i - 1].members()]
                pool = []
                for j in range(cap + 1):
                    pool.extend(combinations(mem, j))
                pools.append(pool)

            def assignments(level, chosen):
                if level == len(Z):
                    yield dict(chosen)
                    return
                for Xs in pools[level]:
                    yield from assignments(
                        level + 1,
                        chosen + [(Z[level], GroundSet(n, Xs))])

            for dele in assignments(0, []):
                seq = PartitionSequence(blocks, frozenset(Z), dele)
                rep = classify_bad_sequence(seq, D, pp, mode="exact",
                                            budget_nodes=budget_nodes)
                if rep.is_bad:
                    return seq
    return None


@dataclass(frozen=True)
class ZStep:
    """One step of the sequential Z construction."""

    i: int
    advancing: bool
    clause_a: bool
    clause_b: bool
    sat_size: int
    ap_count: int


@dataclass(frozen=True)
class ZBuildResult:
    """Replay of the proof's sequential procedure.

    outcome is "Z-small" when at most z blocks advanced, "clause-A" when
    the accumulated set reached the gamma*mu AP count, and
    "saturation-overflow" when only the T-growth clause can explain more
    than z advances (the |T| > n >= |D| contradiction of the argument).
    """

    Z: tuple
    deletions: dict
    outcome: str
    trace: tuple
    final_hat: GroundSet


def sequential_Z_builder(blocks, D, pp, X_target, mode="exact",
                         budget_nodes=None):
    """Run the proof's procedure: advance through blocks, collecting Z.

    For each block in order, if it is advancing with respect to the
    accumulated prefix, its index joins Z and X_i = X_target cap S_i is
    deleted from it. Stops once |Z| exceeds z, reporting which clause
    the trace exhibits at that point.
    """
    if X_target.size > pp.xi * pp.m_used:
        raise ValueError(f"|X| = {X_target.size} above xi*m = "
                         f"{pp.xi * pp.m_used}")
    n = D.n
    hat = GroundSet.empty(n)
    Z = []
    deletions = {}
    trace = []
    outcome = "Z-small"
    for i, S in enumerate(blocks, start=1):
        v = check_advancing(S, hat, D, pp, mode=mode,
                            budget_nodes=budget_nodes)
        if not v.advancing:
            trace.append(ZStep(i, False, False, False,
                               saturated_set(hat, D, pp.k, pp.k_prime,
                                             pp.saturation_threshold).size,
                               count_aps(hat, D, pp.k_prime, pp.k)))
            continue
        X_i = X_target.intersection(S)
        Z.append(i)
        deletions[i] = X_i
        prev_sat = saturated_set(hat, D, pp.k, pp.k_prime,
                                 pp.saturation_threshold).size
        hat = hat.union(S.difference(X_i))
        aps = count_aps(hat, D, pp.k_prime, pp.k)
        sat = saturated_set(hat, D, pp.k, pp.k_prime,
                            pp.saturation_threshold).size
        clause_a = aps >= pp.gamma * pp.mu
        clause_b = sat > prev_sat + Fraction(n, pp.z)
        trace.append(ZStep(i, True, clause_a, clause_b, sat, aps))
        if len(Z) > pp.z:
            outcome = "clause-A" if clause_a else "saturation-overflow"
            break
    return ZBuildResult(tuple(Z), deletions, outcome, tuple(trace), hat)


@dataclass(frozen=True)
class DeletionFamilies:
    """The k'-set families behind the deletion-method counting.

    B holds every k'-subset of [n] lying inside some k-AP; B_related
    pairs {B, B'} related through APs sharing an element outside both;
    B_prime stratifies the unions by size; K bounds the APs through any
    single member of B.
    """

    n: int
    k: int
    k_prime: int
    B: frozenset
    B_related: frozenset
    B_prime: dict
    K: int

    @property
    def B_union_sizes(self):
        return {s: len(v) for s, v in sorted(self.B_prime.items())}


def build_deletion_families(n, k, k_prime, budget_nodes=None):
    """Materialize B, the relation, the stratified unions, and K.

    Pairs are generated through their shared AP element: for each x and
    pair of APs through x, every k'-set of one AP avoiding x relates to
    every k'-set of the other. Cost grows like n * (APs through x)^2,
    guarded upfront.
    """
    if k < 3 or not 1 <= k_prime < k:
        raise ValueError("need k >= 3 and 1 <= k' < k")
    budget = node_budget(budget_nodes)
    aps = []
    d = 1
    while 1 + (k - 1) * d <= n:
        for a in range(1, n - (k - 1) * d + 1):
            aps.append(tuple(a + t * d for t in range(k)))
        d += 1
    through = [[] for _ in range(n + 1)]
    for ai, A in enumerate(aps):
        for x in A:
            through[x].append(ai)
    nsub = comb(k - 1, k_prime)
    cost = sum(len(through[x]) ** 2 for x in range(n + 1)) * nsub * nsub
    check_upfront(cost, budget, f"deletion families at n = {n}")

    B = set()
    K_count = {}
    for A in aps:
        for Bs in combinations(A, k_prime):
            B.add(Bs)
            K_count[Bs] = K_count.get(Bs, 0) + 1
    related = set()
    unions = {}
    for x in range(1, n + 1):
        lst = through[x]
        subs = []
        for ai in lst:
            A = aps[ai]
            rest = tuple(y for y in A if y != x)
            subs.append([Bs for Bs in combinations(rest, k_prime)])
        for i in range(len(lst)):
            for j in range(len(lst)):
                for B1 in subs[i]:
                    for B2 in subs[j]:
                        # x lies in both APs and outside both k'-sets by
                        # construction, so the pair is related; B1 == B2
                        # is allowed and yields the size-k' stratum
                        pair = frozenset((B1, B2))
                        if pair in related:
                            continue
                        related.add(pair)
                        u = frozenset(B1) | frozenset(B2)
                        unions.setdefault(len(u), set()).add(u)
    return DeletionFamilies(
        n=n, k=k, k_prime=k_prime,
        B=frozenset(B),
        B_related=frozenset(related),
        B_prime={s: frozenset(v) for s, v in unions.items()},
        K=max(K_count.values()) if K_count else 0)


def is_ap_structured(elements, k):
    """Whether the elements sit inside one progression of at most 2k terms."""
    xs = sorted(elements)
    if len(xs) <= 2:
        return True
    g = 0
    for a, b in zip(xs, xs[1:]):
        g = math.gcd(g, b - a)
    return (xs[-1] - xs[0]) // g + 1 <= 2 * k


def second_moment_with_deletion(S, n, k, k_prime, q, T_target=None):
    """Greedy deletion lowering the normalized second through-moment.

    Deletes exactly min(q, |S|) elements; each step removes the element
    whose removal most reduces sum_x AP_{k',k}(x, S \\ X, [n])^2, ties to
    the smallest element. Returns (X, achieved) with achieved the exact
    rational (1/n) * sum of squares after deletion. T_target is only a
    convenience for callers comparing against T * mu_e^2 (lemma mu_e);
    it does not change the computation.
    """
    if q < 0:
        raise ValueError("q must be >= 0")
    D = GroundSet.full(n)
    current = S

    def total_sq(T):
        prof = degree_profile(T, D, k_prime, k)
        return sum(int(c) * int(c) for c in prof.counts[1:])

    removed = []
    cur_sq = total_sq(current)
    for _ in range(min(q, S.size)):
        best_y = None
        best_sq = None
        for y in current.members():
            y = int(y)
            cand = current.difference(GroundSet(n, [y]))
            sq = total_sq(cand)
            if best_sq is None or sq < best_sq:
                best_sq = sq
                best_y = y
        removed.append(best_y)
        current = current.difference(GroundSet(n, [best_y]))
        cur_sq = best_sq
    return GroundSet(n, removed), Fraction(cur_sq, n)


@dataclass(frozen=True)
class PZReport:
    """Exact Paley-Zygmund evaluation over a degree profile."""

    probability: Fraction
    bound: Fraction
    first_moment: Fraction
    second_moment: Fraction
    holds: bool
    degenerate: bool

    @property
    def ratio(self):
        """probability / bound; 4 exactly for constant profiles."""
        if self.bound == 0:
            return None
        return self.probability / self.bound


def paley_zygmund_check(profile):
    """Pr(Y >= E[Y]/2) >= E[Y]^2 / (4 E[Y^2]) over uniform x in [n].

    A theorem, so ``holds`` must come back True on every profile with a
    positive first moment; a zero first moment gives a degenerate report
    instead of an error.
    """
    ey = profile.first_moment
    ey2 = profile.second_moment
    if ey == 0:
        return PZReport(Fraction(0), Fraction(0), ey, ey2, True, True)
    half = ey / 2
    hits = sum(1 for c in profile.counts[1:] if c >= half)
    prob = Fraction(hits, profile.n)
    bound = ey * ey / (4 * ey2)
    return PZReport(prob, bound, ey, ey2, prob >= bound, False)
