"""Seeded Monte Carlo experiments on random subsets of [n].

Every experiment derives one generator per trial from (master seed,
grid index, trial index), so results are bit-identical however trials
are scheduled: serially, in a thread pool, or resumed out of order.
Aggregates that feed assertions (means, variances, thresholds) are kept
as exact rationals; only confidence-interval endpoints are floats.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .core import ap_count_in_interval, count_aps
from .enumeration import ap_threshold
from .extremal import apfree_decision
from .sets import GroundSet

# nodes allowed per extremal decision inside a sweep trial; the hardest
# near-threshold instances at n = 300 need about 8M
DEFAULT_TRIAL_BUDGET = 30_000_000

_Z95 = 1.959963984540054


def trial_rng(seed, *path):
    """Generator for one trial: seeded by (master seed, *integer path)."""
    return np.random.default_rng((int(seed),) + tuple(int(p) for p in path))


def sample_m_set(n, m, stream):
    """Uniform m-element subset of [n] drawn from the given stream."""
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n")
    if m == 0:
        return GroundSet.empty(n)
    if m == n:
        return GroundSet.full(n)
    members = stream.choice(n, size=m, replace=False) + 1
    return GroundSet(n, members)


def sample_binomial_set(n, p, stream):
    """Subset of [n] keeping each element independently with probability p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    if p == 1.0:
        return GroundSet.full(n)
    keep = np.flatnonzero(stream.random(n) < p) + 1
    return GroundSet(n, keep)


def expected_ap_count(n, k, m):
    """Exact E[count_aps(S, [n], k, k)] under the uniform m-subset model.

    Each of the ap_count_in_interval(n, k) progressions survives with
    probability C(n-k, m-k) / C(n, m).
    """
    if m < k:
        return Fraction(0)
    return ap_count_in_interval(n, k) * Fraction(comb(n - k, m - k),
                                                 comb(n, m))


def wilson_interval(successes, trials, z=_Z95):
    """Wilson score interval for a binomial proportion; stable near 0, 1."""
    if trials < 0 or not 0 <= successes <= trials:
        raise ValueError("need 0 <= successes <= trials")
    if trials == 0:
        return (0.0, 1.0)
    phat = successes / trials
    z2 = z * z
    denom = 1.0 + z2 / trials
    center = (phat + z2 / (2 * trials)) / denom
    half = z * math.sqrt(phat * (1 - phat) / trials
                         + z2 / (4 * trials * trials)) / denom
    return (max(0.0, center - half), min(1.0, center + half))


@dataclass(frozen=True)
class ApSampleStats:
    """Sample statistics of count_aps over uniform m-subsets."""

    n: int
    k: int
    m: int
    trials: int
    mean: Fraction
    sample_variance: Fraction
    expected: Fraction

    def within_standard_errors(self, mult):
        """|mean - expected| <= mult * sqrt(variance / trials), exactly.

        Squaring both sides keeps the comparison in rationals, so the
        verdict carries no floating-point error.
        """
        diff = self.mean - self.expected
        return diff * diff * self.trials <= Fraction(mult) ** 2 \
            * self.sample_variance


def sample_ap_count_stats(n, k, m, trials, seed):
    """Sample mean and variance of the inside-AP count, with the exact
    expectation alongside for concentration checks."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    D = GroundSet.full(n)
    total = 0
    total_sq = 0
    for t in range(trials):
        S = sample_m_set(n, m, trial_rng(seed, t))
        c = count_aps(S, D, k, k)
        total += c
        total_sq += c * c
    mean = Fraction(total, trials)
    if trials == 1:
        var = Fraction(0)
    else:
        var = (Fraction(total_sq) - Fraction(total * total, trials)) \
            / (trials - 1)
    return ApSampleStats(n, k, m, trials, mean, var,
                         expected_ap_count(n, k, m))


@dataclass(frozen=True)
class DeficiencyEstimate:
    """Monte Carlo estimate of the deficient-subset fraction."""

    n: int
    k: int
    m: int
    gamma: Fraction
    beta: Fraction
    trials: int
    deficient: int
    fraction: Fraction
    interval: tuple
    meets_beta_bound: bool


def estimate_deficient_fraction(n, k, m, gamma, trials, seed,
                                beta=Fraction(1, 2)):
    """Fraction of sampled m-subsets with internal AP count below the
    gamma threshold, with a Wilson interval and the beta^m comparison."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    gamma = Fraction(gamma)
    beta = Fraction(beta)
    threshold = ap_threshold(n, m, k, gamma)
    D = GroundSet.full(n)
    deficient = 0
    for t in range(trials):
        S = sample_m_set(n, m, trial_rng(seed, t))
        if count_aps(S, D, k, k) < threshold:
            deficient += 1
    fraction = Fraction(deficient, trials)
    return DeficiencyEstimate(
        n, k, m, gamma, beta, trials, deficient, fraction,
        wilson_interval(deficient, trials),
        fraction <= beta ** m)


@dataclass(frozen=True)
class SweepConfig:
    """Grid description for a random Szemerédi threshold sweep."""

    n: int
    k: int
    alpha: Fraction
    C_grid: tuple
    trials: int
    seed: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "C_grid",
                           tuple(Fraction(C) for C in self.C_grid))
        if self.n < 1 or self.k < 3:
            raise ValueError("need n >= 1 and k >= 3")
        if not 0 < self.alpha <= 1:
            raise ValueError("alpha must lie in (0, 1]")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        for C in self.C_grid:
            if C <= 0:
                raise ValueError("grid constants must be positive")
            if not 0.0 < self.p_of(C) <= 1.0:
                raise ValueError(f"C = {C} gives p outside (0, 1]")

    def p_of(self, C):
        """Sampling density p = C * n^(-1/(k-1))."""
        return float(C) * float(self.n) ** (-1.0 / (self.k - 1))


@dataclass(frozen=True)
class SweepPoint:
    """Aggregated outcome of all trials at one grid constant."""

    C: Fraction
    p: float
    trials: int
    successes: int
    unresolved: int
    wilson: tuple
    mean_set_size: Fraction

    def __post_init__(self):
        if not 0 <= self.successes + self.unresolved <= self.trials:
            raise ValueError("success/unresolved counts exceed trials")
        lo, hi = self.wilson
        if not (0.0 <= lo <= hi <= 1.0):
            raise ValueError("confidence interval outside [0, 1]")

    @property
    def resolved(self):
        return self.trials - self.unresolved


@dataclass(frozen=True)
class SweepResult:
    """One SweepPoint per grid constant, in grid order."""

    config: SweepConfig
    points: tuple
    total_nodes: int

    @property
    def total_unresolved(self):
        return sum(pt.unresolved for pt in self.points)

    @property
    def unresolved_fraction(self):
        total = self.config.trials * len(self.points)
        if total == 0:
            return Fraction(0)
        return Fraction(self.total_unresolved, total)


def _sweep_trial(config, ci, ti, budget):
    """One trial: sample S, decide whether every alpha-dense subset of S
    holds a k-AP. Returns (success, unresolved, |S|, nodes)."""
    p = config.p_of(config.C_grid[ci])
    stream = trial_rng(config.seed, ci, ti)
    S = sample_binomial_set(config.n, p, stream)
    if S.size == 0:
        # vacuously every subset is AP-free, so the property fails
        return 0, 0, 0, 0
    target = math.ceil(config.alpha * S.size)
    d = apfree_decision(S, config.k, target, budget_nodes=budget,
                        want_witness=False)
    if d.sat is None:
        return 0, 1, S.size, d.nodes
    # success: no alpha-fraction subset is AP-free
    return (1 if d.sat is False else 0), 0, S.size, d.nodes


def threshold_sweep(config, budget_nodes=DEFAULT_TRIAL_BUDGET, threads=None):
    """Run the sweep over the C grid; reproducible for any thread count.

    Each trial is an independent (seed, grid index, trial index) draw;
    budget overruns land in the unresolved bucket of their grid point
    rather than biasing the success estimate.
    """
    if threads is None:
        threads = os.cpu_count() or 1
    points = []
    grand_nodes = 0
    for ci in range(len(config.C_grid)):
        jobs = range(config.trials)
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                rows = list(pool.map(
                    lambda ti: _sweep_trial(config, ci, ti, budget_nodes),
                    jobs))
        else:
            rows = [_sweep_trial(config, ci, ti, budget_nodes)
                    for ti in jobs]
        successes = sum(r[0] for r in rows)
        unresolved = sum(r[1] for r in rows)
        sizes = sum(r[2] for r in rows)
        nodes = sum(r[3] for r in rows)
        grand_nodes += nodes
        resolved = config.trials - unresolved
        points.append(SweepPoint(
            C=config.C_grid[ci],
            p=config.p_of(config.C_grid[ci]),
            trials=config.trials,
            successes=successes,
            unresolved=unresolved,
            wilson=wilson_interval(successes, resolved),
            mean_set_size=Fraction(sizes, config.trials)))
    return SweepResult(config, tuple(points), grand_nodes)
