"""Sampling correctness, exact expectations, and sweep reproducibility."""

import itertools
from fractions import Fraction

import pytest

import reference as ref
from aplab.core import ap_count_in_interval
from aplab.enumeration import count_deficient_msets
from aplab.randomlab import (
    SweepConfig,
    SweepPoint,
    estimate_deficient_fraction,
    expected_ap_count,
    sample_ap_count_stats,
    sample_binomial_set,
    sample_m_set,
    threshold_sweep,
    trial_rng,
    wilson_interval,
)
from math import comb


class TestSampling:
    def test_m_set_extremes(self):
        assert sample_m_set(7, 7, trial_rng(0, 0)).size == 7
        assert sample_m_set(7, 0, trial_rng(0, 0)).size == 0
        with pytest.raises(ValueError):
            sample_m_set(5, 6, trial_rng(0, 0))

    def test_m_set_size_and_determinism(self):
        a = sample_m_set(50, 12, trial_rng(9, 3))
        b = sample_m_set(50, 12, trial_rng(9, 3))
        c = sample_m_set(50, 12, trial_rng(9, 4))
        assert a.size == 12 and a == b
        assert a != c  # different stream index, different draw

    def test_m_set_inclusion_frequencies(self):
        # each element appears with frequency near m/n
        n, m, draws = 60, 12, 3000
        hits = [0] * (n + 1)
        for t in range(draws):
            for x in sample_m_set(n, m, trial_rng(31, t)).members():
                hits[x] += 1
        p = m / n
        tol = 4 * (p * (1 - p) / draws) ** 0.5
        for x in range(1, n + 1):
            assert abs(hits[x] / draws - p) <= tol

    def test_binomial_extremes(self):
        assert sample_binomial_set(9, 1.0, trial_rng(0, 0)).size == 9
        assert sample_binomial_set(9, 0.0, trial_rng(0, 0)).size == 0
        with pytest.raises(ValueError):
            sample_binomial_set(9, 1.5, trial_rng(0, 0))

    def test_binomial_mean_size(self):
        n, p, draws = 500, 0.08, 400
        total = sum(sample_binomial_set(n, p, trial_rng(13, t)).size
                    for t in range(draws))
        se = (n * p * (1 - p) / draws) ** 0.5
        assert abs(total / draws - n * p) <= 4 * se


class TestExpectedApCount:
    def test_below_k_is_zero(self):
        assert expected_ap_count(20, 3, 2) == 0

    def test_exact_endpoints(self):
        n, k = 15, 3
        assert expected_ap_count(n, k, n) == ap_count_in_interval(n, k)
        assert expected_ap_count(n, k, k) == \
            Fraction(ap_count_in_interval(n, k), comb(n, k))

    def test_exhaustive_average(self):
        # mean of the inside count over every 4-subset of [9]
        aps = [A for _, _, A in ref.all_aps(9, 3)]
        total = sum(sum(1 for A in aps if A <= set(c))
                    for c in itertools.combinations(range(1, 10), 4))
        assert expected_ap_count(9, 3, 4) == Fraction(total, comb(9, 4))


class TestWilson:
    def test_bounds_and_degenerate(self):
        assert wilson_interval(0, 0) == (0.0, 1.0)
        lo, hi = wilson_interval(0, 50)
        assert lo <= 1e-12 and 0 < hi < 0.2
        lo, hi = wilson_interval(50, 50)
        assert hi >= 1 - 1e-12 and 0.8 < lo < 1.0

    def test_contains_point_estimate(self):
        for s, t in [(1, 10), (5, 10), (9, 10), (250, 1000)]:
            lo, hi = wilson_interval(s, t)
            assert lo <= s / t <= hi

    def test_invalid(self):
        with pytest.raises(ValueError):
            wilson_interval(5, 3)


class TestConcentration:
    def test_sample_mean_tracks_expectation(self):
        st = sample_ap_count_stats(100, 3, 30, 400, seed=11)
        assert st.within_standard_errors(4)
        assert isinstance(st.mean, Fraction)
        assert st.expected == expected_ap_count(100, 3, 30)

    def test_single_trial_variance(self):
        st = sample_ap_count_stats(30, 3, 10, 1, seed=2)
        assert st.sample_variance == 0


class TestDeficiencyEstimate:
    def test_zero_gamma_fraction_zero(self):
        est = estimate_deficient_fraction(50, 3, 10, 0, 50, seed=1)
        assert est.fraction == 0

    def test_converges_to_exhaustive(self):
        # seeded run lands its Wilson interval on the exact value
        est = estimate_deficient_fraction(9, 3, 4, Fraction(1, 10), 2000,
                                          seed=5)
        ex = count_deficient_msets(9, 3, 4, Fraction(1, 10))
        exact = Fraction(ex.deficient_count, ex.total_msets)
        assert est.interval[0] <= exact <= est.interval[1]
        assert est.meets_beta_bound == (est.fraction <= Fraction(1, 2) ** 4)


class TestSweep:
    def test_config_validation(self):
        with pytest.raises(ValueError):
            SweepConfig(n=100, k=3, alpha=Fraction(3, 2), C_grid=[1],
                        trials=5, seed=0)
        with pytest.raises(ValueError):
            SweepConfig(n=100, k=3, alpha=Fraction(1, 2), C_grid=[0],
                        trials=5, seed=0)
        with pytest.raises(ValueError):
            # p = 2 at C = 20, n = 100, k = 3
            SweepConfig(n=100, k=3, alpha=Fraction(1, 2), C_grid=[20],
                        trials=5, seed=0)
        with pytest.raises(ValueError):
            SweepConfig(n=100, k=3, alpha=Fraction(1, 2), C_grid=[1],
                        trials=0, seed=0)

    def test_point_invariants(self):
        with pytest.raises(ValueError):
            SweepPoint(C=Fraction(1), p=0.1, trials=5, successes=4,
                       unresolved=3, wilson=(0.0, 1.0),
                       mean_set_size=Fraction(1))
        with pytest.raises(ValueError):
            SweepPoint(C=Fraction(1), p=0.1, trials=5, successes=2,
                       unresolved=0, wilson=(-0.1, 0.5),
                       mean_set_size=Fraction(1))

    def test_dense_p_always_succeeds(self):
        # p = 5/sqrt(30) = 0.91: nearly all of [30] survives, and no
        # 27-element subset of [30] keeps an AP-free half (max is 13)
        cfg = SweepConfig(n=30, k=3, alpha=Fraction(1, 2),
                          C_grid=[Fraction(5)], trials=4, seed=3)
        res = threshold_sweep(cfg)
        pt = res.points[0]
        assert 0.9 < pt.p <= 1.0
        assert pt.successes == pt.trials == 4
        assert pt.unresolved == 0

    def test_tiny_p_never_succeeds(self):
        cfg = SweepConfig(n=100, k=3, alpha=Fraction(1, 2),
                          C_grid=[Fraction(1, 100)], trials=20, seed=8)
        pt = threshold_sweep(cfg).points[0]
        assert pt.successes == 0

    def test_direction_and_thread_reproducibility(self):
        cfg = SweepConfig(n=120, k=3, alpha=Fraction(1, 2),
                          C_grid=[Fraction(1), Fraction(8)],
                          trials=30, seed=77)
        serial = threshold_sweep(cfg, threads=1)
        pooled = threshold_sweep(cfg, threads=4)
        assert serial == pooled
        lo_pt, hi_pt = serial.points
        assert hi_pt.successes > lo_pt.successes
        # non-overlapping intervals at this comfortable separation
        assert hi_pt.wilson[0] > lo_pt.wilson[1]
        assert serial.total_unresolved == 0
        assert serial.unresolved_fraction == 0
