"""Proof machinery against direct set-arithmetic oracles.

The advancing / bad-sequence / Z-builder trio is checked on toy instances
small enough for the naive oracles in reference.py, with all derived
constants passed through explicitly so the quantifier logic is the only
thing under test.
"""

from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np
import pytest

import reference as ref
from aplab.budget import BudgetExceededError
from aplab.core import DegreeProfile, count_aps, count_aps_through, degree_profile
from aplab.prooflab import (
    E_RATIONAL,
    PartitionSequence,
    build_deletion_families,
    check_advancing,
    classify_bad_sequence,
    derive_proof_params,
    find_bad_certificate,
    is_ap_structured,
    paley_zygmund_check,
    saturated_set,
    second_moment_with_deletion,
    sequential_Z_builder,
)
from aplab.sets import GroundSet, ProblemParams


def base_params(n, m, k=3, k_prime=2):
    return ProblemParams(n=n, m=m, k=k, k_prime=k_prime, alpha=1,
                         beta=Fraction(1, 2))


def toy_pp(n, m_prime, gamma_prime=Fraction(1), xi_prime=Fraction(6), T=1):
    """z = 1 parameters for the oracle-equivalence toys."""
    pp = derive_proof_params(base_params(n, 2 * m_prime), gamma_prime,
                             xi_prime, T)
    assert pp.z == 1
    return pp


def oracle_args(pp):
    """The derived constants the naive oracles take explicitly."""
    return (pp.gamma * pp.mu, pp.saturation_threshold,
            Fraction(pp.n, pp.z), pp.n, pp.deletion_cap)


def members(g):
    return sorted(int(x) for x in g.members())


class TestDeriveParams:
    def test_worked_example(self):
        # gamma' = 8, T = 1 forces z = 2, then gamma = 8k / (2 (6z)^k')
        pp = derive_proof_params(base_params(20, 8), 8, Fraction(3), 1)
        assert pp.z == 2
        assert pp.gamma == Fraction(1, 12)
        assert pp.xi == Fraction(3, 24)
        assert pp.m_prime == 2 and pp.m_used == 8 and not pp.adjusted

    def test_z_one_when_gamma_prime_small(self):
        pp = derive_proof_params(base_params(20, 8), 1, Fraction(1), 1)
        assert pp.z == 1
        assert pp.gamma == Fraction(1 * 3, 2 * 36)

    def test_m_rounds_down_to_multiple_of_2z(self):
        pp = derive_proof_params(base_params(20, 9), 8, Fraction(3), 1)
        assert pp.z == 2
        assert pp.m_requested == 9 and pp.m_used == 8 and pp.adjusted
        assert pp.m_used == 2 * pp.z * pp.m_prime

    def test_lambda_uses_pinned_e(self):
        pp = derive_proof_params(base_params(20, 8), 1, Fraction(1), 1)
        assert pp.lam == Fraction(1, 2) ** 6 / (100 * E_RATIONAL) ** 3

    def test_mu_variants(self):
        pp = derive_proof_params(base_params(20, 8), 1, Fraction(1), 1)
        n, m, mp, k, kp = 20, 8, pp.m_prime, 3, 2
        assert pp.mu == n * n * Fraction(m, n) ** kp
        assert pp.mu_e_lemma == n * Fraction(m, n) ** kp
        assert pp.mu_e_proof == k * n * Fraction(mp, 3 * n) ** (kp - 1)

    def test_thresholds(self):
        pp = derive_proof_params(base_params(20, 8), 8, Fraction(3), 1)
        assert pp.saturation_threshold == 8 * pp.mu_e_proof / 2
        assert pp.deletion_cap == int(Fraction(3) * pp.m_prime / 6)

    def test_rejects_bad_inputs(self):
        with pytest.raises(TypeError):
            derive_proof_params("params", 1, 1, 1)
        with pytest.raises(ValueError):
            derive_proof_params(base_params(20, 8), 0, 1, 1)
        with pytest.raises(ValueError):
            derive_proof_params(base_params(20, 8), 1, -2, 1)
        with pytest.raises(ValueError):
            derive_proof_params(base_params(20, 8), 1, 1, 0)
        with pytest.raises(ValueError):
            # m too small to split into 2z nonempty blocks
            derive_proof_params(base_params(20, 2), 8, 1, 1)


class TestSaturatedSet:
    def test_zero_threshold_is_everything(self):
        D = GroundSet.full(9)
        assert saturated_set(GroundSet.empty(9), D, 3, 2, 0) == D

    def test_empty_hat_positive_threshold(self):
        D = GroundSet.full(9)
        assert saturated_set(GroundSet.empty(9), D, 3, 2, 1).size == 0

    def test_worked_example(self):
        # through-counts of {1, 3} in [5] at k = 3, k' = 2: the k'-1 = 1
        # quantifier asks for APs through x meeting {1, 3} \ {x}
        D = GroundSet.full(5)
        got = members(saturated_set(GroundSet(5, [1, 3]), D, 3, 2, 1))
        want = ref.naive_saturated([1, 3], [1, 2, 3, 4, 5], 3, 2, 1, 5)
        assert got == want

    def test_matches_naive(self, rng):
        for _ in range(12):
            n = int(rng.integers(6, 20))
            D = GroundSet.full(n)
            mem = [int(v) for v in np.flatnonzero(rng.random(n) < 0.4) + 1]
            for thr in (0, 1, 2, Fraction(3, 2)):
                got = members(saturated_set(GroundSet(n, mem), D, 3, 2, thr))
                assert got == ref.naive_saturated(mem, list(range(1, n + 1)),
                                                  3, 2, thr, n)

    def test_monotone_in_hat(self, rng):
        n = 17
        D = GroundSet.full(n)
        mem = [int(v) for v in rng.permutation(np.arange(1, n + 1))[:8]]
        small = saturated_set(GroundSet(n, mem[:4]), D, 3, 2, 1)
        big = saturated_set(GroundSet(n, mem), D, 3, 2, 1)
        assert set(members(small)) <= set(members(big))


class TestCheckAdvancing:
    def test_matches_naive_on_toys(self, rng):
        seen_true = seen_false = 0
        for trial in range(25):
            n = int(rng.integers(10, 21))
            m_prime = int(rng.integers(2, 7))
            gp = Fraction(int(rng.integers(1, 4)), int(rng.choice([1, 2, 4])))
            pp = toy_pp(n, m_prime, gp, Fraction(int(rng.integers(1, 13))))
            D = GroundSet.full(n)
            pool = [int(v) for v in rng.permutation(np.arange(1, n + 1))]
            S = GroundSet(n, pool[:m_prime])
            hat = pool[m_prime:m_prime + int(rng.integers(0, 5))]
            v = check_advancing(S, GroundSet(n, hat), D, pp, mode="exact")
            want, _ = ref.naive_advancing(pool[:m_prime], hat,
                                          list(range(1, n + 1)), 3, 2,
                                          *oracle_args(pp))
            assert v.advancing == want
            seen_true += want
            seen_false += not want
        assert seen_true and seen_false  # both outcomes exercised

    def test_fail_witness_violates_both_clauses(self):
        pp = toy_pp(16, 4, Fraction(3), Fraction(6))
        D = GroundSet.full(16)
        S = GroundSet(16, [2, 5, 8, 11])
        v = check_advancing(S, GroundSet.empty(16), D, pp, mode="exact")
        if not v.advancing:
            X = v.witness
            kept = S.difference(X)
            assert count_aps(kept, D, 2, 3) < pp.gamma * pp.mu
            after = saturated_set(kept, D, 3, 2, pp.saturation_threshold)
            before = saturated_set(GroundSet.empty(16), D, 3, 2,
                                   pp.saturation_threshold)
            assert after.size <= before.size + Fraction(16, pp.z)

    def test_wrong_block_size_raises(self):
        pp = toy_pp(12, 3)
        with pytest.raises(ValueError):
            check_advancing(GroundSet(12, [1, 2]), GroundSet.empty(12),
                            GroundSet.full(12), pp)

    def test_budget_downgrades_to_greedy(self):
        pp = toy_pp(12, 4)
        S = GroundSet(12, [1, 4, 7, 10])
        v = check_advancing(S, GroundSet.empty(12), GroundSet.full(12), pp,
                            mode="exact", budget_nodes=1)
        assert v.downgraded and v.mode == "greedy"

    def test_greedy_fail_is_definitive(self, rng):
        # a greedy non-advancing verdict carries a verified witness, so
        # the exact check must agree
        for trial in range(8):
            n = int(rng.integers(10, 18))
            m_prime = int(rng.integers(2, 5))
            pp = toy_pp(n, m_prime, Fraction(2), Fraction(6))
            D = GroundSet.full(n)
            pool = [int(v) for v in rng.permutation(np.arange(1, n + 1))]
            S = GroundSet(n, pool[:m_prime])
            g = check_advancing(S, GroundSet.empty(n), D, pp, mode="greedy")
            if not g.advancing:
                e = check_advancing(S, GroundSet.empty(n), D, pp,
                                    mode="exact")
                assert not e.advancing

    def test_heuristic_flag(self):
        pp = toy_pp(12, 2, Fraction(1, 4))
        S = GroundSet(12, [3, 6])
        e = check_advancing(S, GroundSet.empty(12), GroundSet.full(12), pp,
                            mode="exact")
        g = check_advancing(S, GroundSet.empty(12), GroundSet.full(12), pp,
                            mode="greedy")
        assert not e.heuristic
        assert g.heuristic == g.advancing

    def test_deletion_cap_beyond_block_size(self):
        # xi' large enough that the cap exceeds m': sizes clamp at |S|
        pp = derive_proof_params(base_params(18, 12), 8, Fraction(12), 1)
        assert pp.deletion_cap > pp.m_prime
        S = GroundSet(18, [2, 5, 8])
        for mode in ("exact", "greedy"):
            v = check_advancing(S, GroundSet.empty(18), GroundSet.full(18),
                                pp, mode=mode)
            assert v.tested <= 2 ** 3 + 1 + 3 + 3 * 3


class TestBadSequences:
    def test_validate_rejects_malformed(self):
        pp = toy_pp(12, 2)
        D = GroundSet.full(12)
        b1, b2 = GroundSet(12, [1, 4]), GroundSet(12, [2, 7])
        good = PartitionSequence(blocks=(b1, b2), Z=frozenset({1}))
        good.validate(pp, D)
        with pytest.raises(ValueError):  # block count != 2z
            PartitionSequence(blocks=(b1,), Z=frozenset()).validate(pp, D)
        with pytest.raises(ValueError):  # wrong block size
            PartitionSequence(blocks=(b1, GroundSet(12, [2])),
                              Z=frozenset()).validate(pp, D)
        with pytest.raises(ValueError):  # overlap
            PartitionSequence(blocks=(b1, GroundSet(12, [1, 7])),
                              Z=frozenset()).validate(pp, D)
        with pytest.raises(ValueError):  # Z index out of range
            PartitionSequence(blocks=(b1, b2), Z=frozenset({3})).validate(
                pp, D)
        with pytest.raises(ValueError):  # deletion at index outside Z
            PartitionSequence(blocks=(b1, b2), Z=frozenset({1}),
                              deletions={2: GroundSet(12, [2])}).validate(
                pp, D)
        with pytest.raises(ValueError):  # deletion not inside its block
            PartitionSequence(blocks=(b1, b2), Z=frozenset({1}),
                              deletions={1: GroundSet(12, [2])}).validate(
                pp, D)

    def test_hat_accumulates_kept_blocks(self):
        pp = toy_pp(12, 2)
        b1, b2 = GroundSet(12, [1, 4]), GroundSet(12, [2, 7])
        seq = PartitionSequence(blocks=(b1, b2), Z=frozenset({1, 2}),
                                deletions={2: GroundSet(12, [7])})
        assert members(seq.hat(0, 12)) == []
        assert members(seq.hat(1, 12)) == [1, 4]
        assert members(seq.hat(2, 12)) == [1, 2, 4]

    def test_matches_naive_on_toys(self, rng):
        seen_bad = seen_not = 0
        for trial in range(25):
            n = int(rng.integers(10, 21))
            m_prime = int(rng.integers(2, 6))
            if 2 * m_prime > n:
                continue
            gp = Fraction(int(rng.integers(1, 4)), int(rng.choice([1, 2])))
            pp = toy_pp(n, m_prime, gp, Fraction(int(rng.integers(2, 13))))
            D = GroundSet.full(n)
            pool = [int(v) for v in rng.permutation(np.arange(1, n + 1))]
            blocks = (GroundSet(n, pool[:m_prime]),
                      GroundSet(n, pool[m_prime:2 * m_prime]))
            Z = [frozenset(), frozenset({1}), frozenset({2}),
                 frozenset({1, 2})][int(rng.integers(0, 4))]
            dels = {}
            for i in sorted(Z):
                if pp.deletion_cap >= 1 and rng.random() < 0.5:
                    dels[i] = GroundSet(n, members(blocks[i - 1])[:1])
            seq = PartitionSequence(blocks=blocks, Z=Z, deletions=dels)
            rep = classify_bad_sequence(seq, D, pp, mode="exact")
            want = ref.naive_is_bad(
                [members(b) for b in blocks], set(Z),
                {i: members(g) for i, g in dels.items()},
                list(range(1, n + 1)), 3, 2, *oracle_args(pp))
            assert rep.is_bad == want
            seen_bad += want
            seen_not += not want
        assert seen_bad and seen_not

    def test_certificate_agrees_with_exhaustive(self, rng):
        n, m_prime = 12, 2
        pp = toy_pp(n, m_prime, Fraction(1), Fraction(6))
        D = GroundSet.full(n)
        cap = pp.deletion_cap
        for trial in range(4):
            pool = [int(v) for v in rng.permutation(np.arange(1, n + 1))]
            blocks = (GroundSet(n, pool[:m_prime]),
                      GroundSet(n, pool[m_prime:2 * m_prime]))
            cert = find_bad_certificate(blocks, D, pp, budget_nodes=10 ** 6)
            blocks_l = [members(b) for b in blocks]
            exists = False
            for Z in (frozenset(), frozenset({1}), frozenset({2}),
                      frozenset({1, 2})):
                maps = [{}]
                for bi in sorted(Z):
                    ext = []
                    opts = [[]] + [list(c) for r in range(1, cap + 1)
                                   for c in combinations(blocks_l[bi - 1], r)]
                    for m0 in maps:
                        for o in opts:
                            d = dict(m0)
                            if o:
                                d[bi] = o
                            ext.append(d)
                    maps = ext
                for dmap in maps:
                    if ref.naive_is_bad(blocks_l, set(Z), dmap,
                                        list(range(1, n + 1)), 3, 2,
                                        *oracle_args(pp)):
                        exists = True
                        break
                if exists:
                    break
            assert (cert is not None) == exists
            if cert is not None:
                assert classify_bad_sequence(cert, D, pp,
                                             mode="exact").is_bad


class TestZBuilder:
    def test_matches_naive_on_toys(self, rng):
        outcomes = set()
        for trial in range(25):
            n = int(rng.integers(10, 21))
            m_prime = int(rng.integers(2, 6))
            if 2 * m_prime > n:
                continue
            gp = Fraction(int(rng.integers(1, 4)), int(rng.choice([1, 2])))
            pp = toy_pp(n, m_prime, gp, Fraction(int(rng.integers(2, 13))))
            D = GroundSet.full(n)
            pool = [int(v) for v in rng.permutation(np.arange(1, n + 1))]
            blocks = (GroundSet(n, pool[:m_prime]),
                      GroundSet(n, pool[m_prime:2 * m_prime]))
            for xts in ([], pool[:1], pool[:2]):
                X_t = GroundSet(n, xts)
                if X_t.size > pp.xi * pp.m_used:
                    continue
                res = sequential_Z_builder(blocks, D, pp, X_t, mode="exact")
                wZ, wdel, wout = ref.naive_z_build(
                    [members(b) for b in blocks], sorted(xts),
                    list(range(1, n + 1)), 3, 2, *oracle_args(pp), pp.z)
                assert list(res.Z) == wZ
                assert res.outcome == wout
                got = {i: members(g) for i, g in res.deletions.items()}
                assert got == {i: sorted(v) for i, v in wdel.items()}
                outcomes.add(wout)
        assert "Z-small" in outcomes

    def test_trace_flags_recompute(self, rng):
        n, m_prime = 15, 3
        pp = toy_pp(n, m_prime, Fraction(1, 2), Fraction(6))
        D = GroundSet.full(n)
        pool = [int(v) for v in rng.permutation(np.arange(1, n + 1))]
        blocks = (GroundSet(n, pool[:3]), GroundSet(n, pool[3:6]))
        res = sequential_Z_builder(blocks, D, pp, GroundSet.empty(n))
        hat = GroundSet.empty(n)
        for step in res.trace:
            if step.advancing:
                X_i = res.deletions[step.i]
                prev = saturated_set(hat, D, 3, 2,
                                     pp.saturation_threshold).size
                hat = hat.union(blocks[step.i - 1].difference(X_i))
                aps = count_aps(hat, D, 2, 3)
                sat = saturated_set(hat, D, 3, 2,
                                    pp.saturation_threshold).size
                assert step.ap_count == aps and step.sat_size == sat
                assert step.clause_a == (aps >= pp.gamma * pp.mu)
                assert step.clause_b == (sat > prev + Fraction(n, pp.z))
        assert members(res.final_hat) == members(hat)

    def test_oversized_x_target_raises(self):
        pp = toy_pp(12, 2, Fraction(1), Fraction(1, 2))
        blocks = (GroundSet(12, [1, 4]), GroundSet(12, [2, 7]))
        with pytest.raises(ValueError):
            sequential_Z_builder(blocks, GroundSet.full(12), pp,
                                 GroundSet(12, [1, 2, 4, 7]))

    def test_overflow_outcome_when_z_exceeded(self):
        # dense blocks with a tiny gamma requirement advance immediately;
        # once |Z| > z the builder must name the clause that fired
        pp = toy_pp(12, 3, Fraction(1, 100), Fraction(6))
        D = GroundSet.full(12)
        blocks = (GroundSet(12, [1, 2, 3]), GroundSet(12, [4, 5, 6]))
        res = sequential_Z_builder(blocks, D, pp, GroundSet.empty(12))
        if len(res.Z) > pp.z:
            assert res.outcome in ("clause-A", "saturation-overflow")
            last = res.trace[-1]
            if res.outcome == "clause-A":
                assert last.clause_a
            else:
                assert not last.clause_a


class TestDeletionFamilies:
    def test_singleton_family_is_interval(self):
        # k' = 1: every element of [n] lies in some 3-AP once n >= 3
        for n in (3, 5, 9):
            fam = build_deletion_families(n, 3, 1)
            assert len(fam.B) == n
        assert len(build_deletion_families(2, 3, 1).B) == 0

    def test_matches_naive_pair_enumeration(self):
        n, k, kp = 15, 3, 2
        fam = build_deletion_families(n, k, kp)
        aps = [A for (_, _, A) in ref.all_aps(n, k)]
        B, K_count = set(), {}
        for A in aps:
            for Bc in combinations(sorted(A), kp):
                B.add(Bc)
                K_count[Bc] = K_count.get(Bc, 0) + 1
        assert fam.B == frozenset(B)
        assert fam.K == max(K_count.values())
        rel = set()
        for A1 in aps:
            for A2 in aps:
                for x in A1 & A2:
                    for B1 in combinations(sorted(A1 - {x}), kp):
                        for B2 in combinations(sorted(A2 - {x}), kp):
                            rel.add(frozenset((B1, B2)))
        assert fam.B_related == frozenset(rel)
        strata = {}
        for pair in rel:
            ts = list(pair)
            u = frozenset(ts[0]) | frozenset(ts[-1])
            strata.setdefault(len(u), set()).add(u)
        assert {s: len(v) for s, v in fam.B_prime.items()} == \
            {s: len(v) for s, v in strata.items()}
        for s, v in fam.B_prime.items():
            assert frozenset(v) == frozenset(strata[s])

    def test_small_strata_are_structured(self):
        fam = build_deletion_families(15, 3, 2)
        for s, unions in fam.B_prime.items():
            if s < 4:  # below 2k' the union must sit in a short progression
                for u in unions:
                    assert is_ap_structured(u, 3)

    def test_union_sizes_summary(self):
        fam = build_deletion_families(10, 3, 2)
        assert fam.B_union_sizes == {s: len(v)
                                     for s, v in fam.B_prime.items()}

    def test_budget_refusal(self):
        with pytest.raises(BudgetExceededError):
            build_deletion_families(200, 3, 2, budget_nodes=10)

    def test_rejects_bad_arity(self):
        with pytest.raises(ValueError):
            build_deletion_families(10, 2, 1)
        with pytest.raises(ValueError):
            build_deletion_families(10, 3, 3)


class TestApStructured:
    def test_examples(self):
        assert is_ap_structured((1, 3, 5), 3)
        assert is_ap_structured((2, 4), 3)
        assert is_ap_structured((7,), 3)
        assert not is_ap_structured((1, 2, 50), 3)

    def test_long_progression_rejected(self):
        # common difference 1 but span 3k: more than 2k terms needed
        assert not is_ap_structured(tuple(range(1, 3 * 3 + 2)), 3)


class TestSecondMomentDeletion:
    def test_empty_and_full_deletion(self):
        X, v = second_moment_with_deletion(GroundSet(20, []), 20, 3, 2, 0)
        assert v == 0 and X.size == 0
        S = GroundSet(20, [1, 2, 3, 4, 5, 6, 7])
        X, v = second_moment_with_deletion(S, 20, 3, 2, 7)
        assert v == 0 and X.size == 7
        X, v = second_moment_with_deletion(S, 20, 3, 2, 50)
        assert v == 0 and X.size == 7  # deletes min(q, |S|)

    def test_q_zero_matches_profile(self):
        S = GroundSet(20, [1, 2, 3, 4, 5, 6, 7])
        prof = degree_profile(S, GroundSet.full(20), 2, 3)
        raw = Fraction(sum(int(c) ** 2 for c in prof.counts[1:]), 20)
        _, v = second_moment_with_deletion(S, 20, 3, 2, 0)
        assert v == raw

    def test_monotone_in_q(self):
        S = GroundSet(24, [1, 2, 3, 5, 8, 9, 13, 21])
        prev = None
        for q in range(0, 9):
            X, v = second_moment_with_deletion(S, 24, 3, 2, q)
            assert X.size == min(q, 8)
            assert set(members(X)) <= set(members(S))
            if prev is not None:
                assert v <= prev
            prev = v

    def test_greedy_never_beats_exhaustive(self, rng):
        for trial in range(4):
            n = 16
            mem = sorted(int(v) for v in rng.choice(
                np.arange(1, n + 1), size=9, replace=False))
            S = GroundSet(n, mem)
            for q in (1, 2):
                _, vg = second_moment_with_deletion(S, n, 3, 2, q)
                best = min(
                    Fraction(sum(int(c) ** 2 for c in degree_profile(
                        GroundSet(n, [x for x in mem if x not in X]),
                        GroundSet.full(n), 2, 3).counts[1:]), n)
                    for X in combinations(mem, q))
                assert vg >= best

    def test_negative_q_raises(self):
        with pytest.raises(ValueError):
            second_moment_with_deletion(GroundSet(10, [1]), 10, 3, 2, -1)


class TestPaleyZygmund:
    @staticmethod
    def profile(n, counts):
        c = np.asarray(counts, dtype=np.int64)
        tot = int(c[1:].sum())
        return DegreeProfile(n=n, kp=2, k=3, counts=c, total=tot,
                             first_moment=Fraction(tot, n),
                             second_moment=Fraction(int((c[1:] ** 2).sum()),
                                                    n),
                             max_count=int(c.max()))

    def test_constant_profile_ratio_four(self):
        rep = paley_zygmund_check(self.profile(12, [0] + [4] * 12))
        assert rep.probability == 1
        assert rep.bound == Fraction(1, 4)
        assert rep.ratio == 4
        assert rep.holds and not rep.degenerate

    def test_degenerate_zero_mean(self):
        rep = paley_zygmund_check(self.profile(5, [0] * 6))
        assert rep.degenerate and rep.holds and rep.ratio is None

    def test_spike_profile(self):
        # one heavy element: EY = 10/10 = 1, half-mean threshold catches
        # only the spike
        rep = paley_zygmund_check(self.profile(10, [0, 10] + [0] * 9))
        assert rep.probability == Fraction(1, 10)
        assert rep.bound == Fraction(1, 4 * 10)
        assert rep.holds

    def test_holds_on_random_profiles(self, rng):
        for trial in range(200):
            n = int(rng.integers(3, 30))
            c = rng.integers(0, 20, size=n + 1)
            c[0] = 0
            assert paley_zygmund_check(self.profile(n, c)).holds

    def test_holds_on_real_profiles(self, rng):
        for trial in range(10):
            n = int(rng.integers(8, 30))
            mem = [int(v) for v in np.flatnonzero(rng.random(n) < 0.5) + 1]
            prof = degree_profile(GroundSet(n, mem), GroundSet.full(n), 2, 3)
            assert paley_zygmund_check(prof).holds
