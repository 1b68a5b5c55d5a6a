"""Exact maximum AP-free subset search by branch and bound.

The k-APs inside S form a k-uniform hypergraph; an AP-free subset is an
independent set. The solver keeps a status per element (undecided,
included, excluded) and repeatedly:

* propagates: an AP with k-1 included elements forces its last element
  out; an AP fully included is a dead branch;
* bounds: greedily packs APs with pairwise-disjoint undecided parts;
  each packed AP forces one exclusion, so included + undecided - packed
  bounds any completion from above;
* branches on an AP with the fewest undecided elements, partitioning by
  the first of them that gets excluded.

The search loop is one plain-array function compiled with numba when
available and run interpreted otherwise, so node counts are identical
either way. Decision mode (is there an AP-free subset of size >= t,
optionally through forced elements) powers the threshold sweeps and the
lexicographic witness refinement.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .budget import node_budget
from .enumeration import greedy_apfree_set
from .kernels import jit_if_available
from .sets import GroundSet

DEFAULT_EXACT_LIMIT = 60

# solver exit codes
_DONE = 0          # search space exhausted; result exact
_BUDGET = 1        # node budget hit; incumbent only
_TARGET_HIT = 2    # decision mode found a witness of the target size
_INFEASIBLE = 3    # forced elements already contain an AP


def _solve_loop(edges, indptr, einc, preset, target, budget,
                win_id, caps, coarse_of, ccaps):
    E = edges.shape[0]
    kk = edges.shape[1]
    s = preset.shape[0]
    nwin = caps.shape[0]
    ncoarse = ccaps.shape[0]
    status = np.zeros(s, dtype=np.int8)        # 0 undecided, 1 in, 2 out
    inc_cnt = np.zeros(E, dtype=np.int32)
    exc_cnt = np.zeros(E, dtype=np.int32)
    trail = np.empty(s, dtype=np.int64)
    tlen = 0
    units = np.empty(E + 4, dtype=np.int64)
    used = np.zeros(s, dtype=np.uint8)
    alive = np.empty(E + 1, dtype=np.int64)
    wcnt = np.zeros(nwin + 1, dtype=np.int64)
    csum = np.zeros(ncoarse + 1, dtype=np.int64)
    n_exc = 0
    best_size = -1
    best_mask = np.zeros(s, dtype=np.uint8)
    nodes = 0
    code = _DONE

    cap = s * kk + 8
    st_edge = np.empty(cap, dtype=np.int64)
    st_branch = np.empty(cap, dtype=np.int64)
    st_mark = np.empty(cap, dtype=np.int64)
    # sentinel root entry: apply the preset, then evaluate
    st_edge[0] = -1
    st_branch[0] = -1
    st_mark[0] = 0
    sp = 1

    while sp > 0:
        sp -= 1
        f0 = st_edge[sp]
        bi = st_branch[sp]
        mark = st_mark[sp]
        while tlen > mark:
            tlen -= 1
            e = trail[tlen]
            v = status[e]
            status[e] = 0
            if v == 2:
                n_exc -= 1
            for ii in range(indptr[e], indptr[e + 1]):
                g = einc[ii]
                if v == 1:
                    inc_cnt[g] -= 1
                else:
                    exc_cnt[g] -= 1

        nodes += 1
        if nodes > budget:
            code = _BUDGET
            break

        conflict = False
        ulen = 0
        if f0 == -1:
            for e in range(s):
                if preset[e] == 1:
                    status[e] = 1
                    trail[tlen] = e
                    tlen += 1
                    for ii in range(indptr[e], indptr[e + 1]):
                        g = einc[ii]
                        inc_cnt[g] += 1
                        if exc_cnt[g] == 0:
                            if inc_cnt[g] == kk:
                                conflict = True
                            elif inc_cnt[g] == kk - 1:
                                units[ulen] = g
                                ulen += 1
                if conflict:
                    break
            if conflict:
                code = _INFEASIBLE
                break
        else:
            # branch bi of edge f0: scanning its undecided elements in
            # ascending order, include the first bi, exclude number bi
            idx = 0
            for j in range(kk):
                e = edges[f0, j]
                if status[e] != 0:
                    continue
                if idx == bi:
                    if preset[e] == 1:
                        conflict = True
                        break
                    status[e] = 2
                    trail[tlen] = e
                    tlen += 1
                    n_exc += 1
                    for ii in range(indptr[e], indptr[e + 1]):
                        exc_cnt[einc[ii]] += 1
                    break
                status[e] = 1
                trail[tlen] = e
                tlen += 1
                for ii in range(indptr[e], indptr[e + 1]):
                    g = einc[ii]
                    inc_cnt[g] += 1
                    if exc_cnt[g] == 0:
                        if inc_cnt[g] == kk:
                            conflict = True
                        elif inc_cnt[g] == kk - 1:
                            units[ulen] = g
                            ulen += 1
                if conflict:
                    break
                idx += 1

        qi = 0
        while not conflict and qi < ulen:
            g = units[qi]
            qi += 1
            if exc_cnt[g] != 0 or inc_cnt[g] != kk - 1:
                continue
            u = -1
            for j in range(kk):
                e2 = edges[g, j]
                if status[e2] == 0:
                    u = e2
                    break
            if u == -1 or preset[u] == 1:
                conflict = True
                break
            status[u] = 2
            trail[tlen] = u
            tlen += 1
            n_exc += 1
            for ii in range(indptr[u], indptr[u + 1]):
                exc_cnt[einc[ii]] += 1
        if conflict:
            if f0 == -1:
                code = _INFEASIBLE
                break
            continue

        # collect alive APs once: tight ones (two undecided) first, so the
        # packing consumes fewer free elements per pick and grows larger
        na = 0
        nt = 0
        bestf = -1
        for g in range(E):
            if exc_cnt[g] != 0 or inc_cnt[g] == kk:
                continue
            if inc_cnt[g] == kk - 2:
                alive[na] = alive[nt]
                alive[nt] = g
                nt += 1
            else:
                alive[na] = g
            na += 1
        if nt > 0:
            bestf = alive[0]
        elif na > 0:
            # all alive APs have >= 3 undecided; any of them branches fine
            bestf = alive[0]
            for ai in range(na):
                g = alive[ai]
                if kk - inc_cnt[g] < kk - inc_cnt[bestf]:
                    bestf = g
        bestu = 0
        if bestf >= 0:
            bestu = kk - inc_cnt[bestf]

        cand_all = s - n_exc
        if na == 0:
            # no alive AP: every undecided element fits
            if cand_all > best_size:
                best_size = cand_all
                for e in range(s):
                    best_mask[e] = 0 if status[e] == 2 else 1
                if target >= 0 and best_size >= target:
                    code = _TARGET_HIT
                    break
            continue

        for e in range(s):
            used[e] = 0
        packed = 0
        # packing beyond this count already proves the node prunable
        if target >= 0:
            need = cand_all - target
        else:
            need = cand_all - best_size - 1
        prune_now = False
        for ai in range(na):
            g = alive[ai]
            ok = True
            for j in range(kk):
                e2 = edges[g, j]
                if status[e2] == 0 and used[e2] == 1:
                    ok = False
                    break
            if ok:
                packed += 1
                if packed > need:
                    prune_now = True
                    break
                for j in range(kk):
                    e2 = edges[g, j]
                    if status[e2] == 0:
                        used[e2] = 1
        if prune_now:
            continue
        ub = cand_all - packed
        if nwin > 0 and ub >= target:
            # a completion restricted to a window stays AP-free there, so
            # each window contributes at most its standalone optimum; the
            # coarse level caps each group of fine windows the same way
            for wj in range(nwin):
                wcnt[wj] = 0
            for e in range(s):
                if status[e] != 2:
                    wcnt[win_id[e]] += 1
            wub = 0
            if ncoarse > 0:
                for cj in range(ncoarse):
                    csum[cj] = 0
                for wj in range(nwin):
                    c = wcnt[wj]
                    if c > caps[wj]:
                        c = caps[wj]
                    csum[coarse_of[wj]] += c
                for cj in range(ncoarse):
                    c = csum[cj]
                    if c > ccaps[cj]:
                        c = ccaps[cj]
                    wub += c
            else:
                for wj in range(nwin):
                    c = wcnt[wj]
                    if c > caps[wj]:
                        c = caps[wj]
                    wub += c
            if wub < ub:
                ub = wub
        if target >= 0:
            if ub < target:
                continue
        elif ub <= best_size:
            continue

        # push include-heavy branches last so they pop first
        for b in range(bestu):
            st_edge[sp] = bestf
            st_branch[sp] = b
            st_mark[sp] = tlen
            sp += 1

    return best_size, best_mask, nodes, code


_solve = jit_if_available(_solve_loop)


def _build_instance(S, k):
    """Index the k-APs inside S: edge rows plus element->edge CSR.

    Edges come out in (d, a) order; only differences fitting between the
    smallest and largest member are scanned.
    """
    members = S.members()
    s = members.size
    pos = np.full(S.n + 1, -1, dtype=np.int64)
    pos[members] = np.arange(s, dtype=np.int64)
    mask = S.mask
    if s < k:
        return members, np.empty((0, k), np.int64), \
            np.zeros(s + 1, np.int64), np.empty(0, np.int64)
    lo = int(members[0])
    hi = int(members[-1])
    parts = []
    steps = np.arange(k, dtype=np.int64)
    dmax = (hi - lo) // (k - 1)
    for d in range(1, dmax + 1):
        base = np.arange(lo, hi - (k - 1) * d + 1, dtype=np.int64)
        ok = mask[base] != 0
        for t in range(1, k):
            ok &= mask[base + t * d] != 0
        hits = base[ok]
        if hits.size:
            parts.append(pos[hits[:, None] + d * steps])
    if parts:
        edges = np.concatenate(parts, axis=0)
    else:
        edges = np.empty((0, k), np.int64)
    E = edges.shape[0]
    flat = edges.ravel()
    deg = np.bincount(flat + 1, minlength=s + 1)
    indptr = np.cumsum(deg)
    # stable sort by element keeps per-element edge lists in (d, a) order
    order = np.argsort(flat, kind="stable")
    einc = np.repeat(np.arange(E, dtype=np.int64), k)[order]
    return members, edges, indptr, einc


_EMPTY_I64 = np.empty(0, dtype=np.int64)


def _no_windows(s):
    return (np.zeros(s, dtype=np.int64), _EMPTY_I64, _EMPTY_I64, _EMPTY_I64)


@dataclass(frozen=True)
class ExtremalResult:
    """Size bounds and witness for the largest AP-free subset of S.

    Exact results have lower == upper; iterating yields (size, witness)
    so callers can unpack the documented pair directly.
    """

    lower: int
    upper: int
    witness: GroundSet
    exact: bool
    nodes: int
    budget_exceeded: bool

    @property
    def size(self):
        if not self.exact:
            raise ValueError("inexact result has no single size; "
                             "use lower and upper")
        return self.lower

    def __iter__(self):
        yield self.size
        yield self.witness


@dataclass(frozen=True)
class DecisionResult:
    """Outcome of: does S contain an AP-free subset of size >= target?

    sat is None when the node budget ran out before resolution.
    """

    sat: bool | None
    target: int
    witness: GroundSet | None
    nodes: int

    @property
    def resolved(self):
        return self.sat is not None


def _witness_from_mask(S, members, mask01):
    elems = [int(members[i]) for i in range(members.size) if mask01[i]]
    return GroundSet(S.n, elems)


def _global_packing_bound(s, edges):
    """|S| minus a greedy packing of disjoint APs bounds the optimum."""
    used = np.zeros(s, dtype=bool)
    packed = 0
    for row in edges:
        if not used[row].any():
            packed += 1
            used[row] = True
    return s - packed


def _primal_loop(edges, indptr, einc, orders, kk, target):
    """Greedy AP-free subsets over several element orders, then swap moves.

    A swap trades one excluded element against the lone included member
    blocking it and keeps the trade only if a follow-up greedy pass then
    grows the set. Orders and tie-breaks are fixed, so the best mask
    found depends only on the instance, never on threads or backend.
    """
    s = indptr.shape[0] - 1
    best_size = 0
    best = np.zeros(s, dtype=np.int8)
    inc = np.zeros(s, dtype=np.int8)
    cnt = np.zeros(edges.shape[0], dtype=np.int64)
    for r in range(orders.shape[0]):
        for i in range(s):
            inc[i] = 0
        for e in range(edges.shape[0]):
            cnt[e] = 0
        size = 0
        for oi in range(s):
            x = orders[r, oi]
            ok = True
            for idx in range(indptr[x], indptr[x + 1]):
                if cnt[einc[idx]] == kk - 1:
                    ok = False
                    break
            if ok:
                inc[x] = 1
                size += 1
                for idx in range(indptr[x], indptr[x + 1]):
                    cnt[einc[idx]] += 1
        sweeps = 0
        stale = 0
        # plateau swaps shift the set sideways; stop after a few sweeps
        # in a row produce no growth
        while sweeps < 40 and stale < 3 and size < target:
            sweeps += 1
            grew = False
            for x in range(s):
                if inc[x] == 1:
                    continue
                nb = 0
                eb = -1
                for idx in range(indptr[x], indptr[x + 1]):
                    if cnt[einc[idx]] == kk - 1:
                        nb += 1
                        eb = einc[idx]
                        if nb > 1:
                            break
                if nb != 1:
                    continue
                # rotate the victim pick so plateau walks do not cycle
                vstart = (sweeps + x) % kk
                for voff in range(kk):
                    y = edges[eb, (vstart + voff) % kk]
                    if y == x or inc[y] == 0:
                        continue
                    inc[y] = 0
                    for idx in range(indptr[y], indptr[y + 1]):
                        cnt[einc[idx]] -= 1
                    inc[x] = 1
                    for idx in range(indptr[x], indptr[x + 1]):
                        cnt[einc[idx]] += 1
                    added = 0
                    for z in range(s):
                        if inc[z] == 1:
                            continue
                        ok = True
                        for idx in range(indptr[z], indptr[z + 1]):
                            if cnt[einc[idx]] == kk - 1:
                                ok = False
                                break
                        if ok:
                            inc[z] = 1
                            added += 1
                            for idx in range(indptr[z], indptr[z + 1]):
                                cnt[einc[idx]] += 1
                    if added > 0:
                        size += added
                        grew = True
                    # keep even-size swaps: the walk explores the plateau
                    break
                if grew:
                    break
            if grew:
                stale = 0
            else:
                stale += 1
        if size > best_size:
            best_size = size
            for i in range(s):
                best[i] = inc[i]
            if best_size >= target:
                break
    return best, best_size


_primal = jit_if_available(_primal_loop)


def _primal_orders(s, edges, indptr, tries=16):
    """Fixed scan orders: index, reverse, degree both ways, seeded shuffles."""
    deg = np.diff(indptr)
    rows = [np.arange(s, dtype=np.int64),
            np.arange(s - 1, -1, -1, dtype=np.int64),
            np.argsort(deg, kind="stable").astype(np.int64),
            np.argsort(-deg, kind="stable").astype(np.int64)]
    rng = np.random.default_rng(43210)
    for _ in range(tries):
        rows.append(rng.permutation(s).astype(np.int64))
    return np.stack(rows)


def _window_caps(S, k, width, budget, inner_width=None):
    """Per-window exact optima: win_id over members, caps, nodes, ok.

    Splits [n] into fixed blocks of ``width`` starting at 1 and solves
    max AP-free exactly inside each nonempty block. Any AP-free T in S
    satisfies |T ∩ W| <= cap(W) per window, so sum(caps) bounds the
    optimum and the per-window caps serve as an in-search bound. With
    ``inner_width`` the block solves themselves carry one finer level of
    window caps, which speeds up wide blocks considerably.
    """
    members = S.members()
    n = S.n
    win_id = np.empty(members.size, dtype=np.int64)
    caps = []
    nodes = 0
    fail = (win_id, _EMPTY_I64)
    i = 0
    for lo in range(1, n + 1, width):
        hi = min(lo + width - 1, n)
        j = i
        while j < members.size and members[j] <= hi:
            j += 1
        if j == i:
            continue
        block = GroundSet(n, members[i:j])
        bm, be, bp, bn = _build_instance(block, k)
        if be.shape[0] == 0:
            cap = block.size
        else:
            if inner_width is not None:
                iw_id, iw_caps, nds0, ok = _window_caps(
                    block, k, inner_width, budget - nodes)
                nodes += nds0
                if not ok:
                    return fail + (nodes, False)
                wins = (iw_id, iw_caps, _EMPTY_I64, _EMPTY_I64)
            else:
                wins = _no_windows(block.size)
            preset = np.zeros(block.size, dtype=np.int8)
            best, _, nds, code = _solve(be, bp, bn, preset, -1,
                                        budget - nodes, *wins)
            nodes += int(nds)
            if code != _DONE:
                return fail + (nodes, False)
            cap = int(best)
        win_id[i:j] = len(caps)
        caps.append(cap)
        i = j
    return win_id, np.array(caps, dtype=np.int64), nodes, True


def _nest_map(f_id, f_caps, c_id):
    """fine-window -> coarse-window index map from the per-member ids."""
    coarse_of = np.zeros(f_caps.shape[0], dtype=np.int64)
    for i in range(f_id.shape[0]):
        coarse_of[f_id[i]] = c_id[i]
    return coarse_of


def _two_level_windows(S, k, budget):
    """Nested window grids: fine width n//6 inside coarse width n//3.

    Returns (wins, fine_sum, coarse_sum, nodes, ok) where wins packs the
    four solver arrays. Nesting is exact because the coarse width is
    twice the fine width and both grids start at 1.
    """
    fine = max(12, S.n // 6)
    f_id, f_caps, n1, ok = _window_caps(S, k, fine, budget)
    if not ok:
        return None, 0, 0, n1, False
    c_id, c_caps, n2, ok = _window_caps(S, k, 2 * fine, budget - n1,
                                        inner_width=fine)
    nodes = n1 + n2
    if not ok:
        return None, int(f_caps.sum()), 0, nodes, False
    coarse_of = _nest_map(f_id, f_caps, c_id)
    wins = (f_id, f_caps, coarse_of, c_caps)
    return wins, int(f_caps.sum()), int(c_caps.sum()), nodes, True


def _decision_pyramid(S, k, target, budget):
    """Window-cap ladder at widths n//6, n//3, n//2 against ``target``.

    Each level's summed caps upper-bound the optimum; the first level
    falling below target certifies a no. Level n//2 blocks are solved
    with the finer global caps as their in-search bound, which is valid
    because a window cap constrains any AP-free subset wherever it lives.
    Returns (verdict, wins, nodes): verdict False = certified no,
    None = inconclusive (wins then holds the n//6-in-n//2 nested bound
    for the full search), "budget" = out of nodes.
    """
    nodes = 0
    members = S.members()
    fine = max(12, S.n // 6)
    f_id, f_caps, nds, ok = _window_caps(S, k, fine, budget)
    nodes += nds
    if not ok:
        return "budget", None, nodes
    if int(f_caps.sum()) < target:
        return False, None, nodes
    c_id, c_caps, nds, ok = _window_caps(S, k, 2 * fine, budget - nodes,
                                         inner_width=fine)
    nodes += nds
    if not ok:
        return "budget", None, nodes
    if int(c_caps.sum()) < target:
        return False, None, nodes
    coarse_of = _nest_map(f_id, f_caps, c_id)

    # width 3*fine level, block solves bounded by the two finer grids
    width = 3 * fine
    n = S.n
    s_id = np.empty(members.size, dtype=np.int64)
    s_caps = []
    i = 0
    for lo in range(1, n + 1, width):
        hi = min(lo + width - 1, n)
        j = i
        while j < members.size and members[j] <= hi:
            j += 1
        if j == i:
            continue
        block = GroundSet(n, members[i:j])
        bm, be, bp, bn = _build_instance(block, k)
        if be.shape[0] == 0:
            cap = block.size
        else:
            preset = np.zeros(block.size, dtype=np.int8)
            wins_b = (f_id[i:j], f_caps, coarse_of, c_caps)
            best, _, nds, code = _solve(be, bp, bn, preset, -1,
                                        budget - nodes, *wins_b)
            nodes += int(nds)
            if code != _DONE:
                return "budget", None, nodes
            cap = int(best)
        s_id[i:j] = len(s_caps)
        s_caps.append(cap)
        i = j
    s_caps = np.array(s_caps, dtype=np.int64)
    if int(s_caps.sum()) < target:
        return False, None, nodes
    super_of = _nest_map(f_id, f_caps, s_id)
    return None, (f_id, f_caps, super_of, s_caps), nodes


def max_apfree_subset(S, k, exact_limit=DEFAULT_EXACT_LIMIT,
                      budget_nodes=None, lex_witness=True):
    """Largest AP-free subset of S, exact up to ``exact_limit`` elements.

    Within the limit, branch and bound returns the maximum size and the
    lexicographically smallest witness of that size. Past the limit (or
    if the node budget runs out) the result is an interval: greedy lower
    bound, disjoint-packing upper bound, flagged inexact.
    """
    if not isinstance(S, GroundSet):
        raise TypeError("S must be a GroundSet")
    if k < 3:
        raise ValueError("k must be >= 3")
    members, edges, indptr, einc = _build_instance(S, k)
    s = members.size
    if edges.shape[0] == 0:
        return ExtremalResult(s, s, S, True, 0, False)
    greedy = greedy_apfree_set(S, k)
    if s > exact_limit:
        upper = _global_packing_bound(s, edges)
        return ExtremalResult(greedy.size, upper, greedy, False, 0, False)
    budget = node_budget(budget_nodes)
    preset = np.zeros(s, dtype=np.int8)
    wins = _no_windows(s)
    total_nodes = 0
    if s > 40:
        wins2, fsum, csum, nds, ok = _two_level_windows(S, k, budget)
        total_nodes += nds
        if ok:
            wins = wins2
    best, mask01, nodes, code = _solve(edges, indptr, einc, preset, -1,
                                       budget - total_nodes, *wins)
    total_nodes += int(nodes)
    if code == _BUDGET:
        upper = _global_packing_bound(s, edges)
        lower = max(greedy.size, int(best))
        wit = greedy if greedy.size >= best else _witness_from_mask(S, members, mask01)
        return ExtremalResult(lower, upper, wit, False, total_nodes, True)
    size = int(best)
    witness = _witness_from_mask(S, members, mask01)
    if lex_witness:
        chosen = np.zeros(s, dtype=np.int8)
        kept = 0
        for i in range(s):
            if kept == size:
                break
            chosen[i] = 1
            got, wmask, nds, wcode = _solve(edges, indptr, einc, chosen,
                                            size, budget, *wins)
            total_nodes += int(nds)
            if wcode == _TARGET_HIT:
                kept += 1
            else:
                chosen[i] = 0
                if wcode == _BUDGET:
                    # refinement ran long; fall back to the search witness
                    return ExtremalResult(size, size, witness, True,
                                          total_nodes, False)
        witness = _witness_from_mask(S, members, chosen)
    return ExtremalResult(size, size, witness, True, total_nodes, False)


def apfree_decision(S, k, target, budget_nodes=None, want_witness=True):
    """Decide whether S has an AP-free subset of at least ``target`` elements.

    Staged: the ascending greedy set first (a free yes), then nested
    window decompositions whose summed caps certify hard no-instances,
    then branch and bound carrying the caps as a two-level bound. Budget
    overruns come back with sat=None. The whole pipeline is a
    deterministic function of (S, k, target, budget), independent of
    thread count and kernel backend.
    """
    if not isinstance(S, GroundSet):
        raise TypeError("S must be a GroundSet")
    if k < 3:
        raise ValueError("k must be >= 3")
    target = int(target)
    if target <= 0:
        return DecisionResult(True, target, GroundSet.empty(S.n), 0)
    if target > S.size:
        return DecisionResult(False, target, None, 0)
    greedy = greedy_apfree_set(S, k)
    if greedy.size >= target:
        return DecisionResult(True, target, greedy if want_witness else None, 0)
    members, edges, indptr, einc = _build_instance(S, k)
    s = members.size
    if edges.shape[0] == 0:
        # fully AP-free, but then greedy would have hit the target
        return DecisionResult(target <= s, target,
                              S if target <= s else None, 0)
    if _global_packing_bound(s, edges) < target:
        return DecisionResult(False, target, None, 0)
    pmask, psize = _primal(edges, indptr, einc,
                           _primal_orders(s, edges, indptr), k, target)
    if psize >= target:
        wit = _witness_from_mask(S, members, pmask) if want_witness else None
        return DecisionResult(True, target, wit, 0)
    budget = node_budget(budget_nodes)
    nodes = 0
    wins = _no_windows(s)
    if s > 40:
        verdict, wins2, nds = _decision_pyramid(S, k, target, budget)
        nodes += nds
        if verdict == "budget":
            return DecisionResult(None, target, None, nodes)
        if verdict is False:
            return DecisionResult(False, target, None, nodes)
        wins = wins2
    preset = np.zeros(s, dtype=np.int8)
    best, mask01, nds, code = _solve(edges, indptr, einc, preset,
                                     target, budget - nodes, *wins)
    nodes += int(nds)
    if code == _TARGET_HIT:
        wit = _witness_from_mask(S, members, mask01) if want_witness else None
        return DecisionResult(True, target, wit, nodes)
    if code == _BUDGET:
        return DecisionResult(None, target, None, nodes)
    return DecisionResult(False, target, None, nodes)
