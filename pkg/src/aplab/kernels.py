"""Counting kernels: numba-jitted loops with a vectorized numpy fallback.

Two interchangeable backends compute the same exact integer results:

* ``numba``  - tight loops compiled with ``@njit(cache=True, nogil=True)``;
  the default whenever numba imports.
* ``numpy``  - pure-numpy vectorized implementations, one slice pass per
  common difference.

Selection: the ``APLAB_BACKEND`` environment variable ("numba" or "numpy"),
read at import; ``set_backend`` switches at runtime. All kernels take raw
uint8 membership arrays of length n + 1 (index 0 unused) so callers can
mutate scratch masks without rebuilding set objects.

Kernel contracts (S = set behind smask, D = set behind dmask):

* ``count_inside(members, mask, n, k)`` - number of k-term APs whose
  elements all lie in the set; ``members`` must be ascending.
* ``count_scan(smask, dmask, n, kp, k, d_full)`` - number of k-term APs
  inside D meeting S in at least kp elements; ``d_full`` skips the D test.
* ``count_through(x, smask, dmask, n, kp, k, d_full)`` - same, restricted
  to APs through x, counting S-membership over the AP minus x itself.
* ``degree_scan(smask, dmask, n, kp, k, d_full)`` - the count_through
  value for every x in [n] at once, as an int64 array of length n + 1.
"""

from __future__ import annotations

import os
from types import SimpleNamespace

import numpy as np

try:
    import numba

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - mirror environments without numba
    HAS_NUMBA = False


# ---------------------------------------------------------------------------
# Loop bodies (numba sources; also runnable interpreted)
# ---------------------------------------------------------------------------

def _count_inside_loops(members, mask, n, k):
    total = 0
    s = members.shape[0]
    for i in range(s - 1):
        a = members[i]
        for j in range(i + 1, s):
            d = members[j] - a
            if a + (k - 1) * d > n:
                break  # members ascending, so later j only overshoot further
            ok = True
            for t in range(2, k):
                if mask[a + t * d] == 0:
                    ok = False
                    break
            if ok:
                total += 1
    return total


def _count_scan_loops(smask, dmask, n, kp, k, d_full):
    total = 0
    dmax = (n - 1) // (k - 1)
    for d in range(1, dmax + 1):
        amax = n - (k - 1) * d
        for a in range(1, amax + 1):
            c = 0
            ok = True
            y = a
            for _ in range(k):
                if not d_full and dmask[y] == 0:
                    ok = False
                    break
                c += smask[y]
                y += d
            if ok and c >= kp:
                total += 1
    return total


def _count_through_loops(x, smask, dmask, n, kp, k, d_full):
    total = 0
    dmax = (n - 1) // (k - 1)
    sx = smask[x]
    for d in range(1, dmax + 1):
        span = (k - 1) * d
        for j in range(k):
            a = x - j * d
            if a < 1 or a + span > n:
                continue
            c = 0
            ok = True
            y = a
            for _ in range(k):
                if not d_full and dmask[y] == 0:
                    ok = False
                    break
                c += smask[y]
                y += d
            if ok and c - sx >= kp:
                total += 1
    return total


def _degree_scan_loops(smask, dmask, n, kp, k, d_full):
    counts = np.zeros(n + 1, dtype=np.int64)
    dmax = (n - 1) // (k - 1)
    for d in range(1, dmax + 1):
        amax = n - (k - 1) * d
        for a in range(1, amax + 1):
            c = 0
            ok = True
            y = a
            for _ in range(k):
                if not d_full and dmask[y] == 0:
                    ok = False
                    break
                c += smask[y]
                y += d
            if ok:
                y = a
                for _ in range(k):
                    if c - smask[y] >= kp:
                        counts[y] += 1
                    y += d
    return counts


# ---------------------------------------------------------------------------
# Vectorized numpy implementations
# ---------------------------------------------------------------------------

def _count_inside_np(members, mask, n, k):
    total = 0
    s = members.shape[0]
    for i in range(s - 1):
        a = int(members[i])
        ds = members[i + 1:] - a
        ds = ds[a + (k - 1) * ds <= n]
        if ds.size == 0:
            continue
        alive = np.ones(ds.size, dtype=bool)
        for t in range(2, k):
            alive &= mask[a + t * ds] != 0
        total += int(alive.sum())
    return total


def _count_scan_np(smask, dmask, n, kp, k, d_full):
    total = 0
    dmax = (n - 1) // (k - 1)
    for d in range(1, dmax + 1):
        amax = n - (k - 1) * d
        cnt = np.zeros(amax, dtype=np.uint16)
        for j in range(k):
            cnt += smask[1 + j * d: 1 + j * d + amax]
        ok = cnt >= kp
        if not d_full:
            for j in range(k):
                ok &= dmask[1 + j * d: 1 + j * d + amax] != 0
        total += int(ok.sum())
    return total


def _count_through_np(x, smask, dmask, n, kp, k, d_full):
    total = 0
    dmax = (n - 1) // (k - 1)
    if dmax < 1:
        return 0
    ds = np.arange(1, dmax + 1, dtype=np.int64)
    sx = int(smask[x])
    for j in range(k):
        a = x - j * ds
        sel = (a >= 1) & (a + (k - 1) * ds <= n)
        if not sel.any():
            continue
        av = a[sel]
        dv = ds[sel]
        cnt = np.zeros(av.size, dtype=np.uint16)
        ok = np.ones(av.size, dtype=bool)
        for t in range(k):
            idx = av + t * dv
            cnt += smask[idx]
            if not d_full:
                ok &= dmask[idx] != 0
        ok &= (cnt.astype(np.int64) - sx) >= kp
        total += int(ok.sum())
    return total


def _degree_scan_np(smask, dmask, n, kp, k, d_full):
    counts = np.zeros(n + 1, dtype=np.int64)
    dmax = (n - 1) // (k - 1)
    for d in range(1, dmax + 1):
        amax = n - (k - 1) * d
        cnt = np.zeros(amax, dtype=np.int64)
        for j in range(k):
            cnt += smask[1 + j * d: 1 + j * d + amax]
        if d_full:
            ok_ap = np.ones(amax, dtype=bool)
        else:
            ok_ap = np.ones(amax, dtype=bool)
            for j in range(k):
                ok_ap &= dmask[1 + j * d: 1 + j * d + amax] != 0
        for j in range(k):
            sl = slice(1 + j * d, 1 + j * d + amax)
            hit = ok_ap & ((cnt - smask[sl]) >= kp)
            counts[sl] += hit
    return counts


# ---------------------------------------------------------------------------
# Backend registry
# ---------------------------------------------------------------------------

_numpy_backend = SimpleNamespace(
    name="numpy",
    count_inside=_count_inside_np,
    count_scan=_count_scan_np,
    count_through=_count_through_np,
    degree_scan=_degree_scan_np,
)

_BACKENDS = {"numpy": _numpy_backend}

if HAS_NUMBA:
    _jit = numba.njit(cache=True, nogil=True)
    _BACKENDS["numba"] = SimpleNamespace(
        name="numba",
        count_inside=_jit(_count_inside_loops),
        count_scan=_jit(_count_scan_loops),
        count_through=_jit(_count_through_loops),
        degree_scan=_jit(_degree_scan_loops),
    )

DEFAULT_BACKEND = "numba" if HAS_NUMBA else "numpy"


def _resolve(name):
    if name not in _BACKENDS:
        if name == "numba" and not HAS_NUMBA:
            return "numpy"
        raise ValueError(f"unknown backend {name!r}; choose from {sorted(_BACKENDS)}")
    return name


_active_name = _resolve(os.environ.get("APLAB_BACKEND", DEFAULT_BACKEND).strip().lower()
                        or DEFAULT_BACKEND)


def available_backends():
    return tuple(sorted(_BACKENDS))


def get_backend():
    """Name of the active backend."""
    return _active_name


def set_backend(name):
    """Switch the active backend; returns the previous name."""
    global _active_name
    prev = _active_name
    _active_name = _resolve(name)
    return prev


def active():
    """The active backend namespace (count_inside / count_scan / ...)."""
    return _BACKENDS[_active_name]


def jit_if_available(func):
    """Compile ``func`` with numba when present; otherwise return it as-is.

    Used for search kernels that share one source between the compiled and
    interpreted paths, so both produce identical node counts.
    """
    if HAS_NUMBA:
        return numba.njit(cache=True, nogil=True)(func)
    return func
