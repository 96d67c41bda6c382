"""Pure-Python collinear DP kernels.

Reference implementation of the hot loops; pantsdecomp.kernels._native is a
Cython twin compiled at install time. Both must produce bit-identical tables
and counters — the parity tests in tests/test_kernels.py enforce that.

Both kernels fill upper-triangular tables for sorted x-coordinates:

    cost[i][j] = 2*(xs[j]-xs[i]) + min over k in [i, j) of cost[i][k] + cost[k+1][j]
    cost[i][i] = 0

split[i][j] is the *largest* minimizing k (ties resolved toward larger k by
updating on <=). The diagonal split[i][i] = i is a sentinel so the windowed
kernel can read it uniformly.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"


def collinear_naive(xs: np.ndarray):
    """Full-range minimization, O(n^3).

    Returns (cost, split, states, candidates, diag_candidates).
    """
    n = xs.shape[0]
    cost = np.zeros((n, n), dtype=np.float64)
    split = np.zeros((n, n), dtype=np.int32)
    diag = np.zeros(n, dtype=np.int64)
    for i in range(n):
        split[i, i] = i
    states = 0
    candidates = 0
    for d in range(1, n):
        dcount = 0
        for i in range(n - d):
            j = i + d
            ci = cost[i]
            best = np.inf
            bestk = i
            for k in range(i, j):
                v = ci[k] + cost[k + 1, j]
                if v <= best:
                    best = v
                    bestk = k
            dcount += d
            cost[i, j] = 2.0 * (xs[j] - xs[i]) + best
            split[i, j] = bestk
            states += 1
        diag[d] = dcount
        candidates += dcount
    return cost, split, states, candidates, diag


def collinear_yao(xs: np.ndarray):
    """Windowed minimization, O(n^2).

    On diagonal d the candidate range for (i, j=i+d) is
    [split[i][j-1], min(split[i+1][j], j-1)]; per-diagonal work telescopes
    to < 2n candidates. Same tie-break as collinear_naive.
    """
    n = xs.shape[0]
    cost = np.zeros((n, n), dtype=np.float64)
    split = np.zeros((n, n), dtype=np.int32)
    diag = np.zeros(n, dtype=np.int64)
    for i in range(n):
        split[i, i] = i
    states = 0
    candidates = 0
    for d in range(1, n):
        dcount = 0
        for i in range(n - d):
            j = i + d
            lo = split[i, j - 1]
            hi = split[i + 1, j]
            if hi > j - 1:
                hi = j - 1
            ci = cost[i]
            best = np.inf
            bestk = lo
            for k in range(lo, hi + 1):
                v = ci[k] + cost[k + 1, j]
                if v <= best:
                    best = v
                    bestk = k
            dcount += hi - lo + 1
            cost[i, j] = 2.0 * (xs[j] - xs[i]) + best
            split[i, j] = bestk
            states += 1
        diag[d] = dcount
        candidates += dcount
    return cost, split, states, candidates, diag
