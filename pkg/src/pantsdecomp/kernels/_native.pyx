# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled collinear DP kernels; algorithmic twin of pantsdecomp.kernels.pure."""

import numpy as np

BACKEND_NAME = "native"

cdef double INF = float("inf")


def collinear_naive(double[::1] xs):
    cdef Py_ssize_t n = xs.shape[0]
    cost_arr = np.zeros((n, n), dtype=np.float64)
    split_arr = np.zeros((n, n), dtype=np.int32)
    diag_arr = np.zeros(n, dtype=np.int64)
    cdef double[:, ::1] cost = cost_arr
    cdef int[:, ::1] split = split_arr
    cdef long long[::1] diag = diag_arr
    cdef Py_ssize_t i, j, k, d
    cdef long long states = 0, candidates = 0, dcount
    cdef double best, v
    cdef Py_ssize_t bestk
    for i in range(n):
        split[i, i] = <int>i
    for d in range(1, n):
        dcount = 0
        for i in range(n - d):
            j = i + d
            best = INF
            bestk = i
            for k in range(i, j):
                v = cost[i, k] + cost[k + 1, j]
                if v <= best:
                    best = v
                    bestk = k
            dcount += d
            cost[i, j] = 2.0 * (xs[j] - xs[i]) + best
            split[i, j] = <int>bestk
            states += 1
        diag[d] = dcount
        candidates += dcount
    return cost_arr, split_arr, int(states), int(candidates), diag_arr


def collinear_yao(double[::1] xs):
    cdef Py_ssize_t n = xs.shape[0]
    cost_arr = np.zeros((n, n), dtype=np.float64)
    split_arr = np.zeros((n, n), dtype=np.int32)
    diag_arr = np.zeros(n, dtype=np.int64)
    cdef double[:, ::1] cost = cost_arr
    cdef int[:, ::1] split = split_arr
    cdef long long[::1] diag = diag_arr
    cdef Py_ssize_t i, j, k, d, lo, hi
    cdef long long states = 0, candidates = 0, dcount
    cdef double best, v
    cdef Py_ssize_t bestk
    for i in range(n):
        split[i, i] = <int>i
    for d in range(1, n):
        dcount = 0
        for i in range(n - d):
            j = i + d
            lo = split[i, j - 1]
            hi = split[i + 1, j]
            if hi > j - 1:
                hi = j - 1
            best = INF
            bestk = lo
            for k in range(lo, hi + 1):
                v = cost[i, k] + cost[k + 1, j]
                if v <= best:
                    best = v
                    bestk = k
            dcount += hi - lo + 1
            cost[i, j] = 2.0 * (xs[j] - xs[i]) + best
            split[i, j] = <int>bestk
            states += 1
        diag[d] = dcount
        candidates += dcount
    return cost_arr, split_arr, int(states), int(candidates), diag_arr
