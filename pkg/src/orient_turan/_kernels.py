"""Compiled bitset kernels for the hot counting loops.

Adjacency rows arrive as int64 arrays (one bitset word per vertex, n <= 62
so the sign bit is never touched).  Everything here is exact integer
arithmetic; results fit int64 for every reachable input (worst case
C(62,31) < 2^63).
"""

import numpy as np
from numba import njit


@njit(cache=True)
def _popcount(x):
    x = x - ((x >> 1) & 0x5555555555555555)
    x = (x & 0x3333333333333333) + ((x >> 2) & 0x3333333333333333)
    x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0F
    return (x * 0x0101010101010101) >> 56


@njit(cache=True)
def tt_profile(out_masks, r_max):
    """counts[d] = number of d-vertex transitive-tournament subsets, d = 1..r_max.

    Depth-first walk over chains v1 -> v2 -> ... where each next vertex is
    drawn from the running intersection of out-neighbourhoods; every TT_d
    subset is visited exactly once through its unique topological order.
    """
    n = out_masks.shape[0]
    counts = np.zeros(r_max + 1, dtype=np.int64)
    if n == 0 or r_max < 1:
        return counts
    full = (np.int64(1) << n) - 1
    cand = np.zeros(r_max + 1, dtype=np.int64)
    rem = np.zeros(r_max + 1, dtype=np.int64)
    cand[0] = full
    rem[0] = full
    level = 0
    while level >= 0:
        m = rem[level]
        if m == 0:
            level -= 1
            continue
        low = m & -m
        rem[level] = m ^ low
        v = _popcount(low - 1)
        counts[level + 1] += 1
        if level + 1 < r_max:
            nc = cand[level] & out_masks[v]
            if nc != 0:
                level += 1
                cand[level] = nc
                rem[level] = nc
    return counts


@njit(cache=True)
def tt_count(out_masks, r):
    """Number of TT_r subsets; prunes branches whose candidate pool is too small."""
    n = out_masks.shape[0]
    if r < 1 or r > n:
        return np.int64(0)
    full = (np.int64(1) << n) - 1
    cand = np.zeros(r + 1, dtype=np.int64)
    rem = np.zeros(r + 1, dtype=np.int64)
    cand[0] = full
    rem[0] = full
    level = 0
    total = np.int64(0)
    while level >= 0:
        if level == r - 1:
            total += _popcount(rem[level])
            level -= 1
            continue
        m = rem[level]
        if m == 0:
            level -= 1
            continue
        low = m & -m
        rem[level] = m ^ low
        v = _popcount(low - 1)
        nc = cand[level] & out_masks[v]
        if _popcount(nc) >= r - level - 1:
            level += 1
            cand[level] = nc
            rem[level] = nc
    return total


@njit(cache=True)
def kst_count(in_masks, s, t, binom):
    """Sum of C(common-in-degree(T'), s) over all t-subsets T' of the vertices.

    Sinks are chosen in increasing vertex order; the common in-neighbour
    intersection is maintained incrementally and a branch dies as soon as the
    intersection drops below s bits (it can only shrink).
    """
    n = in_masks.shape[0]
    if t < 1 or t > n or s < 1:
        return np.int64(0)
    full = (np.int64(1) << n) - 1
    start = np.zeros(t + 1, dtype=np.int64)
    inter = np.zeros(t + 1, dtype=np.int64)
    start[0] = 0
    inter[0] = full
    level = 0
    total = np.int64(0)
    while level >= 0:
        v = start[level]
        if v > n - (t - level):
            level -= 1
            continue
        start[level] = v + 1
        nm = inter[level] & in_masks[v]
        if level + 1 == t:
            d = _popcount(nm)
            if d >= s:
                total += binom[d, s]
        elif _popcount(nm) >= s:
            level += 1
            start[level] = v + 1
            inter[level] = nm
    return total
