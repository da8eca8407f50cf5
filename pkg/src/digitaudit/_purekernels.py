"""Pure-Python (numpy) implementations of the hot numeric loops.

Used when the compiled extension is unavailable or disabled. Must stay
behaviourally interchangeable with ``_fastkernels``.
"""

import math

import numpy as np

_LN10 = math.log(10.0)
_CHUNK = 1 << 22  # bounds peak memory at ~32 MB of float64 per chunk


def nth_digit_tail_sum(d: int, n: int) -> float:
    """Sum of log10(1 + 1/(10k + d)) over k in [10^(n-2), 10^(n-1)).

    Accumulation is compensated: numpy pairwise sums per chunk, exact
    fsum across chunks, one final division by ln 10.
    """
    lo = 10 ** (n - 2)
    hi = 10 ** (n - 1)
    partials = []
    for start in range(lo, hi, _CHUNK):
        k = np.arange(start, min(start + _CHUNK, hi), dtype=np.float64)
        partials.append(float(np.log1p(1.0 / (10.0 * k + d)).sum()))
    return math.fsum(partials) / _LN10


def imperfect_scan(observed, l_matrix, ns_values):
    """Coarse Pearson scan of the imperfect-law parameter grid.

    observed:  9 first-digit counts.
    l_matrix:  precomputed log10(1/d + 1 + s*d), shape (n_s_grid, 9),
               rows ordered by ascending s.
    ns_values: candidate integer scales, as float64.

    Returns (best_chi2, best_idx): for every scale, the minimal statistic
    over the s grid and the row index attaining it (first minimum wins,
    i.e. ties resolve toward smaller s).
    """
    obs = np.asarray(observed, dtype=np.float64)
    lmat = np.asarray(l_matrix, dtype=np.float64)
    ns = np.asarray(ns_values, dtype=np.float64)
    best_chi2 = np.empty(ns.shape[0], dtype=np.float64)
    best_idx = np.empty(ns.shape[0], dtype=np.intp)
    for i in range(ns.shape[0]):
        expected = ns[i] * lmat
        chi2 = ((obs - expected) ** 2 / expected).sum(axis=1)
        j = int(np.argmin(chi2))
        best_chi2[i] = chi2[j]
        best_idx[i] = j
    return best_chi2, best_idx
