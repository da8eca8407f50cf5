# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: n-th-digit tail accumulation and imperfect-law scan."""

from libc.math cimport fabs, log, log1p

import numpy as np

cdef double _LN10 = log(10.0)


def nth_digit_tail_sum(long d, int n):
    """Neumaier-compensated sum of log10(1 + 1/(10k + d)) over the k range."""
    cdef long lo = <long> (10 ** (n - 2))
    cdef long hi = <long> (10 ** (n - 1))
    cdef double acc = 0.0, comp = 0.0, term, t
    cdef long k
    for k in range(lo, hi):
        term = log1p(1.0 / (10.0 * k + d))
        t = acc + term
        if fabs(acc) >= fabs(term):
            comp += (acc - t) + term
        else:
            comp += (term - t) + acc
        acc = t
    return (acc + comp) / _LN10


def imperfect_scan(double[::1] observed, double[:, ::1] l_matrix, double[::1] ns_values):
    """Coarse Pearson scan; see _purekernels.imperfect_scan for the contract."""
    cdef Py_ssize_t n_ns = ns_values.shape[0]
    cdef Py_ssize_t n_s = l_matrix.shape[0]
    cdef Py_ssize_t n_d = l_matrix.shape[1]
    best_chi2 = np.empty(n_ns, dtype=np.float64)
    best_idx = np.empty(n_ns, dtype=np.intp)
    cdef double[::1] bc = best_chi2
    cdef Py_ssize_t[::1] bi = best_idx
    cdef double ns, acc, e, diff, best
    cdef Py_ssize_t i, j, k, jbest
    for i in range(n_ns):
        ns = ns_values[i]
        best = -1.0
        jbest = 0
        for j in range(n_s):
            acc = 0.0
            for k in range(n_d):
                e = ns * l_matrix[j, k]
                diff = observed[k] - e
                acc += diff * diff / e
            if best < 0.0 or acc < best:
                best = acc
                jbest = j
        bc[i] = best
        bi[i] = jbest
    return best_chi2, best_idx
