# cython: boundscheck=False, wraparound=False, cdivision=True
"""Cython implementation of the F_p row-reduction kernel."""

import numpy as np

cimport numpy as cnp

cnp.import_array()


cdef long long _inv_mod(long long a, long long p):
    # Fermat: a^(p-2) mod p by binary exponentiation.
    cdef long long result = 1
    cdef long long base = a % p
    cdef long long e = p - 2
    while e > 0:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


def rref_inplace(cnp.ndarray[cnp.int64_t, ndim=2] m, long long p):
    """Reduce m to RREF in place; return the pivot columns."""
    cdef Py_ssize_t nrows = m.shape[0]
    cdef Py_ssize_t ncols = m.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, k
    cdef long long inv, factor, tmp
    cdef cnp.int64_t[:, :] a = m
    pivots = []
    for c in range(ncols):
        if r >= nrows:
            break
        i = -1
        for j in range(r, nrows):
            if a[j, c] != 0:
                i = j
                break
        if i < 0:
            continue
        if i != r:
            for k in range(ncols):
                tmp = a[r, k]
                a[r, k] = a[i, k]
                a[i, k] = tmp
        inv = _inv_mod(a[r, c], p)
        if inv != 1:
            for k in range(c, ncols):
                a[r, k] = (a[r, k] * inv) % p
        for j in range(nrows):
            if j == r:
                continue
            factor = a[j, c]
            if factor == 0:
                continue
            for k in range(c, ncols):
                a[j, k] = (a[j, k] - factor * a[r, k]) % p
                if a[j, k] < 0:
                    a[j, k] += p
        pivots.append(c)
        r += 1
    return pivots
