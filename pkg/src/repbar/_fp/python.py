"""Numpy-vectorized fallback for the F_p row-reduction kernel."""

from __future__ import annotations

import numpy as np


def rref_inplace(m: np.ndarray, p: int):
    """Reduce m to RREF in place; return the pivot columns."""
    nrows, ncols = m.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        col = m[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r] = (m[r] * inv) % p
        rest = m[:, c].copy()
        rest[r] = 0
        hit = np.nonzero(rest)[0]
        if hit.size:
            m[hit] = (m[hit] - np.outer(rest[hit], m[r])) % p
        pivots.append(c)
        r += 1
    return pivots
