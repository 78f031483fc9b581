"""Exact dense linear algebra over F_p.

Every rank, kernel, and solve in the package funnels through this module.
Two interchangeable backends implement the row-reduction kernel:

* ``_core`` -- Cython extension (built by setup.py), used when importable;
* ``python`` -- numpy-vectorized fallback, always available.

Set ``REPBAR_PURE_PY=1`` to force the fallback.  ``benchmarks/bench_fp.py``
compares the two.  All matrices are numpy int64 arrays with entries reduced
into ``[0, p)``; results are exact.
"""

from __future__ import annotations

import os

import numpy as np

from . import python as _py

if os.environ.get("REPBAR_PURE_PY"):
    _impl = _py
    BACKEND = "python"
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _py
        BACKEND = "python"


def asmatrix(a, p: int) -> np.ndarray:
    m = np.array(a, dtype=np.int64, copy=True)
    if m.ndim != 2:
        m = m.reshape(1, -1) if m.size else m.reshape(0, 0)
    m %= p
    return np.ascontiguousarray(m)


def rref(a, p: int):
    """Reduced row echelon form. Returns (matrix, pivot column list)."""
    m = asmatrix(a, p)
    if m.size == 0:
        return m, []
    pivots = _impl.rref_inplace(m, p)
    return m, list(pivots)


def rank(a, p: int) -> int:
    return len(rref(a, p)[1])


def nullspace(a, p: int) -> np.ndarray:
    """Basis of the right kernel, one vector per row."""
    m = asmatrix(a, p)
    ncols = m.shape[1] if m.ndim == 2 else 0
    if m.size == 0:
        return np.eye(ncols, dtype=np.int64)
    r, pivots = rref(m, p)
    free = [c for c in range(ncols) if c not in pivots]
    out = np.zeros((len(free), ncols), dtype=np.int64)
    for k, fc in enumerate(free):
        out[k, fc] = 1
        for i, pc in enumerate(pivots):
            out[k, pc] = (-int(r[i, fc])) % p
    return out


def solve(a, b, p: int):
    """One solution x of a @ x = b (mod p), or None if inconsistent."""
    m = asmatrix(a, p)
    rhs = np.asarray(b, dtype=np.int64).reshape(-1) % p
    if m.size == 0:
        return None if rhs.any() else np.zeros(m.shape[1] if m.ndim == 2 else 0, dtype=np.int64)
    aug = np.hstack([m, rhs.reshape(-1, 1)])
    r, pivots = rref(aug, p)
    n = m.shape[1]
    if n in pivots:
        return None
    x = np.zeros(n, dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc] = r[i, n]
    return x


def row_space(a, p: int) -> np.ndarray:
    """Canonical basis (RREF rows) of the row space."""
    r, pivots = rref(a, p)
    return r[: len(pivots)]


def in_span(rows: np.ndarray, v, p: int) -> bool:
    """Whether v lies in the span of the given rows."""
    if rows.size == 0:
        return not (np.asarray(v) % p).any()
    return rank(np.vstack([rows, np.asarray(v, dtype=np.int64).reshape(1, -1)]), p) == rank(rows, p)
