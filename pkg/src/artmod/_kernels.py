"""numba-compiled row reduction kernel.

Importing this module requires numba; ``linalg`` falls back to its
pure-numpy path when the import fails or when ARTMOD_BACKEND=numpy.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def _modpow(base, exp, p):
    result = 1
    b = base % p
    e = exp
    while e > 0:
        if e & 1:
            result = result * b % p
        b = b * b % p
        e >>= 1
    return result


@njit(cache=True)
def rref_inplace(a, p):
    """Reduce ``a`` (int64, entries in [0, p)) to RREF in place.

    Pivot choice: leftmost unfinished column, first row with a nonzero
    entry. Returns the pivot columns.
    """
    rows, cols = a.shape
    maxpiv = rows if rows < cols else cols
    piv = np.empty(maxpiv, dtype=np.int64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                pr = i
                break
        if pr == -1:
            continue
        if pr != r:
            for j in range(c, cols):
                t = a[r, j]
                a[r, j] = a[pr, j]
                a[pr, j] = t
        inv = _modpow(a[r, c], p - 2, p)
        if inv != 1:
            for j in range(c, cols):
                if a[r, j] != 0:
                    a[r, j] = a[r, j] * inv % p
        for i in range(rows):
            if i != r:
                f = a[i, c]
                if f != 0:
                    for j in range(c, cols):
                        if a[r, j] != 0:
                            a[i, j] = (a[i, j] - f * a[r, j]) % p
        piv[r] = c
        r += 1
    return piv[:r].copy()
