"""Exact dense linear algebra over a prime field F_p.

Matrices are 2-D numpy int64 arrays with entries reduced into [0, p).
Everything is deterministic: pivots are chosen leftmost-column-first,
first-suitable-row, and pivot entries are normalised to 1, so identical
inputs produce bit-identical outputs.

A subspace of F_p^n is represented by the nonzero rows of its reduced
row echelon form.  That form is canonical: two subspaces are equal
exactly when the representing arrays are equal.

Row reduction has two interchangeable backends: a numba ``@njit``
kernel (the default whenever numba imports cleanly) and a pure-numpy
fallback.  Set ``ARTMOD_BACKEND=numpy`` or ``=numba`` to pin one; both
produce identical output.
"""

import os

import numpy as np

_BACKEND = None
_PRIMES_SEEN = set()


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def check_prime(p):
    if p in _PRIMES_SEEN:
        return p
    if not isinstance(p, (int, np.integer)) or not is_prime(int(p)):
        raise ValueError(f"modulus {p!r} is not prime")
    if p >= 2**31:
        raise ValueError("modulus too large for exact int64 arithmetic")
    _PRIMES_SEEN.add(p)
    return int(p)


def _pick_backend():
    name = os.environ.get("ARTMOD_BACKEND", "").strip().lower()
    if name == "numpy":
        return "numpy"
    if name == "numba":
        from . import _kernels  # noqa: F401 -- fail loudly if numba is broken

        return "numba"
    if name:
        raise ValueError(f"unknown backend {name!r} (expected 'numba' or 'numpy')")
    try:
        from . import _kernels  # noqa: F401

        return "numba"
    except ImportError:
        return "numpy"


def current_backend():
    global _BACKEND
    if _BACKEND is None:
        _BACKEND = _pick_backend()
    return _BACKEND


def use_backend(name):
    """Pin the elimination backend ('numba' or 'numpy') for this process."""
    global _BACKEND
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba":
        from . import _kernels  # noqa: F401

    _BACKEND = name


def asmat(a, p):
    """Coerce to a fresh 2-D int64 array with entries reduced mod p."""
    m = np.array(a, dtype=np.int64)
    if m.ndim == 1:
        m = m.reshape(1, -1)
    elif m.ndim != 2:
        raise ValueError("expected a matrix")
    return m % p


def asvec(v, p):
    m = np.array(v, dtype=np.int64)
    if m.ndim != 1:
        raise ValueError("expected a vector")
    return m % p


def _rref_numpy(a, p):
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        if inv != 1:
            a[r] = a[r] * inv % p
        col = a[:, c].copy()
        col[r] = 0
        if np.any(col):
            a -= np.outer(col, a[r])
            a %= p
        pivots.append(c)
        r += 1
    return a, pivots


def rref(a, p):
    """Reduced row echelon form.  Returns (matrix, pivot column list)."""
    check_prime(p)
    m = asmat(a, p)
    if m.size == 0:
        return m, []
    if current_backend() == "numba":
        from . import _kernels

        m = np.ascontiguousarray(m)
        piv = _kernels.rref_inplace(m, p)
        return m, [int(x) for x in piv]
    return _rref_numpy(m, p)


def rank(a, p):
    return len(rref(a, p)[1])


def kernel_basis(a, p):
    """Basis of the right nullspace, one column per free column of ``a``.

    The column for free column c has a 1 in position c, zeros in the
    other free positions, and the negated RREF entries in the pivot
    positions; this is the canonical nullspace basis.
    """
    m = asmat(a, p)
    r, piv = rref(m, p)
    cols = m.shape[1]
    pivset = set(piv)
    free = [c for c in range(cols) if c not in pivset]
    k = np.zeros((cols, len(free)), dtype=np.int64)
    for idx, c in enumerate(free):
        k[c, idx] = 1
        for row, pc in enumerate(piv):
            k[pc, idx] = (-int(r[row, c])) % p
    return k


def image_basis(a, p):
    """The pivot columns of ``a``: a basis of the column space."""
    m = asmat(a, p)
    _, piv = rref(m, p)
    return m[:, piv].copy()


def solve(a, b, p):
    """One solution of a x = b (free variables zero), or None."""
    m = asmat(a, p)
    v = asvec(b, p)
    if v.shape[0] != m.shape[0]:
        raise ValueError("dimension mismatch")
    aug = np.hstack([m, v.reshape(-1, 1)])
    r, piv = rref(aug, p)
    ncols = m.shape[1]
    if piv and piv[-1] == ncols:
        return None
    x = np.zeros(ncols, dtype=np.int64)
    for row, pc in enumerate(piv):
        x[pc] = r[row, ncols]
    return x


def matmul(a, b, p):
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.size == 0 or b.size == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    # int64 matmul has no BLAS path; float64 is exact while
    # (p-1)^2 * inner_dim < 2^53 and far faster for the sizes we hit.
    inner = a.shape[1]
    if (p - 1) * (p - 1) * inner < 2**53:
        c = np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)
    elif (p - 1) * (p - 1) * inner < 2**63:
        c = a @ b
    else:
        raise ValueError("modulus too large for exact matrix products at this size")
    return c % p


def span_rows(rows, p):
    """Canonical (RREF) basis of the row span."""
    m = asmat(rows, p)
    if m.shape[0] == 0:
        return m
    r, piv = rref(m, p)
    return r[: len(piv)].copy()


def empty_subspace(dim):
    return np.zeros((0, dim), dtype=np.int64)


def leading_positions(rows):
    """Pivot column of each row of an RREF basis."""
    out = []
    for row in rows:
        nz = np.nonzero(row)[0]
        out.append(int(nz[0]))
    return out


def subspace_sum(u, v, p):
    if u.shape[0] == 0:
        return span_rows(v, p) if v.shape[0] else v.copy()
    if v.shape[0] == 0:
        return u.copy()
    return span_rows(np.vstack([u, v]), p)


def subspace_eq(u, v):
    return u.shape == v.shape and np.array_equal(u, v)


def subspace_contains(u, v, p):
    """Does the span of rows u contain the span of rows v?"""
    if v.shape[0] == 0:
        return True
    if u.shape[0] == 0:
        return not np.any(v)
    return rank(np.vstack([u, v]), p) == u.shape[0]


def in_span(rows, vec, p):
    return subspace_contains(rows, np.asarray(vec, dtype=np.int64).reshape(1, -1), p)


def subspace_intersection(u, v, p):
    """Canonical basis of (row span of u) ∩ (row span of v)."""
    if u.shape[0] == 0 or v.shape[0] == 0:
        return empty_subspace(u.shape[1] if u.ndim == 2 else v.shape[1])
    # x = c·u = d·v  <=>  (c, d) in ker [u^T | -v^T]
    stacked = np.hstack([u.T, (-v.T) % p])
    k = kernel_basis(stacked, p)
    if k.shape[1] == 0:
        return empty_subspace(u.shape[1])
    coeffs = k[: u.shape[0], :].T
    vectors = matmul(coeffs, u, p)
    return span_rows(vectors, p)


def coords_in_rref(rows, pivots, vectors, p):
    """Coordinates of ``vectors`` (rows, inside the span) w.r.t. an RREF basis."""
    v = np.asarray(vectors, dtype=np.int64)
    if v.ndim == 1:
        v = v.reshape(1, -1)
    return v[:, pivots] % p
