"""Tor via the minimal resolution of the second argument.

Tensoring the resolution of N with M turns each differential entry into
its action matrix on M; Tor_i(M, N) is the homology of that complex of
plain F_p matrices.  Lengths only need two ranks per spot, so vanishing
tests never build the homology module itself.
"""

import numpy as np

from . import linalg, modules
from .resolutions import Resolver


def module_power(M, n):
    """M^n with block-diagonal actions."""
    acts = []
    for a in M.actions:
        big = np.zeros((n * M.dim, n * M.dim), dtype=np.int64)
        for k in range(n):
            big[k * M.dim:(k + 1) * M.dim, k * M.dim:(k + 1) * M.dim] = a
        acts.append(big)
    return modules.ModuleRep(M.ring, acts, check=False)


def tensored_differential(M, resolver, i):
    """The matrix of M ⊗ delta_{i-1} : M^{b_i} -> M^{b_{i-1}} (i >= 1)."""
    delta = resolver.differential(i - 1)
    rows_b = len(delta)
    cols_b = len(delta[0]) if rows_b else 0
    d = M.dim
    out = np.zeros((rows_b * d, cols_b * d), dtype=np.int64)
    for g in range(rows_b):
        for k in range(cols_b):
            entry = delta[g][k]
            if np.any(entry):
                out[g * d:(g + 1) * d, k * d:(k + 1) * d] = M.elem_action(entry)
    return out


def tor_length(M, N, i, resolver=None):
    """lambda(Tor_i(M, N)), computed from two ranks."""
    if i < 0:
        raise ValueError("Tor index must be >= 0")
    if M.dim == 0 or N.dim == 0:
        return 0
    res = resolver if resolver is not None else Resolver(N)
    res.extend_to(i + 1)
    b_i = res.betti[i]
    if b_i == 0:
        return 0
    spot = b_i * M.dim
    rank_in = linalg.rank(tensored_differential(M, res, i), M.p) if i >= 1 else 0
    rank_out = linalg.rank(tensored_differential(M, res, i + 1), M.p)
    return spot - rank_in - rank_out


def tor(M, N, i, resolver=None):
    """Tor_i(M, N) as a module (homology subquotient at spot i)."""
    if i < 0:
        raise ValueError("Tor index must be >= 0")
    if M.dim == 0 or N.dim == 0:
        return modules.ModuleRep.zero(M.ring)
    res = resolver if resolver is not None else Resolver(N)
    res.extend_to(i + 1)
    b_i = res.betti[i]
    if b_i == 0:
        return modules.ModuleRep.zero(M.ring)
    p = M.p
    ambient_dim = b_i * M.dim
    if i >= 1:
        d_in = tensored_differential(M, res, i)
        z_rows = linalg.span_rows(linalg.kernel_basis(d_in, p).T, p)
    else:
        z_rows = np.eye(ambient_dim, dtype=np.int64)
    d_out = tensored_differential(M, res, i + 1)
    b_rows = linalg.span_rows(d_out.T, p)
    assert linalg.subspace_contains(z_rows, b_rows, p), "boundaries escape cycles"
    ambient = module_power(M, b_i)
    zmod = modules.submodule_module(ambient, z_rows)
    if z_rows.shape[0] == 0:
        return zmod
    zpiv = linalg.leading_positions(z_rows)
    b_coords = linalg.span_rows(b_rows[:, zpiv], p) if b_rows.shape[0] else b_rows
    if b_coords.shape[0] == 0:
        return zmod
    return modules.quotient(zmod, b_coords)


def tor_vanishing_window(M, N, lo, hi, resolver=None):
    """Per-index vanishing flags for Tor_i(M, N), i in [lo, hi]."""
    if not (1 <= lo <= hi):
        raise ValueError("window must satisfy 1 <= lo <= hi")
    res = resolver if resolver is not None else Resolver(N)
    return [tor_length(M, N, i, resolver=res) == 0 for i in range(lo, hi + 1)]
