"""Minimal free resolutions, syzygies and Betti numbers.

The resolver walks the chain M <- R^{b_0} <- R^{b_1} <- ... one step at
a time.  At each step the generators of the current syzygy are the
complement of the pivot columns of its radical (a fixed, deterministic
choice), the next syzygy is the kernel of the induced cover, and
minimality (syzygy inside m times the free module) plus surjectivity of
the cover are asserted as internal invariants.
"""

from dataclasses import dataclass

import numpy as np

from . import linalg, modules


def _kernel_from_rref(r, piv, cols, p):
    pivset = set(piv)
    free = [c for c in range(cols) if c not in pivset]
    k = np.zeros((cols, len(free)), dtype=np.int64)
    for idx, c in enumerate(free):
        k[c, idx] = 1
        for row, pc in enumerate(piv):
            k[pc, idx] = (-int(r[row, c])) % p
    return k


class Resolver:
    """Lazily extended minimal free resolution of a module."""

    def __init__(self, M):
        self.module = M
        self.ring = M.ring
        self.p = M.p
        self.chain = [M]          # C_0 = M, C_1, ... (syzygies as modules)
        self.betti = []
        self.gen_indices = []     # generator coordinate choices per level
        self.syzygy_rows = []     # rows of C_{i+1} inside R^{b_i}
        self.syzygy_pivots = []
        self.differentials = []   # delta_i : R^{b_{i+1}} -> R^{b_i}, ring entries

    def extend_to(self, depth):
        """Run steps until betti[0..depth] are known."""
        while len(self.betti) <= depth:
            self._step()
        return self

    def _step(self):
        i = len(self.betti)
        C = self.chain[i]
        ring = self.ring
        p = self.p

        piv = set(linalg.leading_positions(C.radical_rows()))
        gens = [j for j in range(C.dim) if j not in piv]
        b = len(gens)
        self.betti.append(b)
        self.gen_indices.append(gens)

        if i >= 1:
            rows = self.syzygy_rows[i - 1]
            prev_b = self.betti[i - 1]
            delta = [[None] * b for _ in range(prev_b)]
            for k, gk in enumerate(gens):
                amb = rows[gk]
                for g in range(prev_b):
                    delta[g][k] = amb[g * ring.dim:(g + 1) * ring.dim].copy()
            self.differentials.append(delta)

        phi = np.zeros((C.dim, b * ring.dim), dtype=np.int64)
        for j in range(ring.dim):
            act = C.mono_action(ring.basis[j])
            for k, gk in enumerate(gens):
                phi[:, k * ring.dim + j] = act[:, gk]

        r, pivots = linalg.rref(phi, p)
        assert len(pivots) == C.dim, "minimal generators failed to cover the module"
        kern = _kernel_from_rref(r, pivots, b * ring.dim, p)
        rows = linalg.span_rows(kern.T, p) if kern.size else linalg.empty_subspace(b * ring.dim)
        if rows.size:
            # minimality: the syzygy sits inside m * R^b (no unit coordinates)
            unit_cols = [k * ring.dim for k in range(b)]
            assert not np.any(rows[:, unit_cols])

        self.syzygy_rows.append(rows)
        self.syzygy_pivots.append(linalg.leading_positions(rows))
        free = modules.ModuleRep.free(ring, b)
        self.chain.append(modules.submodule_module(free, rows))

    # -- views ---------------------------------------------------------------

    def betti_vector(self, max_i):
        self.extend_to(max_i)
        return list(self.betti[: max_i + 1])

    def syzygy(self, i):
        if i < 0:
            raise ValueError("syzygy index must be >= 0")
        self.extend_to(max(i - 1, 0))
        while len(self.chain) <= i:
            self._step()
        return self.chain[i]

    def syzygy_ambient(self, i):
        """(rows, pivots) realizing the i-th syzygy inside R^{b_{i-1}} (i >= 1)."""
        if i < 1:
            raise ValueError("ambient realization exists for i >= 1")
        while len(self.syzygy_rows) < i:
            self._step()
        return self.syzygy_rows[i - 1], self.syzygy_pivots[i - 1]

    def differential(self, i):
        """delta_i : R^{b_{i+1}} -> R^{b_i} as a matrix of ring elements."""
        while len(self.differentials) <= i:
            self._step()
        return self.differentials[i]


@dataclass
class Resolution:
    betti: list
    differentials: list
    syzygies: list


def minimal_resolution(M, max_i):
    """Betti numbers b_0..b_max_i, differentials delta_0..delta_{max_i-1},
    and the syzygy modules M_1..M_max_i."""
    if max_i < 0:
        raise ValueError("resolution depth must be >= 0")
    res = Resolver(M).extend_to(max_i)
    return Resolution(
        betti=list(res.betti[: max_i + 1]),
        differentials=[res.differentials[i] for i in range(max_i)],
        syzygies=[res.chain[i] for i in range(1, max_i + 1)],
    )


def betti_vector(M, max_i):
    return Resolver(M).betti_vector(max_i)


def syzygy(M, i):
    if i < 1:
        raise ValueError("syzygy index must be >= 1")
    return Resolver(M).syzygy(i)
