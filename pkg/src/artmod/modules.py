"""Finite-length R-modules as commuting matrix representations.

A module of k-dimension d is a tuple of d x d matrices, one per ring
variable, that commute pairwise and kill every staircase generator
monomial of R (which also forces nilpotency).  Lengths are k-dimensions,
submodules are action-stable subspaces in canonical (RREF-row) form, and
quotients pick the complement of the pivot columns in a fixed order, so
every construction is deterministic.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import linalg


class ZeroModuleError(ValueError):
    pass


class ModuleRep:
    def __init__(self, ring, actions, check=True):
        self.ring = ring
        self.p = ring.p
        self.actions = [np.asarray(a, dtype=np.int64) % ring.p for a in actions]
        if len(self.actions) != ring.nvars:
            raise ValueError("need one action matrix per variable")
        self.dim = self.actions[0].shape[0] if self.actions else 0
        for a in self.actions:
            if a.shape != (self.dim, self.dim):
                raise ValueError("action matrices must be square of equal size")
        self._mono_cache = {}
        self._radical = None
        self._socle = None
        if check:
            self.validate()

    # -- structure checks -------------------------------------------------

    def validate(self):
        p = self.p
        for u in range(len(self.actions)):
            for v in range(u + 1, len(self.actions)):
                ab = linalg.matmul(self.actions[u], self.actions[v], p)
                ba = linalg.matmul(self.actions[v], self.actions[u], p)
                if not np.array_equal(ab, ba):
                    raise ValueError(f"actions for variables {u} and {v} do not commute")
        for g in self.ring.staircase:
            if np.any(self.mono_action(g)):
                raise ValueError(f"staircase relation {g} does not vanish on the module")

    # -- basic data --------------------------------------------------------

    @classmethod
    def free(cls, ring, n):
        acts = []
        for a in ring.actions:
            big = np.zeros((n * ring.dim, n * ring.dim), dtype=np.int64)
            for k in range(n):
                big[k * ring.dim:(k + 1) * ring.dim, k * ring.dim:(k + 1) * ring.dim] = a
            acts.append(big)
        return cls(ring, acts, check=False)

    @classmethod
    def zero(cls, ring):
        return cls(ring, [np.zeros((0, 0), dtype=np.int64) for _ in range(ring.nvars)],
                   check=False)

    @property
    def length(self):
        return self.dim

    def mono_action(self, e):
        e = tuple(int(a) for a in e)
        m = self._mono_cache.get(e)
        if m is not None:
            return m
        if sum(e) == 0:
            m = np.eye(self.dim, dtype=np.int64)
        else:
            # peel one variable so intermediate products get cached too
            v = next(i for i, a in enumerate(e) if a > 0)
            prev = list(e)
            prev[v] -= 1
            m = linalg.matmul(self.actions[v], self.mono_action(tuple(prev)), self.p)
        self._mono_cache[e] = m
        return m

    def elem_action(self, vec):
        """Action of a ring element (coefficient vector over R's basis)."""
        v = np.asarray(vec, dtype=np.int64) % self.p
        out = np.zeros((self.dim, self.dim), dtype=np.int64)
        for j in np.nonzero(v)[0]:
            # reduce per term so sums stay inside int64 for any allowed p
            out = (out + int(v[j]) * self.mono_action(self.ring.basis[j])) % self.p
        return out

    def fingerprint(self):
        return (self.p, self.dim, tuple(a.tobytes() for a in self.actions))

    def __repr__(self):
        return f"ModuleRep(len={self.dim}, ring={self.ring!r})"

    # -- distinguished submodules -------------------------------------------

    def radical_rows(self):
        """mM as canonical rows."""
        if self._radical is None:
            if self.dim == 0:
                self._radical = linalg.empty_subspace(0)
            else:
                pieces = [a.T for a in self.actions]
                self._radical = linalg.span_rows(np.vstack(pieces), self.p)
        return self._radical

    def socle_rows(self):
        if self._socle is None:
            if self.dim == 0:
                self._socle = linalg.empty_subspace(0)
            else:
                cols = linalg.kernel_basis(np.vstack(self.actions), self.p)
                self._socle = linalg.span_rows(cols.T, self.p)
        return self._socle

    def min_gens(self):
        return self.dim - self.radical_rows().shape[0]


@dataclass(frozen=True, eq=False)
class Submodule:
    """An action-stable subspace of a module, in canonical row form."""

    parent: ModuleRep
    rows: np.ndarray

    @property
    def length(self):
        return self.rows.shape[0]

    @property
    def pivots(self):
        return linalg.leading_positions(self.rows)

    def as_module(self):
        return submodule_module(self.parent, self.rows)

    def contains(self, other_rows):
        return linalg.subspace_contains(self.rows, other_rows, self.parent.p)


def _closure_under_actions(M, rows):
    p = M.p
    rows = linalg.span_rows(rows, p) if rows.shape[0] else rows
    while True:
        if rows.shape[0] == 0:
            return rows
        pieces = [rows] + [linalg.matmul(rows, a.T, p) for a in M.actions]
        new = linalg.span_rows(np.vstack(pieces), p)
        if new.shape[0] == rows.shape[0]:
            return new
        rows = new


def submodule_module(M, rows):
    """Restrict M's actions to a stable subspace given by canonical rows."""
    if rows.shape[0] == 0:
        return ModuleRep.zero(M.ring)
    piv = linalg.leading_positions(rows)
    acts = []
    for a in M.actions:
        imgs = linalg.matmul(rows, a.T, M.p)
        acts.append(imgs[:, piv].T % M.p)
    return ModuleRep(M.ring, acts, check=False)


def quotient(M, sub):
    """M / S with the complement of the pivot columns as the new basis."""
    rows = sub.rows if isinstance(sub, Submodule) else sub
    p = M.p
    if rows.shape[0] == 0:
        return M
    if not _is_stable(M, rows):
        raise ValueError("subspace is not action-stable")
    piv = linalg.leading_positions(rows)
    comp = [j for j in range(M.dim) if j not in set(piv)]
    # projection: subtract pivot multiples of the RREF rows, keep complement coords
    proj = np.zeros((len(comp), M.dim), dtype=np.int64)
    for t, c in enumerate(comp):
        proj[t, c] = 1
    for k, pc in enumerate(piv):
        for t, c in enumerate(comp):
            proj[t, pc] = (proj[t, pc] - int(rows[k, c])) % p
    inj = np.zeros((M.dim, len(comp)), dtype=np.int64)
    for t, c in enumerate(comp):
        inj[c, t] = 1
    acts = [linalg.matmul(proj, linalg.matmul(a, inj, p), p) for a in M.actions]
    return ModuleRep(M.ring, acts, check=False)


def _is_stable(M, rows):
    for a in M.actions:
        imgs = linalg.matmul(rows, a.T, M.p)
        if not linalg.subspace_contains(rows, imgs, M.p):
            return False
    return True


def ideal_times(M, ideal):
    """IM as a Submodule.  Stable because generator actions commute with R."""
    if M.dim == 0 or not ideal.gens:
        return Submodule(M, linalg.empty_subspace(M.dim))
    pieces = [M.elem_action(g).T for g in ideal.gens]
    rows = linalg.span_rows(np.vstack(pieces), M.p)
    return Submodule(M, rows)


def radical(M):
    return Submodule(M, M.radical_rows())


def socle(M):
    return Submodule(M, M.socle_rows())


def annihilated_by_ideal(M, ideal):
    return all(not np.any(M.elem_action(g)) for g in ideal.gens)


def mI_annihilates(M, ideal):
    """True when m·I·M = 0."""
    im = ideal_times(M, ideal).rows
    if im.shape[0] == 0:
        return True
    for a in M.actions:
        if np.any(linalg.matmul(im, a.T, M.p) % M.p):
            return False
    return True


def I2M_is_zero(M, ideal):
    im = ideal_times(M, ideal).rows
    if im.shape[0] == 0:
        return True
    sub = submodule_module(M, im)
    return ideal_times(sub, ideal).length == 0


# -- length invariants ------------------------------------------------------


def length(M):
    return M.dim


def min_gens(M):
    return M.min_gens()


def gamma(M, ideal):
    """The exact length ratio l(IM)/l(M/IM) as a Fraction."""
    if M.dim == 0:
        raise ZeroModuleError("gamma is undefined on the zero module")
    if not ideal.is_proper:
        raise ValueError("improper ideal")
    lim = ideal_times(M, ideal).length
    cov = M.dim - lim
    value = Fraction(M.dim, cov) - 1
    assert value == Fraction(lim, cov)
    return value


def is_free(M):
    return M.dim == M.min_gens() * M.ring.dim


def is_I_free(M, ideal):
    """l(M/IM) == b0(M) * l(R/I): M/IM is a free R/I-module."""
    if M.dim == 0:
        raise ZeroModuleError("I-freeness is undefined on the zero module")
    if not ideal.is_proper:
        raise ValueError("improper ideal")
    s = M.ring.dim - ideal.length
    return M.dim - ideal_times(M, ideal).length == M.min_gens() * s


# -- constructions ------------------------------------------------------------


def cokernel(ring, gens, columns):
    """coker(R^r -> R^g) for relation columns of ring elements.

    Each column is a length-``gens`` list of coefficient vectors.
    """
    free = ModuleRep.free(ring, gens)
    if gens == 0:
        return free
    pieces = []
    for col in columns:
        if len(col) != gens:
            raise ValueError("relation column has wrong length")
        block = np.vstack([ring.mult_matrix(t) for t in col])
        pieces.append(block.T)
    if not pieces:
        return free
    rows = linalg.span_rows(np.vstack(pieces), ring.p)
    return quotient(free, rows)


def cyclic(ring, ideal):
    """R/I as a module."""
    free = ModuleRep.free(ring, 1)
    if ideal.rows.shape[0] == 0:
        return free
    return quotient(free, ideal.rows)


def tensor(M, N):
    """M ⊗_R N, as the quotient of M ⊗_k N by the action-balancing relations."""
    if M.ring is not N.ring and M.ring.fingerprint() != N.ring.fingerprint():
        raise ValueError("tensor factors live over different rings")
    p = M.p
    dm, dn = M.dim, N.dim
    if dm == 0 or dn == 0:
        return ModuleRep.zero(M.ring)
    eye_m = np.eye(dm, dtype=np.int64)
    eye_n = np.eye(dn, dtype=np.int64)
    ambient_actions = [np.kron(a, eye_n) for a in M.actions]
    pieces = []
    for v in range(M.ring.nvars):
        k = (np.kron(M.actions[v], eye_n) - np.kron(eye_m, N.actions[v])) % p
        if np.any(k):
            pieces.append(k.T)
    ambient = ModuleRep(M.ring, ambient_actions, check=False)
    if not pieces:
        return ambient
    rows = linalg.span_rows(np.vstack(pieces), p)
    if rows.shape[0] == 0:
        return ambient
    return quotient(ambient, rows)


def direct_sum(M, N):
    acts = []
    for a, b in zip(M.actions, N.actions):
        big = np.zeros((M.dim + N.dim, M.dim + N.dim), dtype=np.int64)
        big[: M.dim, : M.dim] = a
        big[M.dim:, M.dim:] = b
        acts.append(big)
    return ModuleRep(M.ring, acts, check=False)


def matlis_dual(M):
    """The k-linear dual with transposed actions."""
    return ModuleRep(M.ring, [a.T.copy() for a in M.actions], check=False)


def canonical_module(ring):
    """The dualizing module: the dual of R as a module over itself."""
    return matlis_dual(ModuleRep.free(ring, 1))
