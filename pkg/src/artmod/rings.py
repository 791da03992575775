"""Artinian local monomial algebras R = k[x_1..x_n]/J over F_p.

J is a monomial ideal containing a power of every variable, so R has a
finite basis of standard monomials (those not divisible by any staircase
generator).  Elements are coefficient vectors over that basis, in graded
order; multiplication is exponent addition with anything falling outside
the staircase mapped to zero.
"""

from dataclasses import dataclass

import numpy as np

from . import linalg


class NotArtinianError(ValueError):
    pass


DEFAULT_P = 101


def graded_key(e):
    # total degree first, then earlier variables first within a degree
    return (sum(e), tuple(-c for c in e))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def minimalize_staircase(staircase):
    """Drop redundant generators (those divisible by another generator)."""
    gens = sorted(set(tuple(int(c) for c in g) for g in staircase), key=graded_key)
    keep = []
    for g in gens:
        if not any(_divides(h, g) for h in keep):
            keep.append(g)
    return keep


class MonomialAlgebra:
    """An Artinian local monomial quotient with its standard-monomial basis.

    ``basis`` lists exponent vectors in graded order (the unit first);
    ``actions[v]`` is the multiplication-by-x_v matrix on coefficient
    vectors.  Immutable after construction.
    """

    def __init__(self, nvars, staircase, p=DEFAULT_P, varnames=None):
        self.p = linalg.check_prime(p)
        if nvars < 1:
            raise ValueError("need at least one variable")
        self.nvars = int(nvars)
        gens = []
        for g in staircase:
            g = tuple(int(c) for c in g)
            if len(g) != self.nvars:
                raise ValueError(f"exponent vector {g} has wrong arity")
            if any(c < 0 for c in g):
                raise ValueError(f"negative exponent in {g}")
            gens.append(g)
        if not gens:
            raise NotArtinianError("empty staircase is not Artinian")
        gens = minimalize_staircase(gens)
        if gens[0] == (0,) * self.nvars:
            raise ValueError("staircase contains the unit monomial (zero ring)")
        self.staircase = tuple(gens)

        bounds = [None] * self.nvars
        for g in gens:
            support = [v for v in range(self.nvars) if g[v] > 0]
            if len(support) == 1:
                v = support[0]
                if bounds[v] is None or g[v] < bounds[v]:
                    bounds[v] = g[v]
        for v in range(self.nvars):
            if bounds[v] is None:
                raise NotArtinianError(f"not Artinian: variable {v} has no pure power bound")

        if varnames is None:
            varnames = ["x", "y", "z"][: self.nvars] if self.nvars <= 3 else [
                f"x{i+1}" for i in range(self.nvars)
            ]
        self.varnames = tuple(varnames)

        exps = [()]
        for v in range(self.nvars):
            exps = [e + (a,) for e in exps for a in range(bounds[v])]
        standard = [e for e in exps if not any(_divides(g, e) for g in gens)]
        standard.sort(key=graded_key)
        self.basis = tuple(standard)
        self.dim = len(standard)
        self.index = {e: i for i, e in enumerate(standard)}

        # mono_mats[j]: multiplication by the j-th basis monomial
        mono = np.zeros((self.dim, self.dim, self.dim), dtype=np.int64)
        for j, ej in enumerate(standard):
            for i, ei in enumerate(standard):
                s = tuple(a + b for a, b in zip(ej, ei))
                k = self.index.get(s)
                if k is not None:
                    mono[j, k, i] = 1
        self._mono = mono
        self.actions = []
        for v in range(self.nvars):
            ev = tuple(1 if u == v else 0 for u in range(self.nvars))
            j = self.index.get(ev)
            if j is None:
                self.actions.append(np.zeros((self.dim, self.dim), dtype=np.int64))
            else:
                self.actions.append(mono[j].copy())
        self._soc_rows = None

    # -- elements -------------------------------------------------------

    def zero(self):
        return np.zeros(self.dim, dtype=np.int64)

    def one(self):
        v = self.zero()
        v[0] = 1
        return v

    def element(self, terms):
        """Build an element from (coefficient, exponent-vector) terms.

        Terms whose monomial lies in the staircase ideal contribute zero.
        """
        v = self.zero()
        for c, e in terms:
            e = tuple(int(a) for a in e)
            if len(e) != self.nvars:
                raise ValueError(f"exponent vector {e} has wrong arity")
            i = self.index.get(e)
            if i is not None:
                v[i] = (v[i] + int(c)) % self.p
        return v

    def monomial(self, e):
        return self.element([(1, e)])

    def variable(self, v):
        return self.monomial(tuple(1 if u == v else 0 for u in range(self.nvars)))

    def mono_mat(self, j):
        return self._mono[j]

    def mult_matrix(self, vec):
        """The multiplication-by-``vec`` matrix."""
        v = linalg.asvec(vec, self.p)
        return np.tensordot(v, self._mono, axes=(0, 0)) % self.p

    def multiply(self, a, b):
        return linalg.matmul(self.mult_matrix(a), np.asarray(b).reshape(-1, 1), self.p).ravel()

    def format_element(self, vec):
        parts = []
        for i, c in enumerate(np.asarray(vec) % self.p):
            if c == 0:
                continue
            e = self.basis[i]
            mono = self.format_monomial(e)
            if c == 1 and mono != "1":
                parts.append(mono)
            else:
                parts.append(f"{int(c)}*{mono}" if mono != "1" else str(int(c)))
        return " + ".join(parts) if parts else "0"

    # -- distinguished subspaces ----------------------------------------

    def maximal_ideal_rows(self):
        """The span of all non-unit basis monomials (canonical form)."""
        rows = np.zeros((self.dim - 1, self.dim), dtype=np.int64)
        for i in range(1, self.dim):
            rows[i - 1, i] = 1
        return rows

    def maximal_ideal(self):
        gens = [self.variable(v) for v in range(self.nvars) if np.any(self.variable(v))]
        return Ideal(self, gens)

    def socle_rows(self):
        if self._soc_rows is None:
            stacked = np.vstack(self.actions)
            cols = linalg.kernel_basis(stacked, self.p)
            self._soc_rows = linalg.span_rows(cols.T, self.p)
        return self._soc_rows

    def socle_dim(self):
        return self.socle_rows().shape[0]

    def is_gorenstein(self):
        return self.socle_dim() == 1

    def fingerprint(self):
        return {"p": self.p, "vars": self.nvars, "staircase": [list(g) for g in self.staircase]}

    def format_monomial(self, e):
        names = []
        for v, a in enumerate(e):
            if a == 1:
                names.append(self.varnames[v])
            elif a > 1:
                names.append(f"{self.varnames[v]}^{a}")
        return "*".join(names) if names else "1"

    def __repr__(self):
        gens = ", ".join(self.format_monomial(g) for g in self.staircase)
        return f"MonomialAlgebra(len={self.dim}, staircase=({gens}), p={self.p})"


class Ideal:
    """An ideal of R: generators plus the canonical basis of its k-span."""

    def __init__(self, ring, gens):
        self.ring = ring
        self.gens = [linalg.asvec(g, ring.p) for g in gens]
        images = [ring.mult_matrix(g).T for g in self.gens if np.any(g)]
        if images:
            self.rows = linalg.span_rows(np.vstack(images), ring.p)
        else:
            self.rows = linalg.empty_subspace(ring.dim)

    @property
    def length(self):
        return self.rows.shape[0]

    @property
    def is_zero(self):
        return self.length == 0

    @property
    def is_proper(self):
        return self.length < self.ring.dim

    def contains(self, vec):
        return linalg.in_span(self.rows, vec, self.ring.p)

    def fingerprint(self):
        return sorted(
            [[int(c) for c in g] for g in self.gens if np.any(g)]
        )

    def __repr__(self):
        gens = ", ".join(self.ring.format_element(g) for g in self.gens) or "0"
        return f"Ideal({gens})"


def m_times_rows(ring, rows):
    """m·S for an R-stable subspace S (rows canonical)."""
    if rows.shape[0] == 0:
        return rows
    pieces = [linalg.matmul(rows, a.T, ring.p) for a in ring.actions]
    return linalg.span_rows(np.vstack(pieces), ring.p)


def ideal_times_rows(ring, ideal, rows):
    """I·S for an R-stable subspace S of R (rows canonical)."""
    if rows.shape[0] == 0 or not ideal.gens:
        return linalg.empty_subspace(ring.dim)
    pieces = [linalg.matmul(rows, ring.mult_matrix(g).T, ring.p) for g in ideal.gens]
    return linalg.span_rows(np.vstack(pieces), ring.p)


def m_power_rows(ring, j):
    rows = ring.maximal_ideal_rows()
    for _ in range(j - 1):
        if rows.shape[0] == 0:
            break
        rows = m_times_rows(ring, rows)
    return rows


def loewy_length(ring):
    """Least t with m^t = 0; bounded by the length of R."""
    rows = ring.maximal_ideal_rows()
    t = 1
    while rows.shape[0] > 0:
        rows = m_times_rows(ring, rows)
        t += 1
    return t


def m2I_is_zero(ring, ideal):
    mI = m_times_rows(ring, ideal.rows)
    return m_times_rows(ring, mI).shape[0] == 0


@dataclass(frozen=True)
class RingInvariants:
    len_r: int
    s: int
    h: int
    c: int
    e: int
    t: int
    len_m2: int
    socdim: int

    @property
    def a(self):
        return self.len_m2 + 2 - self.t

    def as_dict(self):
        return {
            "len_r": self.len_r,
            "s": self.s,
            "h": self.h,
            "c": self.c,
            "e": self.e,
            "t": self.t,
            "len_m2": self.len_m2,
            "socdim": self.socdim,
            "a": self.a,
        }


def ring_invariants(ring, ideal):
    """The numeric constants attached to (R, I); requires I proper."""
    if not ideal.is_proper:
        raise ValueError("improper ideal")
    len_r = ring.dim
    len_i = ideal.length
    mI = m_times_rows(ring, ideal.rows)
    c = mI.shape[0]
    s = len_r - len_i
    h = len_i - c
    m2 = m_power_rows(ring, 2)
    e = (len_r - 1) - m2.shape[0]
    inv = RingInvariants(
        len_r=len_r,
        s=s,
        h=h,
        c=c,
        e=e,
        t=loewy_length(ring),
        len_m2=m2.shape[0],
        socdim=ring.socle_dim(),
    )
    assert inv.s + inv.h + inv.c == len_r
    return inv
