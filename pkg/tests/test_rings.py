import numpy as np
import pytest

from artmod import (
    Ideal,
    MonomialAlgebra,
    NotArtinianError,
    loewy_length,
    m2I_is_zero,
    m_power_rows,
    ring_invariants,
)
from artmod import linalg

from .oracles import exhaustive_span_dim


def test_golden_ring_basis(R5):
    assert R5.dim == 5
    assert R5.basis == ((0, 0), (1, 0), (0, 1), (1, 1), (0, 2))
    assert R5.format_element(R5.monomial((1, 1))) == "x*y"


def test_chain_ring(chain3):
    assert chain3.dim == 3
    assert chain3.basis == ((0,), (1,), (2,))


def test_not_artinian():
    with pytest.raises(NotArtinianError):
        MonomialAlgebra(2, [(2, 0)], p=101)


def test_zero_ring_rejected():
    with pytest.raises(ValueError):
        MonomialAlgebra(1, [(0,)], p=101)


def test_redundant_staircase_tolerated():
    r = MonomialAlgebra(2, [(2, 0), (0, 3), (1, 2), (2, 1), (3, 3)], p=101)
    assert r.staircase == ((2, 0), (1, 2), (0, 3))
    assert r.dim == 5


def test_multiplication_table_unital_commutative(R5):
    one = R5.one()
    for i in range(R5.dim):
        e = np.zeros(R5.dim, dtype=np.int64)
        e[i] = 1
        assert np.array_equal(R5.multiply(one, e), e)
    a = R5.element([(3, (1, 0)), (5, (0, 1))])
    b = R5.element([(2, (0, 2)), (1, (0, 0))])
    assert np.array_equal(R5.multiply(a, b), R5.multiply(b, a))


def test_ideal_span_golden(R5, I_xy2):
    # (x, y^2) = span{x, xy, y^2}
    assert I_xy2.length == 3
    assert I_xy2.is_proper
    expected = {(1, 0), (1, 1), (0, 2)}
    for e in expected:
        assert I_xy2.contains(R5.monomial(e))
    assert not I_xy2.contains(R5.monomial((0, 1)))


def test_ideal_span_against_exhaustive_enumeration():
    # same ring at p=2 so every multiple can be enumerated
    r = MonomialAlgebra(2, [(2, 0), (0, 3), (1, 2)], p=2)
    ideal = Ideal(r, [r.monomial((1, 0)), r.monomial((0, 2))])
    multiples = []
    for g in ideal.gens:
        for i in range(r.dim):
            e = np.zeros(r.dim, dtype=np.int64)
            e[i] = 1
            multiples.append(r.multiply(e, g).tolist())
    assert ideal.length == exhaustive_span_dim(multiples, 2)


def test_zero_and_unit_ideal(R5):
    z = Ideal(R5, [])
    assert z.is_zero and z.length == 0
    u = Ideal(R5, [R5.one()])
    assert u.length == 5 and not u.is_proper


def test_ring_invariants_golden(R5, I_xy2):
    inv = ring_invariants(R5, I_xy2)
    assert (inv.s, inv.h, inv.c) == (2, 2, 1)
    assert (inv.e, inv.t, inv.len_m2, inv.socdim) == (2, 3, 2, 2)
    assert inv.s + inv.h + inv.c == inv.len_r == 5


def test_ring_invariants_maximal_ideal(R5):
    inv = ring_invariants(R5, R5.maximal_ideal())
    assert (inv.s, inv.h, inv.c) == (1, 2, 2)


def test_ring_invariants_chain(chain3):
    inv = ring_invariants(chain3, Ideal(chain3, [chain3.monomial((1,))]))
    assert (inv.s, inv.h, inv.c, inv.socdim) == (1, 1, 1, 1)


def test_improper_ideal_rejected(R5):
    with pytest.raises(ValueError):
        ring_invariants(R5, Ideal(R5, [R5.one()]))


def test_socle_golden(R5):
    soc = R5.socle_rows()
    assert soc.shape[0] == 2
    expected = linalg.span_rows(
        np.vstack([R5.monomial((1, 1)), R5.monomial((0, 2))]), R5.p
    )
    assert linalg.subspace_eq(soc, expected)


def test_socle_chain_and_field(chain3):
    assert chain3.socle_dim() == 1
    field = MonomialAlgebra(1, [(1,)], p=101)
    assert field.dim == 1
    assert field.socle_dim() == 1
    assert loewy_length(field) == 1


def test_gorenstein(R5, chain3):
    assert not R5.is_gorenstein()
    assert chain3.is_gorenstein()
    r4 = MonomialAlgebra(2, [(2, 0), (0, 2)], p=101)
    assert r4.is_gorenstein()


def test_m2I_zero_cases(R5, I_xy2, chain3):
    assert m2I_is_zero(R5, I_xy2)
    assert m2I_is_zero(R5, R5.maximal_ideal())
    r = MonomialAlgebra(1, [(4,)], p=101)
    assert not m2I_is_zero(r, Ideal(r, [r.monomial((1,))]))


def test_m_powers_decrease_and_socle_contains_top(R5):
    dims = [m_power_rows(R5, j).shape[0] for j in range(1, 5)]
    assert dims == sorted(dims, reverse=True)
    assert dims[-1] == 0
    t = loewy_length(R5)
    assert t == 3
    top = m_power_rows(R5, t - 1)
    assert linalg.subspace_contains(R5.socle_rows(), top, R5.p)


def test_ideal_span_idempotent(R5, I_xy2):
    regenerated = Ideal(R5, [row for row in I_xy2.rows])
    assert linalg.subspace_eq(regenerated.rows, I_xy2.rows)
