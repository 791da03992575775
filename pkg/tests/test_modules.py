from fractions import Fraction

import numpy as np
import pytest

from artmod import (
    Ideal,
    ModuleRep,
    ZeroModuleError,
    canonical_module,
    cokernel,
    cyclic,
    direct_sum,
    gamma,
    ideal_times,
    is_I_free,
    is_free,
    matlis_dual,
    mI_annihilates,
    quotient,
    socle,
    tensor,
)
from artmod import linalg
from artmod.modules import I2M_is_zero, annihilated_by_ideal, submodule_module

from .oracles import exhaustive_span_dim


def test_presentation_golden(R5, M_mod_y2, N_mod_x):
    assert M_mod_y2.length == 4
    assert N_mod_x.length == 3
    free2 = cokernel(R5, 2, [])
    assert free2.length == 10
    assert is_free(free2)


def test_presentation_validates():
    # actions of a cokernel always commute and satisfy the staircase relations
    r = cyclic(
        MonomialAlgebra_golden(),
        Ideal(MonomialAlgebra_golden(), []),
    )
    r.validate()


def MonomialAlgebra_golden():
    from artmod import MonomialAlgebra

    return MonomialAlgebra(2, [(2, 0), (0, 3), (1, 2)], p=101)


def test_min_gens(R5, M_mod_y2):
    assert M_mod_y2.min_gens() == 1
    assert ModuleRep.free(R5, 2).min_gens() == 2
    assert ModuleRep.zero(R5).min_gens() == 0


def test_ideal_times_golden(R5, I_xy2, M_mod_y2):
    im = ideal_times(M_mod_y2, I_xy2)
    assert im.length == 2
    assert ideal_times(M_mod_y2, Ideal(R5, [])).length == 0
    mm = ideal_times(M_mod_y2, R5.maximal_ideal())
    assert mm.length == 3


def test_ideal_times_against_exhaustive(R5):
    from artmod import MonomialAlgebra

    r = MonomialAlgebra(2, [(2, 0), (0, 3), (1, 2)], p=2)
    m = cyclic(r, Ideal(r, [r.monomial((0, 2))]))
    ideal = Ideal(r, [r.monomial((1, 0)), r.monomial((0, 2))])
    vectors = []
    for g in ideal.gens:
        act = m.elem_action(g)
        for col in act.T:
            vectors.append(col.tolist())
    assert ideal_times(m, ideal).length == exhaustive_span_dim(vectors, 2)


def test_quotient_golden(R5, I_xy2, M_mod_y2):
    im = ideal_times(M_mod_y2, I_xy2)
    q = quotient(M_mod_y2, im)
    assert q.length == 2
    assert quotient(M_mod_y2, linalg.empty_subspace(4)).length == 4
    full = np.eye(4, dtype=np.int64)
    assert quotient(M_mod_y2, full).length == 0


def test_quotient_rejects_unstable(R5):
    free = ModuleRep.free(R5, 1)
    bad = linalg.span_rows(R5.monomial((1, 0)).reshape(1, -1), R5.p)
    # span{x} alone is not stable under multiplication by y
    with pytest.raises(ValueError):
        quotient(free, bad)


def test_gamma_golden(R5, I_xy2, M_mod_y2):
    assert gamma(M_mod_y2, I_xy2) == 1
    assert gamma(M_mod_y2, R5.maximal_ideal()) == 3
    mod_i = cyclic(R5, I_xy2)
    assert gamma(mod_i, I_xy2) == 0
    assert gamma(ModuleRep.free(R5, 1), I_xy2) == Fraction(3, 2)
    with pytest.raises(ZeroModuleError):
        gamma(ModuleRep.zero(R5), I_xy2)


def test_length_identity(R5, I_xy2, M_mod_y2, N_mod_x):
    for m in (M_mod_y2, N_mod_x, ModuleRep.free(R5, 1)):
        g = gamma(m, I_xy2)
        cover = m.length - ideal_times(m, I_xy2).length
        assert m.length == cover * (g + 1)


def test_is_I_free(R5, I_xy2, M_mod_y2, N_mod_x):
    assert is_I_free(N_mod_x, I_xy2)
    assert is_I_free(ModuleRep.free(R5, 1), I_xy2)
    k = cyclic(R5, R5.maximal_ideal())
    assert not is_I_free(k, I_xy2)
    assert is_I_free(M_mod_y2, I_xy2)  # l(M/IM) = 2 = 1 * l(R/I)


def test_is_free(R5, M_mod_y2):
    assert is_free(ModuleRep.free(R5, 3))
    assert not is_free(M_mod_y2)
    assert is_free(ModuleRep.zero(R5))


def test_tensor_golden(R5, M_mod_y2, N_mod_x):
    t = tensor(M_mod_y2, N_mod_x)
    assert t.length == 2
    free = ModuleRep.free(R5, 1)
    t2 = tensor(free, N_mod_x)
    assert t2.length == N_mod_x.length
    assert t2.min_gens() == N_mod_x.min_gens()
    assert tensor(M_mod_y2, ModuleRep.zero(R5)).length == 0


def test_tensor_symmetric_lengths(R5, I_xy2, M_mod_y2, N_mod_x):
    a = tensor(M_mod_y2, N_mod_x)
    b = tensor(N_mod_x, M_mod_y2)
    assert a.length == b.length
    assert a.min_gens() == b.min_gens()


def test_socle_module(R5, M_mod_y2, N_mod_x):
    assert socle(M_mod_y2).length == 1
    assert socle(ModuleRep.free(R5, 1)).length == R5.socle_dim() == 2
    k = cyclic(R5, R5.maximal_ideal())
    assert socle(k).length == 1 == k.length


def test_matlis_dual_golden(R5, M_mod_y2):
    free = ModuleRep.free(R5, 1)
    d = matlis_dual(free)
    assert d.length == 5
    assert socle(d).length == 1
    assert d.min_gens() == R5.socle_dim() == 2
    k = cyclic(R5, R5.maximal_ideal())
    dk = matlis_dual(k)
    assert dk.length == 1 and dk.min_gens() == 1


def test_dual_exchanges_socle_and_generators(R5, M_mod_y2, N_mod_x):
    for m in (M_mod_y2, N_mod_x, cyclic(R5, R5.maximal_ideal())):
        d = matlis_dual(m)
        assert d.length == m.length
        assert d.min_gens() == socle(m).length
        assert socle(d).length == m.min_gens()
        dd = matlis_dual(d)
        assert dd.length == m.length and dd.min_gens() == m.min_gens()


def test_canonical_module(R5, chain3):
    w = canonical_module(R5)
    assert w.length == 5
    assert w.min_gens() == 2
    assert socle(w).length == 1
    wg = canonical_module(chain3)
    assert wg.length == 3 and wg.min_gens() == 1
    field = MonomialAlgebra_field()
    wk = canonical_module(field)
    assert wk.length == 1 and wk.min_gens() == 1


def MonomialAlgebra_field():
    from artmod import MonomialAlgebra

    return MonomialAlgebra(1, [(1,)], p=101)


def test_direct_sum(R5, M_mod_y2, N_mod_x):
    s = direct_sum(M_mod_y2, N_mod_x)
    assert s.length == 7
    assert s.min_gens() == 2


def test_annihilation_predicates(R5, I_xy2, M_mod_y2):
    assert I2M_is_zero(M_mod_y2, I_xy2)  # I^2 = 0 in this ring
    # m*I*M contains y*x = xy, which is nonzero in M = R/(y^2)
    assert not mI_annihilates(M_mod_y2, I_xy2)
    m_ideal = R5.maximal_ideal()
    assert not mI_annihilates(ModuleRep.free(R5, 1), m_ideal)  # m*m*R = m^2 != 0
    mod_i = cyclic(R5, I_xy2)
    assert annihilated_by_ideal(mod_i, I_xy2)
    assert mI_annihilates(mod_i, I_xy2)


def test_submodule_module_roundtrip(R5, M_mod_y2):
    im = ideal_times(M_mod_y2, R5.maximal_ideal())
    sub = submodule_module(M_mod_y2, im.rows)
    assert sub.length == im.length
    sub.validate()
    assert quotient(M_mod_y2, im).length + sub.length == M_mod_y2.length
