import numpy as np
import pytest

from artmod import (
    Ideal,
    ModuleRep,
    Resolver,
    betti_vector,
    cyclic,
    direct_sum,
    minimal_resolution,
    syzygy,
)


def ring_matrix_product(ring, left, right):
    """Multiply two matrices with ring-element entries."""
    rows = len(left)
    mid = len(right)
    cols = len(right[0]) if mid else 0
    out = [[ring.zero() for _ in range(cols)] for _ in range(rows)]
    for g in range(rows):
        for l in range(cols):
            acc = ring.zero()
            for k in range(mid):
                acc = (acc + ring.multiply(left[g][k], right[k][l])) % ring.p
            out[g][l] = acc
    return out


def test_golden_resolution_display(R5, N_mod_x):
    res = minimal_resolution(N_mod_x, 2)
    assert res.betti == [1, 1, 2]
    d0, d1 = res.differentials
    assert len(d0) == 1 and len(d0[0]) == 1
    assert R5.format_element(d0[0][0]) == "x"
    assert len(d1) == 1 and len(d1[0]) == 2
    assert [R5.format_element(t) for t in d1[0]] == ["x", "y^2"]


def test_golden_syzygies(R5, N_mod_x):
    n1 = syzygy(N_mod_x, 1)
    assert n1.length == 2 and n1.min_gens() == 1
    n2 = syzygy(N_mod_x, 2)
    assert n2.length == 3 and n2.min_gens() == 2


def test_free_module_resolution(R5):
    assert betti_vector(ModuleRep.free(R5, 3), 3) == [3, 0, 0, 0]
    assert syzygy(ModuleRep.free(R5, 2), 1).length == 0


def test_zero_module_resolution(R5):
    assert betti_vector(ModuleRep.zero(R5), 2) == [0, 0, 0]


def test_residue_field_first_betti(R5):
    k = cyclic(R5, R5.maximal_ideal())
    assert betti_vector(k, 1) == [1, 2]


def test_mod_y2_betti_depth_one(R5, M_mod_y2):
    # kernel of R -> R/(y^2) is span{y^2}, a single generator
    assert betti_vector(M_mod_y2, 1) == [1, 1]


def test_differentials_compose_to_zero(R5, N_mod_x, M_mod_y2):
    for m in (N_mod_x, M_mod_y2, cyclic(R5, R5.maximal_ideal())):
        res = minimal_resolution(m, 3)
        for i in range(len(res.differentials) - 1):
            prod = ring_matrix_product(R5, res.differentials[i], res.differentials[i + 1])
            for row in prod:
                for entry in row:
                    assert not np.any(entry)


def test_minimality_entries_in_m(R5, N_mod_x):
    res = minimal_resolution(cyclic(R5, R5.maximal_ideal()), 3)
    for delta in res.differentials:
        for row in delta:
            for entry in row:
                assert entry[0] == 0  # no unit coefficient


def test_betti_additive_on_direct_sums(R5, M_mod_y2, N_mod_x):
    s = direct_sum(M_mod_y2, N_mod_x)
    bm = betti_vector(M_mod_y2, 3)
    bn = betti_vector(N_mod_x, 3)
    assert betti_vector(s, 3) == [a + b for a, b in zip(bm, bn)]


def test_syzygy_length_recursion(R5):
    for ideal_gens in ([(1, 0)], [(0, 2)], [(1, 0), (0, 2)]):
        m = cyclic(R5, Ideal(R5, [R5.monomial(e) for e in ideal_gens]))
        res = Resolver(m).extend_to(4)
        lengths = [c.length for c in res.chain]
        for i in range(4):
            assert lengths[i + 1] == res.betti[i] * R5.dim - lengths[i]


def test_betti_equals_syzygy_min_gens(R5, N_mod_x):
    res = Resolver(N_mod_x).extend_to(4)
    for i in range(1, 4):
        assert res.betti[i] == res.chain[i].min_gens()


def test_resolution_is_deterministic(R5, N_mod_x):
    a = minimal_resolution(N_mod_x, 3)
    b = minimal_resolution(N_mod_x, 3)
    assert a.betti == b.betti
    for da, db in zip(a.differentials, b.differentials):
        for ra, rb in zip(da, db):
            for ta, tb in zip(ra, rb):
                assert np.array_equal(ta, tb)


def test_depth_validation(R5, N_mod_x):
    with pytest.raises(ValueError):
        minimal_resolution(N_mod_x, -1)
    with pytest.raises(ValueError):
        syzygy(N_mod_x, 0)
