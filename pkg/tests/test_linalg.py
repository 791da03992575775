import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artmod import linalg

from .oracles import py_rank, py_rref

P = 101


def test_rref_identity():
    r, piv = linalg.rref(np.eye(2, dtype=np.int64), P)
    assert np.array_equal(r, np.eye(2, dtype=np.int64))
    assert piv == [0, 1]


def test_rref_zero():
    r, piv = linalg.rref(np.zeros((3, 3), dtype=np.int64), P)
    assert not np.any(r)
    assert piv == []


def test_rref_rank_one():
    r, piv = linalg.rref([[2, 4], [1, 2]], P)
    assert np.array_equal(r, np.array([[1, 2], [0, 0]]))
    assert piv == [0]


def test_kernel_identity_empty():
    k = linalg.kernel_basis(np.eye(3, dtype=np.int64), P)
    assert k.shape == (3, 0)


def test_kernel_zero_full():
    k = linalg.kernel_basis(np.zeros((4, 4), dtype=np.int64), P)
    assert k.shape == (4, 4)
    assert np.array_equal(k, np.eye(4, dtype=np.int64))


def test_kernel_single_relation():
    k = linalg.kernel_basis([[1, 2]], P)
    assert k.shape == (2, 1)
    assert k[:, 0].tolist() == [(-2) % P, 1]


def test_image_basis():
    assert np.array_equal(linalg.image_basis(np.eye(2, dtype=np.int64), P), np.eye(2))
    assert linalg.image_basis(np.zeros((2, 2), dtype=np.int64), P).shape == (2, 0)
    img = linalg.image_basis([[2, 4], [1, 2]], P)
    assert img.shape == (2, 1)
    assert img[:, 0].tolist() == [2, 1]


def test_solve():
    b = np.array([5, 7], dtype=np.int64)
    assert np.array_equal(linalg.solve(np.eye(2, dtype=np.int64), b, P), b)
    assert linalg.solve(np.zeros((2, 2), dtype=np.int64), [1, 0], P) is None
    x = linalg.solve([[1, 1]], [3], P)
    assert x.tolist() == [3, 0]
    with pytest.raises(ValueError):
        linalg.solve([[1, 1]], [3, 4], P)


def test_composite_modulus_rejected():
    with pytest.raises(ValueError):
        linalg.rref([[1]], 100)


def test_intersection():
    u = linalg.span_rows(np.array([[1, 0, 0], [0, 1, 0]]), P)
    v = linalg.span_rows(np.array([[0, 1, 0], [0, 0, 1]]), P)
    w = linalg.subspace_intersection(u, v, P)
    assert w.shape == (1, 3)
    assert w[0].tolist() == [0, 1, 0]


matrices = st.integers(1, 6).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(0, P - 1), min_size=c, max_size=c),
            min_size=r,
            max_size=r,
        )
    )
)


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_rank_nullity_and_annihilation(m):
    a = np.array(m, dtype=np.int64)
    k = linalg.kernel_basis(a, P)
    assert linalg.rank(a, P) + k.shape[1] == a.shape[1]
    assert not np.any(linalg.matmul(a, k, P))


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_rref_matches_python_oracle(m):
    r, piv = linalg.rref(m, P)
    orows, opiv = py_rref(m, P)
    assert piv == opiv
    assert r.tolist() == orows


@settings(max_examples=40, deadline=None)
@given(matrices)
def test_rref_idempotent(m):
    r, piv = linalg.rref(m, P)
    r2, piv2 = linalg.rref(r, P)
    assert np.array_equal(r, r2)
    assert piv == piv2


@settings(max_examples=40, deadline=None)
@given(matrices)
def test_backends_agree(m):
    saved = linalg.current_backend()
    try:
        linalg.use_backend("numpy")
        r1, p1 = linalg.rref(m, P)
        k1 = linalg.kernel_basis(m, P)
        linalg.use_backend("numba")
        r2, p2 = linalg.rref(m, P)
        k2 = linalg.kernel_basis(m, P)
    finally:
        linalg.use_backend(saved)
    assert np.array_equal(r1, r2) and p1 == p2
    assert np.array_equal(k1, k2)


@settings(max_examples=40, deadline=None)
@given(matrices, matrices)
def test_intersection_dimension_formula(a, b):
    cols = min(len(a[0]), len(b[0]))
    u = linalg.span_rows(np.array(a, dtype=np.int64)[:, :cols], P)
    v = linalg.span_rows(np.array(b, dtype=np.int64)[:, :cols], P)
    w = linalg.subspace_intersection(u, v, P)
    total = linalg.subspace_sum(u, v, P)
    assert w.shape[0] == u.shape[0] + v.shape[0] - total.shape[0]
    assert linalg.subspace_contains(u, w, P)
    assert linalg.subspace_contains(v, w, P)


@settings(max_examples=40, deadline=None)
@given(matrices)
def test_solve_consistency(m):
    a = np.array(m, dtype=np.int64)
    rng = np.random.default_rng(0)
    x0 = rng.integers(0, P, a.shape[1])
    b = linalg.matmul(a, x0.reshape(-1, 1), P).ravel()
    x = linalg.solve(a, b, P)
    assert x is not None
    assert np.array_equal(linalg.matmul(a, x.reshape(-1, 1), P).ravel(), b)


def test_rank_against_oracle_small_prime():
    rng = np.random.default_rng(7)
    for p in (2, 3, 5):
        for _ in range(20):
            a = rng.integers(0, p, (4, 5))
            assert linalg.rank(a, p) == py_rank(a.tolist(), p)
