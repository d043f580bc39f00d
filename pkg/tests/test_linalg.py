import numpy as np
import pytest

from _oracles import cofactor_det, cofactor_inverse
from oamix.errors import SingularMatrix
from oamix.linalg import (dependent_columns, det, lu_det_inv, rank, solve,
                          xtx)


def test_xtx_trivial():
    assert xtx(np.array([[1.0], [1.0]])) == np.array([[2.0]])
    assert np.array_equal(xtx(np.eye(3)), np.eye(3))


def test_xtx_is_symmetric():
    rng = np.random.default_rng(3)
    X = rng.normal(size=(30, 7))
    M = xtx(X)
    assert np.array_equal(M, M.T)


def test_lu_det_inv_diagonal():
    d, inv = lu_det_inv(np.diag([2.0, 4.0]))
    assert d == pytest.approx(8.0)
    assert np.allclose(inv, np.diag([0.5, 0.25]))


def test_lu_det_inv_identity():
    d, inv = lu_det_inv(np.eye(5))
    assert d == pytest.approx(1.0)
    assert np.allclose(inv, np.eye(5))


def test_det_matches_cofactor_oracle():
    rng = np.random.default_rng(11)
    for _ in range(25):
        n = int(rng.integers(1, 6))
        M = rng.uniform(-1, 1, (n, n))
        assert det(M) == pytest.approx(cofactor_det(M), rel=1e-10, abs=1e-12)


def test_inverse_residual_small():
    rng = np.random.default_rng(13)
    for _ in range(10):
        M = rng.uniform(-1, 1, (8, 8)) + 8 * np.eye(8)
        _, inv = lu_det_inv(M)
        assert np.max(np.abs(M @ inv - np.eye(8))) <= 1e-8


def test_solve_trivial_and_round_trip():
    assert np.allclose(solve(np.eye(3), [1, 2, 3]), [1, 2, 3])
    assert np.allclose(solve(np.array([[2.0, 0], [0, 4.0]]), [2, 8]), [1, 2])
    rng = np.random.default_rng(17)
    A = rng.normal(size=(6, 6))
    spd = A @ A.T + 6 * np.eye(6)
    b = rng.normal(size=6)
    x = solve(spd, b)
    assert np.max(np.abs(spd @ x - b)) <= 1e-9


def test_det_properties():
    rng = np.random.default_rng(19)
    for _ in range(10):
        A = rng.uniform(-1, 1, (4, 4))
        B = rng.uniform(-1, 1, (4, 4))
        assert det(A.T) == pytest.approx(det(A), rel=1e-9, abs=1e-12)
        assert det(A @ B) == pytest.approx(det(A) * det(B), rel=1e-9,
                                           abs=1e-12)


def test_row_swap_flips_det_sign():
    rng = np.random.default_rng(23)
    A = rng.uniform(-1, 1, (5, 5))
    swapped = A[[1, 0, 2, 3, 4]]
    assert det(swapped) == pytest.approx(-det(A), rel=1e-9)


def test_symmetric_inverse_is_symmetric():
    rng = np.random.default_rng(29)
    A = rng.normal(size=(7, 7))
    M = A @ A.T + 7 * np.eye(7)
    _, inv = lu_det_inv(M)
    assert np.max(np.abs(inv - inv.T)) <= 1e-10


def test_singular_matrix_reports_offending_columns():
    col = np.array([1.0, 2.0, 3.0])
    M = np.column_stack([col, 2 * col, np.array([0.0, 1.0, 0.0])])
    with pytest.raises(SingularMatrix) as exc:
        lu_det_inv(xtx(M))
    assert 1 in exc.value.offending


def test_dependent_columns_and_rank():
    col = np.array([1.0, 0.0, 2.0, 1.0])
    X = np.column_stack([col, np.array([0.0, 1.0, 1.0, 0.0]),
                         col + 0.0, np.array([1.0, 1.0, 3.0, 1.0])])
    # column 2 duplicates column 0; column 3 = col0 + col1
    assert dependent_columns(X) == (2, 3)
    assert rank(X) == 2
    assert rank(np.eye(4)) == 4
