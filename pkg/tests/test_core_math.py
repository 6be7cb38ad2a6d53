import math

import numpy as np
import pytest

from core_math import IDENTITY, U1, U2, U3, det3, is_orthogonal, mat_mul, rot_z, skew, solve3, transpose
from utils import SingularMatrix


def test_skew_of_u3():
    np.testing.assert_array_equal(skew(U3), [[0, -1, 0], [1, 0, 0], [0, 0, 0]])


def test_skew_of_zero():
    np.testing.assert_array_equal(skew(np.zeros(3)), np.zeros((3, 3)))


def test_skew_matches_cross_product(rng):
    np.testing.assert_array_equal(skew(U1) @ U2, U3)
    for _ in range(20):
        u, v = rng.normal(size=3), rng.normal(size=3)
        np.testing.assert_allclose(skew(u) @ v, np.cross(u, v), atol=1e-15)
        np.testing.assert_allclose(skew(u) @ v, -skew(v) @ u, atol=1e-15)
        np.testing.assert_array_equal(skew(u).T, -skew(u))


def test_rot_z_layout():
    np.testing.assert_array_equal(rot_z(0.0), IDENTITY)
    np.testing.assert_allclose(rot_z(math.pi / 2), [[0, 1, 0], [-1, 0, 0], [0, 0, 1]], atol=1e-16)


def test_rot_z_inverse_pair_and_orthogonality(rng):
    for phi in rng.uniform(-math.pi, math.pi, size=20):
        np.testing.assert_allclose(rot_z(phi) @ rot_z(-phi), IDENTITY, atol=1e-15)
        np.testing.assert_allclose(rot_z(phi).T @ rot_z(phi), IDENTITY, atol=1e-14)
        assert det3(rot_z(phi)) == pytest.approx(1.0, abs=1e-14)
        assert is_orthogonal(rot_z(phi))


def test_mat_ops():
    assert det3(IDENTITY) == 1.0
    assert det3(np.diag([0.85, 0.85, 0.85])) == pytest.approx(0.614125, abs=1e-15)
    b = np.array([1.0, -2.0, 3.0])
    np.testing.assert_array_equal(solve3(IDENTITY, b), b)
    m = np.arange(9.0).reshape(3, 3)
    np.testing.assert_array_equal(transpose(m), m.T)
    np.testing.assert_array_equal(mat_mul(m, IDENTITY, m), m @ m)


def test_solve_recovers_solution(rng):
    for _ in range(20):
        a = rng.normal(size=(3, 3)) + 3.0 * IDENTITY
        x = rng.normal(size=3)
        np.testing.assert_allclose(solve3(a, a @ x), x, rtol=1e-10, atol=1e-12)


def test_solve_rejects_singular_matrix():
    with pytest.raises(SingularMatrix):
        solve3([[1.0, 2.0, 3.0], [2.0, 4.0, 6.0], [0.0, 1.0, 1.0]], np.ones(3))
    with pytest.raises(SingularMatrix):
        solve3(np.zeros((3, 3)), np.ones(3))
