# -*- coding: utf-8 -*-

"""
Tests for mibelastic.solver.
"""




import numpy as np
import pytest
import scipy.sparse
from numpy.testing import assert_allclose

from mibelastic.errors import Breakdown, MaxIterations, ZeroDiagonal
from mibelastic.solver import bicgstab, jacobi_preconditioner


def _nonsymmetric(size=50, seed=0):
    rng = np.random.RandomState(seed)
    matrix = rng.uniform(-1.0, 1.0, size=(size, size))
    matrix += np.diag(rng.uniform(2.0, 4.0, size) * size ** 0.5 * 2)
    return scipy.sparse.csr_matrix(matrix), rng.normal(size=size)


def test_converges_to_direct_solution():
    matrix, rhs = _nonsymmetric()
    x, report = bicgstab((matrix, rhs), rel_tolerance=1e-12)
    assert report.converged
    assert report.failure is None
    assert 0 < report.iterations < 50
    assert report.residual <= 1e-12
    assert report.true_residual <= 1e-10
    assert_allclose(x, np.linalg.solve(matrix.toarray(), rhs), rtol=1e-8,
                    atol=1e-10)
    assert report.check() is report


def test_zero_rhs():
    matrix, _ = _nonsymmetric(size=10)
    x, report = bicgstab((matrix, np.zeros(10)))
    assert report.converged
    assert report.iterations == 0
    assert_allclose(x, 0.0)


def test_iteration_cap():
    matrix, rhs = _nonsymmetric()
    _, report = bicgstab((matrix, rhs), rel_tolerance=1e-14,
                         max_iterations=1)
    assert not report.converged
    assert isinstance(report.failure, MaxIterations)
    with pytest.raises(MaxIterations):
        report.check()


def test_breakdown():
    matrix = scipy.sparse.csr_matrix(np.array([[1.0, 3.0], [-1.0, 1.0]]))
    _, report = bicgstab((matrix, np.array([1.0, -1.0])))
    assert not report.converged
    assert isinstance(report.failure, Breakdown)


def test_zero_diagonal():
    matrix = scipy.sparse.csr_matrix(np.array([[0.0, 1.0], [1.0, 2.0]]))
    with pytest.raises(ZeroDiagonal):
        jacobi_preconditioner(matrix)


def test_preconditioner_scales_rows():
    matrix = scipy.sparse.csr_matrix(np.array([[2.0, 1.0], [1.0, 4.0]]))
    preconditioner = jacobi_preconditioner(matrix)
    assert_allclose(preconditioner.scale_rows(matrix).diagonal(), 1.0)
    assert_allclose(preconditioner * np.array([2.0, 4.0]), [1.0, 1.0])


def _badly_scaled(size=40, seed=1):
    matrix, rhs = _nonsymmetric(size, seed)
    scales = 10.0 ** np.linspace(-4, 6, size)
    return scipy.sparse.diags(scales).dot(matrix).tocsr(), scales * rhs


@pytest.mark.parametrize("seed", [1, 2, 3])
@pytest.mark.parametrize("tolerance", [1e-6, 1e-10])
def test_converged_means_unscaled_residual_within_tolerance(seed, tolerance):
    matrix, rhs = _badly_scaled(seed=seed)
    x, report = bicgstab((matrix, rhs), rel_tolerance=tolerance)
    assert report.converged
    true_residual = (np.linalg.norm(rhs - matrix.dot(x))
                     / np.linalg.norm(rhs))
    assert true_residual <= tolerance
    assert report.true_residual == pytest.approx(true_residual)


def test_recovers_known_solution():
    matrix, _ = _nonsymmetric(size=60, seed=4)
    expected = np.random.RandomState(5).normal(size=60)
    x, report = bicgstab((matrix, matrix.dot(expected)),
                         rel_tolerance=1e-13)
    assert report.converged
    assert_allclose(x, expected, rtol=1e-9, atol=1e-10)


def test_sparse_system_input():
    matrix, rhs = _nonsymmetric(size=20, seed=6)

    class System(object):
        pass

    system = System()
    system.matrix, system.rhs = matrix, rhs
    x, report = bicgstab(system, rel_tolerance=1e-12)
    assert report.converged
    assert_allclose(matrix.dot(x), rhs, atol=1e-9)
