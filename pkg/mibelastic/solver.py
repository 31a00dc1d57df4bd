# -*- coding: utf-8 -*-

"""
Jacobi-preconditioned BiCGStab for the assembled system.

The Jacobi scaling is applied to the rows: BiCGStab iterates on
``D^-1 A x = D^-1 b`` from a zero initial guess with the initial
residual as shadow residual. Convergence is judged on the relative
residual of the unscaled system. Dirichlet rows are unit rows, so the
scaling evens out the 1/h^2 size of the interior rows.
"""




import logging
import time

import numpy as np
import scipy.sparse

import mib_config as config
from mibelastic.errors import Breakdown, MaxIterations, ZeroDiagonal


__all__ = ['JacobiPreconditioner',
           'SolveReport',
           'jacobi_preconditioner',
           'bicgstab']


_TINY = np.finfo(float).tiny

LOG_EVERY = 50
"""Iterations between residual log records."""


class JacobiPreconditioner(object):

    """Multiplication by the inverse diagonal of a matrix."""

    def __init__(self, inverse_diagonal):
        self.inverse_diagonal = inverse_diagonal

    def __mul__(self, vector):
        return self.inverse_diagonal * vector

    def scale_rows(self, matrix):
        return scipy.sparse.diags(self.inverse_diagonal).dot(matrix).tocsr()


def jacobi_preconditioner(system):
    """Return the Jacobi preconditioner of `system`.

    `system` is a :class:`SparseSystem` or a matrix.

    Raises:
        ZeroDiagonal: If a diagonal entry vanishes
    """
    matrix = getattr(system, "matrix", system)
    diagonal = scipy.sparse.csr_matrix(matrix).diagonal()
    zero = np.flatnonzero(diagonal == 0)
    if zero.size:
        raise ZeroDiagonal("Zero diagonal in {0} rows, first row {1}"
                           .format(zero.size, zero[0]))
    return JacobiPreconditioner(1.0 / diagonal)


class SolveReport(object):

    """
    Outcome of a BiCGStab run.

    Attributes:
        iterations (int): Completed iterations
        residual (float): Final recursive estimate of
            ``|b - A x| / |b|``
        true_residual (float): Final ``|b - A x| / |b|``, recomputed
        converged (bool): Whether `true_residual` reached the tolerance
        wall_time (float): Seconds
        failure (MibError | None): `Breakdown` or `MaxIterations`
    """

    def __init__(self, iterations, residual, true_residual, converged,
                 wall_time, failure=None):
        self.iterations = iterations
        self.residual = residual
        self.true_residual = true_residual
        self.converged = converged
        self.wall_time = wall_time
        self.failure = failure

    def __repr__(self):
        return ("SolveReport(iterations={0}, residual={1:.3e},"
                " converged={2})".format(self.iterations, self.residual,
                                         self.converged))

    def check(self):
        """Raise the stored failure, if any."""
        if self.failure is not None:
            raise self.failure
        return self


def _operands(system):
    if hasattr(system, "matrix"):
        return system.matrix, system.rhs
    matrix, rhs = system
    return scipy.sparse.csr_matrix(matrix), np.asarray(rhs, dtype=float)


def _iterate(op, b, x, diagonal, rhs_norm, rel_tolerance, max_iterations,
             iterations):
    """Run BiCGStab on the scaled system from `x`.

    The stopping measure is ``|D r| / |rhs|`` for the scaled recursive
    residual r, the recursive estimate of the unscaled relative
    residual.

    Returns:
        tuple: ``(x, iterations, residual, failure)``
    """
    r = b - op.dot(x)
    r0 = r.copy()
    resid_norm = np.linalg.norm(diagonal * r) / rhs_norm
    rho = alpha = omega = 1.0
    rho_next = np.dot(r0, r0)
    size = b.shape[0]
    p = np.zeros(size)
    v = np.zeros(size)
    finished = resid_norm <= rel_tolerance

    while not finished:
        if iterations >= max_iterations:
            return x, iterations, resid_norm, MaxIterations(
                "BiCGStab stopped after {0} iterations at residual {1:.3e}"
                .format(iterations, resid_norm))
        if abs(rho_next) < _TINY or abs(omega) < _TINY:
            return x, iterations, resid_norm, Breakdown(
                "BiCGStab breakdown at iteration {0} (rho {1:.3e},"
                " omega {2:.3e})".format(iterations, rho_next, omega))
        beta = rho_next / rho * alpha / omega
        rho = rho_next

        p *= beta
        p -= beta * omega * v
        p += r

        v = op.dot(p)
        denominator = np.dot(r0, v)
        if abs(denominator) < _TINY:
            return x, iterations, resid_norm, Breakdown(
                "BiCGStab breakdown at iteration {0} (r0 . v vanishes)"
                .format(iterations))
        alpha = rho / denominator
        s = r - alpha * v
        iterations += 1

        resid_norm = np.linalg.norm(diagonal * s) / rhs_norm
        if resid_norm <= rel_tolerance:
            x = x + alpha * p
            break

        t = op.dot(s)
        t_norm = np.dot(t, t)
        if t_norm < _TINY:
            return x + alpha * p, iterations, resid_norm, Breakdown(
                "BiCGStab breakdown at iteration {0} (t vanishes)"
                .format(iterations))
        omega = np.dot(t, s) / t_norm
        r = s - omega * t
        rho_next = np.dot(r0, r)
        x = x + alpha * p + omega * s

        resid_norm = np.linalg.norm(diagonal * r) / rhs_norm
        if iterations % LOG_EVERY == 0:
            logging.debug("bicgstab %6d  %8.2e", iterations, resid_norm)
        finished = resid_norm <= rel_tolerance
    return x, iterations, resid_norm, None


def bicgstab(system, preconditioner=None, rel_tolerance=None,
             max_iterations=None):
    """Solve `system` by BiCGStab.

    Converged means ``|b - A x| / |b|`` of the unscaled system is at
    most `rel_tolerance`. When the recursive residual reaches the
    tolerance but the true one does not, the iteration restarts from
    the current iterate, at most `BICGSTAB_RESTARTS` times.

    Arguments:
        system (SparseSystem | tuple): The system, or ``(matrix, rhs)``

    Keyword arguments:
        preconditioner (JacobiPreconditioner): Row scaling; built from
            the matrix if omitted
        rel_tolerance (float): Relative residual to reach
        max_iterations (int): Iteration cap over all restarts; default
            `MAX_ITERATION_FACTOR` times the dimension

    Returns:
        tuple: ``(solution, SolveReport)``; on breakdown, at the
            iteration cap or when restarts run out, the solution so
            far, with the failure on the report
    """
    start = time.time()
    matrix, rhs = _operands(system)
    size = rhs.shape[0]
    if rel_tolerance is None:
        rel_tolerance = config.TOLERANCE
    if max_iterations is None:
        max_iterations = config.MAX_ITERATION_FACTOR * size
    if preconditioner is None:
        preconditioner = jacobi_preconditioner(matrix)
    op = preconditioner.scale_rows(matrix)
    b = preconditioner * rhs
    diagonal = 1.0 / preconditioner.inverse_diagonal
    rhs_norm = np.linalg.norm(rhs) or 1.0
    logging.debug("bicgstab: %d unknowns", size)

    x = np.zeros(size)
    iterations = 0
    restarts = 0
    while True:
        x, iterations, resid_norm, failure = _iterate(
            op, b, x, diagonal, rhs_norm, rel_tolerance, max_iterations,
            iterations)
        true_residual = np.linalg.norm(rhs - matrix.dot(x)) / rhs_norm
        if failure is not None or true_residual <= rel_tolerance:
            break
        if restarts >= config.BICGSTAB_RESTARTS:
            failure = MaxIterations(
                "BiCGStab true residual {0:.3e} above {1:.1e} after {2}"
                " restarts".format(true_residual, rel_tolerance, restarts))
            break
        restarts += 1
        logging.debug("bicgstab restart %d: recursive %.3e, true %.3e",
                      restarts, resid_norm, true_residual)

    report = SolveReport(iterations, float(resid_norm), float(true_residual),
                         failure is None, time.time() - start, failure)
    if failure is not None:
        logging.warning("%s", failure)
    logging.info("bicgstab: %d iterations, residual %.3e, %.2f s",
                 iterations, true_residual, report.wall_time)
    return x, report
