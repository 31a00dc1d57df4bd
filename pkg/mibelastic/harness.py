# -*- coding: utf-8 -*-

"""
End-to-end solves of manufactured problems and their error reports.

:func:`run_solve` runs the whole pipeline on one grid: grid, phase
classification, meshline intersections, fictitious values, assembly,
BiCGStab and error norms. :func:`converge` repeats it over a sequence
of grids and fills in the convergence orders. Reports are written and
read through the report writers of :mod:`mibelastic.report`.
"""




import csv
import logging
import math

import numpy as np

from mibelastic import report
from mibelastic.assembly import assemble_system
from mibelastic.errors import (IoError, MibError, NonpositiveError,
                               ShapeMismatch)
from mibelastic.fictitious import build_fictitious_table
from mibelastic.grid import build_grid, classify_nodes, find_intersections
from mibelastic.settings import Settings
from mibelastic.solver import bicgstab


__all__ = ['ERROR_COLUMNS',
           'ErrorReport',
           'SolutionFields',
           'error_norms',
           'convergence_order',
           'apply_settings',
           'singularity_distance',
           'run_solve',
           'converge',
           'write_errors_csv',
           'read_errors_csv',
           'write_field_vtk']


ERROR_COLUMNS = [
    "example", "case", "nx", "ny", "nz", "h",
    "linf_u1", "ord_u1", "linf_u2", "ord_u2", "linf_u3", "ord_u3",
    "l2_u1", "ord2_u1", "l2_u2", "ord2_u2", "l2_u3", "ord2_u3",
    "iters", "residual",
    ]
"""Columns of an error report row, in file order"""


class ErrorReport(object):

    """
    Error norms of one solve.

    Attributes:
        example, case (int): Catalog keys; None outside the catalog
        node_counts (tuple[int]): Nodes per direction
        h (float): Largest grid spacing
        linf, l2 (tuple[float]): Per-component maximum and root mean
            square errors
        orders_linf, orders_l2 (tuple[float] | None): Orders against
            the previous grid of a sweep
        iterations (int), residual (float): Solver outcome
        grid: Catalog grid label (node count or grid size)
        converged (bool): Whether the solver converged
        singularity_distance (int | None): Graph distance from the
            node of maximum error to the nearest irregular node next
            to an edge or tip of the interface
    """

    def __init__(self, linf, l2, node_counts, h, example=None, case=None,
                 iterations=0, residual=0.0, grid=None):
        self.linf = tuple(float(value) for value in linf)
        self.l2 = tuple(float(value) for value in l2)
        self.node_counts = tuple(int(count) for count in node_counts)
        self.h = float(h)
        self.example = example
        self.case = case
        self.iterations = int(iterations)
        self.residual = float(residual)
        self.grid = grid
        self.orders_linf = None
        self.orders_l2 = None
        self.converged = True
        self.singularity_distance = None

    def __repr__(self):
        return ("ErrorReport(example={0}, case={1}, grid={2},"
                " linf={3})".format(self.example, self.case,
                                    self.node_counts, self.linf))

    def __eq__(self, other):
        return (isinstance(other, ErrorReport)
                and self.as_row() == other.as_row())

    def __ne__(self, other):
        return not self == other

    @property
    def grid_label(self):
        return " x ".join(str(count) for count in self.node_counts)

    def with_previous(self, previous):
        """Set the orders against the coarser report `previous`."""
        self.orders_linf = tuple(
            convergence_order(coarse, fine)
            for coarse, fine in zip(previous.linf, self.linf))
        self.orders_l2 = tuple(
            convergence_order(coarse, fine)
            for coarse, fine in zip(previous.l2, self.l2))
        return self

    def as_row(self):
        """Return the report as a dict keyed by `ERROR_COLUMNS`."""
        row = {"example": self.example, "case": self.case,
               "nx": self.node_counts[0], "ny": self.node_counts[1],
               "nz": self.node_counts[2], "h": self.h,
               "iters": self.iterations, "residual": self.residual}
        for comp in range(3):
            name = "u{0}".format(comp + 1)
            row["linf_" + name] = self.linf[comp]
            row["l2_" + name] = self.l2[comp]
            row["ord_" + name] = (self.orders_linf[comp]
                                  if self.orders_linf else None)
            row["ord2_" + name] = (self.orders_l2[comp]
                                   if self.orders_l2 else None)
        return row

    @classmethod
    def from_row(cls, row):
        """Construct a report from a row of strings keyed by column.

        The grid label is the node count for cubic grids and the grid
        size otherwise.
        """
        def number(key, type_=float):
            value = row.get(key, "")
            return None if value in ("", None) else type_(value)

        node_counts = (number("nx", int), number("ny", int),
                       number("nz", int))
        names = ["u{0}".format(comp + 1) for comp in range(3)]
        result = cls([number("linf_" + name) for name in names],
                     [number("l2_" + name) for name in names],
                     node_counts, number("h"), number("example", int),
                     number("case", int), number("iters", int),
                     number("residual"))
        if number("ord_u1") is not None:
            result.orders_linf = tuple(number("ord_" + name)
                                       for name in names)
        if number("ord2_u1") is not None:
            result.orders_l2 = tuple(number("ord2_" + name)
                                     for name in names)
        result.grid = (node_counts[0] if len(set(node_counts)) == 1
                       else result.h)
        return result


class SolutionFields(object):

    """
    Numeric and exact nodal displacements of a solve.

    Attributes:
        grid (Grid): The grid
        numeric, exact (numpy.ndarray): Shape ``(3,) + node_counts``
        title (str): Description written into field files
    """

    def __init__(self, grid, numeric, exact, title="mibelastic"):
        self.grid = grid
        self.numeric = numeric
        self.exact = exact
        self.title = title

    @property
    def error(self):
        return self.numeric - self.exact


def error_norms(numeric, exact, grid):
    """Return the per-component error norms of `numeric` against `exact`.

    Arguments:
        numeric, exact (numpy.ndarray): Nodal values of shape
            ``(3,) + node_counts``
        grid (Grid): The grid of both fields

    Returns:
        ErrorReport: L-infinity (maximum over all nodes) and L2 (root
            of the mean square over all nodes) errors

    Raises:
        ShapeMismatch: If the fields do not both live on `grid`
    """
    numeric = np.asarray(numeric, dtype=float)
    exact = np.asarray(exact, dtype=float)
    expected = (3,) + tuple(grid.node_counts)
    if numeric.shape != expected or exact.shape != expected:
        raise ShapeMismatch("Fields of shape {0} and {1} on a grid of {2}"
                            .format(numeric.shape, exact.shape, expected))
    error = np.abs(numeric - exact).reshape(3, -1)
    linf = error.max(axis=1)
    l2 = np.sqrt((error ** 2).mean(axis=1))
    return ErrorReport(linf, l2, grid.node_counts, grid.h)


def convergence_order(error_coarse, error_fine):
    """Return ``log2(error_coarse / error_fine)``.

    Raises:
        NonpositiveError: If either error is not positive
    """
    if not (error_coarse > 0 and error_fine > 0):
        raise NonpositiveError("Orders need positive errors, got {0} and {1}"
                               .format(error_coarse, error_fine))
    return math.log(error_coarse / error_fine, 2)


def apply_settings(problem, settings):
    """Return `problem` with the domain bound overrides of `settings`."""
    bounds_min = settings.get_option_vector("bounds_min")
    bounds_max = settings.get_option_vector("bounds_max")
    if bounds_min is None and bounds_max is None:
        return problem
    logging.info("domain bounds overridden: %s %s", bounds_min, bounds_max)
    return problem.with_bounds(bounds_min, bounds_max)


def singularity_distance(phase_map, shape, error):
    """Graph distance from the worst node to the singular irregular nodes.

    Irregular nodes within two grid sizes of an edge or tip of `shape`
    count as singular. The distance is taken over the six-neighbor
    lattice.

    Returns:
        int | None: The distance, or None for smooth shapes and grids
            without singular irregular nodes
    """
    if shape.smooth:
        return None
    grid = phase_map.grid
    irregular = phase_map.central_irregular.any(axis=0)
    for flags in phase_map.cross_irregular.values():
        irregular = irregular | flags
    near = shape.singularity_distance(*grid.coordinates()) <= 2 * grid.h
    singular = np.argwhere(irregular & near)
    if not len(singular):
        return None
    worst = np.unravel_index(np.argmax(np.abs(error).max(axis=0)),
                             grid.node_counts)
    return int(np.abs(singular - np.array(worst)).sum(axis=1).min())


def run_solve(problem, node_counts, settings=None, grid_label=None):
    """Solve `problem` on a grid with `node_counts` nodes.

    Arguments:
        problem (ManufacturedProblem): The problem
        node_counts (sequence[int]): Nodes per direction

    Keyword arguments:
        settings (Settings): Run options; defaults if omitted
        grid_label: Catalog grid label stored on the report

    Returns:
        tuple: ``(SolutionFields, ErrorReport, SolveReport)``

    Raises:
        MibError: From any stage, with the stage name in its `stage`
            attribute
    """
    if settings is None:
        settings = Settings()
    problem = apply_settings(problem, settings)
    stage = "grid"
    try:
        grid = build_grid(problem.bounds_min, problem.bounds_max, node_counts)
        logging.info("example %s on %s nodes", problem.label,
                     " x ".join(str(count) for count in grid.node_counts))
        stage = "classify"
        phase_map = classify_nodes(grid, problem.shape)
        stage = "intersections"
        intersections = find_intersections(grid, problem.shape, phase_map,
                                           on_degenerate="mark")
        logging.info("%d interface crossings", len(intersections))
        stage = "fictitious"
        table = build_fictitious_table(
            phase_map, intersections, problem.material_field,
            problem.jump_data,
            threads=settings.get_option_int("parallel_threads"),
            condition_limit=settings.get_option_float("condition_limit"))
        stage = "assembly"
        system = assemble_system(grid, phase_map, problem.material_field,
                                 table, problem.forcing,
                                 problem.boundary_values)
        stage = "solve"
        solution, solve_report = bicgstab(
            system, rel_tolerance=settings.get_option_float("tolerance"),
            max_iterations=settings.get_option_int("max_iterations"))
        stage = "errors"
        numeric = np.moveaxis(
            solution.reshape(tuple(grid.node_counts) + (3,)), -1, 0)
        X, Y, Z = grid.coordinates()
        exact = np.asarray(problem.exact_solution(X, Y, Z, phase_map.plus))
        fields = SolutionFields(grid, numeric, exact,
                                "mibelastic example {0}".format(problem.label))
        errors = error_norms(numeric, exact, grid)
    except MibError as e:
        e.stage = stage
        logging.error("%s stage failed: %s", stage, e)
        raise
    errors.example = problem.example
    errors.case = problem.case
    errors.grid = grid_label
    errors.iterations = solve_report.iterations
    errors.residual = solve_report.true_residual
    errors.converged = solve_report.converged
    errors.singularity_distance = singularity_distance(
        phase_map, problem.shape, fields.error)
    logging.info("errors linf %s l2 %s", ", ".join(
        "{0:.3e}".format(value) for value in errors.linf), ", ".join(
        "{0:.3e}".format(value) for value in errors.l2))
    return fields, errors, solve_report


def converge(problem, grids=None, settings=None):
    """Solve `problem` on successively finer grids.

    Arguments:
        problem (ManufacturedProblem): The problem

    Keyword arguments:
        grids (sequence): Node counts or grid sizes; the catalog grids
            if omitted
        settings (Settings): Run options

    Returns:
        list[ErrorReport]: One report per grid, orders set from the
            second on
    """
    if settings is None:
        settings = Settings()
    problem = apply_settings(problem, settings)
    reports = []
    for grid in (grids or problem.grids):
        _, errors, _ = run_solve(problem, problem.node_counts(grid),
                                 settings, grid_label=grid)
        if reports:
            errors.with_previous(reports[-1])
            logging.info("orders linf %s", ", ".join(
                "{0:.2f}".format(order) for order in errors.orders_linf))
        reports.append(errors)
    return reports


def write_errors_csv(reports, path):
    """Write `reports` to the CSV file `path`.

    Raises:
        IoError: If the file cannot be written
    """
    report.make_writer("csv").write(path, reports=reports)


def read_errors_csv(path):
    """Read error reports from the CSV file `path`.

    Raises:
        IoError: If the file cannot be read or has other columns
    """
    try:
        with open(path) as csv_file:
            reader = csv.DictReader(csv_file)
            if reader.fieldnames != ERROR_COLUMNS:
                raise IoError("{0}: unexpected columns {1}"
                              .format(path, reader.fieldnames))
            return [ErrorReport.from_row(row) for row in reader]
    except (IOError, OSError) as e:
        raise IoError("Cannot read {0}: {1}".format(path, e))
    except ValueError as e:
        raise IoError("{0}: malformed value: {1}".format(path, e))


def write_field_vtk(fields, grid, path):
    """Write `fields` on `grid` as a legacy VTK file `path`.

    Raises:
        IoError: If the file cannot be written
    """
    if grid is not fields.grid:
        fields = SolutionFields(grid, fields.numeric, fields.exact,
                                fields.title)
    report.make_writer("vtk").write(path, fields=fields)
