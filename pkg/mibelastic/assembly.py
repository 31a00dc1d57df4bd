# -*- coding: utf-8 -*-

"""
Finite-difference discretization of the elasticity equations and
assembly of the global sparse system.

Equation i of the inhomogeneous Navier system reads

    (lambda + mu) d_i div(u) + mu lap(u_i) + lambda_,i div(u)
        + sum_j mu_,j (d_i u_j + d_j u_i) = -F_i

and is discretized with second-order central differences. References
to nodes of the other phase are replaced by fictitious values; the
constants of those values move to the right-hand side.

Unknown ``3 * flat + c`` is component c of node ``flat``.
"""




import logging

import numpy as np
import scipy.sparse

from mibelastic.errors import MissingFictitious
from mibelastic.fictitious import central, cross
from mibelastic.grid import PLUS, MINUS, unit


__all__ = ['PdeStencil',
           'SparseSystem',
           'stencil_coefficients',
           'pde_stencil',
           'substitute_fictitious',
           'assemble_system']


def _offset(*steps):
    offset = np.zeros(3, dtype=int)
    for direction, sign in steps:
        offset[direction] += sign
    return tuple(int(step) for step in offset)


def stencil_coefficients(equation, lam, mu, grad_lam, grad_mu, spacing,
                         homogeneous=False):
    """Return the stencil of `equation` as ``[(offset, comp, coefficient)]``.

    Moduli may be scalars or arrays over nodes; gradients carry the
    direction as the first axis. In `homogeneous` mode gradients are
    ignored and every coefficient is divided by lambda + mu.
    """
    i = equation
    h = spacing
    if homogeneous:
        factor = 1.0 / (lam + mu)
        grad_lam = grad_mu = np.zeros(3)
    else:
        factor = 1.0

    def diffusion(d):
        return (lam + 2 * mu) if d == i else mu

    def convection(c, d):
        return ((c == d) * grad_lam[i] + (d == i) * grad_mu[c]
                + (c == i) * grad_mu[d])

    entries = [(_offset(), i,
                -2 * factor * sum(diffusion(d) / h[d] ** 2
                                  for d in range(3)))]
    for d in range(3):
        for sign in (-1, 1):
            for c in range(3):
                coefficient = sign * convection(c, d) / (2 * h[d])
                if c == i:
                    coefficient = coefficient + diffusion(d) / h[d] ** 2
                if np.any(coefficient != 0):
                    entries.append((unit(d, sign), c, factor * coefficient))
    for c in range(3):
        if c == i:
            continue
        for sign_i in (-1, 1):
            for sign_c in (-1, 1):
                entries.append((
                    _offset((i, sign_i), (c, sign_c)), c,
                    factor * (lam + mu) * sign_i * sign_c
                    / (4 * h[i] * h[c])))
    return entries


def _reference_context(offset):
    """Context of the fictitious value a stencil offset may need."""
    moved = [d for d in range(3) if offset[d]]
    if len(moved) == 1:
        return central(moved[0])
    return cross(moved)


class PdeStencil(object):

    """
    The finite-difference stencil of one equation at one node.

    Attributes:
        node (tuple[int]): Center node
        equation (int): Equation index, 0-based
        phase (str): Phase of the node
        entries (list[tuple]): ``((offset, comp), coefficient)``
        rhs_contribution (float): Right-hand side before substitution
    """

    def __init__(self, node, equation, phase, entries, rhs_contribution):
        self.node = tuple(node)
        self.equation = equation
        self.phase = phase
        self.entries = entries
        self.rhs_contribution = rhs_contribution

    def __repr__(self):
        return "PdeStencil({0}, eq {1}, {2} entries)".format(
            self.node, self.equation + 1, len(self.entries))

    def apply(self, values):
        """Apply to nodal values of shape ``(3,) + node_counts``."""
        return sum(coefficient * values[(comp,) + tuple(
            np.add(self.node, offset))]
                   for (offset, comp), coefficient in self.entries)


def pde_stencil(node, equation_index, material_field, phase_map,
                forcing=None, homogeneous=False):
    """Build the stencil of equation `equation_index` at `node`.

    Moduli and their gradients are taken at the node from its own
    phase.

    Arguments:
        node (tuple[int]): Interior node
        equation_index (int): 0, 1 or 2
        material_field (MaterialField): Moduli
        phase_map (PhaseMap): Node phases

    Keyword arguments:
        forcing (callable): ``forcing(x, y, z, plus)`` returning the
            body force; its negation is the right-hand side
        homogeneous (bool): Build the constant-coefficient form scaled
            by 1 / (lambda + mu)

    Returns:
        PdeStencil: The stencil
    """
    grid = phase_map.grid
    phase = phase_map.phase(node)
    material = material_field.phase(phase)
    x, y, z = grid.node_position(node)
    mu = float(material.mu_fn(x, y, z))
    grad_mu = np.asarray(material.mu_grad_fn(x, y, z), dtype=float)
    lam = material.lambda_factor * mu
    grad_lam = material.lambda_factor * grad_mu
    entries = [((offset, comp), float(coefficient))
               for offset, comp, coefficient in stencil_coefficients(
                   equation_index, lam, mu, grad_lam, grad_mu, grid.spacing,
                   homogeneous)]
    rhs = 0.0
    if forcing is not None:
        rhs = -float(forcing(x, y, z, phase == PLUS)[equation_index])
        if homogeneous:
            rhs /= lam + mu
    return PdeStencil(node, equation_index, phase, entries, rhs)


def substitute_fictitious(stencil, fictitious_table, phase_map):
    """Expand the references of `stencil` across the interface.

    Returns:
        tuple: ``(row, rhs_delta)``; `row` maps ``(node, comp)`` to
            coefficients over real grid values, `rhs_delta` is minus
            the coefficient-weighted constants

    Raises:
        MissingFictitious: If a needed fictitious value is absent
    """
    row = {}
    rhs_delta = 0.0
    for (offset, comp), coefficient in stencil.entries:
        target = tuple(int(index) for index in np.add(stencil.node, offset))
        if phase_map.phase(target) == stencil.phase:
            key = (target, comp)
            row[key] = row.get(key, 0.0) + coefficient
            continue
        context = _reference_context(offset)
        value = fictitious_table.get(target, comp, context)
        if value is None:
            raise MissingFictitious(
                "No fictitious u{0} at {1} ({2}) for the stencil at {3}"
                .format(comp + 1, target, context, stencil.node))
        for key, weight in value.terms.items():
            row[key] = row.get(key, 0.0) + coefficient * weight
        rhs_delta -= coefficient * value.constant
    return row, rhs_delta


class SparseSystem(object):

    """
    The assembled linear system.

    Attributes:
        grid (Grid): The grid
        matrix (scipy.sparse.csr_matrix): 3N x 3N matrix
        rhs (numpy.ndarray): Right-hand side
        boundary (numpy.ndarray): Unknown indices of Dirichlet rows
    """

    def __init__(self, grid, matrix, rhs, boundary):
        self.grid = grid
        self.matrix = matrix
        self.rhs = rhs
        self.boundary = boundary

    def __repr__(self):
        return "SparseSystem({0} unknowns, {1} nonzeros)".format(
            self.dimension, self.matrix.nnz)

    @property
    def dimension(self):
        return self.matrix.shape[0]

    def unknown_index(self, node, comp):
        return 3 * self.grid.flat_index(node) + comp

    def residual(self, solution):
        """Return ``rhs - matrix solution``."""
        return self.rhs - self.matrix.dot(solution)

    def interior_rows(self):
        mask = np.ones(self.dimension, dtype=bool)
        mask[self.boundary] = False
        return mask


def _nodal(material_field, plus, X, Y, Z):
    """Moduli of the own phase at every node."""
    values = []
    for phase in (PLUS, MINUS):
        material = material_field.phase(phase)
        mu = np.broadcast_to(material.mu_fn(X, Y, Z), X.shape)
        grad_mu = np.broadcast_to(material.mu_grad_fn(X, Y, Z),
                                  (3,) + X.shape)
        values.append((material.lambda_factor * mu, mu,
                       material.lambda_factor * grad_mu, grad_mu))
    return [np.where(plus, plus_value, minus_value)
            for plus_value, minus_value in zip(*values)]


def assemble_system(grid, phase_map, material_field, fictitious_table,
                    forcing, boundary_values, homogeneous=False):
    """Assemble the global system.

    Interior rows hold the stencils with crossing references replaced
    by fictitious values and right-hand side ``-F`` of the node's
    phase. Boundary rows are identity rows with the Dirichlet value.

    Arguments:
        grid (Grid), phase_map (PhaseMap): Geometry
        material_field (MaterialField): Moduli
        fictitious_table (FictitiousTable): Resolved fictitious values
        forcing (callable): ``forcing(X, Y, Z, plus)`` of shape
            ``(3,) + X.shape``
        boundary_values (callable): Same signature, the Dirichlet data

    Keyword arguments:
        homogeneous (bool): Use the constant-coefficient form

    Returns:
        SparseSystem: The system

    Raises:
        MissingFictitious: If a crossing reference has no value
    """
    X, Y, Z = grid.coordinates()
    plus = phase_map.plus
    lam, mu, grad_lam, grad_mu = _nodal(material_field, plus, X, Y, Z)
    boundary_mask = grid.boundary_mask()
    nodes = np.argwhere(~boundary_mask)
    index = tuple(nodes.T)
    flat = np.ravel_multi_index(index, grid.node_counts)
    node_plus = plus[index]

    rows, cols, vals = [], [], []
    rhs = np.zeros(3 * grid.num_nodes)
    force = np.asarray(forcing(X, Y, Z, plus))
    crossing = 0
    for equation in range(3):
        row_index = 3 * flat + equation
        source = -force[equation][index]
        if homogeneous:
            source = source / (lam[index] + mu[index])
        rhs[row_index] = source
        entries = stencil_coefficients(
            equation, lam[index], mu[index], grad_lam[(slice(None),) + index],
            grad_mu[(slice(None),) + index], grid.spacing, homogeneous)
        for offset, comp, coefficient in entries:
            coefficient = np.broadcast_to(coefficient, flat.shape)
            targets = nodes + np.array(offset)
            target_index = tuple(targets.T)
            same = plus[target_index] == node_plus
            target_flat = np.ravel_multi_index(target_index,
                                               grid.node_counts)
            rows.append(row_index[same])
            cols.append(3 * target_flat[same] + comp)
            vals.append(coefficient[same])
            context = _reference_context(offset)
            for num in np.flatnonzero(~same):
                target = tuple(int(i) for i in targets[num])
                value = fictitious_table.get(target, comp, context)
                if value is None:
                    raise MissingFictitious(
                        "No fictitious u{0} at {1} ({2}) for the stencil"
                        " at {3}".format(comp + 1, target, context,
                                         tuple(nodes[num])))
                crossing += 1
                for (node, term_comp), weight in value.terms.items():
                    rows.append([row_index[num]])
                    cols.append([3 * grid.flat_index(node) + term_comp])
                    vals.append([coefficient[num] * weight])
                rhs[row_index[num]] -= coefficient[num] * value.constant

    boundary_nodes = np.flatnonzero(boundary_mask.ravel())
    data = np.asarray(boundary_values(X, Y, Z, plus))
    boundary = []
    for comp in range(3):
        unknowns = 3 * boundary_nodes + comp
        boundary.append(unknowns)
        rows.append(unknowns)
        cols.append(unknowns)
        vals.append(np.ones(len(unknowns)))
        rhs[unknowns] = data[comp].ravel()[boundary_nodes]

    dimension = 3 * grid.num_nodes
    matrix = scipy.sparse.coo_matrix(
        (np.concatenate(vals), (np.concatenate(rows).astype(int),
                                np.concatenate(cols).astype(int))),
        shape=(dimension, dimension)).tocsr()
    matrix.eliminate_zeros()
    logging.info("assembled %d unknowns, %d nonzeros, %d crossing references",
                 dimension, matrix.nnz, crossing)
    return SparseSystem(grid, matrix, rhs,
                        np.sort(np.concatenate(boundary)))
