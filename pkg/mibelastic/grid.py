# -*- coding: utf-8 -*-

"""
Uniform Cartesian grids, phase classification and meshline intersections.

This module contains :class:`Grid`, :class:`PhaseMap` and
:class:`IntersectionPoint` and the operations building them from an
implicit interface: :func:`build_grid`, :func:`classify_nodes`,
:func:`find_intersections` and :func:`normal_angles`.

Nodes are addressed by index triples ``(i, j, k)``; arrays over the
grid have the shape ``grid.node_counts`` and are indexed the same way.
"""




import logging
import math

import numpy as np

import mib_config as config
from mibelastic.errors import InvalidGrid, DegenerateNormal


__all__ = ['PLUS',
           'MINUS',
           'AXES',
           'PLANES',
           'Grid',
           'PhaseMap',
           'IntersectionPoint',
           'build_grid',
           'pair_slices',
           'classify_nodes',
           'find_intersections',
           'normal_angles',
           'angles_from_normal']


PLUS = "+"
MINUS = "-"

AXES = "xyz"
"""Axis names by direction index."""

PLANES = ((0, 1), (0, 2), (1, 2))
"""Coordinate planes as sorted direction pairs."""


def unit(direction, sign=1):
    """Return the index offset of a step `sign` along `direction`."""
    offset = [0, 0, 0]
    offset[direction] = sign
    return tuple(offset)


def shift(node, direction, steps=1):
    """Return `node` moved `steps` nodes along `direction`."""
    node = list(node)
    node[direction] += steps
    return tuple(node)


class Grid(object):

    """
    A uniform Cartesian node lattice.

    Attributes:
        bounds_min, bounds_max (numpy.ndarray): Domain corners
        node_counts (tuple[int]): Nodes per direction
        spacing (numpy.ndarray): Node spacing per direction
    """

    def __init__(self, bounds_min, bounds_max, node_counts):
        self.bounds_min = np.asarray(bounds_min, dtype=float)
        self.bounds_max = np.asarray(bounds_max, dtype=float)
        self.node_counts = tuple(int(count) for count in node_counts)
        self.spacing = ((self.bounds_max - self.bounds_min)
                        / (np.array(self.node_counts) - 1))

    def __repr__(self):
        return "Grid({0}, {1}, {2})".format(
            list(self.bounds_min), list(self.bounds_max),
            self.node_counts)

    @property
    def num_nodes(self):
        return int(np.prod(self.node_counts))

    @property
    def h(self):
        """The largest spacing, used as the grid size label."""
        return float(self.spacing.max())

    def axis_coordinates(self, direction):
        """Return the node coordinates along `direction`."""
        return (self.bounds_min[direction]
                + np.arange(self.node_counts[direction])
                * self.spacing[direction])

    def coordinates(self):
        """Return coordinate arrays ``(X, Y, Z)`` over all nodes."""
        return np.meshgrid(*[self.axis_coordinates(d) for d in range(3)],
                           indexing="ij")

    def node_position(self, node):
        return self.bounds_min + np.asarray(node) * self.spacing

    def flat_index(self, node):
        """Return the node-major flat index of `node`."""
        i, j, k = node
        return (i * self.node_counts[1] + j) * self.node_counts[2] + k

    def contains(self, node):
        return all(0 <= index < count
                   for index, count in zip(node, self.node_counts))

    def is_boundary(self, node):
        return any(index == 0 or index == count - 1
                   for index, count in zip(node, self.node_counts))

    def boundary_mask(self):
        mask = np.zeros(self.node_counts, dtype=bool)
        mask[0, :, :] = mask[-1, :, :] = True
        mask[:, 0, :] = mask[:, -1, :] = True
        mask[:, :, 0] = mask[:, :, -1] = True
        return mask


def build_grid(bounds_min, bounds_max, node_counts):
    """Build a :class:`Grid` after checking its preconditions.

    Arguments:
        bounds_min, bounds_max (sequence[float]): Domain corners
        node_counts (sequence[int]): Nodes per direction, at least 4

    Returns:
        Grid: The grid

    Raises:
        InvalidGrid: If a node count is below 4 or the bounds are not
            increasing in every direction
    """
    if len(bounds_min) != 3 or len(bounds_max) != 3 or len(node_counts) != 3:
        raise InvalidGrid("Grid needs three bounds and three node counts")
    for direction in range(3):
        if int(node_counts[direction]) < 4:
            raise InvalidGrid("Grid needs at least 4 nodes along {0}, got {1}"
                              .format(AXES[direction],
                                      node_counts[direction]))
        if not bounds_max[direction] > bounds_min[direction]:
            raise InvalidGrid("Empty domain along {0}: [{1}, {2}]"
                              .format(AXES[direction], bounds_min[direction],
                                      bounds_max[direction]))
    grid = Grid(bounds_min, bounds_max, node_counts)
    logging.debug("grid: %s spacing %s", grid, grid.spacing)
    return grid


def pair_slices(direction, diagonal=None):
    """Return slices selecting lower and upper members of neighbor pairs.

    With `diagonal` ``(other, sign)`` the pairs are diagonal neighbors
    in the plane of `direction` and `other`.
    """
    lower = [slice(None)] * 3
    upper = [slice(None)] * 3
    lower[direction] = slice(0, -1)
    upper[direction] = slice(1, None)
    if diagonal is not None:
        other, sign = diagonal
        if sign > 0:
            lower[other] = slice(0, -1)
            upper[other] = slice(1, None)
        else:
            lower[other] = slice(1, None)
            upper[other] = slice(0, -1)
    return tuple(lower), tuple(upper)


class PhaseMap(object):

    """
    Phase tags and irregularity flags of all grid nodes.

    Attributes:
        grid (Grid): The grid
        phi (numpy.ndarray): Interface function values at the nodes
        plus (numpy.ndarray): True for nodes in the plus phase
        central_irregular (numpy.ndarray): Shape ``(3,) + node_counts``;
            flags nodes with an opposite-phase neighbor along each axis
        cross_irregular (dict[tuple, numpy.ndarray]): Per plane in
            `PLANES`, flags nodes with an opposite-phase diagonal
            neighbor in that plane
    """

    def __init__(self, grid, phi, plus):
        self.grid = grid
        self.phi = phi
        self.plus = plus
        self.central_irregular = np.zeros((3,) + grid.node_counts,
                                          dtype=bool)
        for direction in range(3):
            lower, upper = pair_slices(direction)
            change = plus[lower] != plus[upper]
            self.central_irregular[direction][lower] |= change
            self.central_irregular[direction][upper] |= change
        self.cross_irregular = {}
        for plane in PLANES:
            flags = np.zeros(grid.node_counts, dtype=bool)
            for sign in (1, -1):
                lower, upper = pair_slices(plane[0], (plane[1], sign))
                change = plus[lower] != plus[upper]
                flags[lower] |= change
                flags[upper] |= change
            self.cross_irregular[plane] = flags

    def is_plus(self, node):
        return bool(self.plus[node])

    def phase(self, node):
        return PLUS if self.plus[node] else MINUS

    def is_irregular(self, node):
        return (bool(self.central_irregular[(slice(None),) + tuple(node)]
                     .any())
                or any(flags[node] for flags in self.cross_irregular.values()))


def classify_nodes(grid, interface):
    """Tag every node with its phase and irregularity.

    Nodes with ``|phi| < ON_INTERFACE_TOLERANCE * h`` are treated as
    minus nodes.

    Arguments:
        grid (Grid): The grid
        interface (InterfaceShape): The interface

    Returns:
        PhaseMap: The phase map
    """
    phi = interface.value(*grid.coordinates())
    tolerance = config.ON_INTERFACE_TOLERANCE * float(grid.spacing.min())
    plus = phi >= tolerance
    logging.debug("classify_nodes: %d plus, %d minus nodes",
                  int(plus.sum()), int(plus.size - plus.sum()))
    return PhaseMap(grid, phi, plus)


def angles_from_normal(normal):
    """Return azimuth and zenith ``(theta, phi_angle)`` of a unit normal."""
    theta = math.atan2(normal[1], normal[0])
    phi_angle = math.acos(min(1.0, max(-1.0, normal[2])))
    return theta, phi_angle


class IntersectionPoint(object):

    """
    An intersection of the interface with a meshline.

    Attributes:
        position (numpy.ndarray): The point
        direction (int): Meshline direction
        lower (tuple[int]): The bracketing node with smaller index
        fraction (float): Position between the bracketing nodes, in
            units of the spacing, strictly inside (0, 1)
        normal (numpy.ndarray | None): Unit normal pointing into the
            plus phase; None at a degenerate point
        theta, phi_angle (float | None): Azimuth and zenith of `normal`
        lower_plus (bool): Whether the lower node is a plus node
        degenerate (bool): Whether the interface gradient vanished
    """

    def __init__(self, position, direction, lower, fraction, normal,
                 lower_plus):
        self.position = np.asarray(position, dtype=float)
        self.direction = direction
        self.lower = tuple(int(index) for index in lower)
        self.fraction = float(fraction)
        self.lower_plus = bool(lower_plus)
        self.degenerate = normal is None
        if normal is None:
            self.normal = self.theta = self.phi_angle = None
        else:
            self.normal = np.asarray(normal, dtype=float)
            self.theta, self.phi_angle = angles_from_normal(self.normal)

    def __repr__(self):
        return "IntersectionPoint({0}, {1}, lower={2}, t={3:.6f})".format(
            AXES[self.direction], list(self.position), self.lower,
            self.fraction)

    @property
    def upper(self):
        return shift(self.lower, self.direction)

    @property
    def key(self):
        return (self.direction, self.lower)

    @property
    def meshline(self):
        """Return ``(direction, line indices, (lower, upper))``."""
        line = tuple(index for d, index in enumerate(self.lower)
                     if d != self.direction)
        return (self.direction, line, (self.lower, self.upper))

    @property
    def side_of_lower_node(self):
        return PLUS if self.lower_plus else MINUS


def _bisect(grid, interface, phase_map, direction, lower_nodes):
    """Locate one root per bracketing pair by vectorized bisection."""
    count = len(lower_nodes)
    index = tuple(lower_nodes.T)
    upper_index = tuple((lower_nodes + unit(direction)).T)
    phi_lower = phase_map.phi[index]
    phi_upper = phase_map.phi[upper_index]
    lower_plus = phase_map.plus[index]
    start = grid.bounds_min + lower_nodes * grid.spacing
    step = np.zeros(3)
    step[direction] = grid.spacing[direction]
    tolerance = config.ROOT_TOLERANCE * np.maximum(
        1.0, np.maximum(np.abs(phi_lower), np.abs(phi_upper)))
    on_interface = (config.ON_INTERFACE_TOLERANCE
                    * float(grid.spacing.min()))
    low = np.zeros(count)
    high = np.ones(count)
    fraction = np.full(count, 0.5)
    active = np.arange(count)
    for _ in range(config.BISECTION_MAX_STEPS):
        if not active.size:
            break
        middle = 0.5 * (low[active] + high[active])
        points = start[active] + middle[:, None] * step
        values = interface.value(points[:, 0], points[:, 1], points[:, 2])
        fraction[active] = middle
        same = (values >= on_interface) == lower_plus[active]
        low[active] = np.where(same, middle, low[active])
        high[active] = np.where(same, high[active], middle)
        active = active[np.abs(values) > tolerance[active]]
    if active.size:
        logging.debug("bisection cap reached for %d intersections along %s",
                      active.size, AXES[direction])
    return start + fraction[:, None] * step, fraction, lower_plus


def find_intersections(grid, interface, phase_map=None,
                       on_degenerate="raise"):
    """Find the interface crossings of every meshline.

    Arguments:
        grid (Grid): The grid
        interface (InterfaceShape): The interface

    Keyword arguments:
        phase_map (PhaseMap): The phase map; classified here if
            omitted
        on_degenerate (str): ``raise`` to raise on a vanishing
            gradient, ``mark`` to return the point with
            ``degenerate`` set

    Returns:
        list[IntersectionPoint]: One point per sign change between
            adjacent nodes, ordered by direction and lower node

    Raises:
        DegenerateNormal: If the interface gradient at a root is
            shorter than `GRADIENT_MIN_NORM` and `on_degenerate` is
            ``raise``
    """
    if phase_map is None:
        phase_map = classify_nodes(grid, interface)
    h = float(grid.spacing.min())
    intersections = []
    for direction in range(3):
        lower, upper = pair_slices(direction)
        change = phase_map.plus[lower] != phase_map.plus[upper]
        lower_nodes = np.argwhere(change)
        if not len(lower_nodes):
            continue
        positions, fractions, lower_plus = _bisect(
            grid, interface, phase_map, direction, lower_nodes)
        gradients = interface.gradient(positions[:, 0], positions[:, 1],
                                       positions[:, 2], h=h)
        norms = np.sqrt((gradients ** 2).sum(axis=0))
        degenerate = norms < config.GRADIENT_MIN_NORM
        if degenerate.any() and on_degenerate == "raise":
            raise DegenerateNormal(
                "Interface gradient vanishes at {0}".format(
                    list(positions[np.argmax(degenerate)])))
        normals = gradients / np.where(degenerate, 1.0, norms)
        for num, node in enumerate(lower_nodes):
            intersections.append(IntersectionPoint(
                positions[num], direction, node, fractions[num],
                None if degenerate[num] else normals[:, num],
                lower_plus[num]))
        logging.debug("find_intersections: %d along %s (%d degenerate)",
                      len(lower_nodes), AXES[direction],
                      int(degenerate.sum()))
    return intersections


def normal_angles(interface, point, h=1.0):
    """Return azimuth and zenith of the interface normal at `point`.

    Raises:
        DegenerateNormal: If the interface gradient is shorter than
            `GRADIENT_MIN_NORM`
    """
    gradient = np.asarray(interface.gradient(*point, h=h), dtype=float)
    norm = float(np.sqrt((gradient ** 2).sum()))
    if norm < config.GRADIENT_MIN_NORM:
        raise DegenerateNormal("Interface gradient vanishes at {0}"
                               .format(list(point)))
    return angles_from_normal(gradient / norm)
