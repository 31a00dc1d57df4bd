# -*- coding: utf-8 -*-

"""
Lagrange weights and one-sided derivative stencils at intersections.

An intersection o on a meshline along direction d lies between the
nodes L (lower) and U = L + e_d. Each side s of the interface
approximates its limits at o from a *side triple* of nodes on the
meshline: the phase of L uses (L - 1, L, U), the phase of U uses
(L, U, U + 1). The node of the other phase in a triple is a
fictitious unknown of the local solve.

Derivatives of side s across the meshline (direction d' != d) use an
auxiliary 3 x 3 block: three lines parallel to the meshline, each
interpolated at the coordinate of o, combined by a first-derivative
weight along d'.
"""




import itertools
import logging

import numpy as np

from mibelastic.errors import DuplicateNodes, StencilUnavailable
from mibelastic.grid import PLUS, MINUS, shift


__all__ = ['StencilWeights',
           'DerivativeStencil',
           'lagrange_weights',
           'side_offsets',
           'side_triple',
           'interfacial_derivative_stencil',
           'stencil_availability']


DERIVATIVE_OFFSETS = ((-1, 0, 1), (0, 1, 2), (-2, -1, 0))
"""Candidate line offsets across the meshline, in order of preference."""

WINDOW_STARTS = (-1, 0, -2, 1)
"""Candidate first nodes of an auxiliary line window, relative to L."""


class StencilWeights(object):

    """
    Lagrange interpolation (order 0) or first-derivative (order 1)
    weights of `nodes` at `eval_point`.
    """

    def __init__(self, nodes, eval_point, order, weights):
        self.nodes = tuple(nodes)
        self.eval_point = eval_point
        self.order = order
        self.weights = np.asarray(weights, dtype=float)

    def __repr__(self):
        return "StencilWeights({0}, {1}, order={2}: {3})".format(
            self.nodes, self.eval_point, self.order, list(self.weights))

    def apply(self, values):
        return float(np.dot(self.weights, values))


def lagrange_weights(nodes, eval_point, order=0):
    """Return the Lagrange weights of `nodes` at `eval_point`.

    Arguments:
        nodes (sequence[float]): Pairwise distinct node coordinates
        eval_point (float): Evaluation coordinate
        order (int): 0 for interpolation, 1 for the first derivative

    Returns:
        StencilWeights: The weights, exact on polynomials of degree
            below ``len(nodes)``

    Raises:
        DuplicateNodes: If two nodes coincide
    """
    nodes = [float(node) for node in nodes]
    if len(set(nodes)) != len(nodes):
        raise DuplicateNodes("Stencil nodes must be distinct: {0}"
                             .format(nodes))
    if order not in (0, 1):
        raise ValueError("Stencil order must be 0 or 1, got {0}"
                         .format(order))
    count = len(nodes)
    weights = np.zeros(count)
    for i in range(count):
        denominator = 1.0
        for j in range(count):
            if j != i:
                denominator *= nodes[i] - nodes[j]
        if order == 0:
            numerator = 1.0
            for j in range(count):
                if j != i:
                    numerator *= eval_point - nodes[j]
        else:
            numerator = 0.0
            for j in range(count):
                if j == i:
                    continue
                product = 1.0
                for k in range(count):
                    if k != i and k != j:
                        product *= eval_point - nodes[k]
                numerator += product
        weights[i] = numerator / denominator
    return StencilWeights(nodes, eval_point, order, weights)


def side_offsets(intersection, phase):
    """Return the side-triple offsets of `phase`, relative to L."""
    if phase == intersection.side_of_lower_node:
        return (-1, 0, 1)
    return (0, 1, 2)


def side_triple(intersection, phase, grid):
    """Return the side-triple nodes of `phase` at `intersection`.

    Raises:
        StencilUnavailable: If the triple leaves the grid
    """
    nodes = [shift(intersection.lower, intersection.direction, offset)
             for offset in side_offsets(intersection, phase)]
    if not all(grid.contains(node) for node in nodes):
        raise StencilUnavailable("Side triple of {0} leaves the grid at {1}"
                                 .format(phase, intersection))
    return nodes


class DerivativeStencil(object):

    """
    A first-derivative approximation at an intersection.

    Attributes:
        direction (int): Derivative direction
        phase (str): The side whose limit is approximated
        terms (dict[tuple, float]): Node weights; nodes of the other
            phase are fictitious unknowns
        offsets (tuple[int]): Line offsets across the meshline; empty
            along the meshline
        distance (float): Summed distance of auxiliary nodes to the
            intersection
    """

    def __init__(self, direction, phase, terms, offsets=(), distance=0.0):
        self.direction = direction
        self.phase = phase
        self.terms = terms
        self.offsets = offsets
        self.distance = distance

    def __repr__(self):
        return "DerivativeStencil(d={0}, {1}, offsets={2})".format(
            self.direction, self.phase, self.offsets)

    def apply(self, values):
        """Apply to a mapping from nodes to values."""
        return sum(weight * values[node]
                   for node, weight in self.terms.items())


def _window(intersection, line_node, phase, phase_map):
    """Best in-phase 3-node window on the line through `line_node`.

    Returns ``(start, distance)`` or None.
    """
    grid = phase_map.grid
    direction = intersection.direction
    best = None
    for start in WINDOW_STARTS:
        nodes = [shift(line_node, direction, start + k) for k in range(3)]
        if not all(grid.contains(node) for node in nodes):
            continue
        if not all(phase_map.phase(node) == phase for node in nodes):
            continue
        distance = sum(
            float(np.linalg.norm(grid.node_position(node)
                                 - intersection.position))
            for node in nodes)
        if best is None or distance < best[1]:
            best = (start, distance)
    return best


def interfacial_derivative_stencil(intersection, derivative_direction,
                                   phase, phase_map):
    """Approximate the `phase` limit of a first derivative at `intersection`.

    Along the meshline the side triple is differentiated directly.
    Across it, the block of lines closest to the intersection is used:
    each line is interpolated at the intersection coordinate from an
    in-phase window of three nodes, except the line of the meshline
    itself, which uses the side triple and so carries the fictitious
    unknown.

    Arguments:
        intersection (IntersectionPoint): The intersection
        derivative_direction (int): Direction of the derivative
        phase (str): `PLUS` or `MINUS`
        phase_map (PhaseMap): Node phases

    Returns:
        DerivativeStencil: The stencil

    Raises:
        StencilUnavailable: If no block of in-phase lines exists
    """
    grid = phase_map.grid
    direction = intersection.direction
    fraction = intersection.fraction
    triple = side_triple(intersection, phase, grid)
    offsets = side_offsets(intersection, phase)
    if derivative_direction == direction:
        weights = lagrange_weights(offsets, fraction, 1).weights
        return DerivativeStencil(
            derivative_direction, phase,
            dict(zip(triple, weights / grid.spacing[direction])))
    spacing = grid.spacing[derivative_direction]
    interpolation = lagrange_weights(offsets, fraction, 0).weights
    best = None
    for line_offsets in DERIVATIVE_OFFSETS:
        derivative = lagrange_weights(line_offsets, 0, 1).weights / spacing
        terms = {}
        distance = 0.0
        for offset, weight in zip(line_offsets, derivative):
            if offset == 0:
                if weight != 0:
                    for node, value in zip(triple, interpolation):
                        terms[node] = terms.get(node, 0.0) + weight * value
                continue
            line_node = shift(intersection.lower, derivative_direction,
                              offset)
            window = _window(intersection, line_node, phase, phase_map)
            if window is None:
                break
            start, window_distance = window
            distance += window_distance
            window_weights = lagrange_weights(
                (start, start + 1, start + 2), fraction, 0).weights
            for k, value in enumerate(window_weights):
                node = shift(line_node, direction, start + k)
                terms[node] = terms.get(node, 0.0) + weight * value
        else:
            if best is None or distance < best.distance:
                best = DerivativeStencil(derivative_direction, phase, terms,
                                         line_offsets, distance)
    if best is None:
        raise StencilUnavailable(
            "No auxiliary block for d/d{0} on side {1} at {2}".format(
                "xyz"[derivative_direction], phase, intersection))
    return best


def stencil_availability(intersection, phase_map):
    """Score the derivative sets off the meshline of `intersection`.

    Returns:
        dict[int, int]: Per set number ``2 d + s + 1``, the count of
            nodes of that side in the 4 x 4 region around the meshline
            (two lines either way, from L - 1 to U + 1), or 0 when no
            auxiliary block exists
    """
    grid = phase_map.grid
    scores = {}
    for derivative_direction, (side, phase) in itertools.product(
            range(3), enumerate((PLUS, MINUS))):
        if derivative_direction == intersection.direction:
            continue
        number = 2 * derivative_direction + side + 1
        try:
            interfacial_derivative_stencil(intersection, derivative_direction,
                                           phase, phase_map)
        except StencilUnavailable:
            scores[number] = 0
            continue
        score = 0
        for along, across in itertools.product((-1, 0, 1, 2),
                                               (-2, -1, 1, 2)):
            node = shift(shift(intersection.lower, intersection.direction,
                               along), derivative_direction, across)
            if grid.contains(node) and phase_map.phase(node) == phase:
                score += 1
        scores[number] = score
    logging.debug("stencil_availability %s: %s", intersection.key, scores)
    return scores
