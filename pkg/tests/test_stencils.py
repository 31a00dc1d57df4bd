# -*- coding: utf-8 -*-

"""
Tests for mibelastic.stencils.
"""




import numpy as np
import pytest

from mibelastic.errors import DuplicateNodes, StencilUnavailable
from mibelastic.fields import X, Y, Z
from mibelastic.grid import MINUS, PLUS, build_grid, classify_nodes, \
    find_intersections
from mibelastic.shapes import sphere
from mibelastic.stencils import (interfacial_derivative_stencil,
                                 lagrange_weights, side_offsets, side_triple,
                                 stencil_availability)


QUADRATIC = (1.0 + 2.0 * X - Y + 0.5 * X ** 2 + 0.3 * X * Y - 0.7 * Y ** 2
             + 0.2 * Z ** 2 + 0.4 * Y * Z)


@pytest.fixture
def axis_crossing():
    """The crossing of the sphere of radius 1.5 at (1.5, 0, 0)."""
    grid = build_grid((-3, -3, -3), (3, 3, 3), (7, 7, 7))
    phase_map = classify_nodes(grid, sphere(1.5))
    for point in find_intersections(grid, sphere(1.5), phase_map):
        if point.direction == 0 and point.lower == (4, 3, 3):
            return point, phase_map


def _nodal_values(grid, field):
    values = field.value(*grid.coordinates())
    return dict((tuple(node), values[tuple(node)])
                for node in np.ndindex(*grid.node_counts))


@pytest.mark.parametrize("nodes,point", [
    ((0.0, 1.0, 2.0), 0.3),
    ((-1.0, 0.0, 1.0), 1.5),
    ((0.2, 1.7, 2.1), -0.4),
    ])
def test_lagrange_weights_exact_on_quadratics(nodes, point):
    coefficients = (0.7, -1.3, 2.1)
    values = [coefficients[0] + coefficients[1] * x + coefficients[2] * x ** 2
              for x in nodes]
    interpolation = lagrange_weights(nodes, point)
    derivative = lagrange_weights(nodes, point, order=1)
    assert interpolation.apply(values) == pytest.approx(
        coefficients[0] + coefficients[1] * point
        + coefficients[2] * point ** 2)
    assert derivative.apply(values) == pytest.approx(
        coefficients[1] + 2 * coefficients[2] * point)
    assert interpolation.weights.sum() == pytest.approx(1.0)
    assert derivative.weights.sum() == pytest.approx(0.0, abs=1e-12)


def test_lagrange_weights_reject_duplicates():
    with pytest.raises(DuplicateNodes):
        lagrange_weights((0.0, 1.0, 1.0), 0.5)
    with pytest.raises(ValueError):
        lagrange_weights((0.0, 1.0, 2.0), 0.5, order=2)


def test_side_triples(axis_crossing):
    crossing, phase_map = axis_crossing
    assert side_offsets(crossing, MINUS) == (-1, 0, 1)
    assert side_offsets(crossing, PLUS) == (0, 1, 2)
    assert side_triple(crossing, PLUS, phase_map.grid) == \
        [(4, 3, 3), (5, 3, 3), (6, 3, 3)]


@pytest.mark.parametrize("direction,phase,expected", [
    (0, PLUS, 3.5),
    (0, MINUS, 3.5),
    (1, MINUS, -0.55),
    (2, MINUS, 0.0),
    ])
def test_derivative_stencils_exact_on_quadratics(axis_crossing, direction,
                                                 phase, expected):
    crossing, phase_map = axis_crossing
    stencil = interfacial_derivative_stencil(crossing, direction, phase,
                                             phase_map)
    values = _nodal_values(phase_map.grid, QUADRATIC)
    assert stencil.apply(values) == pytest.approx(expected, abs=1e-10)


def test_unavailable_across_stencil(axis_crossing):
    crossing, phase_map = axis_crossing
    with pytest.raises(StencilUnavailable):
        interfacial_derivative_stencil(crossing, 1, PLUS, phase_map)


def test_stencil_availability(axis_crossing):
    crossing, phase_map = axis_crossing
    scores = stencil_availability(crossing, phase_map)
    assert sorted(scores) == [3, 4, 5, 6]
    assert scores[3] == scores[5] == 0
    assert scores[4] > 0 and scores[6] > 0
