# -*- coding: utf-8 -*-

"""
Tests for mibelastic.grid.
"""




import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from mibelastic.errors import DegenerateNormal, InvalidGrid
from mibelastic.fields import X
from mibelastic.grid import (MINUS, PLANES, PLUS, angles_from_normal,
                             build_grid, classify_nodes, find_intersections,
                             normal_angles)
from mibelastic.shapes import InterfaceShape, sphere


def test_build_grid_spacing():
    grid = build_grid((-1.0, 0.0, 0.0), (1.0, 3.0, 1.0), (5, 4, 6))
    assert_allclose(grid.spacing, [0.5, 1.0, 0.2])
    assert grid.h == pytest.approx(1.0)
    assert grid.num_nodes == 120
    assert_allclose(grid.node_position((4, 3, 5)), [1.0, 3.0, 1.0])


@pytest.mark.parametrize("bounds_min,bounds_max,node_counts", [
    ((0, 0, 0), (1, 1, 1), (3, 5, 5)),
    ((0, 0, 0), (1, 0, 1), (5, 5, 5)),
    ((0, 0), (1, 1), (5, 5)),
    ])
def test_build_grid_rejects(bounds_min, bounds_max, node_counts):
    with pytest.raises(InvalidGrid):
        build_grid(bounds_min, bounds_max, node_counts)


def test_flat_index_is_node_major():
    grid = build_grid((0, 0, 0), (1, 1, 1), (4, 5, 6))
    for node in [(0, 0, 0), (1, 2, 3), (3, 4, 5)]:
        assert grid.flat_index(node) == np.ravel_multi_index(
            node, grid.node_counts)


def test_boundary_mask():
    grid = build_grid((0, 0, 0), (1, 1, 1), (5, 5, 5))
    assert grid.boundary_mask().sum() == 125 - 27
    assert grid.is_boundary((0, 2, 2))
    assert not grid.is_boundary((1, 2, 3))
    assert not grid.contains((5, 0, 0))


def test_classify_sphere():
    grid = build_grid((-2, -2, -2), (2, 2, 2), (5, 5, 5))
    phase_map = classify_nodes(grid, sphere(2.0))
    assert phase_map.phase((2, 2, 2)) == MINUS
    assert phase_map.phase((0, 0, 0)) == PLUS
    # On the interface counts as minus.
    assert phase_map.phase((4, 2, 2)) == MINUS
    assert phase_map.central_irregular[0][(4, 1, 2)]
    assert not phase_map.central_irregular[0][(2, 2, 2)]
    assert phase_map.is_irregular((3, 1, 2))
    assert set(phase_map.cross_irregular) == set(PLANES)


def test_irregular_flags_match_neighbor_phases():
    grid = build_grid((-3, -3, -3), (3, 3, 3), (13, 13, 13))
    phase_map = classify_nodes(grid, sphere(1.6))
    plus = phase_map.plus
    for node in [(6, 6, 3), (6, 6, 2), (9, 6, 6), (10, 6, 6), (8, 8, 6)]:
        expected = [any(grid.contains(other) and plus[other] != plus[node]
                        for other in [tuple(np.add(node, step))
                                      for step in (unit, -np.array(unit))])
                    for unit in np.eye(3, dtype=int)]
        assert list(phase_map.central_irregular[(slice(None),) + node]) == \
            expected


def test_intersections_on_axis():
    grid = build_grid((-3, -3, -3), (3, 3, 3), (7, 7, 7))
    intersections = find_intersections(grid, sphere(1.5))
    along_x = dict((point.lower, point) for point in intersections
                   if point.direction == 0)
    outward = along_x[(4, 3, 3)]
    assert outward.fraction == pytest.approx(0.5, abs=1e-9)
    assert_allclose(outward.position, [1.5, 0.0, 0.0], atol=1e-9)
    assert_allclose(outward.normal, [1.0, 0.0, 0.0], atol=1e-9)
    assert not outward.lower_plus
    assert outward.upper == (5, 3, 3)
    inward = along_x[(1, 3, 3)]
    assert inward.lower_plus
    assert_allclose(inward.normal, [-1.0, 0.0, 0.0], atol=1e-9)


def test_every_sign_change_has_one_intersection():
    grid = build_grid((-3, -3, -3), (3, 3, 3), (13, 13, 13))
    shape = sphere(1.6)
    phase_map = classify_nodes(grid, shape)
    intersections = find_intersections(grid, shape, phase_map)
    changes = sum(int((np.diff(phase_map.plus.astype(int), axis=d) != 0)
                      .sum()) for d in range(3))
    assert len(intersections) == changes
    for point in intersections:
        assert 0.0 < point.fraction < 1.0
        assert abs(shape.value(*point.position)) < 1e-8
        assert np.linalg.norm(point.normal) == pytest.approx(1.0)
        assert np.dot(point.normal, point.position) > 0
        assert phase_map.is_plus(point.lower) == point.lower_plus


def _cubic():
    return InterfaceShape("cubic", X ** 3)


def test_degenerate_normal_raises():
    grid = build_grid((-1.5, -1.5, -1.5), (1.5, 1.5, 1.5), (4, 4, 4))
    with pytest.raises(DegenerateNormal):
        find_intersections(grid, _cubic())


def test_degenerate_normal_marked():
    grid = build_grid((-1.5, -1.5, -1.5), (1.5, 1.5, 1.5), (4, 4, 4))
    intersections = find_intersections(grid, _cubic(), on_degenerate="mark")
    assert len(intersections) == 16
    assert all(point.degenerate and point.normal is None
               for point in intersections)


def test_normal_angles():
    theta, phi_angle = normal_angles(sphere(2.0), (0.0, 0.0, 2.0))
    assert phi_angle == pytest.approx(0.0)
    assert angles_from_normal((1.0, 0.0, 0.0)) == pytest.approx(
        (0.0, math.pi / 2))
    assert angles_from_normal((0.0, -1.0, 0.0)) == pytest.approx(
        (-math.pi / 2, math.pi / 2))
    with pytest.raises(DegenerateNormal):
        normal_angles(_cubic(), (0.0, 0.0, 0.0))
