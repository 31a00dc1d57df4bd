# -*- coding: utf-8 -*-

"""
Tests for mibelastic.fictitious.

Piecewise quadratic fields without mixed terms make every scheme
exact: a fictitious value must equal the other phase's exact field at
its node.
"""




import numpy as np
import pytest
from numpy.testing import assert_allclose

from mibelastic.errors import (NothingToDisassociate, StencilUnavailable,
                               Unresolvable)
from mibelastic.fictitious import (FictitiousTable, FictitiousValue,
                                   build_fictitious_table,
                                   central_fictitious_pair, cross_fictitious,
                                   disassociate, extrapolate, needed_keys,
                                   sharp_edge_fictitious_triple)
from mibelastic.fields import CosProduct, VectorField, X, Y, Z
from mibelastic.grid import (MINUS, PLUS, build_grid, classify_nodes,
                             find_intersections)
from mibelastic.materials import MaterialField, PhaseMaterial
from mibelastic.problems import ManufacturedProblem, manufactured_case
from mibelastic.shapes import InterfaceShape


def _setup(problem, node_counts):
    grid = build_grid(problem.bounds_min, problem.bounds_max, node_counts)
    phase_map = classify_nodes(grid, problem.shape)
    intersections = find_intersections(grid, problem.shape, phase_map)
    x, y, z = grid.coordinates()
    values = problem.exact_solution(x, y, z, phase_map.plus)
    return grid, phase_map, intersections, np.asarray(values)


def _other_phase_value(problem, grid, phase_map, value):
    field = problem.exact[MINUS if phase_map.is_plus(value.node) else PLUS]
    return field.value(*grid.node_position(value.node))[value.comp]


def _assert_exact(problem, grid, phase_map, values, fictitious):
    for value in fictitious:
        assert value.evaluate(values) == pytest.approx(
            _other_phase_value(problem, grid, phase_map, value), abs=1e-6), \
            value


def test_central_pair_is_exact(plane_problem):
    grid, phase_map, intersections, values = _setup(plane_problem, (8, 8, 8))
    point = [point for point in intersections
             if point.direction == 0 and point.lower == (3, 4, 4)][0]
    solve = central_fictitious_pair(point, phase_map,
                                    plane_problem.material_field,
                                    plane_problem.jump_data)
    assert len(solve.values) == 6
    assert set(value.node for value in solve.values) == \
        set([(3, 4, 4), (4, 4, 4)])
    assert all(value.provenance == "central" for value in solve.values)
    assert solve.condition < 1e12
    _assert_exact(plane_problem, grid, phase_map, values, solve.values)


def test_plane_table_covers_needed_keys(plane_problem):
    grid, phase_map, intersections, values = _setup(plane_problem, (8, 8, 8))
    table = build_fictitious_table(phase_map, intersections,
                                   plane_problem.material_field,
                                   plane_problem.jump_data, threads=2)
    central_keys, cross_keys = needed_keys(phase_map)
    for key in list(central_keys) + list(cross_keys):
        assert key in table
    _assert_exact(plane_problem, grid, phase_map, values, table)


def test_sphere_table_is_exact(sphere_problem):
    grid, phase_map, intersections, values = _setup(sphere_problem,
                                                    (13, 13, 13))
    table = build_fictitious_table(phase_map, intersections,
                                   sphere_problem.material_field,
                                   sphere_problem.jump_data)
    central_keys, cross_keys = needed_keys(phase_map)
    assert all(key in table for key in central_keys)
    assert all(key in table for key in cross_keys)
    _assert_exact(sphere_problem, grid, phase_map, values, table)


def test_needed_keys_of_plane(plane_problem):
    grid, phase_map, _, _ = _setup(plane_problem, (8, 8, 8))
    central_keys, cross_keys = needed_keys(phase_map)
    assert len(central_keys) == 2 * 36 * 3
    assert all(context == ("central", 0)
               for _, _, context in central_keys)
    for (node, comp, context), referrers in cross_keys.items():
        plane = context[1]
        assert comp in plane
        assert plane != (1, 2)
        for referrer in referrers:
            assert phase_map.is_plus(referrer) != phase_map.is_plus(node)
            step = np.abs(np.subtract(node, referrer))
            assert list(step[list(plane)]) == [1, 1]


def test_table_keeps_first_value():
    table = FictitiousTable()
    first = FictitiousValue((1, 1, 1), 0, ("central", 0), {}, 1.0)
    table.add(first)
    assert table.add(FictitiousValue((1, 1, 1), 0, ("central", 0), {},
                                     2.0)) is first
    assert len(table) == 1
    assert table.get((1, 1, 1), 0, ("central", 0)).constant == 1.0


def test_disassociate_prefers_condition_then_z():
    table = FictitiousTable()
    for direction, condition in ((0, 10.0), (1, 5.0), (2, 10.0)):
        table.add(FictitiousValue((2, 2, 2), 1, ("central", direction), {},
                                  float(direction), condition=condition))
    value = disassociate((2, 2, 2), 1, ("central", 0), table)
    assert value.constant == 1.0
    assert value.context == ("central", 0)
    assert value.provenance == "disassociated"
    assert [entry.context[1]
            for entry in table.central_entries((2, 2, 2), 1)] == [1, 2, 0]
    with pytest.raises(NothingToDisassociate):
        disassociate((3, 2, 2), 1, ("central", 0), table)


def test_extrapolate_from_real_nodes():
    grid = build_grid((0, 0, 0), (7, 7, 7), (8, 8, 8))
    phase_map = classify_nodes(grid, InterfaceShape("plane", X - 3.5))
    value = extrapolate((3, 4, 4), 0, ("central", 0), phase_map,
                        FictitiousTable())
    assert value.provenance == "extrapolated_I"
    assert value.terms == {((4, 4, 4), 0): 3.0, ((5, 4, 4), 0): -3.0,
                           ((6, 4, 4), 0): 1.0}
    nodal = np.zeros((3,) + grid.node_counts)
    nodal[0] = (grid.coordinates()[0] - 1.0) ** 2
    assert value.evaluate(nodal) == pytest.approx(4.0)


def test_extrapolate_without_line():
    grid = build_grid((0, 0, 0), (4, 4, 4), (5, 5, 5))
    phase_map = classify_nodes(grid, InterfaceShape("wedge", X + Y - 3.5))
    assert extrapolate((2, 2, 2), 0, ("cross", (0, 1)), phase_map,
                       FictitiousTable()) is None


def test_neighbor_combination():
    grid = build_grid((0, 0, 0), (4, 4, 4), (5, 5, 5))
    phase_map = classify_nodes(grid, InterfaceShape("wedge", X + Y - 3.5))
    assert phase_map.phase((2, 2, 2)) == PLUS
    value = cross_fictitious((2, 2, 2), 0, (0, 1), phase_map,
                             FictitiousTable(), referrers=[(1, 1, 2)])
    assert value.provenance == "neighbor_combination"
    assert value.context == ("cross", (0, 1))
    assert value.terms == {((2, 1, 2), 0): 1.0, ((1, 2, 2), 0): 1.0,
                           ((1, 1, 2), 0): -1.0}
    X_, Y_, _ = grid.coordinates()
    nodal = np.zeros((3,) + grid.node_counts)
    nodal[0] = 1.0 + X_ - 2.0 * Y_ + X_ ** 2 + 0.5 * Y_ ** 2
    assert value.evaluate(nodal) == pytest.approx(1.0 + 2 - 4 + 4 + 2)
    with pytest.raises(Unresolvable):
        cross_fictitious((2, 2, 2), 0, (0, 1), phase_map, FictitiousTable(),
                         referrers=[(1, 1, 2)], allow_combination=False)


def test_table_offer_keeps_better_conditioned():
    table = FictitiousTable()
    worse = FictitiousValue((1, 1, 1), 0, ("central", 0), {}, 1.0,
                            condition=1e6)
    better = FictitiousValue((1, 1, 1), 0, ("central", 0), {}, 2.0,
                             condition=1e3)
    assert table.offer(worse) is worse
    assert table.offer(better) is better
    assert table.offer(worse) is better
    assert table.get((1, 1, 1), 0, ("central", 0)).constant == 2.0


def _slab(center, half_width):
    """Minus for ``|x - center| < half_width``."""
    return InterfaceShape("slab", (1.0 / half_width)
                          * ((X - center) ** 2 - half_width ** 2))


def _crossing(intersections, direction, lower):
    return [point for point in intersections
            if point.direction == direction and point.lower == lower][0]


def test_sharp_edge_triple_is_exact(quadratic_problem):
    problem = quadratic_problem(_slab(3.0, 0.5), (0.0, 0.0, 0.0),
                                (7.0, 7.0, 7.0))
    grid, phase_map, intersections, values = _setup(problem, (8, 8, 8))
    assert [phase_map.phase((i, 4, 4)) for i in (2, 3, 4)] == \
        [PLUS, MINUS, PLUS]
    first = _crossing(intersections, 0, (2, 4, 4))
    second = _crossing(intersections, 0, (3, 4, 4))
    solve = sharp_edge_fictitious_triple((first, second), phase_map,
                                         problem.material_field,
                                         problem.jump_data)
    assert len(solve.values) == 9
    assert set(value.node for value in solve.values) == \
        set([(2, 4, 4), (3, 4, 4), (4, 4, 4)])
    assert all(value.provenance == "sharp_edge" for value in solve.values)
    _assert_exact(problem, grid, phase_map, values, solve.values)


def test_sharp_edge_needs_second_crossing(plane_problem):
    _, phase_map, intersections, _ = _setup(plane_problem, (8, 8, 8))
    first = _crossing(intersections, 0, (3, 4, 4))
    with pytest.raises(StencilUnavailable):
        sharp_edge_fictitious_triple((first, first), phase_map,
                                     plane_problem.material_field,
                                     plane_problem.jump_data)


def test_slab_table_is_exact(quadratic_problem):
    problem = quadratic_problem(_slab(3.0, 0.5), (0.0, 0.0, 0.0),
                                (7.0, 7.0, 7.0))
    grid, phase_map, intersections, values = _setup(problem, (8, 8, 8))
    table = build_fictitious_table(phase_map, intersections,
                                   problem.material_field, problem.jump_data)
    central_keys, _ = needed_keys(phase_map)
    assert all(key in table for key in central_keys)
    assert table.provenance_counts().get("sharp_edge", 0) > 0
    _assert_exact(problem, grid, phase_map, values, table)


# Refinement studies: one globally smooth field in both phases with
# matched materials, so every jump vanishes and the fictitious value
# must approach the field itself. Grids are scaled about ANCHOR, which
# stays a node, so the local geometry is the same at every spacing.

SMOOTH_FIELD = VectorField([CosProduct() + 0.5 * X ** 3,
                            0.5 * CosProduct() + Y ** 3 - X * Z,
                            Z ** 3 - CosProduct() + X * Y])
MATCHED = MaterialField(PhaseMaterial(1.5e6, 0.25),
                        PhaseMaterial(1.5e6, 0.25))
ANCHOR = np.array([0.3, 0.4, 0.2])
SPACINGS = (0.1, 0.05, 0.025)


def _smooth_problem(shape, h, node=(3, 4, 4), node_counts=(8, 8, 8)):
    lower = ANCHOR - h * np.array(node)
    upper = lower + h * (np.array(node_counts) - 1)
    return ManufacturedProblem(0, 1, tuple(lower), tuple(upper), shape,
                               SMOOTH_FIELD, SMOOTH_FIELD, MATCHED, "nodes",
                               (node_counts[0],))


def _max_error(grid, fictitious):
    def exact(node, comp):
        return SMOOTH_FIELD.value(*grid.node_position(node))[comp]
    return max(abs(value.constant
                   + sum(weight * exact(node, comp)
                         for (node, comp), weight in value.terms.items())
                   - exact(value.node, value.comp))
               for value in fictitious)


def _exponents(errors):
    return [np.log2(coarse / fine) for coarse, fine in zip(errors, errors[1:])]


def test_central_pair_refines_at_third_order():
    errors = []
    for h in SPACINGS:
        # Tilted plane through ANCHOR + 0.3 h along x
        level = float(np.dot([1.0, 0.3, 0.2], ANCHOR)) + 0.3 * h
        shape = InterfaceShape("plane", X + 0.3 * Y + 0.2 * Z - level)
        problem = _smooth_problem(shape, h)
        grid, phase_map, intersections, _ = _setup(problem, (8, 8, 8))
        solve = central_fictitious_pair(
            _crossing(intersections, 0, (3, 4, 4)), phase_map, MATCHED,
            problem.jump_data)
        errors.append(_max_error(grid, solve.values))
    assert all(exponent >= 2.7 for exponent in _exponents(errors)), errors


def test_sharp_edge_triple_refines_at_third_order():
    errors = []
    for h in SPACINGS:
        problem = _smooth_problem(_slab(float(ANCHOR[0]), 0.5 * h), h)
        grid, phase_map, intersections, _ = _setup(problem, (8, 8, 8))
        solve = sharp_edge_fictitious_triple(
            (_crossing(intersections, 0, (2, 4, 4)),
             _crossing(intersections, 0, (3, 4, 4))),
            phase_map, MATCHED, problem.jump_data)
        assert len(solve.values) == 9
        errors.append(_max_error(grid, solve.values))
    assert all(exponent >= 2.7 for exponent in _exponents(errors)), errors


def test_neighbor_combination_refines_at_second_order():
    errors = []
    for h in SPACINGS:
        lower = ANCHOR - 2 * h
        grid = build_grid(tuple(lower), tuple(lower + 4 * h), (5, 5, 5))
        implicit = X + Y - float(ANCHOR[0] + ANCHOR[1]) + 0.5 * h
        phase_map = classify_nodes(grid, InterfaceShape("wedge", implicit))
        value = cross_fictitious((2, 2, 2), 0, (0, 1), phase_map,
                                 FictitiousTable(), referrers=[(1, 1, 2)])
        assert value.provenance == "neighbor_combination"
        errors.append(_max_error(grid, [value]))
    assert all(exponent >= 1.7 for exponent in _exponents(errors)), errors


def test_extrapolate_low_order():
    grid = build_grid((0, 0, 0), (7, 7, 7), (8, 8, 8))
    phase_map = classify_nodes(grid, InterfaceShape("plane", X - 3.5))
    value = extrapolate((3, 4, 4), 0, ("central", 0), phase_map,
                        FictitiousTable(), directions=[0], points=2)
    assert value.provenance == "extrapolated_low_order"
    assert value.terms == {((4, 4, 4), 0): 2.0, ((5, 4, 4), 0): -1.0}
    value = extrapolate((3, 4, 4), 0, ("central", 0), phase_map,
                        FictitiousTable(), directions=[0], points=1)
    assert value.terms == {((4, 4, 4), 0): 1.0}


def test_thin_torus_table_resolves():
    problem = manufactured_case(5)
    grid, phase_map, intersections, _ = _setup(problem, (10, 10, 10))
    table = build_fictitious_table(phase_map, intersections,
                                   problem.material_field, problem.jump_data)
    central_keys, cross_keys = needed_keys(phase_map)
    assert all(key in table for key in central_keys)
    assert all(key in table for key in cross_keys)
    assert table.get((3, 4, 4), 0, ("central", 0)) is not None
