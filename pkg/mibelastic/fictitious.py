# -*- coding: utf-8 -*-

"""
Fictitious values: extensions of one phase's solution across the
interface.

A :class:`FictitiousValue` is a linear functional over real grid
values (plus a constant from the jump data) giving the value at a node
of the phase opposite to the node's own phase. Interior nodes next to
the interface reference such values in their finite-difference
stencils: along an axis (context ``("central", d)``) or at a diagonal
corner of a coordinate plane (context ``("cross", (a, b))``).

Central values come from local solves at meshline intersections
(:func:`central_fictitious_pair`, :func:`sharp_edge_fictitious_triple`)
with :func:`disassociate` and extrapolation as fallbacks; cross values
from :func:`cross_fictitious`. :func:`build_fictitious_table` runs the
whole resolution for a grid.
"""




import itertools
import logging

from concurrent.futures import ThreadPoolExecutor

import numpy as np
import scipy.linalg

import mib_config as config
from mibelastic import jumps
from mibelastic.errors import (
    DegenerateElimination, DegenerateNormal, MibError,
    NothingToDisassociate, SingularLocalSystem, StencilUnavailable,
    Unresolvable)
from mibelastic.grid import PLUS, MINUS, PLANES, pair_slices, shift
from mibelastic.materials import evaluate
from mibelastic.stencils import (
    interfacial_derivative_stencil, lagrange_weights, side_offsets,
    side_triple, stencil_availability)


__all__ = ['FictitiousValue',
           'FictitiousTable',
           'LocalSolve',
           'central_fictitious_pair',
           'sharp_edge_fictitious_triple',
           'local_fictitious_values',
           'disassociate',
           'extrapolate',
           'cross_fictitious',
           'needed_keys',
           'build_fictitious_table']


EXTRAPOLATION_WEIGHTS = (3.0, -3.0, 1.0)
"""Quadratic extrapolation from the nodes at distance 1, 2 and 3."""

LOW_ORDER_WEIGHTS = {2: (2.0, -1.0), 1: (1.0,)}
"""Linear and constant extrapolation, the last resort for central
values in regions one or two nodes thick."""

_DIRECTION_RANK = {2: 0, 0: 1, 1: 2}

_SCHEMES = {0: "extrapolated_I", 1: "extrapolated_II"}


def central(direction):
    return ("central", direction)


def cross(plane):
    return ("cross", tuple(plane))


def _opposite(phase):
    return MINUS if phase == PLUS else PLUS


class FictitiousValue(object):

    """
    A fictitious value as a functional of real grid values.

    Attributes:
        node (tuple[int]): The node
        comp (int): Displacement component, 0-based
        context (tuple): ``("central", d)`` or ``("cross", (a, b))``
        terms (dict[tuple, float]): Weights by ``(node, comp)``
        constant (float): Contribution of the jump data
        provenance (str): ``central``, ``sharp_edge``,
            ``disassociated``, ``extrapolated_I``, ``extrapolated_II``,
            ``extrapolated_III``, ``extrapolated_low_order`` or
            ``neighbor_combination``
        condition (float | None): Condition number of the local solve
            the value derives from
    """

    def __init__(self, node, comp, context, terms, constant=0.0,
                 provenance="central", condition=None):
        self.node = tuple(node)
        self.comp = comp
        self.context = context
        self.terms = terms
        self.constant = float(constant)
        self.provenance = provenance
        self.condition = condition

    def __repr__(self):
        return "FictitiousValue({0}, u{1}, {2}, {3}, {4} terms)".format(
            self.node, self.comp + 1, self.context, self.provenance,
            len(self.terms))

    @property
    def key(self):
        return (self.node, self.comp, self.context)

    def evaluate(self, values):
        """Evaluate on grid values `values` of shape ``(3,) + node_counts``."""
        return self.constant + sum(weight * values[(comp,) + node]
                                   for (node, comp), weight
                                   in self.terms.items())

    def retagged(self, context, provenance):
        return FictitiousValue(self.node, self.comp, context,
                               dict(self.terms), self.constant, provenance,
                               self.condition)


def _combine(parts):
    """Sum ``(weight, terms, constant)`` parts into terms and constant."""
    terms = {}
    constant = 0.0
    for weight, part_terms, part_constant in parts:
        for key, value in part_terms.items():
            terms[key] = terms.get(key, 0.0) + weight * value
        constant += weight * part_constant
    return terms, constant


class FictitiousTable(object):

    """Fictitious values by ``(node, comp, context)``."""

    def __init__(self):
        self._entries = {}

    def __len__(self):
        return len(self._entries)

    def __contains__(self, key):
        return key in self._entries

    def __iter__(self):
        return iter(self._entries.values())

    def get(self, node, comp, context):
        return self._entries.get((tuple(node), comp, context))

    def add(self, value):
        """Store `value` unless its key is taken; return the stored one."""
        return self._entries.setdefault(value.key, value)

    def offer(self, value):
        """Store `value` if its key is free or held by a value from a
        worse-conditioned local solve; return the stored one."""
        held = self._entries.get(value.key)
        if (held is None or (value.condition is not None
                             and held.condition is not None
                             and value.condition < held.condition)):
            self._entries[value.key] = value
            return value
        return held

    def central_entries(self, node, comp):
        """Return the central entries at `node`, most preferred first.

        Smaller condition numbers come first, then the z, x and y
        contexts in that order.
        """
        entries = [self._entries[(tuple(node), comp, central(d))]
                   for d in range(3)
                   if (tuple(node), comp, central(d)) in self._entries]
        return sorted(entries, key=lambda entry: (
            entry.condition if entry.condition is not None else np.inf,
            _DIRECTION_RANK[entry.context[1]]))

    def provenance_counts(self):
        counts = {}
        for entry in self._entries.values():
            counts[entry.provenance] = counts.get(entry.provenance, 0) + 1
        return counts


class LocalSolve(object):

    """
    The result of one local solve at an intersection.

    Attributes:
        intersection (IntersectionPoint): The intersection
        values (list[FictitiousValue]): Three values per unknown node
        condition (float): Condition number of the equilibrated system
        pair (tuple[int]): The eliminated derivative sets
    """

    def __init__(self, intersection, values, condition, pair):
        self.intersection = intersection
        self.values = values
        self.condition = condition
        self.pair = pair


class _LocalSystem(object):

    """Rows over fictitious unknowns and real grid values."""

    def __init__(self, unknowns, phase_map):
        self.unknowns = unknowns
        self.index = dict((unknown, num)
                          for num, unknown in enumerate(unknowns))
        self.phase_map = phase_map
        size = 3 * len(unknowns)
        self.A = np.zeros((size, size))
        self.real = [dict() for _ in range(size)]
        self.rhs = np.zeros(size)

    def add(self, row, node, phase, comp, weight):
        unknown = self.index.get((node, phase))
        if unknown is not None:
            self.A[row, 3 * unknown + comp] += weight
        elif self.phase_map.phase(node) == phase:
            key = (node, comp)
            self.real[row][key] = self.real[row].get(key, 0.0) + weight
        else:
            raise StencilUnavailable("Node {0} of phase {1} is neither real"
                                     " nor unknown".format(node, phase))

    def solve(self, condition_limit):
        """Return the unknowns as ``(terms, constant)`` and the condition.

        Rows are equilibrated before the condition check.

        Raises:
            SingularLocalSystem: If the condition exceeds
                `condition_limit`
        """
        scales = np.abs(self.A).max(axis=1)
        if not scales.all():
            raise SingularLocalSystem("Local system has an empty row")
        A = self.A / scales[:, None]
        rhs = self.rhs / scales
        condition = float(np.linalg.cond(A))
        if not np.isfinite(condition) or condition > condition_limit:
            raise SingularLocalSystem(
                "Local system condition {0:.3e} exceeds {1:.1e}"
                .format(condition, condition_limit))
        keys = sorted(set(itertools.chain.from_iterable(self.real)))
        column = dict((key, num) for num, key in enumerate(keys))
        R = np.zeros((len(rhs), len(keys)))
        for row, real in enumerate(self.real):
            for key, weight in real.items():
                R[row, column[key]] = weight / scales[row]
        factor = scipy.linalg.lu_factor(A)
        weights = -scipy.linalg.lu_solve(factor, R) if keys else R
        constants = scipy.linalg.lu_solve(factor, rhs)
        solution = []
        for num in range(len(rhs)):
            terms = dict((key, float(weights[num, col]))
                         for key, col in column.items()
                         if weights[num, col] != 0.0)
            solution.append((terms, float(constants[num])))
        return solution, condition


def _value_rows(system, row, triples, offsets, position, jump):
    """Add the three value-jump rows at `position` (units of h from L)."""
    for phase, sign in ((PLUS, 1.0), (MINUS, -1.0)):
        weights = lagrange_weights(offsets[phase], position, 0).weights
        for comp in range(3):
            for node, weight in zip(triples[phase], weights):
                system.add(row + comp, node, phase, comp, sign * weight)
    system.rhs[row:row + 3] = jump.b


def _extra_crossings(intersection, triples, phase_map, intersection_index,
                     allow_sharp_edge):
    """Find triple nodes across a second crossing of the meshline."""
    direction = intersection.direction
    lower_phase = intersection.side_of_lower_node
    upper_phase = _opposite(lower_phase)
    extras = []
    outer_lower = triples[lower_phase][0]
    if phase_map.phase(outer_lower) != lower_phase:
        extras.append((outer_lower, lower_phase,
                       intersection_index.get((direction, outer_lower)), -1))
    outer_upper = triples[upper_phase][2]
    if phase_map.phase(outer_upper) != upper_phase:
        extras.append((outer_upper, upper_phase,
                       intersection_index.get(
                           (direction, intersection.upper)), 1))
    if extras and not allow_sharp_edge:
        raise StencilUnavailable("Side triple re-crosses the interface at {0}"
                                 .format(intersection))
    for _, _, crossing, _ in extras:
        if crossing is None:
            raise StencilUnavailable("Second crossing of {0} not found"
                                     .format(intersection))
    return extras


def _solve_with_pair(intersection, pair, phase_map, material_field, jump_fn,
                     extras, condition_limit):
    grid = phase_map.grid
    direction = intersection.direction
    lower_phase = intersection.side_of_lower_node
    upper_phase = _opposite(lower_phase)
    triples = dict((phase, side_triple(intersection, phase, grid))
                   for phase in (PLUS, MINUS))
    offsets = dict((phase, side_offsets(intersection, phase))
                   for phase in (PLUS, MINUS))
    unknowns = [(intersection.upper, lower_phase),
                (intersection.lower, upper_phase)]
    unknowns.extend((node, phase) for node, phase, _, _ in extras)
    system = _LocalSystem(unknowns, phase_map)

    lam_p, mu_p, _, _ = evaluate(material_field, intersection.position, PLUS)
    lam_m, mu_m, _, _ = evaluate(material_field, intersection.position,
                                 MINUS)
    frame = jumps.transformation_matrix(intersection.theta,
                                        intersection.phi_angle)
    jump_matrix = jumps.assemble_C(frame, lam_p + 2 * mu_p,
                                   lam_m + 2 * mu_m, lam_p, lam_m, mu_p, mu_m)
    elimination = jumps.elimination_coefficients(jump_matrix, *pair)
    jump = jump_fn(intersection.position, intersection.normal)
    conditions = jumps.combined_condition_rows(elimination, jump)

    _value_rows(system, 0, triples, offsets, intersection.fraction, jump)
    eliminated = set(elimination.eliminated)
    stencils = {}
    for col in range(18):
        if col in eliminated or not np.any(conditions.rows[:, col]):
            continue
        comp, rest = divmod(col, 6)
        derivative_direction, side = divmod(rest, 2)
        phase = (PLUS, MINUS)[side]
        key = (derivative_direction, phase)
        if key not in stencils:
            stencils[key] = interfacial_derivative_stencil(
                intersection, derivative_direction, phase, phase_map)
        for i in range(3):
            coefficient = conditions.rows[i, col]
            for node, weight in stencils[key].terms.items():
                system.add(3 + i, node, phase, comp, coefficient * weight)
    system.rhs[3:6] = conditions.rhs

    # Both phases interpolate at o2 on the three nodes around it.
    for num, (_, _, crossing, side) in enumerate(extras):
        span = lower_phase if side < 0 else upper_phase
        position = side + crossing.fraction
        _value_rows(system, 6 + 3 * num,
                    dict.fromkeys((PLUS, MINUS), triples[span]),
                    dict.fromkeys((PLUS, MINUS), offsets[span]),
                    position, jump_fn(crossing.position, crossing.normal))

    solution, condition = system.solve(condition_limit)
    provenance = "sharp_edge" if extras else "central"
    values = []
    for num, (node, _) in enumerate(unknowns):
        for comp in range(3):
            terms, constant = solution[3 * num + comp]
            values.append(FictitiousValue(node, comp, central(direction),
                                          terms, constant, provenance,
                                          condition))
    logging.debug("local solve %s pair %s: cond %.3e, %d unknowns",
                  intersection.key, pair, condition, len(unknowns))
    return LocalSolve(intersection, values, condition, pair)


def _solve(intersection, phase_map, material_field, jump_fn,
           intersection_index, allow_sharp_edge, condition_limit):
    if intersection.degenerate:
        raise DegenerateNormal("No normal at {0}".format(intersection))
    triples = dict((phase, side_triple(intersection, phase, phase_map.grid))
                   for phase in (PLUS, MINUS))
    extras = _extra_crossings(intersection, triples, phase_map,
                              intersection_index or {}, allow_sharp_edge)
    availability = stencil_availability(intersection, phase_map)
    first = jumps.select_elimination_pair(intersection.direction,
                                          availability)
    pairs = [first] + [pair for pair in jumps.ranked_elimination_pairs(
        intersection.direction, availability) if pair != first]
    best = error = None
    for pair in pairs:
        try:
            solve = _solve_with_pair(intersection, pair, phase_map,
                                     material_field, jump_fn, extras,
                                     condition_limit)
        except (DegenerateElimination, SingularLocalSystem,
                StencilUnavailable) as e:
            logging.debug("local solve %s pair %s failed: %s",
                          intersection.key, pair, e)
            error = e
            continue
        if best is None or solve.condition < best.condition:
            best = solve
    if best is None:
        raise error
    return best


def central_fictitious_pair(intersection, phase_map, material_field,
                            jump_fn, condition_limit=None):
    """Solve for the two fictitious triples at a regular intersection.

    The unknowns are the three components at U of the phase of L and
    at L of the phase of U. The six rows are the value jumps and the
    three combined derivative conditions at the intersection, with the
    interfacial derivatives replaced by their stencils. Every viable
    elimination pair is solved and the best-conditioned system kept.

    Arguments:
        intersection (IntersectionPoint): The intersection
        phase_map (PhaseMap): Node phases
        material_field (MaterialField): Moduli
        jump_fn (callable): ``jump_fn(position, normal)`` returning
            :class:`JumpData`

    Keyword arguments:
        condition_limit (float): Largest accepted condition number

    Returns:
        LocalSolve: Six fictitious values

    Raises:
        DegenerateNormal: At a degenerate intersection
        StencilUnavailable: If a side triple leaves the grid or
            re-crosses the interface
        NoViablePair: If no elimination pair leaves evaluable sets
        SingularLocalSystem: If every pair gives an ill-conditioned
            system
    """
    if condition_limit is None:
        condition_limit = config.CONDITION_LIMIT
    return _solve(intersection, phase_map, material_field, jump_fn, None,
                  False, condition_limit)


def sharp_edge_fictitious_triple(intersections, phase_map, material_field,
                                 jump_fn, condition_limit=None):
    """Solve at an intersection whose side triple re-crosses the interface.

    `intersections` is ``(o1, o2)``: the intersection solved at and the
    second crossing of its meshline within the triple span. The extra
    node beyond o2 becomes a third unknown triple and the value jumps
    at o2 supply the three extra rows.

    Returns:
        LocalSolve: Nine fictitious values

    Raises:
        StencilUnavailable: If the triples do not re-cross at o2
    """
    if condition_limit is None:
        condition_limit = config.CONDITION_LIMIT
    first, second = intersections
    index = {second.key: second}
    solve = _solve(first, phase_map, material_field, jump_fn, index, True,
                   condition_limit)
    if len(solve.values) == 6:
        raise StencilUnavailable("No second crossing in the stencil of {0}"
                                 .format(first))
    return solve


def local_fictitious_values(intersection, phase_map, material_field,
                            jump_fn, intersection_index,
                            condition_limit=None):
    """Solve at `intersection` with the sharp-edge system when needed."""
    if condition_limit is None:
        condition_limit = config.CONDITION_LIMIT
    return _solve(intersection, phase_map, material_field, jump_fn,
                  intersection_index, True, condition_limit)


def disassociate(node, comp, requested_context, fictitious_table):
    """Reuse a central value of `node` found along another direction.

    Returns:
        FictitiousValue: The preferred central entry retagged to
            `requested_context`

    Raises:
        NothingToDisassociate: If `node` has no other central entry
    """
    for entry in fictitious_table.central_entries(node, comp):
        if entry.context != requested_context:
            return entry.retagged(requested_context, "disassociated")
    raise NothingToDisassociate("No fictitious value at {0} u{1} to reuse"
                                .format(tuple(node), comp + 1))


def _line_values(node, comp, phase, direction, sign, phase_map,
                 fictitious_table, allow_fictitious, points=3):
    """Return values of `phase` at 1 to `points` steps away, or None."""
    grid = phase_map.grid
    parts = []
    fictitious = 0
    for steps in range(1, points + 1):
        other = shift(node, direction, sign * steps)
        if not grid.contains(other):
            return None
        if phase_map.phase(other) == phase:
            parts.append(({(other, comp): 1.0}, 0.0))
            continue
        if not allow_fictitious:
            return None
        entries = fictitious_table.central_entries(other, comp)
        if not entries:
            return None
        parts.append((entries[0].terms, entries[0].constant))
        fictitious += 1
    return parts, fictitious


def extrapolate(node, comp, context, phase_map, fictitious_table,
                directions=None, allow_fictitious=True, points=3):
    """Extrapolate the value of the other phase at `node` along an axis.

    Uses weights (3, -3, 1) on the values 1, 2 and 3 steps away, each
    a real node of the wanted phase or, if `allow_fictitious`, a
    central fictitious value. The line with fewest fictitious values
    wins; the scheme tag counts them. With `points` 2 or 1 the
    extrapolation is linear or constant and tagged
    ``extrapolated_low_order``.

    Returns:
        FictitiousValue | None: The extrapolation, or None if no axis
            has `points` values
    """
    phase = _opposite(phase_map.phase(node))
    if directions is None:
        directions = range(3)
    best = None
    for direction in directions:
        for sign in (1, -1):
            line = _line_values(node, comp, phase, direction, sign,
                                phase_map, fictitious_table,
                                allow_fictitious, points)
            if line is not None and (best is None or line[1] < best[1]):
                best = line
    if best is None:
        return None
    parts, fictitious = best
    if points == 3:
        weights = EXTRAPOLATION_WEIGHTS
        provenance = _SCHEMES.get(fictitious, "extrapolated_III")
    else:
        weights = LOW_ORDER_WEIGHTS[points]
        provenance = "extrapolated_low_order"
    terms, constant = _combine(
        (weight, part_terms, part_constant)
        for weight, (part_terms, part_constant) in zip(weights, parts))
    return FictitiousValue(node, comp, context, terms, constant, provenance)


def _neighbor_value(node, comp, phase, phase_map, fictitious_table):
    if phase_map.phase(node) == phase:
        return {(node, comp): 1.0}, 0.0
    entries = fictitious_table.central_entries(node, comp)
    if entries:
        return entries[0].terms, entries[0].constant
    for plane in PLANES:
        entry = fictitious_table.get(node, comp, cross(plane))
        if entry is not None:
            return entry.terms, entry.constant
    return None


def _neighbor_combination(node, comp, plane, referrers, phase_map,
                          fictitious_table):
    phase = _opposite(phase_map.phase(node))
    a, b = plane
    for referrer in referrers:
        first = shift(referrer, a, node[a] - referrer[a])
        second = shift(referrer, b, node[b] - referrer[b])
        values = [_neighbor_value(other, comp, phase, phase_map,
                                  fictitious_table)
                  for other in (first, second)]
        if None in values:
            continue
        terms, constant = _combine([(1.0,) + values[0], (1.0,) + values[1],
                                    (-1.0, {(referrer, comp): 1.0}, 0.0)])
        return FictitiousValue(node, comp, cross(plane), terms, constant,
                               "neighbor_combination")
    return None


def cross_fictitious(node, comp, plane, phase_map, fictitious_table,
                     referrers=(), allow_combination=True):
    """Resolve the fictitious value at a diagonal corner.

    Tries, in order: disassociation from a central value at `node`,
    extrapolation along an axis (fewest fictitious inputs first), and
    the neighbor combination ``v(p + e_b) + v(p + e_a) - u(p)`` for a
    referencing node p of `referrers`.

    Arguments:
        node (tuple[int]): The corner node
        comp (int): Component, 0-based
        plane (tuple[int]): The coordinate plane ``(a, b)``
        phase_map (PhaseMap): Node phases
        fictitious_table (FictitiousTable): Resolved values

    Keyword arguments:
        referrers (sequence[tuple]): Nodes whose cross stencils need
            the value, in order of preference
        allow_combination (bool): Whether to try the neighbor
            combination

    Returns:
        FictitiousValue: The resolved value

    Raises:
        Unresolvable: If no scheme applies
    """
    context = cross(plane)
    try:
        return disassociate(node, comp, context, fictitious_table)
    except NothingToDisassociate:
        pass
    value = extrapolate(node, comp, context, phase_map, fictitious_table)
    if value is not None:
        return value
    if allow_combination:
        value = _neighbor_combination(node, comp, plane, referrers,
                                      phase_map, fictitious_table)
        if value is not None:
            return value
    raise Unresolvable("No scheme resolves u{0} at {1} in plane {2}"
                       .format(comp + 1, tuple(node), plane))


def needed_keys(phase_map):
    """Return the fictitious keys referenced by interior stencils.

    Returns:
        tuple: ``(central, cross)``; `central` maps
            ``(node, comp, context)`` to referencing nodes for axis
            neighbors, `cross` the same for diagonal corners, which
            need the two components of their plane
    """
    grid = phase_map.grid
    interior = ~grid.boundary_mask()
    plus = phase_map.plus
    central_keys = {}
    cross_keys = {}

    def collect(keys, lower, upper, components, context):
        change = plus[lower] != plus[upper]
        lower_nodes = np.argwhere(change & interior[lower])
        upper_nodes = np.argwhere(change & interior[upper])
        lower_start = np.array([s.start or 0 for s in lower])
        upper_start = np.array([s.start or 0 for s in upper])
        for found, own, other in ((lower_nodes, lower_start, upper_start),
                                  (upper_nodes, upper_start, lower_start)):
            for index in found:
                referrer = tuple(int(i) for i in index + own)
                target = tuple(int(i) for i in index + other)
                for comp in components:
                    keys.setdefault((target, comp, context), []).append(
                        referrer)

    for direction in range(3):
        lower, upper = pair_slices(direction)
        collect(central_keys, lower, upper, range(3), central(direction))
    for plane in PLANES:
        for sign in (1, -1):
            lower, upper = pair_slices(plane[0], (plane[1], sign))
            collect(cross_keys, lower, upper, plane, cross(plane))
    for keys in (central_keys, cross_keys):
        for referrers in keys.values():
            referrers.sort()
    return central_keys, cross_keys


def _try_local(args):
    intersection, phase_map, material_field, jump_fn, index, limit = args
    try:
        return local_fictitious_values(intersection, phase_map,
                                       material_field, jump_fn, index, limit)
    except MibError as e:
        logging.debug("local solve %s failed: %s", intersection.key, e)
        return None


def _try_cross(args):
    key, phase_map, table = args
    node, comp, context = key
    try:
        return cross_fictitious(node, comp, context[1], phase_map, table,
                                allow_combination=False)
    except Unresolvable:
        return None


_CENTRAL_FALLBACKS = ((False, 3), (True, 3), (True, 2), (True, 1))
"""Extrapolation stages for unsolved central values: whether
fictitious inputs are allowed, and the number of points."""


def _central_fallback(key, phase_map, table, allow_fictitious, points):
    node, comp, context = key
    try:
        return disassociate(node, comp, context, table)
    except NothingToDisassociate:
        pass
    value = extrapolate(node, comp, context, phase_map, table,
                        directions=[context[1]] + [
                            d for d in range(3) if d != context[1]],
                        allow_fictitious=allow_fictitious, points=points)
    if value is not None:
        logging.warning("fictitious u%d at %s extrapolated (%s)",
                        comp + 1, node, value.provenance)
    return value


def build_fictitious_table(phase_map, intersections, material_field,
                           jump_fn, threads=None, condition_limit=None):
    """Resolve every fictitious value referenced by interior stencils.

    Local solves run in parallel per intersection and are merged in
    intersection order; where two solves give a value under the same
    key, the better-conditioned one is kept. Needed central values left
    unsolved are disassociated or extrapolated, first from real nodes
    only, then with fictitious inputs, then at linear and constant
    order. Cross values follow in a parallel pass over the central
    table and up to `NEIGHBOR_COMBINATION_PASSES` sequential passes of
    neighbor combinations.

    Returns:
        FictitiousTable: The resolved values

    Raises:
        Unresolvable: If a needed value has no scheme
    """
    if threads is None:
        threads = config.PARALLEL_THREADS
    if condition_limit is None:
        condition_limit = config.CONDITION_LIMIT
    index = dict((point.key, point) for point in intersections)
    table = FictitiousTable()
    args = [(point, phase_map, material_field, jump_fn, index,
             condition_limit) for point in intersections]
    with ThreadPoolExecutor(max_workers=max(1, threads)) as executor:
        solves = list(executor.map(_try_local, args))
    failed = 0
    for solve in solves:
        if solve is None:
            failed += 1
            continue
        for value in solve.values:
            table.offer(value)
    logging.info("local solves: %d of %d intersections solved",
                 len(solves) - failed, len(solves))

    central_keys, cross_keys = needed_keys(phase_map)
    unresolved = sorted(key for key in central_keys if key not in table)
    for allow_fictitious, points in _CENTRAL_FALLBACKS:
        while unresolved:
            left = []
            for key in unresolved:
                value = _central_fallback(key, phase_map, table,
                                          allow_fictitious, points)
                if value is None:
                    left.append(key)
                else:
                    table.add(value)
            progress = len(left) < len(unresolved)
            unresolved = left
            if not progress:
                break
    if unresolved:
        node, comp, context = unresolved[0]
        raise Unresolvable("No scheme resolves u{0} at {1} along {2}"
                           " ({3} values unresolved)".format(
                               comp + 1, node, "xyz"[context[1]],
                               len(unresolved)))

    pending = sorted(key for key in cross_keys if key not in table)
    with ThreadPoolExecutor(max_workers=max(1, threads)) as executor:
        results = list(executor.map(
            _try_cross, [(key, phase_map, table) for key in pending]))
    remaining = []
    for key, value in zip(pending, results):
        if value is None:
            remaining.append(key)
        else:
            table.add(value)
    for _ in range(config.NEIGHBOR_COMBINATION_PASSES):
        if not remaining:
            break
        unresolved = []
        for key in remaining:
            node, comp, context = key
            value = _neighbor_combination(node, comp, context[1],
                                          cross_keys[key], phase_map, table)
            if value is None:
                unresolved.append(key)
            else:
                table.add(value)
        remaining = unresolved
    if remaining:
        node, comp, context = remaining[0]
        raise Unresolvable("No scheme resolves u{0} at {1} in plane {2}"
                           " ({3} values unresolved)".format(
                               comp + 1, node, context[1], len(remaining)))
    logging.info("fictitious values: %s", table.provenance_counts())
    return table
