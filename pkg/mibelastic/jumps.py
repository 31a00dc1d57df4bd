# -*- coding: utf-8 -*-

"""
Interface jump conditions in the local frame of an intersection.

At an interface point the displacement jump ``[u] = b``, the traction
jump ``[T n] = T`` and the tangential derivatives of ``[u]`` give nine
conditions on the 18 one-sided first derivatives ``du_c/dx_d`` (plus
and minus side). They form the rows of the 9 x 18 matrix C built by
:func:`assemble_C`. Two of the six derivative sets (side x direction)
off the meshline cannot be approximated from in-phase nodes; they are
eliminated by :func:`elimination_coefficients`, leaving three combined
conditions, which :func:`combined_condition_rows` pairs with the
three value jumps.

Derivative sets are numbered 1 to 6 as ``l = 2 d + s + 1`` with
direction d and side s (0 plus, 1 minus); the column of
``du_c/dx_d`` on side s is ``6 c + 2 d + s`` (0-based). Jumps are
always plus minus minus.
"""




import itertools
import logging

import numpy as np

import mib_config as config
from mibelastic.errors import DegenerateElimination, NoViablePair


__all__ = ['LocalFrame',
           'JumpData',
           'JumpMatrix',
           'EliminationResult',
           'CombinedConditions',
           'transformation_matrix',
           'traction_coefficients',
           'traction',
           'column',
           'derivative_set',
           'set_direction',
           'set_side',
           'assemble_C',
           'select_elimination_pair',
           'ranked_elimination_pairs',
           'elimination_coefficients',
           'combined_condition_rows']


SIMPLE_PAIR = (5, 6)
"""The z-derivative pair eliminated through the eta conditions alone."""


def column(component, direction, side):
    """Return the 0-based column of ``du_component/dx_direction``."""
    return 6 * component + 2 * direction + side


def derivative_set(direction, side):
    """Return the 1-based derivative set number."""
    return 2 * direction + side + 1


def set_direction(l):
    return (l - 1) // 2


def set_side(l):
    return (l - 1) % 2


class LocalFrame(object):

    """
    The interface-adapted frame at a point.

    Attributes:
        theta, phi_angle (float): Azimuth and zenith of the normal
        P (numpy.ndarray): Rows are the normal (xi), the in-plane
            tangent (eta) and the second tangent (zeta)
    """

    def __init__(self, theta, phi_angle, P):
        self.theta = theta
        self.phi_angle = phi_angle
        self.P = P

    @property
    def normal(self):
        return self.P[0]


def transformation_matrix(theta, phi_angle):
    """Return the :class:`LocalFrame` of azimuth `theta`, zenith `phi_angle`."""
    st, ct = np.sin(theta), np.cos(theta)
    sp, cp = np.sin(phi_angle), np.cos(phi_angle)
    P = np.array([[sp * ct, sp * st, cp],
                  [-st, ct, 0.0],
                  [-cp * ct, -cp * st, sp]])
    return LocalFrame(theta, phi_angle, P)


def traction_coefficients(lam, mu, normal, pwave=None):
    """Return coefficients of the traction in the displacement gradient.

    Entry ``[i, c, d]`` multiplies ``du_c/dx_d`` in component i of
    ``T n = lambda div(u) n + mu (grad u + grad u^T) n``. The diagonal
    ``[i, i, i]`` equals the p-wave modulus times ``n_i``; `pwave`
    overrides lambda + 2 mu there.
    """
    if pwave is None:
        pwave = lam + 2 * mu
    coefficients = np.zeros((3, 3, 3))
    for i, c, d in itertools.product(range(3), repeat=3):
        if c == d == i:
            coefficients[i, c, d] = pwave * normal[i]
        else:
            coefficients[i, c, d] = (lam * normal[i] * (c == d)
                                     + mu * normal[c] * (d == i)
                                     + mu * normal[d] * (c == i))
    return coefficients


def traction(lam, mu, gradient, normal):
    """Return the traction vector for displacement gradient ``[c, d]``."""
    return np.einsum("icd,cd->i",
                     traction_coefficients(lam, mu, normal), gradient)


class JumpData(object):

    """
    Jump data at an interface point.

    Attributes:
        b (numpy.ndarray): Displacement jump
        T (numpy.ndarray): Traction jump
        gradient (numpy.ndarray): Jump of the displacement gradient,
            indexed ``[component, direction]``; its tangential
            projections give the eta and zeta derivative jumps
    """

    def __init__(self, b, T, gradient):
        self.b = np.asarray(b, dtype=float)
        self.T = np.asarray(T, dtype=float)
        self.gradient = np.asarray(gradient, dtype=float)

    def __repr__(self):
        return "JumpData(b={0}, T={1})".format(list(self.b), list(self.T))

    def tangential(self, frame):
        """Return the eta and zeta derivative jumps per component."""
        return self.gradient.dot(frame.P[1]), self.gradient.dot(frame.P[2])


class JumpMatrix(object):

    """
    The jump-condition matrix at an interface point.

    Attributes:
        C (numpy.ndarray): 9 x 18; rows 1-3 traction jumps, rows 4-6
            eta derivative jumps, rows 7-9 zeta derivative jumps of
            u1, u2, u3
        frame (LocalFrame): The local frame
        materials (dict): Limits M, lambda and mu on both sides
        scale (float): Divisor of the traction rows, max(M+, M-)
    """

    def __init__(self, C, frame, materials):
        self.C = C
        self.frame = frame
        self.materials = materials
        self.scale = max(materials["M_plus"], materials["M_minus"])

    def scaled(self):
        """Return C with the traction rows divided by `scale`."""
        scaled = self.C.copy()
        scaled[:3] /= self.scale
        return scaled


def assemble_C(frame, M_plus, M_minus, lambda_plus, lambda_minus, mu_plus,
               mu_minus):
    """Build the :class:`JumpMatrix` from the frame and one-sided moduli."""
    C = np.zeros((9, 18))
    P = frame.P
    limits = ((0, 1.0, lambda_plus, mu_plus, M_plus),
              (1, -1.0, lambda_minus, mu_minus, M_minus))
    for side, sign, lam, mu, pwave in limits:
        coefficients = traction_coefficients(lam, mu, P[0], pwave)
        for c, d in itertools.product(range(3), repeat=2):
            col = column(c, d, side)
            C[:3, col] = sign * coefficients[:, c, d]
            C[3 + c, col] = sign * P[1, d]
            C[6 + c, col] = sign * P[2, d]
    materials = {"M_plus": M_plus, "M_minus": M_minus,
                 "lambda_plus": lambda_plus, "lambda_minus": lambda_minus,
                 "mu_plus": mu_plus, "mu_minus": mu_minus}
    return JumpMatrix(C, frame, materials)


def _ordered_sets(meshline_direction, stencil_availability):
    """Order the four off-meshline sets, least available first."""
    candidates = [l for l in range(1, 7)
                  if set_direction(l) != meshline_direction]
    return sorted(candidates,
                  key=lambda l: (stencil_availability.get(l, 0),
                                 set_side(l), set_direction(l)))


def select_elimination_pair(meshline_direction, stencil_availability):
    """Choose the two derivative sets to eliminate.

    Arguments:
        meshline_direction (int): Direction of the intersected meshline
        stencil_availability (dict[int, int]): Per derivative set, a
            score of in-phase auxiliary nodes; 0 when no one-sided
            auxiliary stencil exists

    Returns:
        tuple[int]: ``(l, m)`` with ``l < m``; the two least available
            off-meshline sets, preferring plus before minus and x
            before y before z on ties

    Raises:
        NoViablePair: If one of the two kept sets has no stencil
    """
    ordered = _ordered_sets(meshline_direction, stencil_availability)
    if not all(stencil_availability.get(l, 0) for l in ordered[2:]):
        raise NoViablePair("Fewer than two evaluable derivative sets off the"
                           " meshline along {0}".format(meshline_direction))
    return tuple(sorted(ordered[:2]))


def ranked_elimination_pairs(meshline_direction, stencil_availability):
    """Return the viable elimination pairs, best first.

    Pairs of the same direction make the combined conditions vanish and
    are left out, except the z pair, which is kept last since its
    conditions drop the traction jump.
    """
    ordered = _ordered_sets(meshline_direction, stencil_availability)
    pairs = []
    for first, second in itertools.combinations(range(4), 2):
        pair = tuple(sorted((ordered[first], ordered[second])))
        kept = [l for l in ordered if l not in pair]
        if set_direction(pair[0]) == set_direction(pair[1]):
            continue
        if all(stencil_availability.get(l, 0) for l in kept):
            pairs.append(pair)
    if meshline_direction != 2:
        kept = [l for l in ordered if l not in SIMPLE_PAIR]
        if all(stencil_availability.get(l, 0) for l in kept):
            pairs.append(SIMPLE_PAIR)
    return pairs


class EliminationResult(object):

    """
    Combined interface conditions after eliminating two derivative sets.

    Attributes:
        pair (tuple[int]): The eliminated sets ``(l, m)``
        coefficients (dict[str, numpy.ndarray]): ``a`` to ``g``, one
            value per combined row
        weights (numpy.ndarray): 3 x 9 combination of the rows of the
            scaled C making up each combined row
        rows (numpy.ndarray): 3 x 18 combined rows
        eliminated (list[int]): Columns of the eliminated derivatives
        frame (LocalFrame), scale (float): As in the jump matrix
    """

    def __init__(self, pair, coefficients, weights, rows, frame, scale):
        self.pair = pair
        self.coefficients = coefficients
        self.weights = weights
        self.rows = rows
        self.frame = frame
        self.scale = scale
        self.eliminated = sorted(
            column(c, set_direction(l), set_side(l))
            for l in pair for c in range(3))

    @property
    def simple(self):
        return tuple(sorted(self.pair)) == SIMPLE_PAIR


def elimination_coefficients(jump_matrix, l, m):
    """Eliminate derivative sets `l` and `m` from the traction conditions.

    The combined row i is ``a C_i + b_i C_4 + c_i C_7 + d_i C_5 +
    e_i C_8 + f_i C_6 + g_i C_9`` on the scaled matrix, which vanishes
    in columns l, m, l+6, m+6, l+12 and m+12. For the z pair (5, 6) the
    eta rows 4-6 are used directly.

    Raises:
        DegenerateElimination: If the pair has a single direction
            other than z, if ``|a|`` is negligible, or if all combined
            rows vanish
    """
    C = jump_matrix.scaled()
    pair = tuple(sorted((l, m)))
    if pair == SIMPLE_PAIR:
        weights = np.zeros((3, 9))
        weights[:, 3:6] = np.eye(3)
        return EliminationResult(pair, {}, weights, weights.dot(C),
                                 jump_matrix.frame, jump_matrix.scale)
    if set_direction(l) == set_direction(m):
        raise DegenerateElimination("Sets {0} and {1} share a direction"
                                    .format(l, m))

    def entry(row, col):
        return C[row - 1, col - 1]

    a = entry(4, l) * entry(7, m) - entry(7, l) * entry(4, m)
    coefficients = dict((name, np.zeros(3)) for name in "abcdefg")
    weights = np.zeros((3, 9))
    for i in range(1, 4):
        coefficients["a"][i - 1] = a
        coefficients["b"][i - 1] = (entry(7, l) * entry(i, m)
                                    - entry(i, l) * entry(7, m))
        coefficients["c"][i - 1] = (entry(i, l) * entry(4, m)
                                    - entry(4, l) * entry(i, m))
        coefficients["d"][i - 1] = (entry(8, l + 6) * entry(i, m + 6)
                                    - entry(i, l + 6) * entry(8, m + 6))
        coefficients["e"][i - 1] = (entry(i, l + 6) * entry(5, m + 6)
                                    - entry(5, l + 6) * entry(i, m + 6))
        coefficients["f"][i - 1] = (entry(9, l + 12) * entry(i, m + 12)
                                    - entry(i, l + 12) * entry(9, m + 12))
        coefficients["g"][i - 1] = (entry(i, l + 12) * entry(6, m + 12)
                                    - entry(6, l + 12) * entry(i, m + 12))
        for name, row in zip("abdfceg", (i, 4, 5, 6, 7, 8, 9)):
            weights[i - 1, row - 1] = coefficients[name][i - 1]
    rows = weights.dot(C)
    scale = np.abs(C).max()
    if (abs(a) < config.ELIMINATION_TOLERANCE
            or np.abs(rows).max() < config.ELIMINATION_TOLERANCE * scale):
        raise DegenerateElimination(
            "Elimination of sets {0} and {1} degenerates (a = {2:.3e})"
            .format(l, m, a))
    logging.debug("elimination (%d, %d): a = %.3e", l, m, a)
    return EliminationResult(pair, coefficients, weights, rows,
                             jump_matrix.frame, jump_matrix.scale)


class CombinedConditions(object):

    """
    The six interface conditions used by a local fictitious solve.

    Attributes:
        value_rhs (numpy.ndarray): Right-hand sides of ``[u_c] = b_c``
        rows (numpy.ndarray): 3 x 18 combined derivative rows
        rhs (numpy.ndarray): Their right-hand sides
    """

    def __init__(self, value_rhs, rows, rhs):
        self.value_rhs = value_rhs
        self.rows = rows
        self.rhs = rhs

    def residuals(self, value_jump, derivatives):
        """Return the six residuals for value jumps and the 18 derivatives."""
        return np.concatenate([np.asarray(value_jump) - self.value_rhs,
                               self.rows.dot(derivatives) - self.rhs])


def combined_condition_rows(elimination, jump_data):
    """Pair the combined derivative rows with their jump data.

    The right-hand side of combined row i weighs the scaled traction
    jump and the eta and zeta derivative jumps exactly as the rows of C.
    """
    eta, zeta = jump_data.tangential(elimination.frame)
    data = np.concatenate([jump_data.T / elimination.scale, eta, zeta])
    return CombinedConditions(jump_data.b, elimination.rows,
                              elimination.weights.dot(data))
