# -*- coding: utf-8 -*-

"""
The catalog of manufactured two-phase elasticity problems.

Each entry fixes a domain, an interface shape, the moduli of both
phases and an exact displacement per phase. Boundary data, body
forces and interface jumps all derive from the exact fields; the body
force is the negated divergence of the exact stress, evaluated from
the analytic first and second derivatives.

The minus phase is the bounded region enclosed by the interface in
every entry.
"""




import numpy as np

from mibelastic import reference
from mibelastic.errors import UnknownCase
from mibelastic.fields import CosProduct, VectorField, X, Y, Z, constant
from mibelastic.grid import PLUS, MINUS
from mibelastic.jumps import JumpData, traction
from mibelastic.materials import MaterialField, PhaseMaterial, evaluate
from mibelastic.shapes import make_shape


__all__ = ['ManufacturedProblem',
           'CATALOG',
           'manufactured_case',
           'catalog_entries',
           'body_force',
           'stress']


def stress(lam, mu, gradient):
    """Return the stress tensor for displacement gradient ``[c, d]``.

    `lam`, `mu` and the trailing axes of `gradient` broadcast.
    """
    divergence = gradient[0, 0] + gradient[1, 1] + gradient[2, 2]
    identity = np.eye(3).reshape((3, 3) + (1,) * (gradient.ndim - 2))
    return (lam * divergence * identity
            + mu * (gradient + np.swapaxes(gradient, 0, 1)))


def body_force(material, displacement, x, y, z):
    """Return F with ``div(stress) = -F`` for `displacement` in `material`.

    Arguments:
        material (PhaseMaterial): Moduli of the phase
        displacement (VectorField): Exact displacement
        x, y, z: Coordinates (scalars or arrays)

    Returns:
        numpy.ndarray: Shape ``(3,) + s``
    """
    mu = material.mu_fn(x, y, z)
    grad_mu = np.asarray(material.mu_grad_fn(x, y, z))
    lam = material.lambda_factor * mu
    grad_lam = material.lambda_factor * grad_mu
    gradient = displacement.gradient(x, y, z)
    hessian = displacement.hessian(x, y, z)
    divergence = gradient[0, 0] + gradient[1, 1] + gradient[2, 2]
    force = []
    for i in range(3):
        grad_div = hessian[0, 0, i] + hessian[1, 1, i] + hessian[2, 2, i]
        laplacian = hessian[i, 0, 0] + hessian[i, 1, 1] + hessian[i, 2, 2]
        operator = ((lam + mu) * grad_div + mu * laplacian
                    + grad_lam[i] * divergence)
        for j in range(3):
            operator = operator + grad_mu[j] * (gradient[j, i]
                                                + gradient[i, j])
        force.append(-operator)
    return np.array(np.broadcast_arrays(*force))


class ManufacturedProblem(object):

    """
    A manufactured interface problem.

    Attributes:
        example (int), case (int): Catalog keys
        bounds_min, bounds_max (tuple[float]): Domain
        shape (InterfaceShape): The interface
        exact (dict[str, VectorField]): Displacement per phase
        material_field (MaterialField): Moduli
        grid_kind (str): ``nodes`` if the catalog grids are node
            counts, ``size`` if they are grid sizes
        grids (tuple): The catalog grids
        note (str): Catalog remark
    """

    def __init__(self, example, case, bounds_min, bounds_max, shape,
                 exact_plus, exact_minus, material_field, grid_kind, grids,
                 note=""):
        self.example = example
        self.case = case
        self.bounds_min = tuple(bounds_min)
        self.bounds_max = tuple(bounds_max)
        self.shape = shape
        self.exact = {PLUS: exact_plus, MINUS: exact_minus}
        self.material_field = material_field
        self.grid_kind = grid_kind
        self.grids = tuple(grids)
        self.note = note

    def __repr__(self):
        return "ManufacturedProblem(example={0}, case={1}, {2})".format(
            self.example, self.case, self.shape.shape_id)

    @property
    def label(self):
        return "{0}.{1}".format(self.example, self.case)

    def with_bounds(self, bounds_min=None, bounds_max=None):
        """Return a copy on other domain bounds."""
        return ManufacturedProblem(
            self.example, self.case, bounds_min or self.bounds_min,
            bounds_max or self.bounds_max, self.shape, self.exact[PLUS],
            self.exact[MINUS], self.material_field, self.grid_kind,
            self.grids, self.note)

    def node_counts(self, grid):
        """Return node counts for a node count or a grid size `grid`.

        Integers are node counts per direction; floats are grid sizes,
        converted per direction as ``round(length / h) + 1``.
        """
        if isinstance(grid, (int, np.integer)):
            return (int(grid),) * 3
        return tuple(int(round((upper - lower) / grid)) + 1
                     for lower, upper in zip(self.bounds_min,
                                             self.bounds_max))

    def exact_solution(self, x, y, z, plus):
        """Exact displacement of each point's phase, shape ``(3,) + s``."""
        return np.where(plus, self.exact[PLUS].value(x, y, z),
                        self.exact[MINUS].value(x, y, z))

    boundary_values = exact_solution

    def forcing(self, x, y, z, plus):
        """Body force of each point's phase, shape ``(3,) + s``."""
        return np.where(plus,
                        body_force(self.material_field.plus,
                                   self.exact[PLUS], x, y, z),
                        body_force(self.material_field.minus,
                                   self.exact[MINUS], x, y, z))

    def jump_data(self, position, normal):
        """Jumps of displacement, traction and gradient at `position`.

        The traction jump is zero where no normal is known.
        """
        x, y, z = position
        limits = {}
        for phase in (PLUS, MINUS):
            lam, mu, _, _ = evaluate(self.material_field, position, phase)
            limits[phase] = (self.exact[phase].value(x, y, z),
                             self.exact[phase].gradient(x, y, z), lam, mu)
        b = limits[PLUS][0] - limits[MINUS][0]
        gradient = limits[PLUS][1] - limits[MINUS][1]
        if normal is None:
            T = np.zeros(3)
        else:
            T = (traction(limits[PLUS][2], limits[PLUS][3], limits[PLUS][1],
                          normal)
                 - traction(limits[MINUS][2], limits[MINUS][3],
                            limits[MINUS][1], normal))
        return JumpData(b, T, gradient)

    def published(self):
        """The published error table of this entry, or None."""
        return reference.published_table(self.example, self.case)


_CC = CosProduct()
_R2 = X ** 2 + Y ** 2 + Z ** 2
_BASE = VectorField([_CC, X * Y + _CC, Y * Z + _CC])
_QUADRATIC_PLUS = VectorField([_R2 - 4.0, _R2 + X * Y - 4.0,
                              _R2 + Y * Z - 4.0])


def _continuous(level):
    """The base field plus `level`, which vanishes on the interface."""
    return VectorField([component + level for component in _BASE.components])


_STRONG_PLUS = VectorField([_CC + X * Y * Z, _CC + _R2, _CC])
_STRONG_MINUS = VectorField([constant(3.0)] * 3)


def _materials(nu_plus, nu_minus, mu_plus, mu_minus):
    return MaterialField(PhaseMaterial(mu_plus, nu_plus),
                         PhaseMaterial(mu_minus, nu_minus))


_CASES = {
    1: (0.20, 0.24, 1.5e6, 2.0e6),
    2: (0.00024, 0.24, 1.5e6, 2.0e6),
    3: (0.20, 0.24, 2000.0, 2.0e6),
    }

_CUBE = ((-3.0, -3.0, -3.0), (3.0, 3.0, 3.0))
_TOWER = ((-2.0, -2.0, -2.0), (2.0, 2.0, 4.4))


def _entry(example, case, domain, shape_id, plus, minus, materials,
           note=""):
    table = reference.published_table(example, case)
    return ManufacturedProblem(
        example, case, domain[0], domain[1], make_shape(shape_id), plus,
        minus, materials, reference.GRID_KINDS[example],
        [row[0] for row in table["linf"]], note)


def _build_catalog():
    catalog = {}
    for case, values in sorted(_CASES.items()):
        materials = _materials(*values)
        catalog[(1, case)] = lambda case=case, materials=materials: _entry(
            1, case, _CUBE, "sphere", _continuous(_R2 - 4.0), _BASE,
            materials)
        catalog[(2, case)] = lambda case=case, materials=materials: _entry(
            2, case, _CUBE, "hemisphere", _continuous(_R2 - 4.0), _BASE,
            materials)
        catalog[(3, case)] = lambda case=case, materials=materials: _entry(
            3, case, ((-3.0, -4.0, -2.0), (3.0, 4.0, 2.0)), "ellipsoid",
            _continuous(0.25 * X ** 2 + (1.0 / 9) * Y ** 2 + Z ** 2 - 1.0),
            _BASE, materials)
    case_one = _materials(*_CASES[1])
    catalog[(4, 1)] = lambda: _entry(
        4, 1, _TOWER, "cylinder", _QUADRATIC_PLUS, _BASE, case_one)
    catalog[(5, 1)] = lambda: _entry(
        5, 1, ((-10.0, -10.0, -5.0), (10.0, 10.0, 5.0)), "torus",
        _QUADRATIC_PLUS, _BASE, case_one,
        "torus taken from its implicit equation, R = 4, r = 2")
    catalog[(6, 1)] = lambda: _entry(
        6, 1, ((-5.0, -5.0, -2.0), (5.0, 5.0, 2.0)), "flower_prism",
        _QUADRATIC_PLUS, _BASE, case_one)
    catalog[(7, 1)] = lambda: _entry(
        7, 1, _CUBE, "sphere", _continuous(_R2 - 4.0), _BASE,
        _materials(0.20, 0.24, 1.5e6 + (X + Y + Z), 2.0e6 + X * Y * Z))
    catalog[(8, 1)] = lambda: _entry(
        8, 1, _TOWER, "cylinder", _QUADRATIC_PLUS, _BASE,
        _materials(0.20, 0.24, 1.5e6 + 2000.0 * (X + Y + Z),
                   2.0e6 + 1500.0 * X * Y * Z))
    catalog[(9, 1)] = lambda: _entry(
        9, 1, _TOWER, "cylinder", _QUADRATIC_PLUS, _BASE,
        _materials(0.20, 0.24, 1.5e6 + 2000.0 * _R2,
                   2.0e6 + 1500.0 * X ** 2 * Y ** 2 * Z ** 2))
    strong = _materials(0.24, 0.20, 2.0e6, 1.5e6)
    catalog[(10, 1)] = lambda: _entry(
        10, 1, ((-5.0, -5.0, -8.0), (4.6, 4.6, 4.0)), "apple",
        _STRONG_PLUS, _STRONG_MINUS, strong)
    catalog[(11, 1)] = lambda: _entry(
        11, 1, ((-5.0, -5.0, -5.0), (4.6, 4.6, 4.6)), "acorn",
        _STRONG_PLUS, _STRONG_MINUS, strong,
        "cone apex at z = 6/7 so that the cap closes the sphere")
    catalog[(12, 1)] = lambda: _entry(
        12, 1, ((-1.3, -1.3, -1.3), (1.1, 1.1, 1.1)), "pentagon_star_prism",
        _STRONG_PLUS, _STRONG_MINUS, strong,
        "rotation offset pi/7, tip angle pi/5, R = 6/7")
    return catalog


CATALOG = _build_catalog()
"""Problem factories by ``(example, case)``."""


def catalog_entries():
    """Return the catalog keys in order."""
    return sorted(CATALOG)


def manufactured_case(example_id, case_id=None):
    """Return the manufactured problem `example_id`, case `case_id`.

    `case_id` defaults to 1; examples without cases only have case 1.

    Raises:
        UnknownCase: If the pair is not in the catalog
    """
    key = (int(example_id), 1 if case_id is None else int(case_id))
    try:
        factory = CATALOG[key]
    except KeyError:
        raise UnknownCase("No manufactured problem for example {0} case {1}"
                          .format(*key))
    return factory()