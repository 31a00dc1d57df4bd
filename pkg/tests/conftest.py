# -*- coding: utf-8 -*-

"""
Shared fixtures: small grids and piecewise quadratic problems.

Quadratic fields without mixed terms are reproduced exactly by every
stencil, interpolation, extrapolation and neighbor combination, so
problems built from them have discretely exact solutions.
"""




import pytest

from mibelastic.fields import X, Y, Z, VectorField, constant
from mibelastic.materials import MaterialField, PhaseMaterial
from mibelastic.problems import ManufacturedProblem
from mibelastic.shapes import InterfaceShape, sphere


PLUS_FIELD = VectorField([X ** 2 + 2.0 * Y - 1.0,
                          0.5 * Y ** 2 - Z + 3.0,
                          Z ** 2 + X])
MINUS_FIELD = VectorField([2.0 * Y ** 2 - X,
                           X ** 2 + 0.5 * Z ** 2,
                           1.0 - Y ** 2 + 2.0 * Z])


def _quadratic_problem(shape, bounds_min, bounds_max, materials=None):
    if materials is None:
        materials = MaterialField(PhaseMaterial(1.5e6, 0.20),
                                  PhaseMaterial(2.0e6, 0.24))
    return ManufacturedProblem(0, 1, bounds_min, bounds_max, shape,
                               PLUS_FIELD, MINUS_FIELD, materials, "nodes",
                               (8,))


@pytest.fixture
def quadratic_problem():
    """Factory of piecewise quadratic problems on a given shape."""
    return _quadratic_problem


@pytest.fixture
def sphere_problem():
    return _quadratic_problem(sphere(1.6), (-3.0, -3.0, -3.0),
                              (3.0, 3.0, 3.0))


@pytest.fixture
def plane_problem():
    """The plane x = 3.3 on [0, 7]^3, minus for smaller x."""
    return _quadratic_problem(InterfaceShape("plane", X - 3.3),
                              (0.0, 0.0, 0.0), (7.0, 7.0, 7.0))


@pytest.fixture
def homogeneous_problem():
    """No interface: every node is a plus node."""
    return _quadratic_problem(InterfaceShape("none", constant(1.0)),
                              (0.0, 0.0, 0.0), (1.0, 1.0, 1.0))
