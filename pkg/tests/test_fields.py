# -*- coding: utf-8 -*-

"""
Tests for mibelastic.fields.
"""




import numpy as np
import pytest
from numpy.testing import assert_allclose

from mibelastic.fields import (CosProduct, FieldSum, VectorField, X, Y, Z,
                               constant)


def _central_gradient(field, point, step=1e-6):
    point = np.asarray(point, dtype=float)
    gradient = []
    for direction in range(3):
        offset = np.zeros(3)
        offset[direction] = step
        gradient.append((field.value(*(point + offset))
                         - field.value(*(point - offset))) / (2 * step))
    return np.array(gradient)


def test_polynomial_value_and_derivatives():
    field = X ** 2 * Y + 3.0 * Z - 1.0
    assert field.value(2.0, 3.0, 1.0) == pytest.approx(14.0)
    assert_allclose(field.gradient(2.0, 3.0, 1.0), [12.0, 4.0, 3.0])
    assert_allclose(field.hessian(2.0, 3.0, 1.0),
                    [[6.0, 4.0, 0.0], [4.0, 0.0, 0.0], [0.0, 0.0, 0.0]])


def test_polynomial_arithmetic():
    x = np.array([0.5, -1.0])
    assert_allclose((3.0 - X).value(x, 0.0, 0.0), 3.0 - x)
    assert_allclose((-X).value(x, 0.0, 0.0), -x)
    assert_allclose((X - X).value(x, 0.0, 0.0), 0.0)
    assert_allclose(constant(2.5).value(x, x, x), [2.5, 2.5])


def test_cos_product_gradient_matches_differences():
    point = (0.3, -0.7, 1.1)
    assert_allclose(CosProduct().gradient(*point),
                    _central_gradient(CosProduct(), point), atol=1e-8)


def test_cos_product_hessian_matches_differences():
    point = np.array([0.3, -0.7, 1.1])
    field = CosProduct()
    step = 1e-5
    for direction in range(3):
        offset = np.zeros(3)
        offset[direction] = step
        expected = (field.gradient(*(point + offset))
                    - field.gradient(*(point - offset))) / (2 * step)
        assert_allclose(field.hessian(*point)[direction], expected,
                        atol=1e-8)


def test_field_sum_mixes_kinds():
    field = CosProduct() + X * Y
    assert isinstance(field, FieldSum)
    point = (0.2, 0.4, -0.3)
    assert field.value(*point) == pytest.approx(
        np.cos(0.2) * np.cos(0.4) * np.cos(-0.3) + 0.08)
    assert_allclose(field.gradient(*point), _central_gradient(field, point),
                    atol=1e-8)


def test_scaled_field():
    field = 2.0 * CosProduct()
    assert field.value(0.0, 0.0, 0.0) == pytest.approx(2.0)
    assert_allclose(field.gradient(0.1, 0.2, 0.3),
                    2.0 * CosProduct().gradient(0.1, 0.2, 0.3))


def test_vector_field_shapes():
    field = VectorField([X, Y * Z, CosProduct()])
    x = np.linspace(0.0, 1.0, 4)
    assert field.value(x, x, x).shape == (3, 4)
    assert field.gradient(x, x, x).shape == (3, 3, 4)
    assert field.hessian(x, x, x).shape == (3, 3, 3, 4)
    assert_allclose(field.gradient(0.5, 2.0, 3.0)[1], [0.0, 3.0, 2.0])
