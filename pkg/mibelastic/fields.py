# -*- coding: utf-8 -*-

"""
Analytic fields with exact derivatives.

The manufactured solutions and variable shear moduli are built from
the classes here: :class:`Polynomial`, :class:`CosProduct`, their sums
and scalar multiples, and :class:`VectorField` for displacements. All
evaluation methods take coordinate arrays ``x, y, z`` that broadcast
against each other; gradients stack the direction as the first axis
and Hessians the two directions as the first two axes.
"""




import numpy as np


__all__ = ['ScalarField',
           'Polynomial',
           'CosProduct',
           'FieldSum',
           'ScaledField',
           'VectorField',
           'as_field',
           'constant',
           'X',
           'Y',
           'Z']


def _zeros(x, y, z):
    return np.zeros(np.broadcast(x, y, z).shape)


class ScalarField(object):

    """
    Base class of scalar fields.

    Subclasses implement `value`, `gradient` and `hessian`. Fields
    combine with ``+``, ``-`` and multiplication by numbers.
    """

    def value(self, x, y, z):
        raise NotImplementedError

    def gradient(self, x, y, z):
        raise NotImplementedError

    def hessian(self, x, y, z):
        raise NotImplementedError

    def __call__(self, x, y, z):
        return self.value(x, y, z)

    def __add__(self, other):
        return FieldSum([self, as_field(other)])

    def __radd__(self, other):
        return as_field(other) + self

    def __neg__(self):
        return -1.0 * self

    def __sub__(self, other):
        return self + (-1.0) * as_field(other)

    def __rsub__(self, other):
        return as_field(other) + (-1.0) * self

    def __mul__(self, factor):
        if isinstance(factor, (int, float)):
            return ScaledField(self, factor)
        return NotImplemented

    def __rmul__(self, factor):
        return self.__mul__(factor)


def as_field(value):
    """Return `value` as a field; numbers become constant polynomials."""
    if isinstance(value, ScalarField):
        return value
    return constant(value)


class Polynomial(ScalarField):

    """
    A polynomial in x, y and z.

    Arguments:
        terms (dict[tuple[int], float]): Coefficients by exponent
            triple ``(a, b, c)`` of ``x**a * y**b * z**c``
    """

    def __init__(self, terms):
        self.terms = dict((tuple(powers), float(coef))
                          for powers, coef in terms.items() if coef != 0)

    def __repr__(self):
        return "Polynomial({0})".format(self.terms)

    def value(self, x, y, z):
        result = _zeros(x, y, z)
        for (a, b, c), coef in self.terms.items():
            result = result + coef * (np.power(x, a) * np.power(y, b)
                                      * np.power(z, c))
        return result

    def derivative(self, direction):
        """Return the partial derivative along `direction` (0, 1 or 2)."""
        terms = {}
        for powers, coef in self.terms.items():
            if powers[direction]:
                lowered = list(powers)
                lowered[direction] -= 1
                lowered = tuple(lowered)
                terms[lowered] = (terms.get(lowered, 0.0)
                                  + coef * powers[direction])
        return Polynomial(terms)

    def gradient(self, x, y, z):
        return np.array([self.derivative(d).value(x, y, z)
                         for d in range(3)])

    def hessian(self, x, y, z):
        return np.array([[self.derivative(d).derivative(e).value(x, y, z)
                          for e in range(3)] for d in range(3)])

    def __add__(self, other):
        if isinstance(other, (int, float)):
            other = constant(other)
        if isinstance(other, Polynomial):
            terms = dict(self.terms)
            for powers, coef in other.terms.items():
                terms[powers] = terms.get(powers, 0.0) + coef
            return Polynomial(terms)
        return super(Polynomial, self).__add__(other)

    def __mul__(self, factor):
        if isinstance(factor, (int, float)):
            return Polynomial(dict((powers, coef * factor)
                                   for powers, coef in self.terms.items()))
        if isinstance(factor, Polynomial):
            terms = {}
            for powers1, coef1 in self.terms.items():
                for powers2, coef2 in factor.terms.items():
                    powers = tuple(p + q for p, q in zip(powers1, powers2))
                    terms[powers] = terms.get(powers, 0.0) + coef1 * coef2
            return Polynomial(terms)
        return NotImplemented

    def __pow__(self, exponent):
        result = constant(1.0)
        for _ in range(exponent):
            result = result * self
        return result


def constant(value):
    return Polynomial({(0, 0, 0): value})


X = Polynomial({(1, 0, 0): 1.0})
Y = Polynomial({(0, 1, 0): 1.0})
Z = Polynomial({(0, 0, 1): 1.0})


class CosProduct(ScalarField):

    """The field ``cos(x) cos(y) cos(z)``."""

    def value(self, x, y, z):
        return np.cos(x) * np.cos(y) * np.cos(z)

    def gradient(self, x, y, z):
        cx, cy, cz = np.cos(x), np.cos(y), np.cos(z)
        sx, sy, sz = np.sin(x), np.sin(y), np.sin(z)
        return np.array([-sx * cy * cz, -cx * sy * cz, -cx * cy * sz])

    def hessian(self, x, y, z):
        cx, cy, cz = np.cos(x), np.cos(y), np.cos(z)
        sx, sy, sz = np.sin(x), np.sin(y), np.sin(z)
        diagonal = -cx * cy * cz
        xy = sx * sy * cz
        xz = sx * cy * sz
        yz = cx * sy * sz
        return np.array([[diagonal, xy, xz],
                         [xy, diagonal, yz],
                         [xz, yz, diagonal]])


class FieldSum(ScalarField):

    """The sum of a list of fields."""

    def __init__(self, parts):
        self.parts = []
        for part in parts:
            if isinstance(part, FieldSum):
                self.parts.extend(part.parts)
            else:
                self.parts.append(part)

    def value(self, x, y, z):
        return sum(part.value(x, y, z) for part in self.parts)

    def gradient(self, x, y, z):
        return sum(part.gradient(x, y, z) for part in self.parts)

    def hessian(self, x, y, z):
        return sum(part.hessian(x, y, z) for part in self.parts)


class ScaledField(ScalarField):

    """A field multiplied by a constant."""

    def __init__(self, field, factor):
        self.field = field
        self.factor = float(factor)

    def value(self, x, y, z):
        return self.factor * self.field.value(x, y, z)

    def gradient(self, x, y, z):
        return self.factor * self.field.gradient(x, y, z)

    def hessian(self, x, y, z):
        return self.factor * self.field.hessian(x, y, z)


class VectorField(object):

    """
    A displacement field of three scalar components.

    `value` returns shape ``(3,) + s``, `gradient` ``(3, 3) + s``
    indexed ``[component, direction]`` and `hessian` ``(3, 3, 3) + s``.
    """

    def __init__(self, components):
        self.components = [as_field(component) for component in components]

    def value(self, x, y, z):
        return np.array([component.value(x, y, z)
                         for component in self.components])

    def gradient(self, x, y, z):
        return np.array([component.gradient(x, y, z)
                         for component in self.components])

    def hessian(self, x, y, z):
        return np.array([component.hessian(x, y, z)
                         for component in self.components])
