# -*- coding: utf-8 -*-

"""
Implicit interface shapes.

An :class:`InterfaceShape` wraps an implicit function whose sign
separates the phases (plus where positive) together with its
gradient. Nonsmooth shapes are max/min compositions of smooth pieces
(:class:`MaxOf`, :class:`MinOf`); the gradient at a point is the one
of the active piece, the first piece winning ties.

`SHAPES` maps the catalog shape ids to factories with the parameters
of the manufactured examples.
"""




import math

import numpy as np

import mib_config as config
from mibelastic.fields import ScalarField, X, Y, Z


__all__ = ['InterfaceShape',
           'MaxOf',
           'MinOf',
           'Torus',
           'PolarProfile',
           'Slab',
           'Apple',
           'SphereDistance',
           'Cone',
           'SHAPES',
           'make_shape']


def _radius(x, y):
    return np.sqrt(np.asarray(x) ** 2 + np.asarray(y) ** 2)


def _safe(values):
    """Replace zeros by ones to guard divisions at coordinate axes."""
    return np.where(values == 0, 1.0, values)


class _Composite(ScalarField):

    _reduce = None

    def __init__(self, parts):
        self.parts = parts

    def value(self, x, y, z):
        return self._reduce(np.array(np.broadcast_arrays(
            *[part.value(x, y, z) for part in self.parts])), axis=0)

    def gradient(self, x, y, z):
        values = np.array(np.broadcast_arrays(
            *[part.value(x, y, z) for part in self.parts]))
        active = self._select(values, axis=0)
        gradients = [np.broadcast_to(part.gradient(x, y, z),
                                     (3,) + values.shape[1:])
                     for part in self.parts]
        return np.choose(np.broadcast_to(active, (3,) + active.shape),
                         gradients)


class MaxOf(_Composite):

    """The pointwise maximum of implicit pieces (intersection of insides)."""

    _reduce = staticmethod(np.max)
    _select = staticmethod(np.argmax)


class MinOf(_Composite):

    """The pointwise minimum of implicit pieces (union of insides)."""

    _reduce = staticmethod(np.min)
    _select = staticmethod(np.argmin)


class Torus(ScalarField):

    """The torus ``(R - sqrt(x^2 + y^2))^2 + z^2 - r^2``."""

    def __init__(self, major, minor):
        self.major = major
        self.minor = minor

    def value(self, x, y, z):
        return ((self.major - _radius(x, y)) ** 2 + np.asarray(z) ** 2
                - self.minor ** 2)

    def gradient(self, x, y, z):
        rho = _radius(x, y)
        factor = -2.0 * (self.major - rho) / _safe(rho)
        return np.array(np.broadcast_arrays(factor * x, factor * y,
                                            2.0 * np.asarray(z)))


class PolarProfile(ScalarField):

    """
    A vertical cylinder with polar profile: ``sqrt(x^2 + y^2) - g(theta)``.

    Arguments:
        profile (callable): g(theta)
        slope (callable): g'(theta)
    """

    def __init__(self, profile, slope):
        self.profile = profile
        self.slope = slope

    def value(self, x, y, z):
        return (_radius(x, y) + 0.0 * np.asarray(z)
                - self.profile(np.arctan2(y, x)))

    def gradient(self, x, y, z):
        rho = _safe(_radius(x, y))
        slope = self.slope(np.arctan2(y, x))
        return np.array(np.broadcast_arrays(
            x / rho + slope * y / rho ** 2,
            y / rho - slope * x / rho ** 2,
            0.0 * np.asarray(z)))


class Slab(ScalarField):

    """The slab ``|z| - half_width``."""

    def __init__(self, half_width):
        self.half_width = half_width

    def value(self, x, y, z):
        return np.abs(z) - self.half_width + 0.0 * np.asarray(x) * y

    def gradient(self, x, y, z):
        zero = 0.0 * np.asarray(x) * y * z
        return np.array(np.broadcast_arrays(
            zero, zero, np.where(np.asarray(z) >= 0, 1.0, -1.0)))


class Apple(ScalarField):

    """The apple ``rho = a (1 - cos(zenith))`` as ``rho^2 - a (rho - z)``."""

    def __init__(self, scale):
        self.scale = scale

    def value(self, x, y, z):
        rho = np.sqrt(np.asarray(x) ** 2 + np.asarray(y) ** 2
                      + np.asarray(z) ** 2)
        return rho ** 2 - self.scale * (rho - z)

    def gradient(self, x, y, z):
        rho = _safe(np.sqrt(np.asarray(x) ** 2 + np.asarray(y) ** 2
                            + np.asarray(z) ** 2))
        return np.array(np.broadcast_arrays(
            2.0 * x - self.scale * x / rho,
            2.0 * y - self.scale * y / rho,
            2.0 * z - self.scale * (z / rho - 1.0)))


class SphereDistance(ScalarField):

    """Signed distance to a sphere of `radius` around `center`."""

    def __init__(self, center, radius):
        self.center = center
        self.radius = radius

    def _offsets(self, x, y, z):
        return (np.asarray(x) - self.center[0],
                np.asarray(y) - self.center[1],
                np.asarray(z) - self.center[2])

    def value(self, x, y, z):
        dx, dy, dz = self._offsets(x, y, z)
        return np.sqrt(dx ** 2 + dy ** 2 + dz ** 2) - self.radius

    def gradient(self, x, y, z):
        dx, dy, dz = self._offsets(x, y, z)
        rho = _safe(np.sqrt(dx ** 2 + dy ** 2 + dz ** 2))
        return np.array(np.broadcast_arrays(dx / rho, dy / rho, dz / rho))


class Cone(ScalarField):

    """
    Normalized distance to the cone ``sqrt(x^2 + y^2) = slope (apex - z)``.

    Negative inside the cone below its apex.
    """

    def __init__(self, apex, slope):
        self.apex = apex
        self.slope = slope
        self._norm = math.sqrt(1.0 + slope ** 2)

    def value(self, x, y, z):
        return ((_radius(x, y) - self.slope * (self.apex - np.asarray(z)))
                / self._norm)

    def gradient(self, x, y, z):
        rho = _safe(_radius(x, y))
        return np.array(np.broadcast_arrays(
            x / rho / self._norm, y / rho / self._norm,
            self.slope / self._norm + 0.0 * np.asarray(z)))


class InterfaceShape(object):

    """
    An implicit interface.

    Attributes:
        shape_id (str): Catalog tag
        implicit (ScalarField): The implicit function; positive in the
            plus phase
        smooth (bool): False if the shape has edges, tips or cusps
        analytic_gradient (bool): Whether `implicit` has an exact
            gradient; otherwise central differences are used
    """

    def __init__(self, shape_id, implicit, smooth=True,
                 analytic_gradient=True, singularity_distance=None):
        self.shape_id = shape_id
        self.implicit = implicit
        self.smooth = smooth
        self.analytic_gradient = analytic_gradient
        self._singularity_distance = singularity_distance

    def __repr__(self):
        return "InterfaceShape({0})".format(self.shape_id)

    def value(self, x, y, z):
        """The implicit function (``implicit_fn``)."""
        return self.implicit.value(x, y, z)

    implicit_fn = value

    def gradient(self, x, y, z, h=1.0):
        """The implicit gradient (``gradient_fn``), shape ``(3,) + s``.

        Without an analytic gradient, central differences with step
        `GRADIENT_STEP_FACTOR` times `h` are used.
        """
        if self.analytic_gradient:
            return np.asarray(self.implicit.gradient(x, y, z), dtype=float)
        step = config.GRADIENT_STEP_FACTOR * h
        point = [np.asarray(x, dtype=float), np.asarray(y, dtype=float),
                 np.asarray(z, dtype=float)]
        gradient = []
        for direction in range(3):
            forward = list(point)
            backward = list(point)
            forward[direction] = point[direction] + step
            backward[direction] = point[direction] - step
            gradient.append((self.implicit.value(*forward)
                             - self.implicit.value(*backward)) / (2 * step))
        return np.array(np.broadcast_arrays(*gradient))

    gradient_fn = gradient

    def singularity_distance(self, x, y, z):
        """Distance estimate to the edges and tips of the shape.

        Infinite everywhere for smooth shapes.
        """
        if self._singularity_distance is None:
            return np.full(np.broadcast(x, y, z).shape, np.inf)
        return self._singularity_distance(np.asarray(x), np.asarray(y),
                                          np.asarray(z))


def sphere(radius=2.0):
    return InterfaceShape("sphere", X ** 2 + Y ** 2 + Z ** 2 - radius ** 2)


def hemisphere(radius=2.0):
    def edges(x, y, z):
        return np.sqrt((_radius(x, y) - radius) ** 2 + z ** 2)

    return InterfaceShape(
        "hemisphere", MaxOf([X ** 2 + Y ** 2 + Z ** 2 - radius ** 2, -Z]),
        smooth=False, singularity_distance=edges)


def ellipsoid(axes=(2.0, 3.0, 1.0)):
    return InterfaceShape("ellipsoid",
                          (1.0 / axes[0] ** 2) * X ** 2
                          + (1.0 / axes[1] ** 2) * Y ** 2
                          + (1.0 / axes[2] ** 2) * Z ** 2 - 1.0)


def cylinder(radius=math.pi / 2, height=math.pi):
    def edges(x, y, z):
        rim = _radius(x, y) - radius
        return np.minimum(np.sqrt(rim ** 2 + z ** 2),
                          np.sqrt(rim ** 2 + (z - height) ** 2))

    return InterfaceShape(
        "cylinder", MaxOf([X ** 2 + Y ** 2 - radius ** 2, -Z, Z - height]),
        smooth=False, singularity_distance=edges)


def torus(major=4.0, minor=2.0):
    return InterfaceShape("torus", Torus(major, minor))


def flower_prism(base=2.5, amplitude=5.0 / 7.0, petals=5,
                 half_height=2.0 / 3.0):
    def profile(theta):
        return base + amplitude * np.sin(petals * theta)

    def slope(theta):
        return amplitude * petals * np.cos(petals * theta)

    def edges(x, y, z):
        rim = _radius(x, y) - profile(np.arctan2(y, x))
        return np.sqrt(rim ** 2 + (np.abs(z) - half_height) ** 2)

    return InterfaceShape(
        "flower_prism",
        MaxOf([PolarProfile(profile, slope), Slab(half_height)]),
        smooth=False, singularity_distance=edges)


def apple(scale=1.9):
    def edges(x, y, z):
        return np.sqrt(x ** 2 + y ** 2 + z ** 2)

    return InterfaceShape("apple", Apple(scale), smooth=False,
                          singularity_distance=edges)


def acorn(apex=6.0 / 7.0, center=0.5, radius=15.0 / 7.0):
    slope = math.sqrt((radius ** 2 - center ** 2) / apex ** 2)
    rim = slope * apex

    def edges(x, y, z):
        rho = _radius(x, y)
        return np.minimum(np.sqrt(rho ** 2 + (z - apex) ** 2),
                          np.sqrt((rho - rim) ** 2 + z ** 2))

    implicit = MinOf([MaxOf([SphereDistance((0.0, 0.0, center), radius), Z]),
                      MaxOf([Cone(apex, slope), -Z])])
    return InterfaceShape("acorn", implicit, smooth=False,
                          singularity_distance=edges)


def pentagon_star_prism(outer=6.0 / 7.0, tip_angle=math.pi / 5,
                        rotation=math.pi / 7, half_height=math.sqrt(3) / 2):
    sector = 2 * math.pi / 5
    factor = outer * math.sin(tip_angle / 2)

    def _tip_offset(theta):
        offset = np.mod(theta - rotation, sector)
        before = offset > sector / 2
        return np.where(before, sector - offset, offset), np.where(
            before, -1.0, 1.0)

    def profile(theta):
        psi, _ = _tip_offset(theta)
        return factor / np.sin(tip_angle / 2 + psi)

    def slope(theta):
        psi, sign = _tip_offset(theta)
        angle = tip_angle / 2 + psi
        return -sign * factor * np.cos(angle) / np.sin(angle) ** 2

    inner = factor / math.sin(tip_angle / 2 + sector / 2)
    vertices = []
    for num in range(10):
        angle = rotation + num * sector / 2
        length = outer if num % 2 == 0 else inner
        vertices.append((length * math.cos(angle), length * math.sin(angle)))

    def edges(x, y, z):
        above = np.maximum(np.abs(z) - half_height, 0.0)
        vertical = np.min([np.sqrt((x - vx) ** 2 + (y - vy) ** 2)
                           for vx, vy in vertices], axis=0)
        rim = _radius(x, y) - profile(np.arctan2(y, x))
        return np.minimum(np.sqrt(vertical ** 2 + above ** 2),
                          np.sqrt(rim ** 2 + (np.abs(z) - half_height) ** 2))

    return InterfaceShape(
        "pentagon_star_prism",
        MaxOf([PolarProfile(profile, slope), Slab(half_height)]),
        smooth=False, singularity_distance=edges)


SHAPES = {
    "sphere": sphere,
    "hemisphere": hemisphere,
    "ellipsoid": ellipsoid,
    "cylinder": cylinder,
    "torus": torus,
    "flower_prism": flower_prism,
    "apple": apple,
    "acorn": acorn,
    "pentagon_star_prism": pentagon_star_prism,
    }
"""Catalog shape factories by shape id."""


def make_shape(shape_id, **kwargs):
    """Return the catalog shape `shape_id` built with `kwargs`."""
    return SHAPES[shape_id](**kwargs)
