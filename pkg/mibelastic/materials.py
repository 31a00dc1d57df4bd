# -*- coding: utf-8 -*-

"""
Elastic moduli of the two phases.

A phase is described by a shear modulus field μ(x, y, z) and a
constant Poisson's ratio ν; the first Lamé parameter follows as
λ = 2μν/(1 − 2ν), so that ∇λ = 2ν/(1 − 2ν) ∇μ.
"""




from mibelastic.errors import InvalidModulus
from mibelastic.fields import as_field
from mibelastic.grid import PLUS, MINUS


__all__ = ['PhaseMaterial',
           'MaterialField',
           'lame_from_E_nu',
           'poisson_ratio',
           'youngs_modulus',
           'pwave_modulus',
           'evaluate']


def _check_nu(nu):
    if not 0.0 <= nu < 0.5:
        raise InvalidModulus("Poisson's ratio must lie in [0, 0.5), got {0}"
                             .format(nu))


def lame_from_E_nu(E, nu):
    """Return ``(lambda, mu)`` for Young's modulus `E` and ratio `nu`.

    Raises:
        InvalidModulus: If ``E <= 0`` or `nu` is outside [0, 0.5)
    """
    if not E > 0:
        raise InvalidModulus("Young's modulus must be positive, got {0}"
                             .format(E))
    _check_nu(nu)
    return E * nu / ((1 + nu) * (1 - 2 * nu)), E / (2 * (1 + nu))


def poisson_ratio(lam, mu):
    return lam / (2 * (lam + mu))


def youngs_modulus(lam, mu):
    return mu * (3 * lam + 2 * mu) / (lam + mu)


def pwave_modulus(mu, nu):
    """Return the p-wave modulus M = 2μ(1 − ν)/(1 − 2ν).

    Raises:
        InvalidModulus: If ``mu <= 0`` or `nu` is outside [0, 0.5)
    """
    _check_nu(nu)
    if not mu > 0:
        raise InvalidModulus("Shear modulus must be positive, got {0}"
                             .format(mu))
    return 2 * mu * (1 - nu) / (1 - 2 * nu)


class PhaseMaterial(object):

    """
    The moduli of one phase.

    Arguments:
        mu (ScalarField | float): Shear modulus
        nu (float): Poisson's ratio, constant over the phase
    """

    def __init__(self, mu, nu):
        _check_nu(nu)
        self.mu = as_field(mu)
        self.nu = float(nu)
        self.lambda_factor = 2 * self.nu / (1 - 2 * self.nu)

    def __repr__(self):
        return "PhaseMaterial(mu={0!r}, nu={1})".format(self.mu, self.nu)

    def mu_fn(self, x, y, z):
        return self.mu.value(x, y, z)

    def mu_grad_fn(self, x, y, z):
        return self.mu.gradient(x, y, z)

    def lambda_fn(self, x, y, z):
        return self.lambda_factor * self.mu.value(x, y, z)

    def lambda_grad_fn(self, x, y, z):
        return self.lambda_factor * self.mu.gradient(x, y, z)

    def pwave_fn(self, x, y, z):
        return (self.lambda_factor + 2) * self.mu.value(x, y, z)


class MaterialField(object):

    """The materials of the plus and minus phases."""

    def __init__(self, plus, minus):
        self.plus = plus
        self.minus = minus

    def phase(self, phase):
        if phase in (PLUS, True):
            return self.plus
        if phase in (MINUS, False):
            return self.minus
        raise ValueError("Unknown phase {0!r}".format(phase))


def evaluate(material_field, point, phase):
    """Return ``(lambda, mu, grad_lambda, grad_mu)`` of `phase` at `point`.

    The requested phase is used whatever side of the interface
    `point` lies on. `point` may hold coordinate arrays.
    """
    material = material_field.phase(phase)
    x, y, z = point
    mu = material.mu_fn(x, y, z)
    grad_mu = material.mu_grad_fn(x, y, z)
    return (material.lambda_factor * mu, mu,
            material.lambda_factor * grad_mu, grad_mu)
