# -*- coding: utf-8 -*-

"""
Exception classes of the MIB elasticity solver.

All errors raised by the package derive from :class:`MibError`, so
that callers can catch the whole family at once.

:Date: 2026
"""




__all__ = ['MibError',
           'ConfigError',
           'InvalidGrid',
           'DegenerateNormal',
           'InvalidModulus',
           'DegenerateElimination',
           'NoViablePair',
           'DuplicateNodes',
           'StencilUnavailable',
           'SingularLocalSystem',
           'NothingToDisassociate',
           'Unresolvable',
           'MissingFictitious',
           'ZeroDiagonal',
           'Breakdown',
           'MaxIterations',
           'UnknownCase',
           'ShapeMismatch',
           'NonpositiveError',
           'IoError',
           'UnknownFormat']


class MibError(Exception):

    """An exception class for errors in solving elasticity interface problems."""

    stage = None


class ConfigError(MibError):

    """A malformed or unknown configuration setting."""

    pass


class InvalidGrid(MibError):

    """Grid bounds or node counts violating the grid preconditions."""

    pass


class DegenerateNormal(MibError):

    """An interface gradient too short to define a normal direction."""

    pass


class InvalidModulus(MibError):

    """An elastic modulus outside its admissible range."""

    pass


class DegenerateElimination(MibError):

    """An elimination pair whose combined interface conditions vanish."""

    pass


class NoViablePair(MibError):

    """No pair of derivative sets can be eliminated at an intersection."""

    pass


class DuplicateNodes(MibError):

    """Repeated nodes in a Lagrange stencil."""

    pass


class StencilUnavailable(MibError):

    """A one-sided stencil that would leave the grid or its phase."""

    pass


class SingularLocalSystem(MibError):

    """A local fictitious-value system too ill-conditioned to solve."""

    pass


class NothingToDisassociate(MibError):

    """No fictitious value in another context to reuse."""

    pass


class Unresolvable(MibError):

    """A fictitious value that no scheme can determine."""

    pass


class MissingFictitious(MibError):

    """An interface-crossing stencil reference without a table entry."""

    pass


class ZeroDiagonal(MibError):

    """A zero on the diagonal of a matrix to be Jacobi-preconditioned."""

    pass


class Breakdown(MibError):

    """A BiCGStab breakdown (rho or omega underflow)."""

    pass


class MaxIterations(MibError):

    """BiCGStab ran out of iterations before converging."""

    pass


class UnknownCase(MibError):

    """An example or case not in the manufactured-problem catalog."""

    pass


class ShapeMismatch(MibError):

    """Fields compared on different grids."""

    pass


class NonpositiveError(MibError):

    """A convergence order requested from a nonpositive error."""

    pass


class IoError(MibError):

    """Failure writing or reading a report file."""

    pass


class UnknownFormat(MibError):

    """No report writer for the requested format."""

    pass
