# -*- coding: utf-8 -*-

"""
Package for solving three-dimensional elasticity interface problems
with the matched interface and boundary (MIB) method.

This package contains the following modules:

- `grid`: Cartesian grids, phase maps and meshline intersections
- `shapes`: Implicit interface shapes
- `fields`: Analytic fields with exact derivatives
- `materials`: Lamé parameters of the two phases
- `jumps`: Interface jump conditions and their elimination
- `stencils`: Lagrange weights and interfacial derivative stencils
- `fictitious`: Fictitious values across the interface
- `assembly`: Finite-difference stencils and the global sparse system
- `solver`: Jacobi-preconditioned BiCGStab
- `problems`: The catalog of manufactured problems
- `reference`: Published error tables of the catalog
- `harness`: End-to-end solves, error norms and convergence sweeps
- `report`: Report writer base class and lookup
- `settings`: Run options
- `errors`: Exception classes
- `cli`: The command-line interface

The subpackage `format` contains the report writers, by subclassing
:class:`mibelastic.report.ReportWriter`.
"""
