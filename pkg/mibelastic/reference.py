# -*- coding: utf-8 -*-

"""
Published error tables of the manufactured catalog.

`PUBLISHED` maps ``(example, case)`` to the L-infinity and L2 errors of
the three displacement components per catalog grid. Grids are node
counts per direction or grid sizes, as given by `GRID_KINDS`. Values
are kept as printed, including a few cells that are inconsistent with
their neighbours (example 3); comparisons against them should use
order windows rather than single cells.
"""




__all__ = ['PUBLISHED',
           'GRID_KINDS',
           'published_table',
           'published_row',
           'compare']


GRID_KINDS = {
    1: "nodes", 2: "nodes", 3: "nodes", 4: "nodes", 5: "nodes",
    6: "size", 7: "nodes", 8: "nodes", 9: "nodes",
    10: "size", 11: "size", 12: "size",
    }


PUBLISHED = {
    (1, 1): {
        "linf": ((10, (6.70e-2, 6.31e-2, 5.68e-2)),
                 (20, (1.39e-2, 1.36e-2, 1.31e-2)),
                 (40, (2.72e-3, 2.94e-3, 2.69e-3)),
                 (80, (7.58e-4, 7.28e-4, 7.17e-4))),
        "l2": ((10, (1.30e-2, 1.29e-2, 1.30e-2)),
               (20, (3.20e-3, 3.20e-3, 3.15e-3)),
               (40, (8.34e-4, 8.39e-4, 8.27e-4)),
               (80, (2.25e-4, 2.25e-4, 2.23e-4))),
        },
    (1, 2): {
        "linf": ((10, (6.21e-2, 5.95e-2, 5.45e-2)),
                 (20, (1.55e-2, 1.55e-2, 1.53e-2)),
                 (40, (3.13e-3, 3.45e-3, 3.28e-3)),
                 (80, (8.19e-4, 7.89e-4, 7.88e-4))),
        "l2": ((10, (1.29e-2, 1.28e-2, 1.28e-2)),
               (20, (3.29e-3, 3.28e-3, 3.22e-3)),
               (40, (8.49e-4, 8.53e-4, 8.41e-4)),
               (80, (2.29e-4, 2.29e-4, 2.28e-4))),
        },
    (1, 3): {
        "linf": ((10, (6.70e-2, 6.31e-2, 5.68e-2)),
                 (20, (1.40e-2, 1.41e-2, 1.31e-2)),
                 (40, (2.72e-3, 2.39e-3, 2.69e-3)),
                 (80, (7.58e-4, 7.28e-4, 7.17e-4))),
        "l2": ((10, (1.30e-2, 1.29e-2, 1.30e-2)),
               (20, (3.19e-3, 3.20e-3, 3.15e-3)),
               (40, (8.34e-4, 8.39e-4, 8.27e-4)),
               (80, (2.25e-4, 2.24e-4, 2.23e-4))),
        },
    (2, 1): {
        "linf": ((10, (6.38e-2, 5.93e-2, 6.17e-2)),
                 (20, (1.35e-2, 1.33e-2, 1.35e-2)),
                 (40, (2.67e-3, 2.97e-3, 2.70e-3)),
                 (80, (6.28e-4, 6.52e-4, 5.91e-4))),
        "l2": ((10, (1.33e-2, 1.32e-2, 1.57e-2)),
               (20, (3.35e-3, 3.33e-3, 3.44e-3)),
               (40, (8.61e-4, 8.61e-4, 8.65e-4)),
               (80, (2.01e-4, 2.02e-4, 2.01e-4))),
        },
    (2, 2): {
        "linf": ((10, (5.87e-2, 5.59e-2, 5.93e-2)),
                 (20, (1.48e-2, 1.50e-2, 1.58e-2)),
                 (40, (3.00e-3, 3.47e-3, 3.30e-3)),
                 (80, (6.80e-4, 7.00e-4, 6.72e-4))),
        "l2": ((10, (1.33e-2, 1.32e-2, 1.62e-2)),
               (20, (3.42e-3, 3.40e-3, 3.55e-3)),
               (40, (8.73e-4, 8.75e-4, 8.89e-4)),
               (80, (2.02e-4, 2.02e-4, 2.13e-4))),
        },
    (2, 3): {
        "linf": ((10, (6.38e-2, 5.93e-2, 6.17e-2)),
                 (20, (1.35e-2, 1.33e-2, 1.35e-2)),
                 (40, (2.67e-3, 2.97e-3, 2.70e-3)),
                 (80, (6.28e-4, 6.52e-4, 5.91e-4))),
        "l2": ((10, (1.33e-2, 1.32e-2, 1.57e-2)),
               (20, (3.35e-3, 3.33e-3, 3.44e-3)),
               (40, (8.60e-4, 8.61e-4, 8.65e-4)),
               (80, (2.01e-4, 2.00e-4, 2.00e-4))),
        },
    (3, 1): {
        "linf": ((10, (3.96e-2, 5.23e-2, 3.16e-2)),
                 (20, (1.52e-2, 1.31e-2, 8.07e-2)),
                 (40, (2.82e-3, 3.45e-3, 1.90e-3)),
                 (80, (6.99e-4, 8.81e-4, 4.83e-4))),
        "l2": ((10, (1.16e-2, 1.45e-2, 6.72e-2)),
               (20, (3.54e-3, 3.96e-3, 1.86e-3)),
               (40, (8.61e-4, 1.08e-4, 4.78e-4)),
               (80, (2.23e-4, 2.86e-4, 1.26e-4))),
        },
    (3, 2): {
        "linf": ((10, (5.00e-2, 5.10e-2, 3.37e-2)),
                 (20, (1.26e-2, 1.37e-2, 8.01e-2)),
                 (40, (3.24e-3, 3.63e-3, 2.00e-3)),
                 (80, (7.73e-4, 9.98e-4, 5.15e-4))),
        "l2": ((10, (1.20e-2, 1.50e-2, 6.93e-3)),
               (20, (3.77e-3, 4.13e-3, 1.91e-3)),
               (40, (9.18e-4, 1.12e-4, 4.88e-4)),
               (80, (2.36e-4, 2.94e-4, 1.30e-4))),
        },
    (3, 3): {
        "linf": ((10, (3.97e-2, 5.23e-2, 3.16e-2)),
                 (20, (1.22e-2, 1.31e-2, 8.07e-2)),
                 (40, (2.82e-3, 3.45e-3, 1.90e-3)),
                 (80, (6.99e-4, 8.81e-4, 4.82e-4))),
        "l2": ((10, (1.16e-2, 1.45e-2, 7.72e-2)),
               (20, (3.24e-3, 3.96e-3, 1.86e-3)),
               (40, (8.61e-4, 1.08e-3, 4.78e-4)),
               (80, (2.23e-4, 2.86e-4, 1.26e-4))),
        },
    (4, 1): {
        "linf": ((20, (4.68e-3, 4.68e-3, 7.07e-3)),
                 (40, (1.16e-3, 1.17e-3, 1.74e-3)),
                 (80, (2.87e-4, 2.91e-4, 4.23e-4))),
        "l2": ((20, (1.04e-3, 1.04e-3, 1.58e-3)),
               (40, (2.61e-4, 2.62e-4, 3.86e-4)),
               (80, (6.69e-5, 6.77e-5, 9.77e-5))),
        },
    (5, 1): {
        "linf": ((20, (2.04e-1, 2.04e-1, 1.12e-1)),
                 (40, (4.14e-2, 4.05e-2, 2.34e-2)),
                 (80, (1.24e-2, 1.09e-2, 4.66e-3))),
        "l2": ((20, (4.54e-2, 4.52e-2, 1.87e-2)),
               (40, (1.12e-2, 1.10e-2, 4.40e-3)),
               (80, (2.92e-3, 2.90e-3, 1.12e-3))),
        },
    (6, 1): {
        "linf": ((0.5, (4.29e-2, 4.49e-2, 1.95e-2)),
                 (0.25, (9.04e-3, 9.46e-3, 4.97e-3)),
                 (0.125, (1.96e-3, 2.17e-3, 7.02e-3))),
        "l2": ((0.5, (4.12e-3, 4.96e-3, 2.35e-3)),
               (0.25, (9.90e-4, 1.11e-3, 4.10e-4)),
               (0.125, (2.11e-4, 2.38e-4, 7.68e-5))),
        },
    (7, 1): {
        "linf": ((10, (6.61e-2, 6.27e-2, 5.67e-2)),
                 (20, (1.37e-2, 1.34e-2, 1.31e-2)),
                 (40, (2.66e-3, 2.84e-3, 2.67e-3)),
                 (80, (7.41e-4, 7.15e-4, 7.26e-4))),
        "l2": ((10, (1.28e-2, 1.28e-2, 1.29e-2)),
               (20, (3.18e-3, 3.19e-3, 3.14e-3)),
               (40, (8.30e-4, 8.36e-4, 8.26e-4)),
               (80, (2.24e-4, 2.24e-4, 2.23e-4))),
        },
    (8, 1): {
        "linf": ((10, (1.85e-2, 1.85e-2, 3.14e-2)),
                 (20, (4.68e-3, 4.68e-3, 7.07e-3)),
                 (40, (1.15e-3, 1.17e-3, 1.74e-3)),
                 (80, (2.99e-4, 3.19e-4, 4.23e-4))),
        "l2": ((10, (4.16e-3, 4.16e-3, 7.47e-3)),
               (20, (1.04e-3, 1.04e-3, 1.58e-3)),
               (40, (2.63e-4, 2.64e-4, 3.92e-4)),
               (80, (6.82e-5, 7.07e-5, 1.00e-4))),
        },
    (9, 1): {
        "linf": ((20, (1.67e-1, 1.65e-1, 9.39e-2)),
                 (40, (4.20e-2, 5.36e-2, 2.66e-2)),
                 (80, (9.97e-3, 9.71e-3, 5.96e-3))),
        "l2": ((20, (4.27e-2, 4.26e-2, 1.78e-2)),
               (40, (1.10e-2, 1.09e-2, 4.48e-3)),
               (80, (2.80e-3, 2.78e-3, 1.08e-3))),
        },
    (10, 1): {
        "linf": ((0.6, (5.08e-2, 5.18e-2, 6.60e-2)),
                 (0.3, (1.39e-2, 1.41e-2, 1.74e-2)),
                 (0.15, (3.07e-3, 3.77e-3, 4.09e-3))),
        "l2": ((0.6, (5.86e-3, 6.11e-3, 9.44e-3)),
               (0.3, (1.51e-3, 1.61e-3, 2.55e-3)),
               (0.15, (3.77e-4, 3.96e-4, 6.69e-4))),
        },
    (11, 1): {
        "linf": ((0.48, (3.90e-2, 4.28e-2, 6.18e-2)),
                 (0.24, (9.92e-3, 1.01e-2, 1.19e-2)),
                 (0.12, (2.29e-3, 2.54e-3, 2.60e-3))),
        "l2": ((0.48, (5.91e-3, 6.37e-3, 7.44e-3)),
               (0.24, (1.36e-3, 1.48e-3, 1.88e-3)),
               (0.12, (3.25e-4, 3.60e-4, 4.06e-4))),
        },
    (12, 1): {
        "linf": ((0.12, (1.27e-3, 1.57e-3, 1.75e-2)),
                 (0.06, (2.08e-4, 3.98e-4, 1.76e-4)),
                 (0.03, (3.80e-5, 6.56e-5, 2.79e-5))),
        "l2": ((0.12, (3.71e-4, 1.67e-4, 3.57e-4)),
               (0.06, (3.79e-5, 4.47e-5, 3.76e-5)),
               (0.03, (7.67e-6, 1.07e-5, 6.08e-6))),
        },
    }
"""Published errors by ``(example, case)`` and norm (``linf``, ``l2``)."""


def published_table(example, case=1):
    """Return the published table of an entry, or None."""
    return PUBLISHED.get((int(example), int(case or 1)))


def published_row(example, case, grid):
    """Return ``{"linf": errors, "l2": errors}`` at `grid`, or None.

    `grid` is a node count or a grid size; sizes match to 1e-9.
    """
    table = published_table(example, case)
    if table is None:
        return None
    row = {}
    for norm in ("linf", "l2"):
        for label, errors in table[norm]:
            if abs(float(label) - float(grid)) < 1e-9:
                row[norm] = errors
    return row or None


def compare(report, factor=3.0):
    """Compare a computed report with its published row.

    Arguments:
        report (ErrorReport): Computed errors with `example`, `case`
            and `grid` set

    Keyword arguments:
        factor (float): Accepted ratio either way

    Returns:
        list[tuple]: ``(norm, component, computed, published, within)``
            per cell; empty if nothing was published for the grid
    """
    row = published_row(report.example, report.case, report.grid)
    if row is None:
        return []
    cells = []
    for norm, computed in (("linf", report.linf), ("l2", report.l2)):
        for comp, (value, published) in enumerate(zip(computed, row[norm])):
            within = published / factor <= value <= published * factor
            cells.append((norm, comp + 1, value, published, within))
    return cells
