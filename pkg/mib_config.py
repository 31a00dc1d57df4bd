# -*- coding: utf-8 -*-

"""
Site configuration for the mibelastic solver and harness.

The values here are the defaults; a key=value file given with
``--config`` overrides the ones listed in
:class:`mibelastic.settings.Settings`.
"""


import logging


# Relative residual at which BiCGStab stops
TOLERANCE = 1e-10

# Maximum number of BiCGStab iterations, as a multiple of the system
# dimension
MAX_ITERATION_FACTOR = 10

# Restarts of BiCGStab from the current iterate when the recursive
# residual meets the tolerance but the recomputed one does not
BICGSTAB_RESTARTS = 5

# Largest accepted condition number of a local fictitious-value system
CONDITION_LIMIT = 1e12

# Nodes with |phi| below this multiple of the grid spacing count as
# lying in the minus phase
ON_INTERFACE_TOLERANCE = 1e-12

# Root acceptance for meshline intersections, relative to
# max(1, |phi| at the bracketing nodes)
ROOT_TOLERANCE = 1e-10

# Cap on bisection steps per intersection
BISECTION_MAX_STEPS = 200

# Interface gradients shorter than this are degenerate normals
GRADIENT_MIN_NORM = 1e-8

# Step of the central-difference interface gradient, as a multiple of
# the grid spacing
GRADIENT_STEP_FACTOR = 1e-6

# Relative size below which an elimination is considered degenerate
ELIMINATION_TOLERANCE = 1e-10

# Passes of the neighbor-combination scheme for cross-derivative
# fictitious values
NEIGHBOR_COMBINATION_PASSES = 3

# Number of worker threads for the local interface solves
PARALLEL_THREADS = 3

# Default report format for error tables written without a known
# filename extension
REPORT_FORMAT = "csv"

# Path to log file; None logs to standard error, use /dev/null to
# disable logging (e.g. /var/log/mibelastic/mib-YYYYMM.log)
LOG_FILE = None
# Log level: set to logging.DEBUG for also logging fallback decisions
# and solver progress, logging.WARNING for only warnings and errors,
# logging.CRITICAL to disable logging
LOG_LEVEL = logging.INFO
