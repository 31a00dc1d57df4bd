# -*- coding: utf-8 -*-

"""
Command-line interface of the manufactured-solution harness.

Subcommands:

    solve      Solve one catalog case on one grid
    converge   Solve one catalog case on a sequence of grids
    list       List the catalog
    reference  Print the published errors of a catalog case

Exit codes: 0 on success, 1 on solver non-convergence or a pipeline
failure, 2 on usage or configuration errors.
"""




import argparse
import logging
import sys

from mibelastic import harness, reference, report
from mibelastic.errors import (ConfigError, InvalidGrid, MibError,
                               UnknownCase, UnknownFormat)
from mibelastic.problems import catalog_entries, manufactured_case
from mibelastic.settings import Settings


__all__ = ['main']


EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

_USAGE_ERRORS = (ConfigError, InvalidGrid, UnknownCase, UnknownFormat)


def _number_list(type_):
    def parse(value):
        try:
            return [type_(item) for item in value.split(",") if item.strip()]
        except ValueError:
            raise argparse.ArgumentTypeError(
                "expected comma-separated numbers, got '{0}'".format(value))
    return parse


def _make_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH",
                        help="key=value configuration override file")
    common.add_argument("--tol", type=float,
                        help="relative residual at which BiCGStab stops")
    common.add_argument("--max-iter", type=int,
                        help="BiCGStab iteration cap")
    common.add_argument("--log-level", help="logging level name")

    case = argparse.ArgumentParser(add_help=False)
    case.add_argument("--example", type=int, required=True)
    case.add_argument("--case", type=int, default=1)

    parser = argparse.ArgumentParser(
        prog="mibelastic",
        description="MIB solver for three-dimensional elasticity"
        " interface problems")
    commands = parser.add_subparsers(dest="command")
    commands.required = True

    solve = commands.add_parser("solve", parents=[common, case],
                                help="solve a catalog case on one grid")
    size = solve.add_mutually_exclusive_group(required=True)
    size.add_argument("--n", type=int, help="nodes per direction")
    size.add_argument("--grid-size", type=float,
                      help="grid size, converted per direction")
    solve.add_argument("--out", metavar="FIELDS.vtk",
                       help="write the solution and its error")
    solve.add_argument("--errors", metavar="ERR.csv",
                       help="write the error report")

    converge = commands.add_parser(
        "converge", parents=[common, case],
        help="solve a catalog case on a sequence of grids")
    grids = converge.add_mutually_exclusive_group()
    grids.add_argument("--grids", type=_number_list(int),
                       help="comma-separated node counts")
    grids.add_argument("--grid-sizes", type=_number_list(float),
                       help="comma-separated grid sizes")
    converge.add_argument("--out", metavar="CONV.csv",
                          help="write the error reports")

    commands.add_parser("list", parents=[common], help="list the catalog")
    commands.add_parser("reference", parents=[common, case],
                        help="print the published errors of a case")
    return parser


def _settings(args):
    overrides = {"tolerance": args.tol, "max_iterations": args.max_iter,
                 "log_level": args.log_level}
    if args.config:
        return Settings.from_file(args.config, **overrides)
    return Settings(options=overrides)


def _setup_logging(settings):
    log_file = settings.get_option("log_file") or None
    logging.basicConfig(filename=log_file, level=settings.get_log_level(),
                        format="%(asctime)s %(levelname)s %(message)s")


def _print_table(reports, stream):
    stream.write(report.make_writer("text").make_content(reports=reports))


def _write(path, settings, **content):
    report.writer_for_path(
        path, default_format=settings.get_option("report_format")).write(
            path, **content)


def _solve(args, settings, stream):
    problem = harness.apply_settings(
        manufactured_case(args.example, args.case), settings)
    grid = args.n if args.n is not None else args.grid_size
    fields, errors, solve_report = harness.run_solve(
        problem, problem.node_counts(grid), settings, grid_label=grid)
    _print_table([errors], stream)
    if args.errors:
        _write(args.errors, settings, reports=[errors])
    if args.out:
        harness.write_field_vtk(fields, fields.grid, args.out)
    if not solve_report.converged:
        logging.error("solver did not converge: %s", solve_report.failure)
        return EXIT_FAILURE
    return EXIT_OK


def _converge(args, settings, stream):
    problem = manufactured_case(args.example, args.case)
    reports = harness.converge(problem, args.grids or args.grid_sizes,
                               settings)
    _print_table(reports, stream)
    if args.out:
        _write(args.out, settings, reports=reports)
    if not all(errors.converged for errors in reports):
        logging.error("solver did not converge on every grid")
        return EXIT_FAILURE
    return EXIT_OK


def _list(args, settings, stream):
    for example, case in catalog_entries():
        problem = manufactured_case(example, case)
        stream.write("{0:<6} {1:<20} [{2}] x [{3}]  {4}: {5}\n".format(
            problem.label, problem.shape.shape_id,
            ", ".join("{0:g}".format(value) for value in problem.bounds_min),
            ", ".join("{0:g}".format(value) for value in problem.bounds_max),
            problem.grid_kind,
            ", ".join("{0:g}".format(grid) for grid in problem.grids)))
    return EXIT_OK


def _reference(args, settings, stream):
    problem = manufactured_case(args.example, args.case)
    table = reference.published_table(args.example, args.case)
    reports = []
    for (grid, linf), (_, l2) in zip(table["linf"], table["l2"]):
        node_counts = problem.node_counts(grid)
        h = max((upper - lower) / (count - 1) for lower, upper, count
                in zip(problem.bounds_min, problem.bounds_max, node_counts))
        errors = harness.ErrorReport(linf, l2, node_counts, h,
                                     args.example, args.case, grid=grid)
        if reports:
            errors.with_previous(reports[-1])
        reports.append(errors)
    _print_table(reports, stream)
    return EXIT_OK


_COMMANDS = {
    "solve": _solve,
    "converge": _converge,
    "list": _list,
    "reference": _reference,
    }


def main(argv=None, stream=None):
    """Run the command line `argv` and return the exit code."""
    stream = stream or sys.stdout
    try:
        args = _make_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if not e.code else EXIT_USAGE
    try:
        settings = _settings(args)
        _setup_logging(settings)
        return _COMMANDS[args.command](args, settings, stream)
    except _USAGE_ERRORS as e:
        logging.error("%s", e)
        sys.stderr.write("mibelastic: {0}\n".format(e))
        return EXIT_USAGE
    except MibError as e:
        logging.error("%s", e)
        sys.stderr.write("mibelastic: {0}{1}\n".format(
            "{0} stage: ".format(e.stage) if e.stage else "", e))
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
