# -*- coding: utf-8 -*-

"""
Run settings: defaults from :mod:`mib_config` with overrides.

This module contains :class:`OptionHolder`, a base for classes keeping
string options that are converted on access, and :class:`Settings`,
which holds the options of a solver run. Options come from the class
attribute `_option_defaults` (merged along the MRO), overridden by a
key=value configuration file and by keyword options.
"""




import logging

import mib_config as config
from mibelastic.errors import ConfigError


__all__ = ['OptionHolder',
           'Settings']


class OptionHolder(object):

    """
    Base class for holders of string options with typed getters.

    Subclasses override `_option_defaults` (dict); keys missing from a
    subclass are taken from its superclasses. In `bool` options, the
    strings ``false``, ``off``, ``no``, ``0`` (case-insensitively) and
    the empty string are interpreted as `False`.
    """

    _option_defaults = {}
    """Default values for options; subclasses can override individually."""

    _strict_options = False
    """Whether unknown option keys are rejected"""

    def __init__(self, **kwargs):
        """Construct with `kwargs["options"]` overriding the defaults.

        Raises:
            ConfigError: If `_strict_options` is set and an option key
                is not known
        """
        self._opts = {}
        self._opts.update(self._get_combined_values("_option_defaults"))
        options = dict((key.lower(), str(value))
                       for key, value in (kwargs.get("options") or {}).items()
                       if value is not None)
        unknown = set(options) - set(self._opts)
        if unknown and self._strict_options:
            raise ConfigError("Unknown configuration keys: {0}"
                              .format(", ".join(sorted(unknown))))
        self._opts.update(options)

    @classmethod
    def _get_combined_values(cls, attrname):
        """Get `attrname` values also containing inherited values.

        Values from classes earlier in the MRO override those later.
        """
        combined_values = {}
        # Skip the last class in MRO, since it is `object`.
        for superclass in reversed(cls.__mro__[:-1]):
            try:
                combined_values.update(getattr(superclass, attrname))
            except AttributeError:
                pass
        return combined_values

    def get_options(self):
        """Get the options in effect (a dict)."""
        return self._opts

    def get_option(self, optname, default=""):
        return self._opts.get(optname, default)

    def get_option_bool(self, optname):
        """Get the value of the Boolean option `optname`."""
        return (self._opts.get(optname, "").lower()
                not in ["false", "no", "off", "0", ""])

    def get_option_int(self, optname):
        """Get the integer option `optname`, or None if empty.

        Raises:
            ConfigError: If the value is not an integer
        """
        return self._convert(optname, int)

    def get_option_float(self, optname):
        """Get the float option `optname`, or None if empty.

        Raises:
            ConfigError: If the value is not a number
        """
        return self._convert(optname, float)

    def get_option_vector(self, optname):
        """Get the 3-vector option `optname` as a tuple, or None if empty.

        Raises:
            ConfigError: If the value is not three comma-separated
                numbers
        """
        value = self._opts.get(optname, "")
        if not value:
            return None
        try:
            vector = tuple(float(item) for item in value.split(","))
        except ValueError:
            vector = ()
        if len(vector) != 3:
            raise ConfigError("Option {0} must be three comma-separated"
                              " numbers, got '{1}'".format(optname, value))
        return vector

    def _convert(self, optname, type_):
        value = self._opts.get(optname, "")
        if value == "":
            return None
        try:
            return type_(value)
        except ValueError:
            raise ConfigError("Option {0} has invalid value '{1}'"
                              .format(optname, value))


class Settings(OptionHolder):

    """
    Options of a solver or harness run.

    Keys:
        tolerance (float): Relative residual at which BiCGStab stops
        max_iterations (int): Iteration cap; empty for
            `MAX_ITERATION_FACTOR` times the system dimension
        parallel_threads (int): Worker threads for local solves
        condition_limit (float): Largest accepted condition number of
            a local fictitious-value system
        bounds_min, bounds_max (vector): Domain bound overrides as
            comma-separated triples; empty for the catalog bounds
        log_level: Name of a `logging` level
        log_file: Path to the log file; empty for standard error
        report_format: Report format for unknown filename extensions
    """

    _option_defaults = {
        "tolerance": repr(config.TOLERANCE),
        "max_iterations": "",
        "parallel_threads": str(config.PARALLEL_THREADS),
        "condition_limit": repr(config.CONDITION_LIMIT),
        "bounds_min": "",
        "bounds_max": "",
        "log_level": logging.getLevelName(config.LOG_LEVEL),
        "log_file": config.LOG_FILE or "",
        "report_format": config.REPORT_FORMAT,
        }

    _strict_options = True

    @classmethod
    def from_file(cls, path, **options):
        """Read settings from the key=value file `path`.

        Arguments:
            path (str): Configuration file; blank lines and lines
                beginning with ``#`` are ignored

        Keyword arguments:
            **options: Further overrides applied after the file

        Returns:
            Settings: The combined settings

        Raises:
            ConfigError: If the file cannot be read or a line is not
                of the form key=value
        """
        file_options = {}
        try:
            with open(path) as config_file:
                for lineno, line in enumerate(config_file, 1):
                    line = line.strip()
                    if not line or line.startswith("#"):
                        continue
                    if "=" not in line:
                        raise ConfigError(
                            "{0}:{1}: expected key=value, got '{2}'"
                            .format(path, lineno, line))
                    key, value = line.split("=", 1)
                    file_options[key.strip().lower()] = value.strip()
        except (IOError, OSError) as e:
            raise ConfigError("Cannot read configuration file {0}: {1}"
                              .format(path, e))
        logging.debug("config file options: %s", file_options)
        file_options.update((key, value) for key, value in options.items()
                            if value is not None)
        return cls(options=file_options)

    def get_log_level(self):
        """Get the `logging` level named by option ``log_level``."""
        level = logging.getLevelName(self._opts["log_level"].upper())
        if not isinstance(level, int):
            raise ConfigError("Unknown log level '{0}'"
                              .format(self._opts["log_level"]))
        return level
