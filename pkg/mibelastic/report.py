# -*- coding: utf-8 -*-

"""
Base class and lookup of report writers.

Report writers live in the modules of :mod:`mibelastic.format`. Each
subclasses :class:`ReportWriter`, names the formats it handles in
`formats` and overrides `_format_content`. :func:`find_writer_class`
finds the writer of a format name by scanning the subpackage, so new
formats need no registration.
"""




import importlib
import logging
import os.path
import pkgutil

import mib_config as config
from mibelastic.errors import IoError, UnknownFormat
from mibelastic.settings import OptionHolder


__all__ = ['ReportWriter',
           'find_writer_class',
           'make_writer',
           'writer_for_path']


class ReportWriter(OptionHolder):

    """
    The base class for writing error reports and solution fields.

    Subclasses override at least the following class attributes:

        formats (list[str]): The names of the formats (in lowercase)
            that the class handles
        mime_type (str): The MIME type of the output file
        filename_extension (str): The extension (including the dot) of
            the output file name

    and the method `_format_content`, which returns the file content
    as a string, or as bytes for binary formats.

    The `_option_defaults` contains the following keys:

        float_format: Format string for error values in text output;
            empty for `repr`
        newline: The character sequence for a newline
    """

    formats = []
    mime_type = "text/plain"
    filename_extension = ".txt"

    _option_defaults = {
        "float_format": "",
        "newline": "\n",
        }

    def __init__(self, **kwargs):
        super(ReportWriter, self).__init__(**kwargs)

    def make_content(self, reports=None, fields=None):
        """Return the formatted content for `reports` or `fields`.

        Arguments:
            reports (list[ErrorReport]): Error reports, in grid order
            fields (SolutionFields): Nodal displacements and errors
        """
        return self._format_content(reports=list(reports or []),
                                    fields=fields)

    def write(self, path, reports=None, fields=None):
        """Write the content for `reports` or `fields` to `path`.

        Raises:
            IoError: If the file cannot be written
        """
        content = self.make_content(reports=reports, fields=fields)
        if isinstance(content, bytes):
            mode, encoding = "wb", None
        else:
            mode, encoding = "w", "utf-8"
        try:
            with open(path, mode, encoding=encoding) as outfile:
                outfile.write(content)
        except (IOError, OSError) as e:
            raise IoError("Cannot write {0}: {1}".format(path, e))
        logging.info("wrote %s (%s)", path, self.formats[0])

    def _format_content(self, reports, fields):
        raise NotImplementedError

    def _format_float(self, value):
        if value is None:
            return ""
        float_format = self.get_option("float_format")
        if float_format:
            return float_format.format(value)
        return repr(float(value))


_WRITER_SUBPACKAGE = "format"
"""The `mibelastic` subpackage containing the writer modules"""


def find_writer_class(format_name):
    """Find the writer class for the format `format_name`.

    Searches the classes of the :mod:`mibelastic.format` modules and
    returns the first whose `formats` attribute contains
    `format_name`.

    Raises:
        UnknownFormat: If no writer handles `format_name`
    """
    format_name = format_name.lower()
    pkgpath = os.path.join(os.path.dirname(__file__), _WRITER_SUBPACKAGE)
    for _, module_name, _ in pkgutil.iter_modules([pkgpath]):
        module_path = "mibelastic.{0}.{1}".format(_WRITER_SUBPACKAGE,
                                                  module_name)
        try:
            module = importlib.import_module(module_path)
        except ImportError as e:
            logging.debug("skipping writer module %s: %s", module_path, e)
            continue
        for name in dir(module):
            module_class = getattr(module, name)
            if (isinstance(module_class, type)
                    and format_name in getattr(module_class, "formats", [])):
                return module_class
    raise UnknownFormat("No report writer found for format '{0}'"
                        .format(format_name))


def make_writer(format_name, **kwargs):
    """Return a writer instance for `format_name`."""
    return find_writer_class(format_name)(**kwargs)


def writer_for_path(path, format_name=None, default_format=None, **kwargs):
    """Return a writer for `path`, chosen by its extension.

    An explicit `format_name` wins; an unknown extension falls back to
    `default_format`, or to `REPORT_FORMAT` if that is not given.
    """
    default_format = default_format or config.REPORT_FORMAT
    if format_name is None:
        extension = os.path.splitext(path)[1].lstrip(".").lower()
        try:
            return make_writer(extension or default_format, **kwargs)
        except UnknownFormat:
            logging.debug("no writer for '%s', using %s", extension,
                          default_format)
            format_name = default_format
    return make_writer(format_name, **kwargs)

