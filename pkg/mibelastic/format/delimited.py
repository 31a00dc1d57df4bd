# -*- coding: utf-8 -*-

"""
Write error reports in delimited-fields formats.

This module contains report writers for CSV (comma-separated values)
and TSV (tab-separated values). Both write one row per report with
the columns of :data:`mibelastic.harness.ERROR_COLUMNS`; floats are
written with `repr` so that reading a file back gives the same
values, and orders are left blank for the first grid of a sweep.
"""




import csv
import io

from mibelastic.harness import ERROR_COLUMNS
from mibelastic.report import ReportWriter


__all__ = ['ReportWriterDelimited',
           'ReportWriterCSV',
           'ReportWriterTSV']


class ReportWriterDelimited(ReportWriter):

    """
    Write error reports in a delimited-fields format.

    The base class of the actual delimited writers.

    The writer uses the following options (in `_option_defaults`) in
    addition to those specified in :class:`ReportWriter`:
        delimiter (str): The delimiter with which to separate fields
        show_field_headings (bool): Whether to write the header row
    """

    _option_defaults = {
        "delimiter": ",",
        "show_field_headings": "True",
        }

    def __init__(self, **kwargs):
        super(ReportWriterDelimited, self).__init__(**kwargs)

    def _format_content(self, reports, fields):
        output = io.StringIO()
        writer = csv.writer(output, delimiter=self.get_option("delimiter"),
                            lineterminator=self.get_option("newline"))
        for row in self._format_rows(reports):
            writer.writerow(row)
        return output.getvalue()

    def _format_rows(self, reports):
        """Return the header row (if shown) and a row per report."""
        rows = []
        if self.get_option_bool("show_field_headings"):
            rows.append(list(ERROR_COLUMNS))
        for error_report in reports:
            values = error_report.as_row()
            rows.append([self._format_value(values[column])
                         for column in ERROR_COLUMNS])
        return rows

    def _format_value(self, value):
        if value is None:
            return ""
        if isinstance(value, float):
            return self._format_float(value)
        return str(value)


class ReportWriterCSV(ReportWriterDelimited):

    """Write error reports as comma-separated values."""

    formats = ["csv"]
    mime_type = "text/csv"
    filename_extension = ".csv"

    def __init__(self, **kwargs):
        super(ReportWriterCSV, self).__init__(**kwargs)


class ReportWriterTSV(ReportWriterDelimited):

    """Write error reports as tab-separated values."""

    formats = ["tsv"]
    mime_type = "text/tsv"
    filename_extension = ".tsv"

    _option_defaults = {
        "delimiter": "\t",
        }

    def __init__(self, **kwargs):
        super(ReportWriterTSV, self).__init__(**kwargs)
