# -*- coding: utf-8 -*-

"""
Write error reports in JSON.
"""




import json

from mibelastic.report import ReportWriter


__all__ = ['ReportWriterJSON']


class ReportWriterJSON(ReportWriter):

    """
    Write error reports in JSON.

    Handle the format type ``json``. The result is a list with an
    object per report, keyed by the error report columns; blank orders
    are ``null``.

    Options:
        sort_keys (bool): List the columns of each report record in
            alphabetical order instead of the order
            `ErrorReport.as_row` gives them
        indent (int): Spaces per nesting level of the report list; an
            empty value puts all records on one line
    """

    formats = ['json']
    mime_type = 'application/json'
    filename_extension = '.json'

    _option_defaults = {
        "sort_keys": "True",
        "indent": "4"
        }

    def __init__(self, **kwargs):
        super(ReportWriterJSON, self).__init__(**kwargs)

    def _format_content(self, reports, fields):
        """Convert the reports directly to JSON."""
        return (json.dumps([error_report.as_row() for error_report in reports],
                           sort_keys=self.get_option_bool("sort_keys"),
                           indent=self.get_option_int("indent"))
                + "\n")
