# -*- coding: utf-8 -*-

"""
Write error reports as an Excel 97–2003 workbook (XLS).
"""




import io

import xlwt

import mibelastic.format.delimited as delimited


__all__ = ['ReportWriterExcel']


class ReportWriterExcel(delimited.ReportWriterDelimited):

    """
    Write error reports as an Excel 97–2003 workbook (XLS).

    The rows are those of the delimited writers; numbers are written
    as numeric cells and blank orders as empty cells.

    The writer uses the following option in addition to those of
    :class:`ReportWriterDelimited`:
        title: The worksheet name
    """

    mime_type = "application/vnd.ms-excel"
    filename_extension = ".xls"
    formats = ["xls", "excel"]

    _option_defaults = {
        "title": "errors",
        }

    def __init__(self, **kwargs):
        super(ReportWriterExcel, self).__init__(**kwargs)

    def _format_content(self, reports, fields):
        """Return the XLS file content (bytes) of `reports`."""
        workbook = xlwt.Workbook(encoding="utf-8")
        worksheet = workbook.add_sheet(self.get_option("title"))
        for rownum, row in enumerate(self._format_rows(reports)):
            for colnum, value in enumerate(row):
                worksheet.write(rownum, colnum, self._cell_value(value))
        output = io.BytesIO()
        workbook.save(output)
        return output.getvalue()

    def _cell_value(self, value):
        try:
            return int(value)
        except ValueError:
            pass
        try:
            return float(value)
        except ValueError:
            return value
