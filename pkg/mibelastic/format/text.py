# -*- coding: utf-8 -*-

"""
Write error reports as aligned plain-text tables.
"""




from mibelastic.report import ReportWriter


class ReportWriterText(ReportWriter):

    """
    Write error reports as plain-text tables.

    Handle the format types ``text`` and ``txt``.

    The content is a table of L-infinity errors followed by a table of
    L2 errors, each with a row per grid and an order column after each
    component, in the layout of published convergence tables::

        nx × ny × nz | L∞(u1) | Order | L∞(u2) | Order | L∞(u3) | Order

    The writer uses the following options in addition to those of
    :class:`ReportWriter`:
        order_format: Format string for orders
        column_sep: Separator between columns
    """

    formats = ["text", "txt"]
    mime_type = "text/plain"
    filename_extension = ".txt"

    _option_defaults = {
        "float_format": "{0:.2e}",
        "order_format": "{0:.2f}",
        "column_sep": " | ",
        }

    def __init__(self, **kwargs):
        super(ReportWriterText, self).__init__(**kwargs)

    def _format_content(self, reports, fields):
        newline = self.get_option("newline")
        tables = [self._format_table(reports, "L∞", "linf", "orders_linf"),
                  self._format_table(reports, "L2", "l2", "orders_l2")]
        return ((newline * 2).join(newline.join(table) for table in tables)
                + newline)

    def _format_table(self, reports, label, norm, orders):
        rows = [["nx × ny × nz"]]
        for comp in range(3):
            rows[0].extend(["{0}(u{1})".format(label, comp + 1), "Order"])
        for error_report in reports:
            row = [" × ".join(str(count)
                                   for count in error_report.node_counts)]
            report_orders = getattr(error_report, orders)
            for comp in range(3):
                row.append(self._format_float(getattr(error_report,
                                                      norm)[comp]))
                row.append(self.get_option("order_format").format(
                    report_orders[comp]) if report_orders else "")
            rows.append(row)
        widths = [max(len(row[col]) for row in rows)
                  for col in range(len(rows[0]))]
        return [self.get_option("column_sep").join(
                    value.ljust(width) for value, width in zip(row, widths))
                .rstrip()
                for row in rows]
