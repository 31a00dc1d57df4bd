# -*- coding: utf-8 -*-

"""
Write solution fields as legacy VTK structured points.

The file is ASCII ``STRUCTURED_POINTS`` with the point data scalars
``u1``, ``u2``, ``u3`` (numeric displacement) and ``err1``, ``err2``,
``err3`` (numeric minus exact). Points are listed with x varying
fastest, then y, then z.
"""




import numpy as np

from mibelastic.report import ReportWriter


__all__ = ['ReportWriterVTK']


class ReportWriterVTK(ReportWriter):

    """
    Write solution fields as a legacy VTK file.

    The writer uses the following options in addition to those of
    :class:`ReportWriter`:
        version: The VTK file format version in the first line
        scalar_type: VTK data type of the scalars
    """

    formats = ["vtk"]
    mime_type = "application/octet-stream"
    filename_extension = ".vtk"

    _option_defaults = {
        "float_format": "{0:.10e}",
        "version": "3.0",
        "scalar_type": "double",
        }

    def __init__(self, **kwargs):
        super(ReportWriterVTK, self).__init__(**kwargs)

    def _format_content(self, reports, fields):
        grid = fields.grid
        newline = self.get_option("newline")
        nx, ny, nz = grid.node_counts
        lines = [
            "# vtk DataFile Version {0}".format(self.get_option("version")),
            fields.title.replace("\n", " ")[:255],
            "ASCII",
            "DATASET STRUCTURED_POINTS",
            "DIMENSIONS {0} {1} {2}".format(nx, ny, nz),
            "ORIGIN {0} {1} {2}".format(*[repr(float(value))
                                          for value in grid.bounds_min]),
            "SPACING {0} {1} {2}".format(*[repr(float(value))
                                           for value in grid.spacing]),
            "POINT_DATA {0}".format(grid.num_nodes),
            ]
        error = fields.error
        for name, values in (
                [("u{0}".format(comp + 1), fields.numeric[comp])
                 for comp in range(3)]
                + [("err{0}".format(comp + 1), error[comp])
                   for comp in range(3)]):
            lines.append("SCALARS {0} {1} 1".format(
                name, self.get_option("scalar_type")))
            lines.append("LOOKUP_TABLE default")
            lines.extend(self._format_float(value)
                         for value in self._point_order(values))
        return newline.join(lines) + newline

    def _point_order(self, values):
        """Flatten nodal `values` indexed ``[i, j, k]`` x-fastest."""
        return np.transpose(values, (2, 1, 0)).ravel()
