# -*- coding: utf-8 -*-

"""
Modules for writing error reports and solution fields in various formats.

This subpackage contains modules with classes that subclass
:class:`mibelastic.report.ReportWriter` and extend or override
attributes and methods as necessary. Writers are found by format name
with :func:`mibelastic.report.find_writer_class`.
"""
