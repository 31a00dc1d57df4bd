# -*- coding: utf-8 -*-

"""
Tests for mibelastic.reference.
"""




import pytest

from mibelastic.harness import ErrorReport
from mibelastic.reference import (GRID_KINDS, PUBLISHED, compare,
                                  published_row, published_table)


def test_tables_are_complete():
    for (example, case), table in PUBLISHED.items():
        assert example in GRID_KINDS
        assert [grid for grid, _ in table["linf"]] == \
            [grid for grid, _ in table["l2"]]
        for norm in ("linf", "l2"):
            for _, errors in table[norm]:
                assert len(errors) == 3
                assert all(value > 0 for value in errors)


def test_published_table_lookup():
    assert published_table(1) is PUBLISHED[(1, 1)]
    assert published_table(4, 2) is None


def test_published_row():
    row = published_row(1, 1, 40)
    assert row["linf"] == (2.72e-3, 2.94e-3, 2.69e-3)
    assert row["l2"] == (8.34e-4, 8.39e-4, 8.27e-4)
    assert published_row(12, 1, 0.06)["linf"][0] == pytest.approx(2.08e-4)
    assert published_row(1, 1, 30) is None
    assert published_row(4, 2, 10) is None


def test_compare_within_factor():
    report = ErrorReport((1.39e-2, 4.0e-2, 1.31e-2),
                         (3.20e-3, 3.20e-3, 1.0e-3), (20, 20, 20), 6.0 / 19,
                         example=1, case=1, grid=20)
    cells = compare(report)
    assert len(cells) == 6
    within = dict(((norm, comp), ok) for norm, comp, _, _, ok in cells)
    assert within[("linf", 1)]
    assert within[("linf", 2)]
    assert not within[("l2", 3)]
    assert compare(report, factor=2.0)[1][4] is False


def test_compare_without_published_row():
    report = ErrorReport((1.0, 1.0, 1.0), (1.0, 1.0, 1.0), (30, 30, 30), 0.2,
                         example=1, case=1, grid=30)
    assert compare(report) == []
