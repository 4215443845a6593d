from fractions import Fraction

import pytest

from treepack.multigraph import GraphInputError
from treepack.thresholds import (bounds_report, f_threshold, format_table, high_branch,
                                 laili_threshold, low_branch, on_branch_boundary, uses_low_branch)


@pytest.mark.parametrize("m, k, f", [(3, 2, 10), (4, 3, 22), (5, 3, Fraction(29, 2))])
def test_f_values(m, k, f):
    assert f_threshold(m, k) == f
    assert isinstance(f_threshold(m, k), Fraction)


@pytest.mark.parametrize("m, k, h", [(3, 2, 7), (4, 3, 14), (5, 3, Fraction(21, 2))])
def test_laili_values(m, k, h):
    assert laili_threshold(m, k) == h


@pytest.mark.parametrize("m, k", [(2, 2), (4, 2), (3, 1), (6, 3)])
def test_parameter_range(m, k):
    with pytest.raises(GraphInputError):
        f_threshold(m, k)


def test_branch_choice_agrees_with_float_form():
    # the branch condition compares m - k with (1 + sqrt(8k+1)) / 4
    for k in range(2, 60):
        for m in range(k + 1, 2 * k):
            if on_branch_boundary(m, k):
                continue
            assert uses_low_branch(m, k) == (m - k < (1 + (8 * k + 1) ** 0.5) / 4)


def test_boundary_cases():
    hits = [(m, k) for k in range(2, 51) for m in range(k + 1, 2 * k) if on_branch_boundary(m, k)]
    assert hits == [(8, 6), (18, 15), (32, 28), (50, 45)]
    for m, k in hits:
        assert low_branch(m, k) == high_branch(m, k)


def test_f_is_the_right_branch():
    for k in range(2, 30):
        for m in range(k + 1, 2 * k):
            want = low_branch(m, k) if uses_low_branch(m, k) else high_branch(m, k)
            assert f_threshold(m, k) == want


def test_bounds_report_rows():
    (row,) = bounds_report(2)
    assert (row.m, row.f, row.laili) == (3, 10, 7) and row.f < 2 * row.laili
    rows = bounds_report(3)
    assert [(r.m, r.f, r.laili) for r in rows] == [(4, 22, 14), (5, Fraction(29, 2), Fraction(21, 2))]
    assert rows[1].as_dict()["f"] == "29/2"
    text = format_table(rows)
    assert "29/2" in text and len(text.splitlines()) == 3


def test_report_rejects_small_k():
    with pytest.raises(GraphInputError):
        bounds_report(1)
