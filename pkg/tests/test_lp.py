# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""Tests for the exact linear programming layer."""

from fractions import Fraction

from hodgematroid.lp import maximize


def test_bounded_problem() -> None:
    """max x + y with x + 2y <= 4, 3x + y <= 6, x, y >= 0."""
    result = maximize(
        [1, 1],
        inequalities=[([1, 2], 4), ([3, 1], 6)],
        nonnegative=[0, 1],
    )
    assert result.status == "optimal"
    assert result.value == Fraction(14, 5)
    assert result.solution == (Fraction(8, 5), Fraction(6, 5))
    assert result.feasible


def test_free_variables() -> None:
    """Free variables may go negative."""
    result = maximize([-1], inequalities=[([-1], 3)])
    assert result.status == "optimal"
    assert result.value == 3
    assert result.solution == (Fraction(-3),)


def test_equalities() -> None:
    """Equality constraints pin the solution."""
    result = maximize(
        [0, 1],
        equalities=[([1, 1], 2), ([1, -1], 0)],
    )
    assert result.status == "optimal"
    assert result.solution == (1, 1)


def test_infeasible() -> None:
    """x >= 0 and x <= -1 have no common point."""
    result = maximize([1], inequalities=[([1], -1)], nonnegative=[0])
    assert result.status == "infeasible"
    assert not result.feasible
    assert result.value is None


def test_unbounded() -> None:
    """Nothing stops x from growing."""
    result = maximize([1], nonnegative=[0])
    assert result.status == "unbounded"
    assert result.feasible


def test_degenerate_redundant_equalities() -> None:
    """Repeated equalities do not make the problem infeasible."""
    result = maximize(
        [1, 0],
        equalities=[([1, 1], 1), ([2, 2], 2)],
        nonnegative=[0, 1],
    )
    assert result.status == "optimal"
    assert result.value == 1
