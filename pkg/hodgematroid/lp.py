# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""Exact linear programming over the rationals.

A thin layer over sympy's simplex solver that speaks ``Fraction`` and
reports infeasible or unbounded problems as a status instead of raising.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, TypeAlias

from sympy import Matrix, Rational
from sympy.solvers.simplex import (
    InfeasibleLPError,
    UnboundedLPError,
    linprog,
)

logger = logging.getLogger(__name__)

Scalar: TypeAlias = int | Fraction
Constraint: TypeAlias = tuple[Sequence[Scalar], Scalar]
Status = Literal["optimal", "infeasible", "unbounded"]


@dataclass(frozen=True)
class LPResult:
    status: Status
    value: Fraction | None = None
    solution: tuple[Fraction, ...] | None = None

    @property
    def feasible(self) -> bool:
        return self.status != "infeasible"


def _rational(value: Scalar) -> Rational:
    value = Fraction(value)
    return Rational(value.numerator, value.denominator)


def _fraction(value: Rational) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def _system(
    constraints: Sequence[Constraint],
) -> tuple[Matrix | None, Matrix | None]:
    if not constraints:
        return None, None
    rows = [[_rational(v) for v in coeffs] for coeffs, _ in constraints]
    rhs = [[_rational(b)] for _, b in constraints]
    return Matrix(rows), Matrix(rhs)


def maximize(
    objective: Sequence[Scalar],
    *,
    equalities: Sequence[Constraint] = (),
    inequalities: Sequence[Constraint] = (),
    nonnegative: Sequence[int] = (),
) -> LPResult:
    """Maximize ``objective . x`` subject to linear constraints.

    Each equality ``(a, b)`` means ``a . x == b`` and each inequality
    ``(a, b)`` means ``a . x <= b``. Variables listed in ``nonnegative``
    are bounded below by zero; all others are free.
    """
    bounded = set(nonnegative)
    bounds = [
        (0, None) if j in bounded else (None, None)
        for j in range(len(objective))
    ]
    a, b = _system(inequalities)
    a_eq, b_eq = _system(equalities)
    # linprog minimizes
    cost = Matrix([[-_rational(c) for c in objective]])
    try:
        optimum, point = linprog(cost, a, b, a_eq, b_eq, bounds=bounds)
    except InfeasibleLPError:
        result = LPResult("infeasible")
    except UnboundedLPError:
        result = LPResult("unbounded")
    else:
        result = LPResult(
            "optimal",
            -_fraction(optimum),
            tuple(_fraction(v) for v in point),
        )
    logger.debug(
        "LP with %d variables and %d constraints: %s",
        len(objective),
        len(equalities) + len(inequalities),
        result.status,
    )
    return result
