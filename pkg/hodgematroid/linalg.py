# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""Exact linear algebra over Z and Q.

Matrices are lists of rows of `Fraction` (or int) entries. Rank,
nullspace, row reduction and determinants go through sympy's
`DomainMatrix`; only the signature of a symmetric form is computed here,
by congruence diagonalization.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from typing import Any, TypeAlias

from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_form

Scalar: TypeAlias = int | Fraction
Matrix: TypeAlias = list[list[Fraction]]


def _qq(rows: Sequence[Sequence[Scalar]], width: int) -> DomainMatrix:
    entries = [
        [QQ(int(Fraction(v).numerator), int(Fraction(v).denominator))
         for v in row]
        for row in rows
    ]
    return DomainMatrix(entries, (len(entries), width), QQ)


def _zz(rows: Sequence[Sequence[Scalar]], width: int) -> DomainMatrix:
    entries = [[ZZ(int(v)) for v in row] for row in rows]
    return DomainMatrix(entries, (len(entries), width), ZZ)


def _fraction(value: Any) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def _width(rows: Sequence[Sequence[Scalar]], width: int | None) -> int:
    if width is not None:
        return width
    return len(rows[0]) if rows else 0


def rank(rows: Sequence[Sequence[Scalar]], width: int | None = None) -> int:
    """Rank over Q."""
    w = _width(rows, width)
    if not rows or w == 0:
        return 0
    return int(_qq(rows, w).rank())


def nullspace(
    rows: Sequence[Sequence[Scalar]], width: int | None = None
) -> Matrix:
    """A basis of ``{x : A x = 0}`` over Q, one vector per entry."""
    w = _width(rows, width)
    if w == 0:
        return []
    if not rows:
        return [
            [Fraction(int(i == j)) for j in range(w)] for i in range(w)
        ]
    basis = _qq(rows, w).nullspace()
    return [[_fraction(v) for v in row] for row in basis.to_list()]


def pivot_columns(
    rows: Sequence[Sequence[Scalar]], width: int | None = None
) -> list[int]:
    """Columns that form a basis of the column space, leftmost first."""
    w = _width(rows, width)
    if not rows or w == 0:
        return []
    _, pivots = _qq(rows, w).rref()
    return list(pivots)


def solve(
    columns: Sequence[Sequence[Scalar]],
    target: Sequence[Scalar],
) -> list[Fraction] | None:
    """Find ``x`` with ``sum_j x_j columns[j] == target``, or None.

    Any solution is returned when several exist.
    """
    height = len(target)
    if not columns:
        return [] if all(v == 0 for v in target) else None
    augmented = [
        [columns[j][i] for j in range(len(columns))] + [target[i]]
        for i in range(height)
    ]
    if height == 0:
        return [Fraction(0)] * len(columns)
    reduced, pivots = _qq(augmented, len(columns) + 1).rref()
    if len(columns) in pivots:
        return None
    table = reduced.to_list()
    x = [Fraction(0)] * len(columns)
    for i, c in enumerate(pivots):
        x[c] = _fraction(table[i][-1]) / _fraction(table[i][c])
    return x


def determinant(rows: Sequence[Sequence[Scalar]]) -> Fraction:
    """Determinant over Q; the empty matrix has determinant 1."""
    if not rows:
        return Fraction(1)
    return _fraction(_qq(rows, len(rows)).det())


def smith_diagonal(rows: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors of an integer matrix."""
    w = _width(rows, None)
    if not rows or w == 0:
        return []
    form = smith_normal_form(_zz(rows, w)).to_dense().to_list()
    diagonal = [int(form[i][i]) for i in range(min(len(rows), w))]
    return [abs(d) for d in diagonal if d]


def transpose(rows: Sequence[Sequence[Scalar]], width: int) -> Matrix:
    return [[Fraction(row[j]) for row in rows] for j in range(width)]


def multiply(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]],
             width: int) -> Matrix:
    """``a @ b`` where ``b`` has ``width`` columns."""
    return [
        [
            sum((Fraction(row[k]) * b[k][j] for k in range(len(b))),
                start=Fraction(0))
            for j in range(width)
        ]
        for row in a
    ]


def signature(gram: Sequence[Sequence[Scalar]]) -> tuple[int, int, int]:
    """``(n_plus, n_minus, n_zero)`` of a symmetric rational matrix.

    Symmetric Gaussian elimination; a zero pivot is replaced by a later
    nonzero diagonal entry or, failing that, by ``e_k + e_j`` for an
    off-diagonal partner ``j``.
    """
    a = [[Fraction(v) for v in row] for row in gram]
    n = len(a)
    plus = minus = zero = 0
    for k in range(n):
        if a[k][k] == 0:
            swap = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if swap is not None:
                a[k], a[swap] = a[swap], a[k]
                for row in a:
                    row[k], row[swap] = row[swap], row[k]
            else:
                partner = next(
                    (j for j in range(k + 1, n) if a[k][j] != 0), None
                )
                if partner is None:
                    zero += 1
                    continue
                for j in range(n):
                    a[k][j] += a[partner][j]
                for row in a:
                    row[k] += row[partner]
        pivot = a[k][k]
        if pivot > 0:
            plus += 1
        else:
            minus += 1
        for i in range(k + 1, n):
            f = a[i][k] / pivot
            if f:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
        for i in range(k + 1, n):
            a[k][i] = Fraction(0)
            a[i][k] = Fraction(0)
    return plus, minus, zero
