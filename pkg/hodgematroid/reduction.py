# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""Sparse integer row reduction with unit pivots.

This module is compiled with Cython when available (see ``setup.py``),
so it sticks to plain classes, dictionaries and sets.

Rows are ``{column: coefficient}`` dictionaries. The reducer keeps its
pivot rows in reduced echelon form: every pivot row has coefficient 1 on
its pivot and no entry on any other pivot column. As long as every pivot
is a unit the row operations are unimodular, so the quotient of Z^columns
by the row lattice is free on the non-pivot columns.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from fractions import Fraction
from typing import TypeAlias

Coefficient: TypeAlias = int | Fraction
Row: TypeAlias = dict[int, Coefficient]


class UnitPivotReducer:
    """Incremental reduced echelon form preferring unit pivots.

    Args:
        priority: ``priority[c]`` ranks column ``c`` as a pivot candidate;
            lower values become pivots first, ties go to the lower column.
    """

    __slots__ = ("priority", "rows", "users", "deferred", "integral")

    def __init__(self, priority: Sequence[int]) -> None:
        self.priority = priority
        self.rows: dict[int, Row] = {}
        self.users: dict[int, set[int]] = {}
        self.deferred: list[Row] = []
        self.integral = True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def is_pivot(self, column: int) -> bool:
        return column in self.rows

    def _reduce(self, row: Row) -> Row:
        for c in [c for c in row if c in self.rows]:
            f = row.get(c, 0)
            if f:
                _axpy(row, f, self.rows[c])
        return row

    def _choose(self, row: Row, unit_only: bool) -> int | None:
        best: int | None = None
        best_key: tuple[int, int] | None = None
        for c, v in row.items():
            if unit_only and v != 1 and v != -1:
                continue
            key = (self.priority[c], c)
            if best_key is None or key < best_key:
                best, best_key = c, key
        return best

    def _install(self, pivot: int, row: Row) -> None:
        lead = row[pivot]
        if lead == -1:
            row = {c: -v for c, v in row.items()}
        elif lead != 1:
            row = {c: Fraction(v) / lead for c, v in row.items()}
        for q in sorted(self.users.pop(pivot, ())):
            target = self.rows[q]
            f = target[pivot]
            for c, v in row.items():
                updated = target.get(c, 0) - f * v
                if updated:
                    if c not in target:
                        self.users.setdefault(c, set()).add(q)
                    target[c] = updated
                elif c in target:
                    del target[c]
                    if c != pivot:
                        self.users[c].discard(q)
        self.rows[pivot] = row
        for c in row:
            if c != pivot:
                self.users.setdefault(c, set()).add(pivot)

    def add(self, row: Mapping[int, Coefficient]) -> bool:
        """Add a relation; returns False when it reduced to zero."""
        reduced = self._reduce({c: v for c, v in row.items() if v})
        if not reduced:
            return False
        pivot = self._choose(reduced, unit_only=True)
        if pivot is None:
            self.deferred.append(reduced)
        else:
            self._install(pivot, reduced)
        return True

    def finish(self) -> None:
        """Settle deferred rows, falling back to rational pivots if needed.

        After a rational pivot the quotient may have torsion and
        ``integral`` becomes False.
        """
        progress = True
        while self.deferred and progress:
            progress = False
            pending, self.deferred = self.deferred, []
            for row in pending:
                reduced = self._reduce(row)
                if not reduced:
                    progress = True
                    continue
                pivot = self._choose(reduced, unit_only=True)
                if pivot is None:
                    self.deferred.append(reduced)
                else:
                    self._install(pivot, reduced)
                    progress = True
        while self.deferred:
            self.integral = False
            reduced = self._reduce(self.deferred.pop())
            if reduced:
                pivot = self._choose(reduced, unit_only=False)
                assert pivot is not None
                self._install(pivot, reduced)

    def normal_form(self, column: int) -> Row:
        """Express a column modulo the relations, on non-pivot columns."""
        row = self.rows.get(column)
        if row is None:
            return {column: 1}
        return {c: -v for c, v in row.items() if c != column}


def _axpy(target: Row, f: Coefficient, source: Row) -> None:
    """``target -= f * source``, dropping zero entries."""
    for c, v in source.items():
        updated = target.get(c, 0) - f * v
        if updated:
            target[c] = updated
        else:
            target.pop(c, None)
