# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""The lattice of flats and its incidence algebra.

Flats are addressed by their index in `Matroid.flats` (ordered by rank,
then mask), so index order is a linear extension of the lattice order.
Incidence functions are dictionaries keyed by ``(x, y)`` index pairs with
``x <= y``; missing pairs are zero.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from functools import cached_property
from typing import TypeAlias

from hodgematroid.bitsets import EMPTY, Subset, is_subset, members
from hodgematroid.exceptions import BadParameters
from hodgematroid.matroid import Matroid

Scalar: TypeAlias = int | Fraction
Incidence: TypeAlias = dict[tuple[int, int], Scalar]


class FlatLattice:
    """The graded lattice of flats of a matroid.

    Join and meet are computed on demand and memoized.
    """

    def __init__(self, matroid: Matroid) -> None:
        self.matroid = matroid
        self.flats: tuple[Subset, ...] = matroid.flats
        self.index = {flat: i for i, flat in enumerate(self.flats)}
        self.ranks = tuple(matroid.flat_rank(f) for f in self.flats)
        self.bottom = 0
        self.top = len(self.flats) - 1
        self._joins: dict[tuple[int, int], int] = {}

    def __len__(self) -> int:
        return len(self.flats)

    def leq(self, x: int, y: int) -> bool:
        return is_subset(self.flats[x], self.flats[y])

    @cached_property
    def up_sets(self) -> tuple[tuple[int, ...], ...]:
        """``up_sets[x]`` lists every ``y >= x`` in index order."""
        m = len(self.flats)
        return tuple(
            tuple(y for y in range(x, m) if self.leq(x, y)) for x in range(m)
        )

    @cached_property
    def covers(self) -> tuple[tuple[int, ...], ...]:
        """``covers[x]`` lists the flats covering ``x``."""
        return tuple(
            tuple(y for y in ups if self.ranks[y] == self.ranks[x] + 1)
            for x, ups in enumerate(self.up_sets)
        )

    def join(self, x: int, y: int) -> int:
        key = (x, y) if x <= y else (y, x)
        if key not in self._joins:
            union = self.flats[x] | self.flats[y]
            self._joins[key] = self.index[self.matroid.closure(union)]
        return self._joins[key]

    def meet(self, x: int, y: int) -> int:
        return self.index[self.flats[x] & self.flats[y]]

    def interval(self, x: int, y: int) -> list[int]:
        return [z for z in self.up_sets[x] if self.leq(z, y)]

    def rank_vector(self) -> list[int]:
        """Whitney numbers of the second kind, ``W_k``."""
        return [len(g) for g in self.matroid.flats_by_rank]


class MoebiusTable:
    """Möbius function of a `FlatLattice`, one memoized row per flat."""

    def __init__(self, lattice: FlatLattice) -> None:
        self.lattice = lattice
        self._rows: dict[int, dict[int, int]] = {}

    def row(self, x: int) -> dict[int, int]:
        """Return ``{y: mu(x, y)}`` for every ``y >= x``."""
        cached = self._rows.get(x)
        if cached is not None:
            return cached
        lattice = self.lattice
        values: dict[int, int] = {x: 1}
        for y in lattice.up_sets[x][1:]:
            values[y] = -sum(
                mu for z, mu in values.items() if lattice.leq(z, y)
            )
        self._rows[x] = values
        return values

    def value(self, x: int, y: int) -> int:
        return self.row(x).get(y, 0)

    def as_incidence(self) -> Incidence:
        table: Incidence = {}
        for x in range(len(self.lattice)):
            for y, mu in self.row(x).items():
                table[(x, y)] = mu
        return table


def flat_lattice(matroid: Matroid) -> FlatLattice:
    return FlatLattice(matroid)


def moebius(lattice: FlatLattice) -> MoebiusTable:
    return MoebiusTable(lattice)


def zeta(lattice: FlatLattice) -> Incidence:
    return {
        (x, y): 1
        for x, ups in enumerate(lattice.up_sets)
        for y in ups
    }


def delta(lattice: FlatLattice) -> Incidence:
    return {(x, x): 1 for x in range(len(lattice))}


def convolve(
    lattice: FlatLattice, phi: Incidence, psi: Incidence
) -> Incidence:
    """The incidence algebra product ``sum_{x<=z<=y} phi(x,z) psi(z,y)``.

    Zero entries are dropped from the result.
    """
    product: Incidence = {}
    for x, ups in enumerate(lattice.up_sets):
        for y in ups:
            total: Scalar = 0
            for z in ups:
                if z > y:
                    break
                a = phi.get((x, z), 0)
                if a and lattice.leq(z, y):
                    total += a * psi.get((z, y), 0)
            if total:
                product[(x, y)] = total
    return product


def zeta_transform(
    lattice: FlatLattice, f: Sequence[Scalar]
) -> list[Scalar]:
    """``g(x) = sum_{y >= x} f(y)``."""
    return [sum((f[y] for y in ups), start=0) for ups in lattice.up_sets]


def moebius_invert(
    lattice: FlatLattice,
    g: Sequence[Scalar],
    table: MoebiusTable | None = None,
) -> list[Scalar]:
    """Invert `zeta_transform`: ``f(x) = sum_{y >= x} mu(x, y) g(y)``."""
    table = table or MoebiusTable(lattice)
    return [
        sum((mu * g[y] for y, mu in table.row(x).items()), start=0)
        for x in range(len(lattice))
    ]


def weisner_check(
    lattice: FlatLattice, a: int, table: MoebiusTable | None = None
) -> bool:
    """Check that ``sum_{x : x v a = top} mu(bottom, x)`` vanishes.

    Raises:
        BadParameters: If ``a`` is the bottom flat.
    """
    if a == lattice.bottom:
        raise BadParameters("Weisner's identity needs a > bottom")
    table = table or MoebiusTable(lattice)
    row = table.row(lattice.bottom)
    total = sum(
        mu
        for x, mu in row.items()
        if lattice.join(x, a) == lattice.top
    )
    return total == 0


def moebius_sign_check(
    lattice: FlatLattice, table: MoebiusTable | None = None
) -> bool:
    """``(-1)^(rk y - rk x) mu(x, y) >= 0`` for every pair ``x <= y``."""
    table = table or MoebiusTable(lattice)
    ranks = lattice.ranks
    for x in range(len(lattice)):
        for y, mu in table.row(x).items():
            if (-1) ** (ranks[y] - ranks[x]) * mu < 0:
                return False
    return True


def descending_flag_count(
    matroid: Matroid,
    k: int,
    element_order: Sequence[int] | None = None,
    *,
    exclude_first: bool = True,
) -> int:
    """Count flags ``P_1 < ... < P_k`` of flats with ``rk(P_j) = j``.

    Writing ``inf(P)`` for the position of the first element of ``P`` in
    ``element_order``, the flags counted satisfy
    ``inf(P_1) > inf(P_2) > ... > inf(P_k)``, and also ``inf(P_k) > 0``
    when ``exclude_first`` is set (the first element of the order is
    never a minimum).
    """
    order = list(element_order) if element_order is not None else list(
        range(matroid.n)
    )
    if sorted(order) != list(range(matroid.n)):
        raise BadParameters("element order must be a permutation")
    if k == 0:
        return 1
    position = {e: i for i, e in enumerate(order)}
    floor = 0 if exclude_first else -1

    def inf(flat: Subset) -> int:
        return min(position[e] for e in members(flat))

    # ways[flat] = descending flags of length j ending at flat
    ways: dict[Subset, int] = {
        p: 1
        for p in matroid.flats_of_rank(1)
        if p != EMPTY and inf(p) > floor
    }
    for j in range(2, k + 1):
        extended: dict[Subset, int] = {}
        for q in matroid.flats_of_rank(j):
            top = inf(q)
            if top <= floor:
                continue
            count = sum(
                w for p, w in ways.items() if is_subset(p, q) and inf(p) > top
            )
            if count:
                extended[q] = count
        ways = extended
    return sum(ways.values())
