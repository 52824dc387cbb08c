# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""Plain input structures shared by the matroid constructors and oracles."""

from __future__ import annotations

from dataclasses import dataclass

from hodgematroid.exceptions import BadParameters, NotPrime


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Graph:
    """A finite multigraph; parallel edges and self-loops are allowed.

    Edge ``k`` of ``edges`` becomes element ``k`` of the graphic matroid.
    """

    vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.vertices < 0:
            raise BadParameters("vertex count must be non-negative")
        for u, v in self.edges:
            if not (0 <= u < self.vertices and 0 <= v < self.vertices):
                raise BadParameters(
                    f"edge {u}-{v} has an endpoint outside "
                    f"0..{self.vertices - 1}"
                )


@dataclass(frozen=True)
class FiniteFieldMatrix:
    """A matrix over the prime field Z/p, entries stored reduced."""

    prime: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not is_prime(self.prime):
            raise NotPrime(f"{self.prime} is not prime")
        widths = {len(row) for row in self.rows}
        if len(widths) > 1:
            raise BadParameters("matrix rows have different lengths")
        reduced = tuple(
            tuple(x % self.prime for x in row) for row in self.rows
        )
        object.__setattr__(self, "rows", reduced)

    @property
    def height(self) -> int:
        return len(self.rows)

    @property
    def width(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows)
