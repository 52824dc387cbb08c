# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""Brute-force ground truth, recomputed from definitions.

Nothing here imports the matroid, lattice or invariant modules: every
count is an exhaustive enumeration over the raw input structures, so the
results can be compared against those modules.
"""

from __future__ import annotations

import hashlib
import time
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from itertools import product

import networkx as nx

from hodgematroid.bitsets import Subset, full, members, popcount, subsets_of
from hodgematroid.constants import COLORING_LIMIT, CORPUS_GROUND, TORUS_LIMIT
from hodgematroid.exceptions import BadParameters, TooLarge
from hodgematroid.structures import FiniteFieldMatrix, Graph

Independence = Callable[[Subset], bool]


@dataclass(frozen=True)
class OracleResult:
    """One oracle evaluation, keyed by a digest of its inputs."""

    name: str
    digest: str
    value: int | tuple[int, ...]
    runtime: float

    def to_json(self) -> dict[str, object]:
        value = list(self.value) if isinstance(self.value, tuple) else (
            self.value
        )
        return {"name": self.name, "digest": self.digest, "value": value}


def _digest(*parts: object) -> str:
    return hashlib.sha256(repr(parts).encode("utf-8")).hexdigest()[:16]


def _timed(
    name: str, inputs: tuple[object, ...], compute: Callable[[], int]
) -> OracleResult:
    start = time.perf_counter()
    value = compute()
    return OracleResult(
        name, _digest(name, *inputs), value, time.perf_counter() - start
    )


def _row_space(m: FiniteFieldMatrix) -> set[tuple[int, ...]]:
    p = m.prime
    if p ** m.height > TORUS_LIMIT:
        raise TooLarge(
            f"{p}^{m.height} row combinations exceed {TORUS_LIMIT}"
        )
    space = set()
    for x in product(range(p), repeat=m.height):
        space.add(
            tuple(
                sum(c * row[j] for c, row in zip(x, m.rows)) % p
                for j in range(m.width)
            )
        )
    return space


def torus_point_count(m: FiniteFieldMatrix) -> OracleResult:
    """Vectors of the row space with every coordinate nonzero.

    Raises:
        TooLarge: If ``p^rows`` exceeds the enumeration limit.
    """

    def compute() -> int:
        return sum(1 for v in _row_space(m) if all(v))

    return _timed("torus_point_count", (m,), compute)


def projective_torus_point_count(m: FiniteFieldMatrix) -> OracleResult:
    """Torus points of the projectivized row space: lines through the
    origin whose nonzero vectors avoid every coordinate hyperplane."""

    def compute() -> int:
        count = sum(1 for v in _row_space(m) if all(v))
        return count // (m.prime - 1)

    return _timed("projective_torus_point_count", (m,), compute)


def proper_colorings(g: Graph, q: int) -> OracleResult:
    """Maps from vertices to ``q`` colours with distinct colours on the
    ends of every edge.

    Raises:
        TooLarge: If ``q^vertices`` exceeds the enumeration limit.
    """
    if q < 0:
        raise BadParameters("the number of colours must be non-negative")
    if q ** g.vertices > COLORING_LIMIT:
        raise TooLarge(f"{q}^{g.vertices} colourings exceed {COLORING_LIMIT}")

    def compute() -> int:
        return sum(
            1
            for colors in product(range(q), repeat=g.vertices)
            if all(colors[u] != colors[v] for u, v in g.edges)
        )

    return _timed("proper_colorings", (g, q), compute)


def component_count(g: Graph) -> int:
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(g.vertices))
    graph.add_edges_from(g.edges)
    return nx.number_connected_components(graph)


# -- independence by definition --------------------------------------------


def matrix_independence(m: FiniteFieldMatrix) -> Independence:
    """Columns are independent when no nonzero coefficient vector over
    ``Z/p`` combines them to zero."""
    p = m.prime

    def independent(s: Subset) -> bool:
        columns = [m.column(j) for j in members(s)]
        for coefficients in product(range(p), repeat=len(columns)):
            if not any(coefficients):
                continue
            if all(
                sum(c * col[i] for c, col in zip(coefficients, columns)) % p
                == 0
                for i in range(m.height)
            ):
                return False
        return True

    return independent


def graph_independence(g: Graph) -> Independence:
    """Edge sets are independent when they form a forest."""

    def independent(s: Subset) -> bool:
        graph = nx.MultiGraph()
        graph.add_edges_from(g.edges[k] for k in members(s))
        return nx.is_forest(graph) if graph.number_of_edges() else True

    return independent


def bases_independence(bases: Sequence[Subset]) -> Independence:
    """Subsets of some basis."""
    family = list(bases)

    def independent(s: Subset) -> bool:
        return any(s & b == s for b in family)

    return independent


def brute_rank_oracle(n: int, independent: Independence) -> list[int]:
    """``rank[s]`` for every subset, as the largest independent subset."""
    if n > CORPUS_GROUND:
        raise TooLarge(f"brute force is limited to n <= {CORPUS_GROUND}")
    free = [independent(s) for s in range(1 << n)]
    return [
        max(popcount(t) for t in subsets_of(s) if free[t])
        for s in range(1 << n)
    ]


def brute_flat_oracle(n: int, independent: Independence) -> list[Subset]:
    """Sets whose rank rises when any outside element is added."""
    rank = brute_rank_oracle(n, independent)
    everything = full(n)
    return sorted(
        s
        for s in range(1 << n)
        if all(
            rank[s | 1 << e] > rank[s] for e in members(everything & ~s)
        )
    )


def brute_closure_oracle(
    n: int, independent: Independence
) -> list[Subset]:
    """``closure[s]``: elements whose addition keeps the rank of ``s``."""
    rank = brute_rank_oracle(n, independent)
    return [
        s | sum(1 << e for e in range(n) if rank[s | 1 << e] == rank[s])
        for s in range(1 << n)
    ]
