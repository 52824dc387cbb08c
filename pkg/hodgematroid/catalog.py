# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""Builtin matroids and the bundled corpus."""

from __future__ import annotations

import re
from importlib import resources

from hodgematroid.bitsets import full, popcount
from hodgematroid.constants import (
    CORPUS_GROUND,
    CORPUS_PACKAGE,
    CORPUS_SUFFIX,
)
from hodgematroid.exceptions import BadParameters
from hodgematroid.formats import MatroidSource, build_matroid, parse_source
from hodgematroid.matroid import (
    Matroid,
    matroid_from_graph,
    matroid_from_matrix,
)
from hodgematroid.structures import FiniteFieldMatrix, Graph

_UNIFORM = re.compile(r"^U\((\d+),\s*(\d+)\)$")
_BOOLEAN = re.compile(r"^B\((\d+)\)$")


def uniform(r: int, n: int) -> Matroid:
    """The uniform matroid U(r, n): every r-subset is a basis."""
    if not 0 <= r <= n <= CORPUS_GROUND:
        raise BadParameters(
            f"uniform matroid needs 0 <= r <= n <= {CORPUS_GROUND}, "
            f"got U({r},{n})"
        )
    ranked = {s: popcount(s) for s in range(1 << n) if popcount(s) < r}
    ranked[full(n)] = r
    return Matroid(n, ranked, provenance="derived", name=f"U({r},{n})")


def boolean(n: int) -> Matroid:
    """The free matroid on n elements: every subset is a flat."""
    matroid = uniform(n, n)
    matroid.name = f"B({n})"
    return matroid


def fano() -> Matroid:
    """Column matroid of all nonzero vectors of F_2^3."""
    columns = range(1, 8)
    rows = tuple(
        tuple(c >> bit & 1 for c in columns) for bit in (2, 1, 0)
    )
    return matroid_from_matrix(FiniteFieldMatrix(2, rows), name="fano")


def uniform_matrix(r: int, n: int, p: int) -> FiniteFieldMatrix:
    """A representation of U(r, n) over Z/p.

    Columns are points ``(1, a, ..., a^(r-1))`` of the moment curve plus
    the point at infinity, so ``1 < r < n`` needs ``n <= p + 1``.

    Raises:
        BadParameters: If U(r, n) has no representation built this way.
    """
    if not 0 < r <= n:
        raise BadParameters(f"need 0 < r <= n, got U({r},{n})")
    if r == n:
        rows = tuple(
            tuple(int(i == j) for j in range(n)) for i in range(r)
        )
        return FiniteFieldMatrix(p, rows)
    if r == 1:
        return FiniteFieldMatrix(p, ((1,) * n,))
    if n > p + 1:
        raise BadParameters(f"U({r},{n}) needs more than {p + 1} points")
    points = [tuple(pow(a, i, p) for i in range(r)) for a in range(n)]
    if n == p + 1:
        points[-1] = tuple(int(i == r - 1) for i in range(r))
    return FiniteFieldMatrix(p, tuple(zip(*points)))


def incidence_matrix(g: Graph, p: int) -> FiniteFieldMatrix:
    """Signed vertex-edge incidence matrix of ``g`` over Z/p.

    It represents the cycle matroid over every field; self-loops give
    zero columns.
    """
    rows = [[0] * len(g.edges) for _ in range(g.vertices)]
    for j, (u, v) in enumerate(g.edges):
        if u != v:
            rows[u][j] = 1
            rows[v][j] = -1
    return FiniteFieldMatrix(p, tuple(tuple(row) for row in rows))


def complete_graph(vertices: int) -> Matroid:
    edges = tuple(
        (u, v) for u in range(vertices) for v in range(u + 1, vertices)
    )
    return matroid_from_graph(Graph(vertices, edges), name=f"K{vertices}")


def cycle_graph(vertices: int) -> Matroid:
    edges = tuple((v, (v + 1) % vertices) for v in range(vertices))
    return matroid_from_graph(Graph(vertices, edges), name=f"C{vertices}")


def vamos() -> Matroid:
    """The Vámos matroid, read from its basis list in the corpus."""
    return load_corpus("vamos")


def corpus_names() -> list[str]:
    """Names of the bundled corpus entries, sorted."""
    folder = resources.files(CORPUS_PACKAGE)
    return sorted(
        entry.name[: -len(CORPUS_SUFFIX)]
        for entry in folder.iterdir()
        if entry.name.endswith(CORPUS_SUFFIX)
    )


def corpus_source(name: str) -> MatroidSource:
    """The parsed file of a corpus entry, before validation.

    Raises:
        BadParameters: If there is no such entry.
    """
    entry = resources.files(CORPUS_PACKAGE) / f"{name}{CORPUS_SUFFIX}"
    if not entry.is_file():
        raise BadParameters(f"no corpus matroid named '{name}'")
    source = parse_source(entry.read_text(encoding="utf-8"))
    if not source.name:
        source.name = name
    return source


def load_corpus(name: str) -> Matroid:
    """Load a bundled corpus matroid by name.

    Raises:
        BadParameters: If there is no such entry.
    """
    return build_matroid(corpus_source(name))


def builtin(name: str) -> Matroid:
    """Resolve a builtin name.

    Accepts ``U(r,n)``, ``B(n)``, ``fano``, ``vamos``, ``K4``, ``C5`` and
    any corpus entry name.

    Raises:
        BadParameters: For unknown names or out of range parameters.
    """
    match = _UNIFORM.match(name)
    if match:
        return uniform(int(match[1]), int(match[2]))
    match = _BOOLEAN.match(name)
    if match:
        return boolean(int(match[1]))
    lowered = name.lower()
    if lowered == "fano":
        return fano()
    if lowered == "vamos":
        return vamos()
    if lowered == "k4":
        return complete_graph(4)
    if lowered == "c5":
        return cycle_graph(5)
    return load_corpus(name)
