# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""The graded Möbius algebra and the top-heavy property.

``B(M)`` has a basis ``delta_F`` indexed by flats, graded by rank, with
``delta_F delta_G = delta_(F v G)`` when the ranks add up and zero
otherwise. Multiplication by ``lambda``, the sum of ``delta`` over the
rank one flats spanned by the non-loop elements, raises degree by one.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import networkx as nx
from networkx.algorithms import bipartite

from hodgematroid import linalg
from hodgematroid.bitsets import Subset, format_subset, is_subset, popcount
from hodgematroid.exceptions import BadParameters
from hodgematroid.invariants import is_log_concave, is_unimodal
from hodgematroid.matroid import Matroid

logger = logging.getLogger(__name__)


class GradedMoebiusAlgebra:
    """``B(M)`` with flats as basis elements."""

    def __init__(self, matroid: Matroid) -> None:
        self.matroid = matroid

    @property
    def dims(self) -> list[int]:
        return [len(g) for g in self.matroid.flats_by_rank]

    def basis(self, k: int) -> tuple[Subset, ...]:
        return self.matroid.flats_of_rank(k)

    def multiply(self, a: Subset, b: Subset) -> Subset | None:
        """``delta_a delta_b`` as a flat, or None for zero."""
        m = self.matroid
        join = m.closure(a | b)
        if m.flat_rank(a) + m.flat_rank(b) == m.flat_rank(join):
            return join
        return None

    def is_associative(self) -> bool:
        """Check ``(ab)c == a(bc)`` on every triple of basis elements."""
        flats = self.matroid.flats
        for a in flats:
            for b in flats:
                ab = self.multiply(a, b)
                for c in flats:
                    bc = self.multiply(b, c)
                    left = None if ab is None else self.multiply(ab, c)
                    right = None if bc is None else self.multiply(a, bc)
                    if left != right:
                        return False
        return True


def moebius_algebra(matroid: Matroid) -> GradedMoebiusAlgebra:
    return GradedMoebiusAlgebra(matroid)


@dataclass(frozen=True)
class LambdaMatrix:
    """Matrix of ``lambda^(q-p)`` from degree ``p`` to degree ``q``."""

    rows: tuple[Subset, ...]
    columns: tuple[Subset, ...]
    entries: tuple[tuple[int, ...], ...]

    def rank(self) -> int:
        return linalg.rank(
            [list(row) for row in self.entries], width=len(self.columns)
        )

    def support_respects_containment(self) -> bool:
        return all(
            is_subset(p, q)
            for p, row in zip(self.rows, self.entries)
            for q, v in zip(self.columns, row)
            if v
        )


def lambda_matrix(matroid: Matroid, p: int, q: int) -> LambdaMatrix:
    """Entries of ``lambda^(q-p) delta_P`` on ``delta_Q``.

    One step from ``Q`` to a cover ``Q'`` has weight ``|Q' - Q|``, the
    number of elements ``i`` with ``Q v i = Q'``.

    Raises:
        BadParameters: Unless ``0 <= p <= q <= rk(M)``.
    """
    if not 0 <= p <= q <= matroid.rank_of_ground:
        raise BadParameters(f"need 0 <= p <= q <= rank, got p={p}, q={q}")
    rows = matroid.flats_of_rank(p)
    current: list[dict[Subset, int]] = [{f: 1} for f in rows]
    for k in range(p, q):
        upper = matroid.flats_of_rank(k + 1)
        stepped = []
        for vector in current:
            nxt: dict[Subset, int] = {}
            for flat, weight in vector.items():
                for cover in upper:
                    if is_subset(flat, cover):
                        gain = popcount(cover & ~flat)
                        nxt[cover] = nxt.get(cover, 0) + weight * gain
            stepped.append(nxt)
        current = stepped
    columns = matroid.flats_of_rank(q)
    entries = tuple(
        tuple(vector.get(c, 0) for c in columns) for vector in current
    )
    return LambdaMatrix(rows, columns, entries)


def flat_matching(
    matroid: Matroid, p: int, q: int
) -> dict[Subset, Subset] | None:
    """An injection from rank ``p`` flats to rank ``q`` flats with
    ``F <= image(F)``, or None when no such injection exists."""
    lower = matroid.flats_of_rank(p)
    upper = matroid.flats_of_rank(q)
    graph = nx.Graph()
    graph.add_nodes_from(("p", f) for f in lower)
    graph.add_nodes_from(("q", g) for g in upper)
    for f in lower:
        for g in upper:
            if is_subset(f, g):
                graph.add_edge(("p", f), ("q", g))
    top = [("p", f) for f in lower]
    matching = bipartite.hopcroft_karp_matching(graph, top_nodes=top)
    injection = {
        f: matching[("p", f)][1] for f in lower if ("p", f) in matching
    }
    if len(injection) != len(lower):
        return None
    return injection


@dataclass(frozen=True)
class TopHeavyReport:
    p: int
    q: int
    rank: int
    lower: int
    upper: int
    matching: dict[Subset, Subset] | None

    @property
    def full_rank(self) -> bool:
        return self.rank == self.lower

    @property
    def passed(self) -> bool:
        return (
            self.full_rank
            and self.lower <= self.upper
            and self.matching is not None
        )

    def to_json(self) -> dict[str, object]:
        return {
            "p": self.p,
            "q": self.q,
            "rank": self.rank,
            "w_p": self.lower,
            "w_q": self.upper,
            "matching": (
                None
                if self.matching is None
                else [
                    [format_subset(a), format_subset(b)]
                    for a, b in sorted(self.matching.items())
                ]
            ),
            "passed": self.passed,
        }


def topheavy_check(matroid: Matroid, p: int, q: int) -> TopHeavyReport:
    """Rank of ``lambda^(q-p)`` and a containment matching.

    Raises:
        BadParameters: Unless ``0 <= p <= min(q, r - q)``.
    """
    r = matroid.rank_of_ground
    if not 0 <= p <= min(q, r - q):
        raise BadParameters(f"need 0 <= p <= min(q, r - q), got {p}, {q}")
    report = TopHeavyReport(
        p=p,
        q=q,
        rank=lambda_matrix(matroid, p, q).rank(),
        lower=len(matroid.flats_of_rank(p)),
        upper=len(matroid.flats_of_rank(q)),
        matching=flat_matching(matroid, p, q),
    )
    logger.debug("top-heavy p=%d q=%d: rank %d", p, q, report.rank)
    return report


def valid_pairs(matroid: Matroid) -> list[tuple[int, int]]:
    r = matroid.rank_of_ground
    return [
        (p, q)
        for q in range(r + 1)
        for p in range(r + 1)
        if p <= min(q, r - q)
    ]


@dataclass(frozen=True)
class TopHeavySweep:
    whitney: list[int]
    reports: list[TopHeavyReport]
    log_concave: bool
    unimodal: bool

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)


def topheavy_sweep(matroid: Matroid) -> TopHeavySweep:
    """`topheavy_check` on every valid ``(p, q)``, with the shape of the
    Whitney numbers of the second kind."""
    whitney = [len(g) for g in matroid.flats_by_rank]
    return TopHeavySweep(
        whitney=whitney,
        reports=[
            topheavy_check(matroid, p, q) for p, q in valid_pairs(matroid)
        ],
        log_concave=is_log_concave(whitney),
        unimodal=is_unimodal(whitney),
    )
