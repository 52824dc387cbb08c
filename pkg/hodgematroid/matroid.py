# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""Matroids stored by their complete, rank-graded family of flats.

A `Matroid` on the ground set ``{0, ..., n-1}`` keeps every flat as a
bitmask `Subset` grouped by rank. The constructors accept the usual
cryptomorphic descriptions (flats, bases, circuits, graphs and matrices
over prime fields) and validate the relevant axioms before anything else
sees the object. Operations never mutate a matroid; each one returns a
new, already trusted instance.

Example:
    >>> from hodgematroid.matroid import matroid_from_flats
    >>> m = matroid_from_flats(3, [0b000, 0b001, 0b010, 0b100, 0b111])
    >>> m.rank(0b011), m.closure(0b011) == 0b111
    (2, True)
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable, Sequence
from functools import cached_property
from typing import Literal

import networkx as nx

from hodgematroid.bitsets import (
    EMPTY,
    Subset,
    check,
    format_subset,
    full,
    is_subset,
    members,
    popcount,
)
from hodgematroid.constants import EXHAUSTIVE_GROUND, MAX_GROUND
from hodgematroid.exceptions import (
    AxiomViolation,
    BadParameters,
    ExchangeViolation,
    TooLarge,
)
from hodgematroid.structures import FiniteFieldMatrix, Graph

logger = logging.getLogger(__name__)

Provenance = Literal[
    "flats", "bases", "circuits", "graph", "matrix", "derived"
]


class Matroid:
    """An immutable matroid given by its lattice of flats.

    Do not call the constructor directly with untrusted data; use one of
    the ``matroid_from_*`` functions, which validate their input.

    Attributes:
        n: Number of ground elements.
        flats_by_rank: ``flats_by_rank[k]`` lists the rank ``k`` flats in
            increasing mask order.
        provenance: Which description the matroid was built from.
        name: Free-form label, used in reports.
    """

    def __init__(
        self,
        n: int,
        ranked_flats: dict[Subset, int],
        *,
        provenance: Provenance = "derived",
        name: str = "",
    ) -> None:
        if n > MAX_GROUND:
            raise TooLarge(f"ground set of {n} exceeds {MAX_GROUND}")
        self.n = n
        self.provenance: Provenance = provenance
        self.name = name
        top = max(ranked_flats.values(), default=0)
        grouped: list[list[Subset]] = [[] for _ in range(top + 1)]
        for flat, k in ranked_flats.items():
            grouped[k].append(flat)
        self.flats_by_rank: tuple[tuple[Subset, ...], ...] = tuple(
            tuple(sorted(group)) for group in grouped
        )
        self._rank_of_flat = dict(ranked_flats)

    # -- basic data ---------------------------------------------------------

    @property
    def ground(self) -> Subset:
        return full(self.n)

    @property
    def rank_of_ground(self) -> int:
        return len(self.flats_by_rank) - 1

    @property
    def flats(self) -> tuple[Subset, ...]:
        """All flats, ordered by rank and then by mask."""
        return tuple(f for group in self.flats_by_rank for f in group)

    def flats_of_rank(self, k: int) -> tuple[Subset, ...]:
        if 0 <= k < len(self.flats_by_rank):
            return self.flats_by_rank[k]
        return ()

    def proper_flats(self) -> tuple[Subset, ...]:
        """Nonempty flats other than the ground set."""
        return tuple(
            f for f in self.flats if f != EMPTY and f != self.ground
        )

    def is_flat(self, s: Subset) -> bool:
        return s in self._rank_of_flat

    def flat_rank(self, flat: Subset) -> int:
        return self._rank_of_flat[flat]

    @cached_property
    def canonical_key(self) -> tuple[int, tuple[Subset, ...]]:
        return (self.n, tuple(sorted(self._rank_of_flat)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.canonical_key == other.canonical_key

    def __hash__(self) -> int:
        return hash(self.canonical_key)

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return (
            f"<Matroid{label} n={self.n} rank={self.rank_of_ground} "
            f"flats={len(self._rank_of_flat)}>"
        )

    # -- rank and closure ---------------------------------------------------

    @cached_property
    def _closure_table(self) -> list[Subset]:
        """Closure of every subset, by a superset-intersection sweep."""
        n = self.n
        if n > EXHAUSTIVE_GROUND:
            raise TooLarge(
                f"subset tables need n <= {EXHAUSTIVE_GROUND}, got {n}"
            )
        everything = full(n)
        table = [everything] * (1 << n)
        for flat in self._rank_of_flat:
            table[flat] = flat
        for e in range(n):
            bit = 1 << e
            for s in range(1 << n):
                if not s & bit:
                    table[s] &= table[s | bit]
        return table

    @cached_property
    def rank_table(self) -> list[int]:
        """Rank of every subset, indexed by mask.

        Raises:
            TooLarge: If the ground set is too big to tabulate.
        """
        closures = self._closure_table
        return [self._rank_of_flat[c] for c in closures]

    def closure(self, s: Subset) -> Subset:
        """Return the smallest flat containing ``s``."""
        check(s, self.n)
        if self.n <= EXHAUSTIVE_GROUND:
            return self._closure_table[s]
        result = self.ground
        for flat in self._rank_of_flat:
            if is_subset(s, flat):
                result &= flat
        return result

    def rank(self, s: Subset) -> int:
        return self._rank_of_flat[self.closure(s)]

    def corank(self, s: Subset) -> int:
        return self.rank_of_ground - self.rank(s)

    # -- derived families ---------------------------------------------------

    def independent_sets(self) -> list[Subset]:
        table = self.rank_table
        return [s for s in range(1 << self.n) if table[s] == popcount(s)]

    def bases(self) -> list[Subset]:
        r = self.rank_of_ground
        table = self.rank_table
        return [
            s
            for s in range(1 << self.n)
            if popcount(s) == r and table[s] == r
        ]

    def circuits(self) -> list[Subset]:
        """Minimal dependent sets, in increasing mask order."""
        table = self.rank_table
        found = []
        for s in range(1, 1 << self.n):
            size = popcount(s)
            if table[s] == size:
                continue
            if all(table[s & ~(1 << e)] == size - 1 for e in members(s)):
                found.append(s)
        return found

    def f_vector(self) -> list[int]:
        """Number of independent sets of each size ``0..r``."""
        counts = [0] * (self.rank_of_ground + 1)
        for s in self.independent_sets():
            counts[popcount(s)] += 1
        return counts

    def loops(self) -> Subset:
        return self.flats_by_rank[0][0]

    def coloops(self) -> Subset:
        r = self.rank_of_ground
        everything = self.ground
        found = EMPTY
        for e in range(self.n):
            if self.rank(everything & ~(1 << e)) < r:
                found |= 1 << e
        return found

    def is_loop_free(self) -> bool:
        return self.loops() == EMPTY

    def is_simple(self) -> bool:
        """True for combinatorial geometries: no loops, no parallel pairs."""
        return self.is_loop_free() and all(
            popcount(p) == 1 for p in self.flats_of_rank(1)
        )

    # -- constructions ------------------------------------------------------

    def dual(self) -> Matroid:
        """The dual matroid, whose bases are complements of bases."""
        n = self.n
        r = self.rank_of_ground
        table = self.rank_table
        everything = full(n)
        dual_table = [
            popcount(s) - r + table[everything & ~s] for s in range(1 << n)
        ]
        return _from_rank_table(n, dual_table, name=_derived(self, "dual"))

    def restriction(self, keep: Subset) -> Matroid:
        """The restriction ``M|keep``, re-indexed onto ``0..|keep|-1``."""
        check(keep, self.n)
        kept = list(members(keep))
        ranked: dict[Subset, int] = {}
        for flat, k in self._rank_of_flat.items():
            image = _compress(flat & keep, kept)
            # rank of P & keep is the rank of its own closure
            ranked.setdefault(image, self.rank(flat & keep))
        return Matroid(
            len(kept),
            ranked,
            provenance="derived",
            name=_derived(self, f"restriction{format_subset(keep)}"),
        )

    def deletion(self, removed: Subset) -> Matroid:
        """Delete ``removed``; the result lives on the remaining elements."""
        check(removed, self.n)
        return self.restriction(self.ground & ~removed)

    def contraction(self, contracted: Subset) -> Matroid:
        """Contract ``contracted``, keeping the flats that contain it.

        Ranks follow ``rk(A | F) - rk(F)``.
        """
        check(contracted, self.n)
        base = self.closure(contracted)
        offset = self._rank_of_flat[base]
        kept = list(members(self.ground & ~contracted))
        ranked = {
            _compress(flat & ~contracted, kept): k - offset
            for flat, k in self._rank_of_flat.items()
            if is_subset(base, flat)
        }
        return Matroid(
            len(kept),
            ranked,
            provenance="derived",
            name=_derived(self, f"contraction{format_subset(contracted)}"),
        )

    def direct_sum(self, other: Matroid) -> Matroid:
        """Disjoint union; elements of ``other`` are shifted by ``self.n``."""
        shift = self.n
        ranked = {
            a | (b << shift): ka + kb
            for a, ka in self._rank_of_flat.items()
            for b, kb in other._rank_of_flat.items()
        }
        return Matroid(
            self.n + other.n,
            ranked,
            provenance="derived",
            name=f"{self.name or 'M'}+{other.name or 'N'}",
        )

    def simplify(self) -> tuple[Matroid, tuple[int | None, ...]]:
        """Remove loops and merge parallel classes.

        Returns:
            The combinatorial geometry and, for each original element, the
            index of its parallel class (``None`` for loops).
        """
        loops = self.loops()
        points = self.flats_of_rank(1)
        element_map: list[int | None] = [None] * self.n
        for index, point in enumerate(points):
            for e in members(point & ~loops):
                element_map[e] = index
        ranked: dict[Subset, int] = {}
        for flat, k in self._rank_of_flat.items():
            image = EMPTY
            for e in members(flat & ~loops):
                image |= 1 << _not_none(element_map[e])
            ranked[image] = k
        geometry = Matroid(
            len(points),
            ranked,
            provenance="derived",
            name=_derived(self, "simple"),
        )
        return geometry, tuple(element_map)

    def truncate(self, k: int) -> Matroid:
        """Keep the flats of rank at most ``k+1`` together with the ground.

        For ``k <= rank - 2`` the result has rank ``k+2``; at the top
        levels ``rank - 2`` and ``rank - 1`` nothing is removed.

        Raises:
            BadParameters: Unless ``0 <= k <= rank - 1``.
        """
        r = self.rank_of_ground
        if not 0 <= k <= r - 1:
            raise BadParameters(
                f"truncation level {k} outside 0..{r - 1} for rank {r}"
            )
        if k == r - 1:
            return self
        ranked = {
            flat: rank
            for flat, rank in self._rank_of_flat.items()
            if rank <= k + 1
        }
        ranked[self.ground] = k + 2
        return Matroid(
            self.n,
            ranked,
            provenance="derived",
            name=_derived(self, f"truncation{k}"),
        )

    def free_extension(self) -> Matroid:
        """Add a new element ``n`` in general position."""
        n = self.n
        r = self.rank_of_ground
        table = self.rank_table
        new_bit = 1 << n
        extended = [0] * (1 << (n + 1))
        for s in range(1 << n):
            extended[s] = table[s]
            extended[s | new_bit] = min(table[s] + 1, r)
        return _from_rank_table(
            n + 1, extended, name=_derived(self, "free-extension")
        )

    def free_coextension(self) -> Matroid:
        """Dual of the free extension of the dual; adds one to the rank."""
        coextension = self.dual().free_extension().dual()
        coextension.name = _derived(self, "free-coextension")
        return coextension

    def relabel(self, permutation: Sequence[int]) -> Matroid:
        """Rename element ``e`` to ``permutation[e]``."""
        if sorted(permutation) != list(range(self.n)):
            raise BadParameters(f"not a permutation of 0..{self.n - 1}")
        ranked: dict[Subset, int] = {}
        for flat, k in self._rank_of_flat.items():
            image = EMPTY
            for e in members(flat):
                image |= 1 << permutation[e]
            ranked[image] = k
        return Matroid(
            self.n, ranked, provenance="derived", name=self.name
        )

    def covering_graph(self) -> nx.DiGraph:
        """Hasse diagram of the flat lattice with ranks as node data."""
        graph = nx.DiGraph()
        for flat, k in self._rank_of_flat.items():
            graph.add_node(flat, rank=k)
        for k in range(self.rank_of_ground):
            for lower in self.flats_by_rank[k]:
                for upper in self.flats_by_rank[k + 1]:
                    if is_subset(lower, upper):
                        graph.add_edge(lower, upper)
        return graph

    def is_isomorphic_lattice(self, other: Matroid) -> bool:
        """Compare flat lattices as ranked covering digraphs."""
        if [len(g) for g in self.flats_by_rank] != [
            len(g) for g in other.flats_by_rank
        ]:
            return False
        return bool(
            nx.is_isomorphic(
                self.covering_graph(),
                other.covering_graph(),
                node_match=_same_rank,
            )
        )


def _same_rank(a: dict[str, int], b: dict[str, int]) -> bool:
    return a["rank"] == b["rank"]


def _not_none(value: int | None) -> int:
    assert value is not None
    return value


def _derived(parent: Matroid, what: str) -> str:
    return f"{parent.name}:{what}" if parent.name else what


def _compress(s: Subset, kept: list[int]) -> Subset:
    """Re-index ``s`` onto positions of ``kept``."""
    image = EMPTY
    for position, e in enumerate(kept):
        if s >> e & 1:
            image |= 1 << position
    return image


# -- rank tables --------------------------------------------------------------


def _require_tabulable(n: int) -> None:
    if n > EXHAUSTIVE_GROUND:
        raise TooLarge(
            f"exhaustive construction needs n <= {EXHAUSTIVE_GROUND}, got {n}"
        )


def _flats_from_rank_table(
    n: int, table: Sequence[int]
) -> dict[Subset, int]:
    """A set is a flat when every new element raises its rank."""
    ranked: dict[Subset, int] = {}
    for s in range(1 << n):
        k = table[s]
        if all(
            table[s | (1 << e)] > k for e in range(n) if not s >> e & 1
        ):
            ranked[s] = k
    return ranked


def _from_rank_table(
    n: int,
    table: Sequence[int],
    *,
    provenance: Provenance = "derived",
    name: str = "",
) -> Matroid:
    matroid = Matroid(
        n,
        _flats_from_rank_table(n, table),
        provenance=provenance,
        name=name,
    )
    if n <= EXHAUSTIVE_GROUND:
        matroid.__dict__["rank_table"] = list(table)
    return matroid


def _rank_table_from_independence(
    n: int, independent: Callable[[Subset], bool] | Sequence[bool]
) -> list[int]:
    """Tabulate ranks from an independence predicate or table."""
    if callable(independent):
        flags = [independent(s) for s in range(1 << n)]
    else:
        flags = list(independent)
    table = [0] * (1 << n)
    for s in range(1, 1 << n):
        if flags[s]:
            table[s] = popcount(s)
        else:
            table[s] = max(table[s & ~(1 << e)] for e in members(s))
    return table


def _rank_mod_p(columns: Sequence[Sequence[int]], p: int) -> int:
    """Rank over F_p of a set of column vectors, by Gaussian elimination."""
    rows = [list(col) for col in columns]
    if not rows:
        return 0
    width = len(rows[0])
    rank = 0
    for c in range(width):
        pivot = None
        for i in range(rank, len(rows)):
            if rows[i][c] % p:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(rank + 1, len(rows)):
            f = rows[i][c] % p
            if f:
                rows[i] = [
                    (x - f * y) % p for x, y in zip(rows[i], rows[rank])
                ]
        rank += 1
        if rank == len(rows):
            break
    return rank


# -- public constructors ------------------------------------------------------


def matroid_from_flats(
    n: int, flat_list: Iterable[Subset], *, name: str = ""
) -> Matroid:
    """Build a matroid from its complete family of flats.

    Args:
        n: Size of the ground set.
        flat_list: Every flat, as bitmasks.
        name: Optional label.

    Raises:
        AxiomViolation: ``"i"`` if the family is not closed under
            intersection (or misses the ground set), ``"ii"`` if the
            minimal flats above some flat do not cover the ground set.
        BadParameters: If the family is empty.
    """
    flats = sorted(
        {check(f, n) for f in flat_list}, key=lambda f: (popcount(f), f)
    )
    if not flats:
        raise BadParameters("a matroid needs at least one flat")
    everything = full(n)
    family = set(flats)
    if everything not in family:
        raise AxiomViolation(
            "i", f"ground set {format_subset(everything)} is not a flat"
        )
    for i, a in enumerate(flats):
        for b in flats[i + 1 :]:
            if a & b not in family:
                raise AxiomViolation(
                    "i",
                    f"{format_subset(a)} & {format_subset(b)} = "
                    f"{format_subset(a & b)} is not a flat",
                )
    ranks: dict[Subset, int] = {}
    for flat in flats:
        if flat == everything:
            continue
        covers: list[Subset] = []
        for other in flats:
            if other == flat or not is_subset(flat, other):
                continue
            if any(is_subset(c, other) for c in covers):
                continue
            covers.append(other)
        union = flat
        for c in covers:
            union |= c
        if union != everything:
            missing = everything & ~union
            raise AxiomViolation(
                "ii",
                f"flats covering {format_subset(flat)} miss "
                f"{format_subset(missing)}",
            )
    for flat in flats:
        below = [ranks[g] for g in ranks if g != flat and is_subset(g, flat)]
        ranks[flat] = max(below) + 1 if below else 0
    logger.debug("validated %d flats on %d elements", len(flats), n)
    return Matroid(n, ranks, provenance="flats", name=name)


def matroid_from_bases(
    n: int, bases: Iterable[Subset], *, name: str = ""
) -> Matroid:
    """Build a matroid from its bases, checking basis exchange.

    Raises:
        ExchangeViolation: With the first failing pair of bases.
        BadParameters: If there are no bases or their sizes differ.
    """
    _require_tabulable(n)
    family = sorted({check(b, n) for b in bases})
    if not family:
        raise BadParameters("a matroid needs at least one basis")
    if len({popcount(b) for b in family}) != 1:
        raise BadParameters("bases must all have the same size")
    lookup = set(family)
    for b1 in family:
        for b2 in family:
            for x in members(b1 & ~b2):
                if not any(
                    (b1 & ~(1 << x)) | (1 << y) in lookup
                    for y in members(b2 & ~b1)
                ):
                    raise ExchangeViolation(
                        format_subset(b1), format_subset(b2)
                    )
    independent = [False] * (1 << n)
    for b in family:
        independent[b] = True
    for e in range(n):
        bit = 1 << e
        for s in range(1 << n):
            if not s & bit and independent[s | bit]:
                independent[s] = True
    table = _rank_table_from_independence(n, independent)
    return _from_rank_table(n, table, provenance="bases", name=name)


def matroid_from_circuits(
    n: int, circuits: Iterable[Subset], *, name: str = ""
) -> Matroid:
    """Build a matroid from its circuits, checking circuit elimination.

    Raises:
        AxiomViolation: ``"circuits"`` with the offending circuits.
    """
    _require_tabulable(n)
    family = sorted({check(c, n) for c in circuits})
    if EMPTY in family:
        raise AxiomViolation("circuits", "the empty set is not a circuit")
    for c1 in family:
        for c2 in family:
            if c1 != c2 and is_subset(c1, c2):
                raise AxiomViolation(
                    "circuits",
                    f"{format_subset(c1)} is inside {format_subset(c2)}",
                )
    for i, c1 in enumerate(family):
        for c2 in family[i + 1 :]:
            for e in members(c1 & c2):
                rest = (c1 | c2) & ~(1 << e)
                if not any(is_subset(c3, rest) for c3 in family):
                    raise AxiomViolation(
                        "circuits",
                        f"no circuit inside ({format_subset(c1)} | "
                        f"{format_subset(c2)}) - {e}",
                    )
    dependent = [False] * (1 << n)
    for c in family:
        dependent[c] = True
    for e in range(n):
        bit = 1 << e
        for s in range(1 << n):
            if s & bit and dependent[s ^ bit]:
                dependent[s] = True
    table = _rank_table_from_independence(n, [not d for d in dependent])
    return _from_rank_table(n, table, provenance="circuits", name=name)


def matroid_from_graph(g: Graph, *, name: str = "") -> Matroid:
    """The cycle matroid of ``g``: independent sets are forests.

    Edge ``k`` becomes element ``k``; self-loops become matroid loops.
    """
    n = len(g.edges)
    _require_tabulable(n)
    table = [0] * (1 << n)
    for s in range(1 << n):
        forest = nx.MultiGraph()
        forest.add_nodes_from(range(g.vertices))
        forest.add_edges_from(g.edges[e] for e in members(s))
        table[s] = g.vertices - nx.number_connected_components(forest)
    return _from_rank_table(n, table, provenance="graph", name=name)


def matroid_from_matrix(m: FiniteFieldMatrix, *, name: str = "") -> Matroid:
    """The column matroid of a matrix over a prime field."""
    n = m.width
    _require_tabulable(n)
    columns = [m.column(j) for j in range(n)]
    table = [0] * (1 << n)
    for s in range(1, 1 << n):
        table[s] = _rank_mod_p([columns[e] for e in members(s)], m.prime)
    return _from_rank_table(n, table, provenance="matrix", name=name)
