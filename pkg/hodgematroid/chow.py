# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""Chow rings of matroids with a filter of flats, and their Hodge theory.

The ring ``A(M, P)`` has a generator ``t_i`` for every element whose
closure is outside the filter and a generator ``t_F`` for every proper
flat in the filter. A set of generators multiplies to zero unless

* its flats form a chain,
* every element lies in every one of its flats, and
* the closure of its elements is outside the filter,

and the linear relations say that ``t_i + sum_{F contains i} t_F`` does
not depend on ``i``. With the full filter this is the Chow ring of the
matroid.

The Hodge checks (Poincaré duality, hard Lefschetz, Hodge-Riemann) work
on the per-degree bases of `GradedRing` with exact rationals.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TypeAlias

from hodgematroid import linalg
from hodgematroid.bitsets import (
    EMPTY,
    Subset,
    contains,
    format_subset,
    is_subset,
    members,
    popcount,
)
from hodgematroid.exceptions import (
    BadParameters,
    HasLoops,
    InvalidFilter,
    NotAmple,
    NonIntegralDegree,
    NotMaximalFlat,
    NotTopDegree,
)
from hodgematroid.fan import (
    PLFunction,
    RayKey,
    ample_check,
    bergman_fan,
    element_key,
    flat_key,
    key_label,
)
from hodgematroid.matroid import Matroid
from hodgematroid.ring import GradedRing, Presentation, RingElement, Support

logger = logging.getLogger(__name__)

Scalar: TypeAlias = int | Fraction
Submodular: TypeAlias = Callable[[Subset], Scalar] | Mapping[Subset, Scalar]


# -- filters ------------------------------------------------------------------


@dataclass(frozen=True)
class Filter:
    """An upward closed family of nonempty flats.

    Raises:
        InvalidFilter: If the family is empty, contains the empty set or a
            non-flat, or is not upward closed.
    """

    matroid: Matroid = field(compare=False, repr=False)
    flats: frozenset[Subset]

    def __post_init__(self) -> None:
        m = self.matroid
        if not self.flats:
            raise InvalidFilter("a filter must not be empty")
        if EMPTY in self.flats:
            raise InvalidFilter("a filter must not contain the empty set")
        for flat in self.flats:
            if not m.is_flat(flat):
                raise InvalidFilter(f"{format_subset(flat)} is not a flat")
        for flat in self.flats:
            for above in m.flats:
                if is_subset(flat, above) and above not in self.flats:
                    raise InvalidFilter(
                        f"{format_subset(above)} contains "
                        f"{format_subset(flat)} but is missing"
                    )

    def __contains__(self, flat: object) -> bool:
        return flat in self.flats

    def __len__(self) -> int:
        return len(self.flats)

    @property
    def proper(self) -> list[Subset]:
        """Members other than the ground set, by rank and then mask."""
        m = self.matroid
        return sorted(
            (f for f in self.flats if f != m.ground),
            key=lambda f: (m.flat_rank(f), f),
        )

    def is_full(self) -> bool:
        return len(self.flats) == len(self.matroid.flats) - 1

    def minimal(self) -> list[Subset]:
        """Members with no other member strictly below them."""
        return [
            f
            for f in self.proper + [self.matroid.ground]
            if not any(g != f and is_subset(g, f) for g in self.flats)
        ]

    def maximal_missing(self) -> list[Subset]:
        """Nonempty flats outside the filter whose strict upper flats are
        all inside, largest rank first."""
        m = self.matroid
        missing = [
            f for f in m.flats if f != EMPTY and f not in self.flats
        ]
        candidates = [
            f
            for f in missing
            if not any(g != f and is_subset(f, g) for g in missing)
        ]
        return sorted(candidates, key=lambda f: (-m.flat_rank(f), f))

    def describe(self) -> list[str]:
        return [format_subset(f) for f in sorted(self.flats)]


def full_filter(matroid: Matroid) -> Filter:
    return Filter(
        matroid, frozenset(f for f in matroid.flats if f != EMPTY)
    )


def trivial_filter(matroid: Matroid) -> Filter:
    return Filter(matroid, frozenset([matroid.ground]))


def filter_from_flats(matroid: Matroid, flats: Sequence[Subset]) -> Filter:
    """The filter with the given members; the ground set is added."""
    return Filter(matroid, frozenset(flats) | {matroid.ground})


def flip(filt: Filter, flat: Subset) -> Filter:
    """Adjoin a maximal missing flat to the filter.

    Raises:
        NotMaximalFlat: If ``flat`` is not maximal among the missing
            nonempty flats.
    """
    if flat not in filt.maximal_missing():
        raise NotMaximalFlat(
            f"{format_subset(flat)} is not a maximal flat outside the filter"
        )
    return Filter(filt.matroid, filt.flats | {flat})


def flip_sequence(matroid: Matroid) -> list[Subset]:
    """Flats adjoined, in order, to go from the trivial to the full filter.

    Each step adjoins the first entry of `Filter.maximal_missing`.
    """
    filt = trivial_filter(matroid)
    order: list[Subset] = []
    while not filt.is_full():
        flat = filt.maximal_missing()[0]
        order.append(flat)
        filt = flip(filt, flat)
    return order


# -- rings --------------------------------------------------------------------


class ChowRing(GradedRing):
    """The graded ring ``A(M, P)``, computed up to degree ``rk(M) - 1``.

    Attributes:
        matroid: The loop-free matroid the ring belongs to.
        filter: The filter of flats.
        keys: ``keys[g]`` names generator ``g`` as an element or a flat.
        index: Inverse of ``keys``.
    """

    def __init__(self, matroid: Matroid, filt: Filter) -> None:
        if matroid.n == 0:
            raise BadParameters("the Chow ring needs a nonempty ground set")
        if not matroid.is_loop_free():
            raise HasLoops(f"{matroid!r} has loops")
        if filt.matroid is not matroid and filt.matroid != matroid:
            raise InvalidFilter("filter belongs to a different matroid")
        self.matroid = matroid
        self.filter = filt
        self.keys: tuple[RayKey, ...] = tuple(
            [
                element_key(i)
                for i in range(matroid.n)
                if matroid.closure(1 << i) not in filt
            ]
            + [flat_key(f) for f in filt.proper]
        )
        self.index = {key: g for g, key in enumerate(self.keys)}
        super().__init__(
            Presentation(
                labels=tuple(key_label(k) for k in self.keys),
                is_face=self._is_face,
                relations=self._relations(),
                top_degree=matroid.rank_of_ground - 1,
            ),
            require_integral=True,
        )
        self._normalizer = self._normalizer_class()
        logger.info(
            "Chow ring of %r with %d filter flats: dims %s",
            matroid,
            len(filt),
            self.dims,
        )

    def _is_face(self, face: Support) -> bool:
        elements = EMPTY
        flats: list[Subset] = []
        for g in face:
            kind, value = self.keys[g]
            if kind == "e":
                elements |= 1 << value
            else:
                flats.append(value)
        for a in range(len(flats)):
            for b in range(a + 1, len(flats)):
                x, y = flats[a], flats[b]
                if not (is_subset(x, y) or is_subset(y, x)):
                    return False
        if any(not is_subset(elements, f) for f in flats):
            return False
        # a free subset with closure in the filter exists iff the closure
        # of all the elements is in the filter
        return not elements or self.matroid.closure(elements) not in (
            self.filter
        )

    def _linear_form(self, i: int) -> dict[int, int]:
        form: dict[int, int] = {}
        g = self.index.get(element_key(i))
        if g is not None:
            form[g] = 1
        for f in self.filter.proper:
            if contains(f, i):
                form[self.index[flat_key(f)]] = 1
        return form

    def _relations(self) -> tuple[dict[int, int], ...]:
        base = self._linear_form(0)
        relations = []
        for j in range(1, self.matroid.n):
            relation = dict(self._linear_form(j))
            for g, c in base.items():
                relation[g] = relation.get(g, 0) - c
            relations.append({g: c for g, c in relation.items() if c})
        return tuple(relations)

    # -- named classes ------------------------------------------------------

    def t_element(self, i: int) -> RingElement:
        """``t_i``, or zero when ``i`` has no generator."""
        g = self.index.get(element_key(i))
        return self.zero(1) if g is None else self.generator(g)

    def t_flat(self, flat: Subset) -> RingElement:
        """``t_F``, or zero when ``F`` has no generator."""
        g = self.index.get(flat_key(flat))
        return self.zero(1) if g is None else self.generator(g)

    def flag_monomial(
        self, flats: Sequence[Subset], elements: Sequence[int] = ()
    ) -> RingElement:
        """The product of ``t_i`` over ``elements`` and ``t_F`` over
        ``flats``; zero if any factor has no generator."""
        generators = []
        for key in [element_key(i) for i in elements] + [
            flat_key(f) for f in flats
        ]:
            g = self.index.get(key)
            if g is None:
                return self.zero(len(flats) + len(elements))
            generators.append(g)
        return self.product(generators)

    def maximal_cone_monomial(
        self, minimal: Subset, chain: Sequence[Subset] = ()
    ) -> RingElement:
        """Monomial of a top cone of the reduced fan through ``minimal``.

        ``minimal`` must be a minimal member of the filter. The chain is
        completed upwards through proper flats and paired with a free
        subset of ``minimal`` one smaller than its rank.
        """
        m = self.matroid
        s = m.flat_rank(minimal)
        flags = list(chain) or _saturated_chain(m, minimal)
        free = _free_subset(m, minimal, s - 1)
        return self.flag_monomial(
            [f for f in flags if f != m.ground], list(members(free))
        )

    def _normalizer_class(self) -> RingElement:
        minimal = min(
            self.filter.minimal(),
            key=lambda f: (self.matroid.flat_rank(f), f),
        )
        value = self.maximal_cone_monomial(minimal)
        if self.dim(self.top) != 1 or not value:
            raise NotTopDegree("top degree is not generated by a cone")
        return value

    def degree(self, element: RingElement) -> Fraction:
        """The degree map on ``A^r``, normalized so that the monomial of
        any maximal cone has degree 1.

        Raises:
            NotTopDegree: If ``element`` is not in degree ``r``.
        """
        if element.ring is not self or element.degree != self.top:
            raise NotTopDegree(
                f"degree map needs degree {self.top}, got {element.degree}"
            )
        return element.coords.get(0, Fraction(0)) / (
            self._normalizer.coords[0]
        )


def _saturated_chain(matroid: Matroid, bottom: Subset) -> list[Subset]:
    """A chain of flats from ``bottom`` up to rank ``rk(M) - 1``."""
    chain = [bottom] if bottom != matroid.ground else []
    current = bottom
    while chain and matroid.flat_rank(current) < matroid.rank_of_ground - 1:
        current = next(
            f
            for f in matroid.flats_of_rank(matroid.flat_rank(current) + 1)
            if is_subset(current, f)
        )
        chain.append(current)
    return chain


def _free_subset(matroid: Matroid, within: Subset, size: int) -> Subset:
    """The first independent subset of ``within`` with ``size`` elements,
    built greedily in element order."""
    chosen = EMPTY
    for e in members(within):
        if popcount(chosen) == size:
            break
        if matroid.rank(chosen | 1 << e) > popcount(chosen):
            chosen |= 1 << e
    return chosen


def chow_ring(matroid: Matroid, filt: Filter | None = None) -> ChowRing:
    """``A(M, P)``; the full filter gives the Chow ring of the matroid.

    Raises:
        HasLoops: If the matroid has a loop.
        InvalidFilter: If ``filt`` belongs to another matroid.
        TorsionDetected: If no integral basis could be certified.
    """
    return ChowRing(matroid, filt or full_filter(matroid))


def degree_map(ring: ChowRing, element: RingElement) -> int:
    """`ChowRing.degree` as an integer.

    Raises:
        NotTopDegree: If ``element`` is not in degree ``r``.
        NonIntegralDegree: If the degree is not an integer.
    """
    value = ring.degree(element)
    if value.denominator != 1:
        raise NonIntegralDegree(f"degree {value} is not an integer")
    return value.numerator


def multiply(ring: ChowRing, a: RingElement, b: RingElement) -> RingElement:
    return ring.multiply(a, b)


def feichtner_yuzvinsky_dims(matroid: Matroid) -> list[int]:
    """Sizes of the monomial basis indexed by chains of nonempty flats.

    A chain ``F_1 < ... < F_k`` carries exponents
    ``1 <= a_j <= rk F_j - rk F_(j-1) - 1`` with ``F_0`` empty.
    """
    r = matroid.rank_of_ground - 1
    flats = [f for f in matroid.flats if f != EMPTY]
    ending: dict[Subset, list[int]] = {}
    for f in flats:
        counts = [0] * (r + 1)
        below: list[tuple[int, list[int]]] = [(0, [1] + [0] * r)]
        below += [
            (matroid.flat_rank(g), ending[g])
            for g in flats
            if g != f and is_subset(g, f)
        ]
        for rank_below, ways in below:
            gap = matroid.flat_rank(f) - rank_below - 1
            for a in range(1, gap + 1):
                for d, w in enumerate(ways):
                    if w and d + a <= r:
                        counts[d + a] += w
        ending[f] = counts
    total = [1] + [0] * r
    for counts in ending.values():
        total = [x + y for x, y in zip(total, counts)]
    return total


# -- distinguished classes ----------------------------------------------------


def alpha(ring: ChowRing, i: int = 0) -> RingElement:
    """``t_i + sum`` of ``t_F`` over filter flats containing ``i``."""
    total = ring.t_element(i)
    for f in ring.filter.proper:
        if contains(f, i):
            total = total + ring.t_flat(f)
    return total


def beta(ring: ChowRing, i: int = 0) -> RingElement:
    """Sum of ``t_F`` over proper flats not containing ``i``.

    Raises:
        InvalidFilter: Unless the ring uses the full filter.
    """
    if not ring.filter.is_full():
        raise InvalidFilter("beta is defined for the full filter")
    total = ring.zero(1)
    for f in ring.filter.proper:
        if not contains(f, i):
            total = total + ring.t_flat(f)
    return total


def classes_independent_of_element(ring: ChowRing) -> bool:
    """Both ``alpha`` and ``beta`` give the same class for every element."""
    if not all(
        alpha(ring, i) == alpha(ring, 0) for i in range(ring.matroid.n)
    ):
        return False
    if ring.filter.is_full():
        return all(
            beta(ring, i) == beta(ring, 0) for i in range(ring.matroid.n)
        )
    return True


def mu_via_chow(ring: ChowRing, k: int | None = None) -> list[int]:
    """``deg(alpha^(r-k) beta^k)``, for one ``k`` or for all of them."""
    r = ring.top
    a, b = alpha(ring), beta(ring)
    degrees = range(r + 1) if k is None else [k]
    values = []
    for j in degrees:
        if not 0 <= j <= r:
            raise BadParameters(f"k must lie in 0..{r}, got {j}")
        values.append(
            degree_map(ring, ring.power(a, r - j) * ring.power(b, j))
        )
    return values


# -- reports ------------------------------------------------------------------


@dataclass(frozen=True)
class PairingReport:
    """Gram matrix of ``(a, b) -> deg(ab)`` on ``A^k x A^(r-k)``."""

    degree: int
    gram: list[list[Fraction]]
    determinant: Fraction | None
    unimodular: bool


@dataclass(frozen=True)
class LefschetzReport:
    degree: int
    rank: int
    source_dim: int
    target_dim: int

    @property
    def passed(self) -> bool:
        return self.source_dim == self.target_dim == self.rank


@dataclass(frozen=True)
class BilinearFormReport:
    """A symmetric form restricted to the primitive classes of a degree."""

    degree: int
    gram: list[list[Fraction]]
    rank: int
    signature: tuple[int, int, int]
    primitive_dim: int

    @property
    def passed(self) -> bool:
        return self.signature == (self.primitive_dim, 0, 0)


@dataclass(frozen=True)
class KTReport:
    lhs: Fraction
    rhs: Fraction

    @property
    def passed(self) -> bool:
        return self.lhs <= self.rhs


@dataclass(frozen=True)
class LocalHodgeReport:
    """Poincaré duality and Hodge-Riemann on ``A / ann(x)``."""

    dims: list[int]
    duality: bool
    forms: list[BilinearFormReport]

    @property
    def passed(self) -> bool:
        return self.duality and all(f.passed for f in self.forms)


@dataclass(frozen=True)
class StabilityReport:
    """Hodge-Riemann forms of two ample classes, degree by degree."""

    first: list[BilinearFormReport]
    second: list[BilinearFormReport]
    distinct: bool

    @property
    def passed(self) -> bool:
        return self.distinct and all(
            a.passed == b.passed and a.signature == b.signature
            for a, b in zip(self.first, self.second)
        )

    def signatures(self) -> dict[str, list[list[int]]]:
        return {
            str(a.degree): [list(a.signature), list(b.signature)]
            for a, b in zip(self.first, self.second)
        }


# -- Hodge theory -------------------------------------------------------------


def poincare_pairing(ring: ChowRing, k: int) -> PairingReport:
    r = ring.top
    left, right = ring.dim(k), ring.dim(r - k)
    gram = [
        [
            ring.degree(
                ring.basis_element(k, i) * ring.basis_element(r - k, j)
            )
            for j in range(right)
        ]
        for i in range(left)
    ]
    if left != right:
        return PairingReport(k, gram, None, False)
    det = linalg.determinant(gram)
    return PairingReport(k, gram, det, abs(det) == 1)


def ample_from_submodular(
    ring: ChowRing, c: Submodular | None = None
) -> RingElement:
    """``sum c(F) t_F`` over proper flats, certified ample on the fan.

    The default ``c(F) = |F| (|E| - |F|)``.

    Raises:
        InvalidFilter: Unless the ring uses the full filter.
        NotAmple: If the fan check rejects the class.
    """
    if not ring.filter.is_full():
        raise InvalidFilter("ample classes are built on the full filter")
    values = _submodular_values(ring.matroid, c)
    fan = bergman_fan(ring.matroid)
    phi = PLFunction(
        fan, tuple(values[key[1]] for key in fan.ray_keys)
    )
    if not ample_check(phi):
        raise NotAmple("the piecewise linear function is not ample")
    total = ring.zero(1)
    for f in ring.filter.proper:
        if values[f]:
            total = total + ring.t_flat(f).scale(values[f])
    return total


def _submodular_values(
    matroid: Matroid, c: Submodular | None
) -> dict[Subset, Fraction]:
    n = matroid.n
    values = {}
    for f in matroid.proper_flats():
        if c is None:
            value: Scalar = popcount(f) * (n - popcount(f))
        elif isinstance(c, Mapping):
            value = c[f]
        else:
            value = c(f)
        values[f] = Fraction(value)
    return values


def hard_lefschetz_check(
    ring: ChowRing, ell: RingElement, k: int
) -> LefschetzReport:
    r = ring.top
    if not 0 <= 2 * k <= r:
        raise BadParameters(f"hard Lefschetz needs 0 <= 2k <= {r}")
    matrix = ring.multiplication_matrix(ring.power(ell, r - 2 * k), k)
    rank = linalg.rank(matrix, width=ring.dim(k))
    return LefschetzReport(k, rank, ring.dim(k), ring.dim(r - k))


def primitive_classes(
    ring: GradedRing, ell: RingElement, k: int, top: int
) -> list[list[Fraction]]:
    """Kernel of ``ell^(top + 1 - 2k)`` on degree ``k``."""
    if top + 1 - k > ring.top:
        return [
            [Fraction(int(i == j)) for j in range(ring.dim(k))]
            for i in range(ring.dim(k))
        ]
    matrix = ring.multiplication_matrix(
        ring.power(ell, top + 1 - 2 * k), k
    )
    return linalg.nullspace(matrix, width=ring.dim(k))


def _form_report(
    k: int,
    vectors: Sequence[Sequence[Fraction]],
    value: Callable[[RingElement, RingElement], Fraction],
    ring: GradedRing,
) -> BilinearFormReport:
    elements = [ring.element(k, v) for v in vectors]
    sign = (-1) ** k
    gram = [[sign * value(a, b) for b in elements] for a in elements]
    return BilinearFormReport(
        degree=k,
        gram=gram,
        rank=linalg.rank(gram, width=len(elements)),
        signature=linalg.signature(gram),
        primitive_dim=len(elements),
    )


def hr_check(
    ring: ChowRing, ell: RingElement, k: int
) -> BilinearFormReport:
    """Signature of ``(-1)^k deg(a ell^(r-2k) b)`` on primitive classes."""
    r = ring.top
    if not 0 <= 2 * k <= r:
        raise BadParameters(f"Hodge-Riemann needs 0 <= 2k <= {r}")
    middle = ring.power(ell, r - 2 * k)
    return _form_report(
        k,
        primitive_classes(ring, ell, k, r),
        lambda a, b: ring.degree(a * middle * b),
        ring,
    )


def cubic_submodular(n: int) -> Callable[[Subset], int]:
    """``c(F) = |F| (n^2 - |F|^2)``, strictly concave in ``|F|`` and zero
    on the empty and the full set."""

    def c(flat: Subset) -> int:
        size = popcount(flat)
        return size * (n * n - size * size)

    return c


def signature_stability_check(
    ring: ChowRing,
    first: RingElement,
    second: RingElement,
    degrees: Sequence[int] | None = None,
) -> StabilityReport:
    """`hr_check` on two ample classes for each degree up to the middle.

    Raises:
        BadParameters: If a degree is above the middle.
    """
    chosen = range(ring.top // 2 + 1) if degrees is None else degrees
    report = StabilityReport(
        first=[hr_check(ring, first, k) for k in chosen],
        second=[hr_check(ring, second, k) for k in chosen],
        distinct=first != second,
    )
    logger.debug("signature stability: %s", report.passed)
    return report


def lefschetz_decomposition_check(
    ring: ChowRing, ell: RingElement, k: int
) -> bool:
    """``A^k`` splits as the sum of ``ell^j P^(k-j)``, orthogonally.

    Above the middle degree the check is that ``ell^(2k-r)`` maps
    ``A^(r-k)`` onto ``A^k``.
    """
    r = ring.top
    dim = ring.dim(k)
    if 2 * k > r:
        matrix = ring.multiplication_matrix(
            ring.power(ell, 2 * k - r), r - k
        )
        return linalg.rank(matrix, width=ring.dim(r - k)) == dim
    pieces: list[list[RingElement]] = []
    for j in range(k + 1):
        shift = ring.power(ell, j)
        pieces.append(
            [
                shift * ring.element(k - j, v)
                for v in primitive_classes(ring, ell, k - j, r)
            ]
        )
    vectors = [e.vector() for piece in pieces for e in piece]
    if len(vectors) != dim or linalg.rank(vectors, width=dim) != dim:
        return False
    middle = ring.power(ell, r - 2 * k)
    for a_index, first in enumerate(pieces):
        for second in pieces[a_index + 1 :]:
            for a in first:
                for b in second:
                    if ring.degree(a * middle * b):
                        return False
    return True


def kt_inequality_check(
    ring: ChowRing, a: RingElement, b: RingElement
) -> KTReport:
    """``deg(a^(r-2) b^2) deg(a^r) <= deg(a^(r-1) b)^2``."""
    r = ring.top
    if r < 2:
        raise BadParameters("the inequality needs r >= 2")
    lhs = ring.degree(ring.power(a, r - 2) * ring.power(b, 2)) * (
        ring.degree(ring.power(a, r))
    )
    rhs = ring.degree(ring.power(a, r - 1) * b) ** 2
    return KTReport(lhs, rhs)


def local_hr_check(
    ring: ChowRing, generator: int, ell: RingElement
) -> LocalHodgeReport:
    """Hodge theory of the quotient by the annihilator of a generator.

    The quotient in degree ``k`` is the image of multiplication by the
    generator ``x``, with degree map ``b -> deg(b x)`` in degree
    ``r - 1``.
    """
    r = ring.top
    x = ring.generator(generator)
    representatives: list[list[int]] = []
    for k in range(r):
        matrix = ring.multiplication_matrix(x, k)
        representatives.append(
            linalg.pivot_columns(matrix, width=ring.dim(k))
        )
    dims = [len(reps) for reps in representatives]

    def pair(a: RingElement, b: RingElement) -> Fraction:
        return ring.degree(a * b * x)

    duality = True
    for k in range(r):
        left = representatives[k]
        right = representatives[r - 1 - k]
        if len(left) != len(right):
            duality = False
            break
        gram = [
            [
                pair(
                    ring.basis_element(k, i),
                    ring.basis_element(r - 1 - k, j),
                )
                for j in right
            ]
            for i in left
        ]
        if gram and linalg.determinant(gram) == 0:
            duality = False
            break
    forms = []
    for k in range(r):
        if 2 * k > r - 1:
            break
        reps = representatives[k]
        lifted = [
            [Fraction(int(i == j)) for i in range(ring.dim(k))] for j in reps
        ]
        power = ring.power(ell, r - 2 * k) * x
        kernel_matrix = [
            list(column)
            for column in zip(
                *[(power * ring.element(k, v)).vector() for v in lifted]
            )
        ]
        kernel = linalg.nullspace(kernel_matrix, width=len(reps))
        primitives = [
            [
                sum(
                    (c * lifted[j][i] for j, c in enumerate(coeffs)),
                    start=Fraction(0),
                )
                for i in range(ring.dim(k))
            ]
            for coeffs in kernel
        ]
        middle = ring.power(ell, r - 1 - 2 * k)
        forms.append(
            _form_report(
                k, primitives, lambda a, b: pair(a * middle, b), ring
            )
        )
    return LocalHodgeReport(dims, duality, forms)
