# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""Graded rings presented by a monomial ideal and linear relations.

A `Presentation` lists generators, a predicate telling which supports
(sets of generators) survive the monomial ideal, and linear forms in the
generators. `GradedRing` computes, degree by degree, the quotient of the
surviving monomials by the ideal generated by the linear forms, with an
explicit Z-basis when every pivot is a unit.

Both the matroid Chow rings and the Chow rings of unimodular fans are
built from presentations of this kind.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TypeAlias

from hodgematroid import linalg
from hodgematroid.exceptions import (
    BadParameters,
    MatroidError,
    RelationNotPreserved,
    TorsionDetected,
)
from hodgematroid.reduction import UnitPivotReducer

logger = logging.getLogger(__name__)

Scalar: TypeAlias = int | Fraction
# A monomial is a sorted tuple of (generator, exponent) pairs
Monomial: TypeAlias = tuple[tuple[int, int], ...]
Support: TypeAlias = tuple[int, ...]


@dataclass(frozen=True)
class Presentation:
    """Generators, surviving supports and linear relations.

    ``is_face`` must be closed under taking subsets and accept the empty
    support. ``relations`` are ``{generator: coefficient}`` forms.
    """

    labels: tuple[str, ...]
    is_face: Callable[[Support], bool]
    relations: tuple[dict[int, int], ...]
    top_degree: int


def monomial_from_generators(generators: Sequence[int]) -> Monomial:
    """Collect a list of generators, with repetition, into a monomial."""
    counts: dict[int, int] = {}
    for g in generators:
        counts[g] = counts.get(g, 0) + 1
    return tuple(sorted(counts.items()))


def monomial_degree(monomial: Monomial) -> int:
    return sum(e for _, e in monomial)


def support(monomial: Monomial) -> Support:
    return tuple(g for g, _ in monomial)


def times(a: Monomial, b: Monomial) -> Monomial:
    counts = dict(a)
    for g, e in b:
        counts[g] = counts.get(g, 0) + e
    return tuple(sorted(counts.items()))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Tuples of ``parts`` positive integers summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


class GradedRing:
    """The quotient ring of a `Presentation`, computed up to its top degree.

    Raises:
        TorsionDetected: When ``require_integral`` is set and some degree
            has no unit-pivot reduction.
        MatroidError: If the ring does not vanish above ``top_degree``.
    """

    def __init__(
        self, presentation: Presentation, *, require_integral: bool = False
    ) -> None:
        self.presentation = presentation
        self.labels = presentation.labels
        self.top = presentation.top_degree
        self.faces = self._faces(self.top + 1)
        self.monomials: list[list[Monomial]] = []
        self.columns: list[dict[Monomial, int]] = []
        self.reducers: list[UnitPivotReducer] = []
        self.bases: list[list[Monomial]] = []
        self._basis_index: list[dict[int, int]] = []
        self._products: dict[tuple[int, int, int, int], dict[int, Fraction]]
        self._products = {}
        for k in range(self.top + 2):
            self._build_degree(k)
        if self.bases[self.top + 1]:
            raise MatroidError(
                f"ring does not vanish in degree {self.top + 1}"
            )
        self.integral = all(r.integral for r in self.reducers)
        if require_integral and not self.integral:
            raise TorsionDetected("no unit-pivot basis found")
        logger.debug(
            "graded ring on %d generators: dims %s",
            len(self.labels),
            self.dims,
        )

    # -- construction --------------------------------------------------------

    def _faces(self, max_size: int) -> list[list[Support]]:
        faces: list[list[Support]] = [[()]]
        generators = range(len(self.labels))
        for size in range(1, max_size + 1):
            layer = [
                face + (g,)
                for face in faces[-1]
                for g in generators
                if (not face or g > face[-1])
                and self.presentation.is_face(face + (g,))
            ]
            if not layer:
                break
            faces.append(layer)
        return faces

    def _build_degree(self, k: int) -> None:
        monomials: list[Monomial] = []
        for size in range(min(k, len(self.faces) - 1) + 1):
            if size == 0 and k > 0:
                continue
            for face in self.faces[size]:
                for exponents in _compositions(k, size) if size else [()]:
                    monomials.append(tuple(zip(face, exponents)))
        index = {m: i for i, m in enumerate(monomials)}
        # non-squarefree monomials pivot first so bases lean squarefree
        priority = [
            0 if any(e > 1 for _, e in m) else 1 for m in monomials
        ]
        reducer = UnitPivotReducer(priority)
        if k > 0:
            for lower in self.monomials[k - 1]:
                for relation in self.presentation.relations:
                    row: dict[int, int] = {}
                    for g, c in relation.items():
                        target = times(lower, ((g, 1),))
                        column = index.get(target)
                        if column is not None:
                            row[column] = row.get(column, 0) + c
                    reducer.add(row)
        reducer.finish()
        basis = [i for i in range(len(monomials)) if not reducer.is_pivot(i)]
        self.monomials.append(monomials)
        self.columns.append(index)
        self.reducers.append(reducer)
        self.bases.append([monomials[i] for i in basis])
        self._basis_index.append({c: j for j, c in enumerate(basis)})

    # -- structure -----------------------------------------------------------

    @property
    def dims(self) -> list[int]:
        """``dim A^k`` for ``k = 0..top``."""
        return [len(b) for b in self.bases[: self.top + 1]]

    def hilbert_function(self) -> list[int]:
        return self.dims

    def dim(self, k: int) -> int:
        return len(self.bases[k]) if 0 <= k <= self.top else 0

    def monomial(self, monomial: Monomial) -> RingElement:
        """The class of a monomial; zero if its support is not a face."""
        k = monomial_degree(monomial)
        if k > self.top:
            return self.zero(k)
        column = self.columns[k].get(monomial)
        if column is None:
            return self.zero(k)
        coords: dict[int, Fraction] = {}
        for c, v in self.reducers[k].normal_form(column).items():
            coords[self._basis_index[k][c]] = Fraction(v)
        return RingElement(self, k, coords)

    def product(self, generators: Sequence[int]) -> RingElement:
        return self.monomial(monomial_from_generators(generators))

    def generator(self, g: int) -> RingElement:
        return self.monomial(((g, 1),))

    def one(self) -> RingElement:
        return RingElement(self, 0, {0: Fraction(1)})

    def zero(self, k: int) -> RingElement:
        return RingElement(self, k, {})

    def element(
        self, k: int, coordinates: Sequence[Scalar] | Mapping[int, Scalar]
    ) -> RingElement:
        items = (
            coordinates.items()
            if isinstance(coordinates, Mapping)
            else enumerate(coordinates)
        )
        coords = {j: Fraction(v) for j, v in items if v}
        if any(not 0 <= j < self.dim(k) for j in coords):
            raise BadParameters(f"coordinate out of range in degree {k}")
        return RingElement(self, k, coords)

    def linear(self, coefficients: Mapping[int, Scalar]) -> RingElement:
        """``sum coefficients[g] * generator(g)`` in degree 1."""
        total = self.zero(1)
        for g, c in sorted(coefficients.items()):
            if c:
                total = total + self.generator(g).scale(c)
        return total

    def basis_element(self, k: int, j: int) -> RingElement:
        return RingElement(self, k, {j: Fraction(1)})

    def _basis_product(self, k1: int, j1: int, k2: int, j2: int) -> dict[
        int, Fraction
    ]:
        if (k1, j1) > (k2, j2):
            k1, j1, k2, j2 = k2, j2, k1, j1
        key = (k1, j1, k2, j2)
        cached = self._products.get(key)
        if cached is None:
            product = times(self.bases[k1][j1], self.bases[k2][j2])
            cached = self.monomial(product).coords
            self._products[key] = cached
        return cached

    def multiply(self, a: RingElement, b: RingElement) -> RingElement:
        k = a.degree + b.degree
        if k > self.top:
            return self.zero(k)
        coords: dict[int, Fraction] = {}
        for j1, v1 in a.coords.items():
            for j2, v2 in b.coords.items():
                for j, v in self._basis_product(
                    a.degree, j1, b.degree, j2
                ).items():
                    coords[j] = coords.get(j, Fraction(0)) + v1 * v2 * v
        return RingElement(self, k, {j: v for j, v in coords.items() if v})

    def power(self, a: RingElement, exponent: int) -> RingElement:
        result = self.one()
        for _ in range(exponent):
            result = self.multiply(result, a)
        return result

    def multiplication_matrix(
        self, a: RingElement, k: int
    ) -> list[list[Fraction]]:
        """Matrix of ``x -> a x`` on degree ``k``, as rows."""
        target = k + a.degree
        columns = [
            self.multiply(a, self.basis_element(k, j)).vector()
            for j in range(self.dim(k))
        ]
        return [
            [col[i] for col in columns] for i in range(self.dim(target))
        ]

    def describe(self, element: RingElement) -> str:
        if not element.coords:
            return "0"
        terms = []
        for j, v in sorted(element.coords.items()):
            body = "*".join(
                self.labels[g] if e == 1 else f"{self.labels[g]}^{e}"
                for g, e in self.bases[element.degree][j]
            ) or "1"
            terms.append(body if v == 1 else f"{v}*{body}")
        return " + ".join(terms)


@dataclass(frozen=True, eq=False)
class RingElement:
    """A homogeneous element: sparse rational coordinates on a basis."""

    ring: GradedRing = field(repr=False)
    degree: int
    coords: dict[int, Fraction]

    def _check(self, other: RingElement) -> None:
        if other.ring is not self.ring or other.degree != self.degree:
            raise BadParameters("elements of different rings or degrees")

    def __add__(self, other: RingElement) -> RingElement:
        self._check(other)
        coords = dict(self.coords)
        for j, v in other.coords.items():
            coords[j] = coords.get(j, Fraction(0)) + v
        return RingElement(
            self.ring, self.degree, {j: v for j, v in coords.items() if v}
        )

    def __neg__(self) -> RingElement:
        return self.scale(-1)

    def __sub__(self, other: RingElement) -> RingElement:
        return self + (-other)

    def __mul__(self, other: RingElement) -> RingElement:
        return self.ring.multiply(self, other)

    def __pow__(self, exponent: int) -> RingElement:
        return self.ring.power(self, exponent)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        return (
            self.ring is other.ring
            and self.degree == other.degree
            and self.coords == other.coords
        )

    def __hash__(self) -> int:
        return hash((self.degree, tuple(sorted(self.coords.items()))))

    def __bool__(self) -> bool:
        return bool(self.coords)

    def scale(self, factor: Scalar) -> RingElement:
        if not factor:
            return self.ring.zero(self.degree)
        return RingElement(
            self.ring,
            self.degree,
            {j: v * factor for j, v in self.coords.items()},
        )

    def vector(self) -> list[Fraction]:
        out = [Fraction(0)] * self.ring.dim(self.degree)
        for j, v in self.coords.items():
            out[j] = v
        return out

    def __str__(self) -> str:
        return self.ring.describe(self)


@dataclass(frozen=True)
class LinearMap:
    """A linear map between graded pieces, one column per source basis
    element."""

    source_dim: int
    target_dim: int
    columns: tuple[tuple[Fraction, ...], ...]

    def rank(self) -> int:
        return linalg.rank(
            [list(c) for c in self.columns], width=self.target_dim
        )


def ring_map_images(
    source: GradedRing,
    target: GradedRing,
    images: Sequence[RingElement],
    k: int,
) -> LinearMap:
    """Matrix in degree ``k`` of the ring morphism sending generator ``g``
    to the degree one element ``images[g]``."""
    columns = []
    for basis_monomial in source.bases[k]:
        value = target.one()
        for g, e in basis_monomial:
            value = value * target.power(images[g], e)
        columns.append(tuple(value.vector()))
    return LinearMap(source.dim(k), target.dim(k), tuple(columns))


def squarefree_faces(ring: GradedRing, k: int) -> list[Support]:
    """Supports of the squarefree monomials of degree ``k``."""
    return list(ring.faces[k]) if k < len(ring.faces) else []


def map_from_faces(
    source: GradedRing,
    target: GradedRing,
    k: int,
    shift: int,
    image: Callable[[Support], RingElement],
) -> LinearMap:
    """Linear map defined on squarefree monomials of degree ``k``.

    The squarefree monomials are required to span the source degree; any
    linear dependency among them must map to zero.

    Raises:
        RelationNotPreserved: If a dependency has a nonzero image.
        MatroidError: If the squarefree monomials do not span.
    """
    faces = squarefree_faces(source, k)
    spans = [source.product(face).vector() for face in faces]
    images = [image(face).vector() for face in faces]
    target_dim = target.dim(k + shift)
    for relation in linalg.nullspace(
        linalg.transpose(spans, source.dim(k)) if spans else [],
        width=len(faces),
    ):
        total = [
            sum(
                (c * images[f][i] for f, c in enumerate(relation)),
                start=Fraction(0),
            )
            for i in range(target_dim)
        ]
        if any(total):
            raise RelationNotPreserved(
                f"a relation in degree {k} has a nonzero image"
            )
    columns = []
    for j in range(source.dim(k)):
        unit = [Fraction(int(i == j)) for i in range(source.dim(k))]
        x = linalg.solve(spans, unit)
        if x is None:
            raise MatroidError(
                f"squarefree monomials do not span degree {k}"
            )
        columns.append(
            tuple(
                sum(
                    (c * images[f][i] for f, c in enumerate(x)),
                    start=Fraction(0),
                )
                for i in range(target_dim)
            )
        )
    return LinearMap(source.dim(k), target_dim, tuple(columns))
