# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""Matroidal flips and the decomposition of Chow rings they induce.

Adjoining a maximal missing flat ``P`` to a filter changes ``A(M, P)``
into ``A(M, P + {P})``. The ring morphism ``phi`` between them, together
with the maps ``psi^p`` out of the Chow ring of the contraction ``M/P``,
splits every degree of the new ring; `decomposition_check` verifies the
dimension count and the joint rank of these maps.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations

from hodgematroid import linalg
from hodgematroid.bitsets import (
    EMPTY,
    Subset,
    contains,
    expand,
    format_subset,
    is_subset,
    members,
    popcount,
    subsets_of,
)
from hodgematroid.chow import (
    ChowRing,
    Filter,
    chow_ring,
    flip,
    trivial_filter,
)
from hodgematroid.exceptions import RelationNotPreserved
from hodgematroid.matroid import Matroid
from hodgematroid.ring import (
    LinearMap,
    RingElement,
    Support,
    map_from_faces,
    ring_map_images,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RingMorphism:
    """A graded ring map given by the images of the generators."""

    source: ChowRing = field(repr=False)
    target: ChowRing = field(repr=False)
    images: tuple[RingElement, ...]

    def apply_generators(self, generators: Support) -> RingElement:
        value = self.target.one()
        for g in generators:
            value = value * self.images[g]
        return value

    def matrix(self, k: int) -> LinearMap:
        return ring_map_images(self.source, self.target, self.images, k)


def _relation_monomials(ring: ChowRing) -> list[Support]:
    """Generator sets whose products vanish by definition: incomparable
    flat pairs, an element outside a flat, and free sets of elements
    whose closure is in the filter."""
    m = ring.matroid
    filt = ring.filter
    flats = [
        (g, key[1]) for g, key in enumerate(ring.keys) if key[0] == "f"
    ]
    elements = {
        key[1]: g for g, key in enumerate(ring.keys) if key[0] == "e"
    }
    monomials: list[Support] = []
    for (g1, a), (g2, b) in combinations(flats, 2):
        if not (is_subset(a, b) or is_subset(b, a)):
            monomials.append((g1, g2))
    for i, gi in elements.items():
        for g, f in flats:
            if not contains(f, i):
                monomials.append(tuple(sorted((gi, g))))
    usable = sum(1 << i for i in elements)
    for free in subsets_of(usable):
        if free == EMPTY or m.rank(free) != popcount(free):
            continue
        if m.closure(free) in filt:
            generators = sorted(elements[i] for i in members(free))
            monomials.append(tuple(generators))
    return monomials


def phi_map(
    source: ChowRing, target: ChowRing, flat: Subset
) -> RingMorphism:
    """``t_F -> t_F`` and ``t_i -> t_i + t_P`` for ``i`` in ``P``.

    Generators absent from the target are read as zero.

    Raises:
        RelationNotPreserved: If a defining relation of the source has a
            nonzero image.
    """
    images = []
    for kind, value in source.keys:
        if kind == "f":
            images.append(target.t_flat(value))
        else:
            image = target.t_element(value)
            if contains(flat, value):
                image = image + target.t_flat(flat)
            images.append(image)
    morphism = RingMorphism(source, target, tuple(images))
    for monomial in _relation_monomials(source):
        if morphism.apply_generators(monomial):
            labels = ", ".join(source.labels[g] for g in monomial)
            raise RelationNotPreserved(f"product of {labels} maps to nonzero")
    for relation in source.presentation.relations:
        total = target.zero(1)
        for g, c in relation.items():
            total = total + images[g].scale(c)
        if total:
            raise RelationNotPreserved("a linear relation maps to nonzero")
    return morphism


def psi_map(
    contraction: ChowRing,
    target: ChowRing,
    flat: Subset,
    p: int,
    k: int,
) -> LinearMap:
    """``t_D -> t_P^p t_(D + P)`` from degree ``k`` of ``A(M/P)``.

    A flat of ``M/P`` is identified with its union with ``P``.
    """
    m = target.matroid
    kept = list(members(m.ground & ~flat))
    top = target.t_flat(flat)
    shift = target.power(top, p)

    def image(face: Support) -> RingElement:
        lifted = [
            expand(contraction.keys[g][1], kept) | flat for g in face
        ]
        return shift * target.flag_monomial(lifted)

    return map_from_faces(contraction, target, k, p, image)


def gamma_map(
    restriction: ChowRing,
    target: ChowRing,
    flat: Subset,
    p: int,
    k: int,
) -> LinearMap:
    """``t_D -> t_P^p t_D`` from degree ``k`` of ``A(M|P)``.

    A flat of ``M|P`` is identified with the flat of ``M`` it stands for.
    """
    kept = list(members(flat))
    shift = target.power(target.t_flat(flat), p)

    def image(face: Support) -> RingElement:
        lifted = [expand(restriction.keys[g][1], kept) for g in face]
        return shift * target.flag_monomial(lifted)

    return map_from_faces(restriction, target, k, p, image)


@dataclass(frozen=True)
class FlipReport:
    """Dimensions around one flip, and whether they decompose."""

    flat: Subset
    before: list[int]
    after: list[int]
    contraction: list[int]
    dimensions_match: bool
    full_rank: list[bool]

    @property
    def passed(self) -> bool:
        return self.dimensions_match and all(self.full_rank)

    def to_json(self) -> dict[str, object]:
        return {
            "flat": format_subset(self.flat),
            "before": self.before,
            "after": self.after,
            "contraction": self.contraction,
            "passed": self.passed,
        }


def decomposition_check(
    matroid: Matroid,
    filt: Filter,
    flat: Subset,
    *,
    before: ChowRing | None = None,
    after: ChowRing | None = None,
) -> FlipReport:
    """Check the splitting of ``A(M, P + {P})`` in every degree.

    Raises:
        NotMaximalFlat: If ``flat`` cannot be adjoined to ``filt``.
        RelationNotPreserved: If ``phi`` is not well defined.
    """
    bigger = flip(filt, flat)
    source = before or chow_ring(matroid, filt)
    target = after or chow_ring(matroid, bigger)
    morphism = phi_map(source, target, flat)
    contraction_matroid = matroid.contraction(flat)
    contraction = chow_ring(contraction_matroid)
    r = target.top
    s = matroid.flat_rank(flat)
    expected = [
        source.dim(k)
        + sum(contraction.dim(k - p) for p in range(1, s))
        for k in range(r + 1)
    ]
    ranks = []
    for k in range(r + 1):
        columns = list(morphism.matrix(k).columns)
        for p in range(1, s):
            if 0 <= k - p <= contraction.top:
                psi = psi_map(contraction, target, flat, p, k - p)
                columns += psi.columns
        ranks.append(
            linalg.rank([list(c) for c in columns], width=target.dim(k))
            == target.dim(k)
        )
    report = FlipReport(
        flat=flat,
        before=source.dims,
        after=target.dims,
        contraction=contraction.dims,
        dimensions_match=expected == target.dims,
        full_rank=ranks,
    )
    logger.info(
        "flip at %s: %s -> %s (%s)",
        format_subset(flat),
        report.before,
        report.after,
        "ok" if report.passed else "FAILED",
    )
    return report


def flip_chain(matroid: Matroid) -> list[FlipReport]:
    """Run `decomposition_check` along flips from the trivial filter to
    the full one, adjoining the largest missing flat first."""
    filt = trivial_filter(matroid)
    current = chow_ring(matroid, filt)
    reports = []
    while not filt.is_full():
        flat = filt.maximal_missing()[0]
        bigger = flip(filt, flat)
        following = chow_ring(matroid, bigger)
        reports.append(
            decomposition_check(
                matroid, filt, flat, before=current, after=following
            )
        )
        filt, current = bigger, following
    return reports


def restriction_ring(matroid: Matroid, flat: Subset) -> ChowRing:
    """The Chow ring of ``M|P``, the source of the ``gamma`` maps."""
    return chow_ring(matroid.restriction(flat))
