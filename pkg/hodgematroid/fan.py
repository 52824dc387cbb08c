# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""Bergman fans, piecewise linear functions and their convexity.

Fans live in ``N = Z^E / <e_0 + ... + e_(n-1)>``. Eliminating the
coordinate of element 0 identifies ``N`` with ``Z^(n-1)``: the vector
``e_S`` has coordinate ``[j in S] - [0 in S]`` at position ``j - 1``.

Every cone built here is simplicial, so a cone is stored as the sorted
tuple of its ray indices and a fan as the set of those tuples.
"""

from __future__ import annotations

import logging
from collections.abc import Collection, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
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
    subsets_of,
)
from hodgematroid.constants import AMPLE_PERTURBATION, FAN_PAIR_LIMIT
from hodgematroid.exceptions import (
    ConeNotInFan,
    HasLoops,
    InvalidFilter,
    NotUnimodular,
)
from hodgematroid.lp import maximize
from hodgematroid.matroid import Matroid
from hodgematroid.ring import GradedRing, Presentation, Support

logger = logging.getLogger(__name__)

Scalar: TypeAlias = int | Fraction
LatticePoint: TypeAlias = tuple[int, ...]
# ("e", i) for the ray of an element, ("f", mask) for the ray of a flat
RayKey: TypeAlias = tuple[str, int]
RayIds: TypeAlias = tuple[int, ...]


def element_key(i: int) -> RayKey:
    return ("e", i)


def flat_key(flat: Subset) -> RayKey:
    return ("f", flat)


def key_label(key: RayKey) -> str:
    kind, value = key
    return f"t{value}" if kind == "e" else f"t{format_subset(value)}"


def lattice_point(n: int, s: Subset) -> LatticePoint:
    """The image of ``e_S`` in ``N``, with element 0 eliminated."""
    base = 1 if contains(s, 0) else 0
    return tuple((s >> j & 1) - base for j in range(1, n))


@dataclass(frozen=True)
class Cone:
    rays: RayIds
    generators: tuple[LatticePoint, ...]

    @property
    def dimension(self) -> int:
        if not self.generators:
            return 0
        return linalg.rank(
            [list(g) for g in self.generators], width=len(self.generators[0])
        )


@dataclass(frozen=True)
class Fan:
    """A simplicial fan given by its rays and the ray sets of its cones.

    Attributes:
        ambient: Rank of the lattice ``N``.
        rays: Primitive generators, one per ray.
        ray_keys: What each ray stands for.
        cones: Ray index tuples of every cone, the zero cone included.
    """

    ambient: int
    rays: tuple[LatticePoint, ...]
    ray_keys: tuple[RayKey, ...]
    cones: frozenset[RayIds] = field(repr=False)

    def __contains__(self, rays: object) -> bool:
        return rays in self.cones

    def cone(self, rays: RayIds) -> Cone:
        if rays not in self.cones:
            raise ConeNotInFan(f"no cone on rays {rays}")
        return Cone(rays, tuple(self.rays[r] for r in rays))

    @cached_property
    def maximal_cones(self) -> list[RayIds]:
        ordered = sorted(self.cones, key=lambda c: (-len(c), c))
        maximal: list[RayIds] = []
        for c in ordered:
            if not any(set(c) < set(m) for m in maximal):
                maximal.append(c)
        return sorted(maximal)

    @property
    def dimension(self) -> int:
        return max((self.cone(c).dimension for c in self.cones), default=0)

    def labels(self) -> list[str]:
        return [key_label(k) for k in self.ray_keys]

    def index_of(self, key: RayKey) -> int:
        return self.ray_keys.index(key)


# -- Bergman fans -------------------------------------------------------------


def _check_filter(matroid: Matroid, flats: Collection[Subset]) -> None:
    if not matroid.is_loop_free():
        raise HasLoops(f"{matroid!r} has loops")
    if matroid.ground not in flats or EMPTY in flats:
        raise InvalidFilter("a filter holds the ground set and no empty set")
    for f in flats:
        if not matroid.is_flat(f):
            raise InvalidFilter(f"{format_subset(f)} is not a flat")


def _chains(flats: Sequence[Subset]) -> Iterator[tuple[Subset, ...]]:
    """Chains of ``flats`` (sorted by rank), the empty chain first."""

    def extend(chain: tuple[Subset, ...], start: int) -> Iterator[
        tuple[Subset, ...]
    ]:
        yield chain
        for k in range(start, len(flats)):
            f = flats[k]
            if not chain or (f != chain[-1] and is_subset(chain[-1], f)):
                yield from extend(chain + (f,), k + 1)

    return extend((), 0)


def _filtered_fan(
    matroid: Matroid, flats: Collection[Subset], *, reduced: bool
) -> Fan:
    _check_filter(matroid, flats)
    n = matroid.n
    ground = matroid.ground
    proper = sorted(
        (f for f in flats if f != ground),
        key=lambda f: (matroid.flat_rank(f), f),
    )
    keys = [
        element_key(i)
        for i in range(n)
        if matroid.closure(1 << i) not in flats
    ] + [flat_key(f) for f in proper]
    index = {key: r for r, key in enumerate(keys)}
    rays = tuple(
        lattice_point(n, 1 << k[1] if k[0] == "e" else k[1]) for k in keys
    )
    cones: set[RayIds] = set()
    for chain in _chains(proper):
        bottom = chain[0] if chain else ground
        limit = matroid.flat_rank(bottom)
        chain_rays = [index[flat_key(f)] for f in chain]
        for free in subsets_of(bottom):
            if free == bottom:
                continue
            if free and matroid.closure(free) in flats:
                continue
            if reduced and popcount(free) >= limit:
                continue
            element_rays = [index[element_key(i)] for i in members(free)]
            cones.add(tuple(sorted(element_rays + chain_rays)))
    fan = Fan(n - 1, rays, tuple(keys), frozenset(cones))
    logger.debug(
        "fan of %r: %d rays, %d cones", matroid, len(rays), len(cones)
    )
    return fan


def bergman_fan(matroid: Matroid) -> Fan:
    """The fan of flags of proper flats."""
    flats = frozenset(f for f in matroid.flats if f != EMPTY)
    return _filtered_fan(matroid, flats, reduced=False)


def bergman_fan_filtered(
    matroid: Matroid, flats: Collection[Subset]
) -> Fan:
    """Cones ``sigma(I, D)``: ``D`` a chain of proper filter flats and ``I``
    a proper subset of the bottom of ``D`` whose closure is outside the
    filter.

    Raises:
        HasLoops: If the matroid has a loop.
        InvalidFilter: If ``flats`` misses the ground set or has a
            non-flat.
    """
    return _filtered_fan(matroid, flats, reduced=False)


def reduced_bergman_fan(
    matroid: Matroid, flats: Collection[Subset]
) -> Fan:
    """Like `bergman_fan_filtered`, keeping only ``|I| < rk(bottom)``."""
    return _filtered_fan(matroid, flats, reduced=True)


# -- validity -----------------------------------------------------------------


@dataclass(frozen=True)
class FanValidity:
    """Outcome of `validate_fan`; ``intersections`` is None when the pair
    count exceeded the limit and the check was skipped."""

    missing_faces: list[RayIds]
    ray_intersections: bool
    intersections: bool | None

    @property
    def passed(self) -> bool:
        return (
            not self.missing_faces
            and self.ray_intersections
            and self.intersections is not False
        )


def _faces(cone: RayIds) -> Iterator[RayIds]:
    for size in range(len(cone)):
        yield from combinations(cone, size)


def _meets_in_common_face(fan: Fan, a: RayIds, b: RayIds) -> bool:
    """No point of ``a`` and ``b`` has weight outside their shared rays."""
    common = set(a) & set(b)
    own = [r for r in a if r not in common]
    if not own:
        return True
    variables = len(a) + len(b)
    equalities = []
    for coordinate in range(fan.ambient):
        row = [fan.rays[r][coordinate] for r in a] + [
            -fan.rays[r][coordinate] for r in b
        ]
        equalities.append((row, 0))
    objective = [1 if r not in common else 0 for r in a] + [0] * len(b)
    result = maximize(
        objective,
        equalities=equalities,
        inequalities=[([1] * len(a) + [0] * len(b), 1)],
        nonnegative=range(variables),
    )
    return result.status == "optimal" and result.value == 0


def validate_fan(fan: Fan) -> FanValidity:
    """Check face closure and that cones meet along common faces.

    The ray-level check asks that the shared rays of any two cones span a
    cone of the fan; the exact check solves one LP per pair of maximal
    cones.
    """
    missing = sorted(
        {face for c in fan.cones for face in _faces(c)} - fan.cones
    )
    maximal = fan.maximal_cones
    ray_ok = all(
        tuple(sorted(set(a) & set(b))) in fan.cones
        for a, b in combinations(maximal, 2)
    )
    pairs = len(maximal) * (len(maximal) - 1) // 2
    exact: bool | None = None
    if pairs <= FAN_PAIR_LIMIT:
        exact = all(
            _meets_in_common_face(fan, a, b) and _meets_in_common_face(
                fan, b, a
            )
            for a, b in combinations(maximal, 2)
        )
    else:
        logger.info("skipping %d exact cone intersections", pairs)
    return FanValidity(missing, ray_ok, exact)


def is_unimodular(fan: Fan) -> bool:
    """Every maximal cone's generators extend to a basis of ``N``."""
    for c in fan.maximal_cones:
        generators = [list(fan.rays[r]) for r in c]
        if not generators:
            continue
        diagonal = linalg.smith_diagonal(generators)
        if len(diagonal) != len(generators) or any(
            d != 1 for d in diagonal
        ):
            return False
    return True


def is_pure(fan: Fan, d: int) -> bool:
    return all(fan.cone(c).dimension == d for c in fan.maximal_cones)


def star(fan: Fan, cone: RayIds) -> Fan:
    """Cones containing ``cone``, together with all their faces.

    Raises:
        ConeNotInFan: If ``cone`` is not in the fan.
    """
    if cone not in fan.cones:
        raise ConeNotInFan(f"no cone on rays {cone}")
    containing = [c for c in fan.cones if set(cone) <= set(c)]
    cones = set(containing)
    for c in containing:
        cones.update(_faces(c))
    return Fan(fan.ambient, fan.rays, fan.ray_keys, frozenset(cones))


def intersection_identity(fan: Fan) -> bool:
    """The shared rays of any two cones are the rays of a cone."""
    cones = sorted(fan.cones)
    return all(
        tuple(sorted(set(a) & set(b))) in fan.cones
        for a, b in combinations(cones, 2)
    )


def dump_fan(fan: Fan) -> str:
    """One nonzero cone per line, its rays as bracketed vectors."""
    lines = [f"# ambient {fan.ambient}, {len(fan.rays)} rays"]
    for c in sorted(fan.cones, key=lambda c: (len(c), c)):
        if c:
            lines.append(
                " ".join(
                    "[" + ",".join(str(x) for x in fan.rays[r]) + "]"
                    for r in c
                )
            )
    return "\n".join(lines) + "\n"


# -- piecewise linear functions ---------------------------------------------


@dataclass(frozen=True)
class PLFunction:
    """A piecewise linear function, determined by its values on rays."""

    fan: Fan = field(repr=False)
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.values) != len(self.fan.rays):
            raise ValueError("one value per ray is required")
        object.__setattr__(
            self, "values", tuple(Fraction(v) for v in self.values)
        )

    def perturbed(self, ray: int, step: Scalar) -> PLFunction:
        values = list(self.values)
        values[ray] += Fraction(step)
        return PLFunction(self.fan, tuple(values))


def courant_function(fan: Fan, ray: int) -> PLFunction:
    """Value 1 on one ray and 0 on every other."""
    return PLFunction(
        fan, tuple(Fraction(int(r == ray)) for r in range(len(fan.rays)))
    )


def linear_form_values(fan: Fan, m: Sequence[Scalar]) -> PLFunction:
    """Restriction of the linear form ``m`` on ``N``."""
    return PLFunction(
        fan,
        tuple(
            sum((Fraction(a) * b for a, b in zip(m, v)), start=Fraction(0))
            for v in fan.rays
        ),
    )


def pl_from_class(
    fan: Fan, coefficients: Mapping[RayKey, Scalar]
) -> PLFunction:
    """The function taking ``coefficients[key]`` on each ray, 0 if absent."""
    return PLFunction(
        fan,
        tuple(Fraction(coefficients.get(k, 0)) for k in fan.ray_keys),
    )


def convexity_margin(phi: PLFunction, cone: RayIds) -> Fraction | None:
    """Largest ``delta <= 1`` with a linear form ``m`` agreeing with ``phi``
    on ``cone`` and ``phi - m >= delta`` on the other rays of its star;
    None when no linear form agrees with ``phi`` on the cone.

    Raises:
        ConeNotInFan: If ``cone`` is not in the fan.
    """
    fan = phi.fan
    around = star(fan, cone)
    outside = sorted({r for c in around.cones for r in c} - set(cone))
    d = fan.ambient
    equalities = [(list(fan.rays[r]) + [0], phi.values[r]) for r in cone]
    inequalities = [
        (list(fan.rays[r]) + [1], phi.values[r]) for r in outside
    ]
    inequalities.append(([0] * d + [1], 1))
    objective = [0] * d + [1]
    result = maximize(
        objective, equalities=equalities, inequalities=inequalities
    )
    if result.status != "optimal":
        return None
    return result.value


def is_convex_at(phi: PLFunction, cone: RayIds) -> bool:
    margin = convexity_margin(phi, cone)
    return margin is not None and margin >= 0


def is_strictly_convex_at(phi: PLFunction, cone: RayIds) -> bool:
    margin = convexity_margin(phi, cone)
    return margin is not None and margin > 0


def nef_check(phi: PLFunction) -> bool:
    return all(is_convex_at(phi, c) for c in sorted(phi.fan.cones))


def ample_check(phi: PLFunction) -> bool:
    ample = all(
        is_strictly_convex_at(phi, c) for c in sorted(phi.fan.cones)
    )
    logger.debug("ample check: %s", ample)
    return ample


def perturbations(
    phi: PLFunction, step: Scalar = AMPLE_PERTURBATION
) -> Iterator[PLFunction]:
    """``phi`` with the value on one ray moved up or down by ``step``."""
    for ray in range(len(phi.values)):
        yield phi.perturbed(ray, step)
        yield phi.perturbed(ray, -step)


def stays_ample(phi: PLFunction, step: Scalar = AMPLE_PERTURBATION) -> bool:
    """Ample, and still ample after any one ray value moves by ``step``."""
    return ample_check(phi) and all(
        ample_check(moved) for moved in perturbations(phi, step)
    )


# -- Chow presentation -------------------------------------------------------


def fan_chow_presentation(fan: Fan) -> Presentation:
    """Generators per ray, non-cones as the monomial ideal, and one linear
    relation per coordinate of ``N``.

    Raises:
        NotUnimodular: If some cone is not unimodular.
    """
    if not is_unimodular(fan):
        raise NotUnimodular("the fan is not unimodular")
    relations = []
    for j in range(fan.ambient):
        relation = {r: v[j] for r, v in enumerate(fan.rays) if v[j]}
        if relation:
            relations.append(relation)
    cones = fan.cones

    def is_face(face: Support) -> bool:
        return face in cones

    return Presentation(
        labels=tuple(fan.labels()),
        is_face=is_face,
        relations=tuple(relations),
        top_degree=max((len(c) for c in cones), default=0),
    )


def fan_chow_ring(fan: Fan) -> GradedRing:
    return GradedRing(fan_chow_presentation(fan))
