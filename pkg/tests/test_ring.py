# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""Tests for presented graded rings, using the projective plane."""

import pytest

from hodgematroid.exceptions import (
    BadParameters,
    MatroidError,
    RelationNotPreserved,
)
from hodgematroid.ring import (
    GradedRing,
    Presentation,
    RingElement,
    Support,
    map_from_faces,
    monomial_degree,
    monomial_from_generators,
    ring_map_images,
    squarefree_faces,
    support,
    times,
)


def projective_plane() -> GradedRing:
    """``Z[x, y, z] / (xyz, x - y, x - z)``."""
    return GradedRing(
        Presentation(
            labels=("x", "y", "z"),
            is_face=lambda face: len(face) < 3,
            relations=({0: 1, 1: -1}, {0: 1, 2: -1}),
            top_degree=2,
        ),
        require_integral=True,
    )


def test_monomial_helpers() -> None:
    m = monomial_from_generators([2, 0, 2])
    assert m == ((0, 1), (2, 2))
    assert monomial_degree(m) == 3
    assert support(m) == (0, 2)
    assert times(m, ((1, 1), (2, 1))) == ((0, 1), (1, 1), (2, 3))


def test_projective_plane_dims() -> None:
    ring = projective_plane()
    assert ring.dims == [1, 1, 1]
    assert ring.hilbert_function() == [1, 1, 1]
    assert ring.integral
    assert ring.dim(3) == 0
    assert ring.dim(-1) == 0


def test_ring_rejects_nonvanishing_top() -> None:
    """A truncated polynomial ring does not vanish past its top."""
    with pytest.raises(MatroidError, match="does not vanish"):
        GradedRing(
            Presentation(
                labels=("x",),
                is_face=lambda face: len(face) < 2,
                relations=(),
                top_degree=2,
            )
        )


def test_element_arithmetic() -> None:
    ring = projective_plane()
    x, y, z = (ring.generator(g) for g in range(3))
    assert x == y == z
    assert not x - y
    assert x * y == x**2
    assert x * y * z == ring.zero(3)
    assert x**3 == ring.zero(3)
    assert (x + x) == x.scale(2)
    assert -x == x.scale(-1)
    assert x.scale(0) == ring.zero(1)
    assert hash(x) == hash(y)
    assert ring.linear({0: 2, 1: -1}) == x
    assert ring.power(x, 0) == ring.one()


def test_elements_of_different_degrees_do_not_add() -> None:
    ring = projective_plane()
    with pytest.raises(BadParameters):
        ring.generator(0) + ring.one()


def test_element_from_coordinates() -> None:
    ring = projective_plane()
    x = ring.generator(0)
    assert ring.element(1, x.vector()) == x
    assert ring.element(1, {0: 0}) == ring.zero(1)
    with pytest.raises(BadParameters, match="out of range"):
        ring.element(1, [0, 5])
    with pytest.raises(BadParameters):
        ring.element(1, {3: 1})


def test_describe() -> None:
    ring = projective_plane()
    assert ring.describe(ring.zero(2)) == "0"
    assert str(ring.one()) == "1"
    assert str(ring.generator(1)) in {"x", "y", "z"}


def test_multiplication_matrix() -> None:
    ring = projective_plane()
    matrix = ring.multiplication_matrix(ring.generator(0), 1)
    assert len(matrix) == 1
    assert len(matrix[0]) == 1
    assert matrix[0][0] != 0
    assert ring.multiplication_matrix(ring.generator(0), 2) == []


def test_squarefree_faces() -> None:
    ring = projective_plane()
    assert squarefree_faces(ring, 0) == [()]
    assert squarefree_faces(ring, 2) == [(0, 1), (0, 2), (1, 2)]
    assert squarefree_faces(ring, 5) == []


def test_map_from_faces_identity() -> None:
    ring = projective_plane()
    for k in range(3):
        linear_map = map_from_faces(ring, ring, k, 0, ring.product)
        assert linear_map.source_dim == linear_map.target_dim == 1
        assert linear_map.rank() == 1


def test_map_from_faces_detects_broken_relation() -> None:
    """``x - y = 0`` cannot map to ``x``."""
    ring = projective_plane()

    def image(face: Support) -> RingElement:
        return ring.generator(0) if face == (0,) else ring.zero(1)

    with pytest.raises(RelationNotPreserved):
        map_from_faces(ring, ring, 1, 0, image)


def test_ring_map_images() -> None:
    ring = projective_plane()
    x = ring.generator(0)
    assert ring_map_images(ring, ring, (x, x, x), 2).rank() == 1
    zero = ring.zero(1)
    assert ring_map_images(ring, ring, (zero,) * 3, 1).rank() == 0
