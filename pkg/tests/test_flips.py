# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""Tests for flips between filters and the maps that split them."""

import pytest

from hodgematroid.catalog import boolean, fano, uniform
from hodgematroid.chow import chow_ring, flip, full_filter, trivial_filter
from hodgematroid.exceptions import NotMaximalFlat
from hodgematroid.flips import (
    FlipReport,
    decomposition_check,
    flip_chain,
    gamma_map,
    phi_map,
    psi_map,
    restriction_ring,
)
from hodgematroid.matroid import Matroid


def test_flip_at_a_point_is_an_isomorphism() -> None:
    m = uniform(2, 3)
    filt = trivial_filter(m)
    source = chow_ring(m, filt)
    target = chow_ring(m, flip(filt, 0b001))
    morphism = phi_map(source, target, 0b001)
    for k in range(target.top + 1):
        assert morphism.matrix(k).rank() == target.dim(k)
    report = decomposition_check(m, filt, 0b001)
    assert report.before == report.after == [1, 1]
    assert report.passed


def test_phi_sends_elements_of_the_flat_to_the_flat() -> None:
    m = uniform(2, 3)
    filt = trivial_filter(m)
    target = chow_ring(m, flip(filt, 0b001))
    morphism = phi_map(chow_ring(m, filt), target, 0b001)
    assert morphism.images[0] == target.t_flat(0b001)
    assert morphism.images[1] == target.t_element(1)
    assert morphism.apply_generators((1, 2)) == target.zero(2)


def test_psi_fills_the_new_degree() -> None:
    """Adjoining a line of B(3) adds one class through ``M/P``."""
    m = boolean(3)
    filt = trivial_filter(m)
    target = chow_ring(m, flip(filt, 0b011))
    contraction = chow_ring(m.contraction(0b011))
    assert contraction.dims == [1]
    assert target.dims == [1, 2, 1]
    psi = psi_map(contraction, target, 0b011, 1, 0)
    assert psi.source_dim == 1
    assert psi.target_dim == 2
    assert psi.rank() == 1


def test_decomposition_at_a_line() -> None:
    m = boolean(3)
    report = decomposition_check(m, trivial_filter(m), 0b011)
    assert report.before == [1, 1, 1]
    assert report.after == [1, 2, 1]
    assert report.contraction == [1]
    assert report.dimensions_match
    assert report.full_rank == [True, True, True]
    assert report.to_json() == {
        "flat": "{0,1}",
        "before": [1, 1, 1],
        "after": [1, 2, 1],
        "contraction": [1],
        "passed": True,
    }


def test_decomposition_needs_a_maximal_flat() -> None:
    m = boolean(3)
    with pytest.raises(NotMaximalFlat):
        decomposition_check(m, trivial_filter(m), 0b001)


@pytest.mark.parametrize(
    "matroid",
    [boolean(3), uniform(3, 5), uniform(2, 4), fano()],
    ids=["boolean3", "u35", "u24", "fano"],
)
def test_flip_chain_passes(matroid: Matroid) -> None:
    reports = flip_chain(matroid)
    assert len(reports) == len(matroid.proper_flats())
    assert all(r.passed for r in reports)
    assert reports[-1].after == chow_ring(matroid).dims


def test_failed_report() -> None:
    report = FlipReport(0b1, [1], [1, 1], [1], False, [True])
    assert not report.passed
    assert report.to_json()["passed"] is False


def test_restriction_ring_of_a_line() -> None:
    m = fano()
    line = m.flats_of_rank(2)[0]
    ring = restriction_ring(m, line)
    assert ring.matroid == uniform(2, 3)
    assert ring.dims == [1, 1]


def test_gamma_maps_into_the_flat() -> None:
    """``t_D -> t_P t_D`` from a line of the Fano plane."""
    m = fano()
    target = chow_ring(m, full_filter(m))
    line = m.flats_of_rank(2)[0]
    restriction = restriction_ring(m, line)
    unit = gamma_map(restriction, target, line, 1, 0)
    assert (unit.source_dim, unit.target_dim) == (1, 8)
    assert unit.rank() == 1
    points = gamma_map(restriction, target, line, 1, 1)
    assert (points.source_dim, points.target_dim) == (1, 1)
    assert points.rank() == 1
