# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""Tests for filters, augmented Chow rings and their Hodge theory."""

from fractions import Fraction

import pytest

from hodgematroid.bitsets import EMPTY
from hodgematroid.catalog import (
    boolean,
    complete_graph,
    fano,
    load_corpus,
    uniform,
)
from hodgematroid.chow import (
    ChowRing,
    Filter,
    alpha,
    ample_from_submodular,
    beta,
    chow_ring,
    classes_independent_of_element,
    cubic_submodular,
    degree_map,
    feichtner_yuzvinsky_dims,
    filter_from_flats,
    flip,
    flip_sequence,
    full_filter,
    hard_lefschetz_check,
    hr_check,
    kt_inequality_check,
    lefschetz_decomposition_check,
    local_hr_check,
    mu_via_chow,
    multiply,
    poincare_pairing,
    primitive_classes,
    signature_stability_check,
    trivial_filter,
)
from hodgematroid.exceptions import (
    BadParameters,
    HasLoops,
    InvalidFilter,
    NonIntegralDegree,
    NotAmple,
    NotMaximalFlat,
    NotTopDegree,
)
from hodgematroid.invariants import mu_vector
from hodgematroid.matroid import matroid_from_bases

U23 = uniform(2, 3)


# -- filters ------------------------------------------------------------------


@pytest.mark.parametrize(
    "flats, message",
    [
        (frozenset(), "must not be empty"),
        (frozenset({EMPTY, 0b111}), "empty set"),
        (frozenset({0b011, 0b111}), "is not a flat"),
        (frozenset({0b001}), "is missing"),
    ],
)
def test_filter_validation(flats: frozenset[int], message: str) -> None:
    with pytest.raises(InvalidFilter, match=message):
        Filter(U23, flats)


def test_full_and_trivial_filters() -> None:
    full = full_filter(U23)
    assert full.is_full()
    assert full.proper == [0b001, 0b010, 0b100]
    assert full.minimal() == [0b001, 0b010, 0b100]
    assert full.maximal_missing() == []
    trivial = trivial_filter(U23)
    assert not trivial.is_full()
    assert len(trivial) == 1
    assert U23.ground in trivial
    assert trivial.minimal() == [0b111]
    assert trivial.maximal_missing() == [0b001, 0b010, 0b100]
    assert trivial.describe() == ["{0,1,2}"]


def test_filter_from_flats_adds_ground() -> None:
    filt = filter_from_flats(U23, [0b010])
    assert filt.flats == frozenset({0b010, 0b111})


def test_maximal_missing_prefers_high_rank() -> None:
    m = boolean(3)
    filt = trivial_filter(m)
    assert filt.maximal_missing() == [0b011, 0b101, 0b110]
    bigger = flip(filt, 0b011)
    assert 0b011 in bigger
    assert bigger.maximal_missing() == [0b101, 0b110]


def test_flip_needs_a_maximal_flat() -> None:
    with pytest.raises(NotMaximalFlat):
        flip(trivial_filter(boolean(3)), 0b001)


def test_flip_sequence() -> None:
    assert flip_sequence(U23) == [0b001, 0b010, 0b100]
    assert len(flip_sequence(fano())) == 14


# -- rings --------------------------------------------------------------------


def test_chow_ring_rejects_loops() -> None:
    m = matroid_from_bases(2, [0b01])
    with pytest.raises(HasLoops):
        chow_ring(m)


def test_chow_ring_needs_a_nonempty_filter() -> None:
    with pytest.raises(InvalidFilter):
        chow_ring(uniform(0, 0))


def test_chow_ring_rejects_foreign_filter() -> None:
    with pytest.raises(InvalidFilter, match="different matroid"):
        ChowRing(U23, full_filter(uniform(2, 4)))


def test_u23_chow_ring() -> None:
    ring = chow_ring(U23)
    assert ring.dims == [1, 1]
    assert ring.labels == ("t{0}", "t{1}", "t{2}")
    assert ring.keys == (("f", 0b001), ("f", 0b010), ("f", 0b100))
    assert ring.t_element(0) == ring.zero(1)
    assert degree_map(ring, ring.t_flat(0b001)) == 1
    assert ring.degree(beta(ring)) == 2
    assert mu_via_chow(ring) == [1, 2]
    assert mu_via_chow(ring, 1) == [2]
    with pytest.raises(BadParameters):
        mu_via_chow(ring, 2)


def test_u23_trivial_filter_ring() -> None:
    ring = chow_ring(U23, trivial_filter(U23))
    assert ring.dims == [1, 1]
    assert ring.keys == (("e", 0), ("e", 1), ("e", 2))
    assert ring.degree(ring.t_element(2)) == 1
    assert ring.t_flat(0b001) == ring.zero(1)


def test_degree_needs_top_degree() -> None:
    ring = chow_ring(fano())
    with pytest.raises(NotTopDegree):
        ring.degree(ring.one())


def test_degree_map_rejects_fractional_degree() -> None:
    ring = chow_ring(U23)
    half = ring.t_flat(0b001).scale(Fraction(1, 2))
    assert ring.degree(half) == Fraction(1, 2)
    with pytest.raises(NonIntegralDegree, match="1/2"):
        degree_map(ring, half)
    assert degree_map(ring, half.scale(4)) == 2


def test_flag_monomials_have_degree_one() -> None:
    m = fano()
    ring = chow_ring(m)
    for line in m.flats_of_rank(2):
        for point in m.flats_of_rank(1):
            value = ring.flag_monomial([point, line])
            if point & line:
                assert ring.degree(value) == 1
            else:
                assert not value


def test_maximal_cone_monomial_on_trivial_filter() -> None:
    m = fano()
    ring = chow_ring(m, trivial_filter(m))
    assert ring.degree(ring.maximal_cone_monomial(m.ground)) == 1


@pytest.mark.parametrize(
    "name, dims",
    [
        ("fano", [1, 8, 1]),
        ("k4", [1, 8, 1]),
        ("u34", [1, 7, 1]),
        ("boolean3", [1, 4, 1]),
        ("u23", [1, 1]),
    ],
)
def test_dims_match_feichtner_yuzvinsky(name: str, dims: list[int]) -> None:
    m = load_corpus(name)
    assert feichtner_yuzvinsky_dims(m) == dims
    assert chow_ring(m).dims == dims


@pytest.mark.parametrize("name", ["fano", "boolean3", "u34"])
def test_trivial_filter_gives_projective_space(name: str) -> None:
    m = load_corpus(name)
    ring = chow_ring(m, trivial_filter(m))
    assert ring.dims == [1] * m.rank_of_ground
    assert classes_independent_of_element(ring)


def test_beta_needs_full_filter() -> None:
    m = fano()
    with pytest.raises(InvalidFilter):
        beta(chow_ring(m, trivial_filter(m)))


@pytest.mark.parametrize("name", ["u23", "u34", "k4", "fano", "boolean3"])
def test_mu_via_chow_matches_characteristic_polynomial(name: str) -> None:
    m = load_corpus(name)
    ring = chow_ring(m)
    assert classes_independent_of_element(ring)
    assert mu_via_chow(ring) == mu_vector(m)


def test_alpha_and_beta_from_any_element() -> None:
    ring = chow_ring(complete_graph(4))
    assert alpha(ring, 3) == alpha(ring)
    assert beta(ring, 5) == beta(ring)
    assert multiply(ring, alpha(ring), beta(ring)) == alpha(ring) * beta(
        ring
    )


# -- Hodge theory -------------------------------------------------------------


@pytest.mark.parametrize("name", ["fano", "u34"])
def test_poincare_pairing_is_unimodular(name: str) -> None:
    ring = chow_ring(load_corpus(name))
    for k in range(ring.top + 1):
        report = poincare_pairing(ring, k)
        assert report.unimodular
        assert report.determinant in {1, -1}


def test_default_submodular_class_is_ample() -> None:
    ring = chow_ring(fano())
    ell = ample_from_submodular(ring)
    assert ell.degree == 1
    assert ring.degree(ell * ell) > 0


def test_zero_class_is_not_ample() -> None:
    ring = chow_ring(fano())
    with pytest.raises(NotAmple):
        ample_from_submodular(ring, lambda flat: 0)


def test_ample_class_needs_full_filter() -> None:
    m = fano()
    with pytest.raises(InvalidFilter):
        ample_from_submodular(chow_ring(m, trivial_filter(m)))


def test_ample_class_from_mapping() -> None:
    m = U23
    ring = chow_ring(m)
    ell = ample_from_submodular(ring, {f: 1 for f in m.proper_flats()})
    assert ring.degree(ell) == 3


@pytest.mark.parametrize("name", ["fano", "k4", "u34", "boolean3"])
def test_hodge_package(name: str) -> None:
    ring = chow_ring(load_corpus(name))
    ell = ample_from_submodular(ring)
    for k in range(ring.top // 2 + 1):
        assert hard_lefschetz_check(ring, ell, k).passed
        report = hr_check(ring, ell, k)
        assert report.passed
        assert report.rank == report.primitive_dim
    for k in range(ring.top + 1):
        assert lefschetz_decomposition_check(ring, ell, k)


def test_cubic_submodular_values() -> None:
    c = cubic_submodular(7)
    assert c(0b0000001) == 48
    assert c(0b0000111) == 120
    assert c(0b1111111) == 0


@pytest.mark.parametrize(
    "name, signatures",
    [
        ("fano", {"0": [[1, 0, 0]] * 2, "1": [[7, 0, 0]] * 2}),
        ("u34", {"0": [[1, 0, 0]] * 2, "1": [[6, 0, 0]] * 2}),
        ("k4", {"0": [[1, 0, 0]] * 2, "1": [[7, 0, 0]] * 2}),
    ],
)
def test_signatures_agree_for_two_ample_classes(
    name: str, signatures: dict[str, list[list[int]]]
) -> None:
    m = load_corpus(name)
    ring = chow_ring(m)
    first = ample_from_submodular(ring)
    second = ample_from_submodular(ring, cubic_submodular(m.n))
    report = signature_stability_check(ring, first, second)
    assert report.distinct
    assert report.passed
    assert report.signatures() == signatures


def test_signature_stability_needs_two_classes() -> None:
    ring = chow_ring(fano())
    ell = ample_from_submodular(ring)
    report = signature_stability_check(ring, ell, ell, [1])
    assert not report.distinct
    assert not report.passed
    assert list(report.signatures()) == ["1"]


def test_signature_stability_rejects_high_degree() -> None:
    ring = chow_ring(fano())
    ell = ample_from_submodular(ring)
    with pytest.raises(BadParameters):
        signature_stability_check(ring, ell, ell.scale(2), [2])


def test_primitive_classes_in_middle_degree() -> None:
    ring = chow_ring(fano())
    ell = ample_from_submodular(ring)
    assert len(primitive_classes(ring, ell, 0, ring.top)) == 1
    assert len(primitive_classes(ring, ell, 1, ring.top)) == 7


def test_hodge_checks_reject_out_of_range_degree() -> None:
    ring = chow_ring(fano())
    ell = ample_from_submodular(ring)
    with pytest.raises(BadParameters):
        hard_lefschetz_check(ring, ell, 2)
    with pytest.raises(BadParameters):
        hr_check(ring, ell, 2)


def test_kt_inequality() -> None:
    ring = chow_ring(complete_graph(4))
    report = kt_inequality_check(ring, alpha(ring), beta(ring))
    assert report.lhs == Fraction(6)
    assert report.rhs == Fraction(25)
    assert report.passed


def test_kt_inequality_needs_rank_three() -> None:
    ring = chow_ring(U23)
    with pytest.raises(BadParameters):
        kt_inequality_check(ring, alpha(ring), beta(ring))


def test_local_hodge_riemann_at_a_point() -> None:
    ring = chow_ring(fano())
    ell = ample_from_submodular(ring)
    report = local_hr_check(ring, 0, ell)
    assert report.dims == [1, 1]
    assert report.duality
    assert report.passed
