# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""Tests for characteristic polynomials, Whitney numbers and sequences."""

from fractions import Fraction

import pytest

from hodgematroid.catalog import (
    boolean,
    complete_graph,
    cycle_graph,
    fano,
    load_corpus,
    uniform,
)
from hodgematroid.exceptions import BadParameters, HasLoops, NonzeroRemainder
from hodgematroid.invariants import (
    ALGORITHMS,
    brylawski_check,
    brylawski_polynomial,
    char_poly,
    has_no_internal_zeros,
    is_log_concave,
    is_positive,
    is_unimodal,
    mason_ratios,
    mu_vector,
    reduced_char_poly,
    whitney_first,
    whitney_second,
)
from hodgematroid.matroid import Matroid, matroid_from_bases
from hodgematroid.polynomial import ONE, IntPolynomial, T

SMALL_CORPUS = [
    "boolean2",
    "boolean3",
    "c5",
    "fano",
    "k4",
    "parallel",
    "u13",
    "u23",
    "u24",
    "u34",
    "u35",
]


def test_polynomial_arithmetic() -> None:
    """Products, evaluation and exact division by T - a."""
    p = (T - ONE) * (T - IntPolynomial.constant(2))
    assert p.coefficients == (2, -3, 1)
    assert p(5) == 12
    assert p.divide_by_linear(1) == T - IntPolynomial.constant(2)
    assert str(p) == "T^2 - 3T + 2"
    assert str(IntPolynomial()) == "0"
    assert str(IntPolynomial.constant(-1)) == "-1"
    assert IntPolynomial((1, 0, 0)).degree == 0
    assert IntPolynomial().degree == -1


def test_polynomial_division_remainder() -> None:
    """Division by a non-root raises."""
    with pytest.raises(NonzeroRemainder):
        (T + ONE).divide_by_linear(1)


@pytest.mark.parametrize("name", SMALL_CORPUS)
def test_algorithms_agree(name: str) -> None:
    """Subset sums, Möbius sums and deletion-contraction coincide."""
    m = load_corpus(name)
    results = {char_poly(m, algorithm) for algorithm in ALGORITHMS}
    assert len(results) == 1


def test_unknown_algorithm() -> None:
    """Only the three named algorithms exist."""
    with pytest.raises(BadParameters):
        char_poly(uniform(1, 1), "guess")  # type: ignore[arg-type]


def test_known_characteristic_polynomials() -> None:
    """K4, the Fano plane and a free matroid factor completely."""
    assert char_poly(complete_graph(4)).coefficients == (-6, 11, -6, 1)
    assert char_poly(fano()).coefficients == (-8, 14, -7, 1)
    assert char_poly(boolean(3)) == (T - ONE) * (T - ONE) * (T - ONE)
    assert char_poly(uniform(0, 0)) == ONE


def test_coloop_factor() -> None:
    """A parallel pair with a coloop gives (T - 1)^2."""
    m = load_corpus("parallel")
    for algorithm in ALGORITHMS:
        assert char_poly(m, algorithm) == (T - ONE) * (T - ONE)


def test_loops_give_zero() -> None:
    """A matroid with a loop has characteristic polynomial zero."""
    m = matroid_from_bases(3, [0b001, 0b010])
    for algorithm in ALGORITHMS:
        assert not char_poly(m, algorithm)
    with pytest.raises(HasLoops):
        mu_vector(m)


def test_reduced_polynomial() -> None:
    """Dividing out T - 1, with the empty ground set refused."""
    assert reduced_char_poly(uniform(2, 3)).coefficients == (-2, 1)
    with pytest.raises(BadParameters):
        reduced_char_poly(uniform(0, 0))


@pytest.mark.parametrize(
    "matroid,mu",
    [
        (uniform(2, 3), [1, 2]),
        (uniform(2, 4), [1, 3]),
        (uniform(3, 4), [1, 3, 3]),
        (complete_graph(4), [1, 5, 6]),
        (fano(), [1, 6, 8]),
        (boolean(3), [1, 2, 1]),
        (uniform(1, 3), [1]),
    ],
    ids=["u23", "u24", "u34", "k4", "fano", "b3", "u13"],
)
def test_mu_vector(matroid: Matroid, mu: list[int]) -> None:
    """mu is read off the reduced polynomial with alternating signs."""
    assert mu_vector(matroid) == mu


def test_chromatic_values_of_c5() -> None:
    """q^c chi(q) counts proper colourings of the pentagon."""
    chi = char_poly(cycle_graph(5))
    assert 2 * chi(2) == 0
    assert 3 * chi(3) == 30


def test_whitney_numbers() -> None:
    """Both kinds of Whitney numbers of K4."""
    k4 = complete_graph(4)
    assert whitney_first(k4) == [1, 6, 11, 6]
    assert whitney_second(k4) == [1, 6, 7, 1]
    assert k4.f_vector() == [1, 6, 15, 16]


@pytest.mark.parametrize("name", SMALL_CORPUS)
def test_brylawski_identity(name: str) -> None:
    """The free coextension encodes the f-vector."""
    assert brylawski_check(load_corpus(name))


def test_brylawski_polynomial_of_u23() -> None:
    """f = (1, 3, 3) gives T^2 - 3T + 3."""
    assert brylawski_polynomial(uniform(2, 3)).coefficients == (3, -3, 1)


def test_sequence_predicates() -> None:
    """Log-concavity, internal zeros, unimodality and positivity."""
    assert is_log_concave([1, 2, 1])
    assert not is_log_concave([1, 1, 2])
    assert is_log_concave([])
    assert has_no_internal_zeros([0, 1, 1, 0])
    assert not has_no_internal_zeros([1, 0, 1])
    assert has_no_internal_zeros([0, 0])
    assert is_unimodal([1, 3, 2])
    assert is_unimodal([3, 2, 2, 1])
    assert not is_unimodal([1, 2, 1, 2])
    assert is_positive([1, 2])
    assert not is_positive([1, 0])


def test_mason_ratios() -> None:
    """Ratios are exact and skip zero neighbours."""
    assert mason_ratios([1, 5, 6]) == [(1, Fraction(25, 6), Fraction(2))]
    assert mason_ratios([0, 1, 1]) == []
