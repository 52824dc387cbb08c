# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""Tests for the lattice of flats and its incidence algebra."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hodgematroid.catalog import (
    boolean,
    complete_graph,
    fano,
    load_corpus,
    uniform,
)
from hodgematroid.exceptions import BadParameters
from hodgematroid.invariants import mu_vector
from hodgematroid.lattice import (
    FlatLattice,
    MoebiusTable,
    convolve,
    delta,
    descending_flag_count,
    flat_lattice,
    moebius,
    moebius_invert,
    moebius_sign_check,
    weisner_check,
    zeta,
    zeta_transform,
)


def test_lattice_of_u23() -> None:
    """Bottom, three atoms and the top."""
    lattice = FlatLattice(uniform(2, 3))
    assert len(lattice) == 5
    assert lattice.bottom == 0 and lattice.top == 4
    assert lattice.covers[0] == (1, 2, 3)
    assert lattice.join(1, 2) == 4
    assert lattice.meet(1, 2) == 0
    assert lattice.interval(0, 4) == [0, 1, 2, 3, 4]
    assert lattice.interval(1, 4) == [1, 4]
    assert lattice.rank_vector() == [1, 3, 1]


def test_moebius_values() -> None:
    """mu(bottom, top) of U(2,3) is 2 and of the Fano plane is -8."""
    assert moebius(flat_lattice(uniform(2, 3))).value(0, 4) == 2
    lattice = flat_lattice(fano())
    assert moebius(lattice).value(lattice.bottom, lattice.top) == -8
    assert moebius(lattice).value(lattice.top, lattice.bottom) == 0


@pytest.mark.parametrize("name", ["u24", "k4", "fano", "parallel"])
def test_moebius_inverts_zeta(name: str) -> None:
    """zeta * mu is the identity of the incidence algebra."""
    lattice = flat_lattice(load_corpus(name))
    table = MoebiusTable(lattice).as_incidence()
    assert convolve(lattice, zeta(lattice), table) == delta(lattice)
    assert convolve(lattice, table, zeta(lattice)) == delta(lattice)


@given(st.lists(st.integers(-50, 50), min_size=15, max_size=15))
def test_moebius_inversion_on_k4(values: list[int]) -> None:
    """Summing over upper sets and inverting recovers the function."""
    lattice = flat_lattice(complete_graph(4))
    assert moebius_invert(lattice, zeta_transform(lattice, values)) == values


@pytest.mark.parametrize("name", ["u23", "k4", "fano", "vamos", "parallel"])
def test_weisner_and_signs(name: str) -> None:
    """Weisner's identity holds for every a above the bottom and the
    Möbius function alternates in sign."""
    lattice = flat_lattice(load_corpus(name))
    table = moebius(lattice)
    assert all(
        weisner_check(lattice, a, table) for a in range(1, len(lattice))
    )
    assert moebius_sign_check(lattice, table)


def test_weisner_needs_a_above_bottom() -> None:
    """The bottom flat is not a valid choice."""
    with pytest.raises(BadParameters):
        weisner_check(flat_lattice(uniform(2, 3)), 0)


@pytest.mark.parametrize(
    "name", ["u23", "u34", "boolean3", "k4", "fano", "u35"]
)
def test_descending_flags_count_mu(name: str) -> None:
    """Descending flags avoiding the first element count mu^k."""
    m = load_corpus(name)
    mu = mu_vector(m)
    assert [descending_flag_count(m, k) for k in range(len(mu))] == mu


def test_descending_flags_without_exclusion() -> None:
    """Allowing the first element counts every atom of U(2,3)."""
    m = uniform(2, 3)
    assert descending_flag_count(m, 1, exclude_first=False) == 3
    assert descending_flag_count(m, 1, [2, 1, 0]) == 2
    assert descending_flag_count(boolean(2), 0) == 1


def test_descending_flags_need_a_permutation() -> None:
    """The element order must list every element once."""
    with pytest.raises(BadParameters):
        descending_flag_count(uniform(2, 3), 1, [0, 0, 1])
