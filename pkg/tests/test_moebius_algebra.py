# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""Tests for the graded Möbius algebra and top-heaviness."""

import pytest

from hodgematroid.bitsets import EMPTY, is_subset
from hodgematroid.catalog import boolean, fano, load_corpus, uniform, vamos
from hodgematroid.exceptions import BadParameters
from hodgematroid.moebius_algebra import (
    flat_matching,
    lambda_matrix,
    moebius_algebra,
    topheavy_check,
    topheavy_sweep,
    valid_pairs,
)

U23 = uniform(2, 3)


def test_dims_and_basis() -> None:
    algebra = moebius_algebra(fano())
    assert algebra.dims == [1, 7, 7, 1]
    assert len(algebra.basis(2)) == 7
    assert algebra.basis(4) == ()


def test_multiply() -> None:
    algebra = moebius_algebra(U23)
    assert algebra.multiply(0b001, 0b010) == 0b111
    assert algebra.multiply(0b001, 0b001) is None
    assert algebra.multiply(EMPTY, 0b100) == 0b100
    assert algebra.multiply(0b001, 0b111) is None


@pytest.mark.parametrize("name", ["u23", "fano", "boolean3"])
def test_associative(name: str) -> None:
    assert moebius_algebra(load_corpus(name)).is_associative()


def test_lambda_matrix_u23() -> None:
    one_step = lambda_matrix(U23, 0, 1)
    assert one_step.rows == (EMPTY,)
    assert one_step.columns == (0b001, 0b010, 0b100)
    assert one_step.entries == ((1, 1, 1),)
    assert lambda_matrix(U23, 0, 2).entries == ((6,),)
    upper = lambda_matrix(U23, 1, 2)
    assert upper.entries == ((2,), (2,), (2,))
    assert upper.rank() == 1
    assert upper.support_respects_containment()


def test_lambda_matrix_boolean_is_injective() -> None:
    matrix = lambda_matrix(boolean(3), 1, 2)
    assert matrix.rank() == 3
    assert all(v in (0, 1) for row in matrix.entries for v in row)


def test_lambda_matrix_identity_at_equal_degrees() -> None:
    matrix = lambda_matrix(fano(), 1, 1)
    assert matrix.rank() == 7


@pytest.mark.parametrize("p, q", [(-1, 1), (2, 1), (0, 3)])
def test_lambda_matrix_range(p: int, q: int) -> None:
    with pytest.raises(BadParameters):
        lambda_matrix(U23, p, q)


def test_flat_matching() -> None:
    m = fano()
    matching = flat_matching(m, 1, 2)
    assert matching is not None
    assert len(matching) == 7
    assert len(set(matching.values())) == 7
    assert all(is_subset(a, b) for a, b in matching.items())


def test_flat_matching_needs_room() -> None:
    assert flat_matching(U23, 1, 2) is None


def test_topheavy_check() -> None:
    report = topheavy_check(fano(), 1, 2)
    assert report.passed
    assert report.full_rank
    data = report.to_json()
    assert sorted(data) == [
        "matching",
        "p",
        "passed",
        "q",
        "rank",
        "w_p",
        "w_q",
    ]
    assert (data["w_p"], data["w_q"], data["rank"]) == (7, 7, 7)


def test_topheavy_check_at_equal_degrees() -> None:
    report = topheavy_check(U23, 1, 1)
    assert report.passed
    assert report.matching == {0b001: 0b001, 0b010: 0b010, 0b100: 0b100}


@pytest.mark.parametrize("p, q", [(2, 2), (1, 3), (-1, 1)])
def test_topheavy_check_range(p: int, q: int) -> None:
    with pytest.raises(BadParameters):
        topheavy_check(fano(), p, q)


def test_valid_pairs() -> None:
    assert valid_pairs(U23) == [(0, 0), (0, 1), (1, 1), (0, 2)]


def test_topheavy_sweep() -> None:
    sweep = topheavy_sweep(fano())
    assert sweep.whitney == [1, 7, 7, 1]
    assert sweep.log_concave
    assert sweep.unimodal
    assert sweep.passed
    assert len(sweep.reports) == len(valid_pairs(fano()))


def test_topheavy_sweep_beyond_representable() -> None:
    sweep = topheavy_sweep(vamos())
    assert sweep.whitney == [1, 8, 28, 41, 1]
    assert all(r.lower <= r.upper for r in sweep.reports)
