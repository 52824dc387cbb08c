# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""Tests for the builtin matroids and the bundled corpus."""

import pytest

from hodgematroid.catalog import (
    boolean,
    builtin,
    complete_graph,
    corpus_names,
    corpus_source,
    cycle_graph,
    fano,
    incidence_matrix,
    load_corpus,
    uniform,
    uniform_matrix,
    vamos,
)
from hodgematroid.exceptions import BadParameters
from hodgematroid.matroid import matroid_from_matrix
from hodgematroid.structures import Graph

CORPUS_RANKS = {
    "boolean2": 2,
    "boolean3": 3,
    "boolean4": 4,
    "c5": 4,
    "fano": 3,
    "fano_dual": 4,
    "k4": 3,
    "parallel": 2,
    "u13": 1,
    "u23": 2,
    "u24": 2,
    "u34": 3,
    "u35": 3,
    "vamos": 4,
}


def test_corpus_names_are_sorted_and_complete() -> None:
    """Every bundled file is listed once, in order."""
    names = corpus_names()
    assert names == sorted(CORPUS_RANKS)


@pytest.mark.parametrize("name", sorted(CORPUS_RANKS))
def test_corpus_entries_load(name: str) -> None:
    """Each corpus file passes its axioms and has the expected rank."""
    m = load_corpus(name)
    assert m.rank_of_ground == CORPUS_RANKS[name]
    assert m.name == name


def test_corpus_source_keeps_the_input() -> None:
    """The raw source keeps the matrix for the oracles."""
    source = corpus_source("u35")
    assert source.kind == "matrix"
    assert source.prime == 5
    assert len(source.rows) == 3


def test_unknown_corpus_entry() -> None:
    """Unknown names are a parameter error."""
    with pytest.raises(BadParameters):
        load_corpus("nonexistent")


def test_corpus_matches_constructors() -> None:
    """Bundled files agree with the builtin constructions."""
    assert load_corpus("fano") == fano()
    assert load_corpus("fano_dual") == fano().dual()
    assert load_corpus("k4") == complete_graph(4)
    assert load_corpus("c5") == cycle_graph(5)
    assert load_corpus("u24") == uniform(2, 4)
    assert load_corpus("u35") == uniform(3, 5)
    assert load_corpus("boolean4") == boolean(4)


def test_vamos() -> None:
    """Vámos: 65 bases and five dependent planes of four points."""
    m = vamos()
    assert len(m.bases()) == 65
    assert [len(g) for g in m.flats_by_rank] == [1, 8, 28, 41, 1]


def test_uniform_parameter_range() -> None:
    """U(r,n) needs 0 <= r <= n within the corpus bound."""
    with pytest.raises(BadParameters):
        uniform(3, 2)
    with pytest.raises(BadParameters):
        uniform(1, 17)
    assert uniform(0, 2).flats == (0b11,)


def test_boolean_is_free() -> None:
    """Every subset of B(n) is a flat."""
    m = boolean(3)
    assert len(m.flats) == 8
    assert m.name == "B(3)"


@pytest.mark.parametrize(
    "name,ground,rank",
    [
        ("U(2,4)", 4, 2),
        ("U(3, 5)", 5, 3),
        ("B(3)", 3, 3),
        ("fano", 7, 3),
        ("Fano", 7, 3),
        ("vamos", 8, 4),
        ("K4", 6, 3),
        ("C5", 5, 4),
        ("parallel", 3, 2),
    ],
    ids=["uniform", "uniform-space", "boolean", "fano", "fano-case",
         "vamos", "k4", "c5", "corpus"],
)
def test_builtin_names(name: str, ground: int, rank: int) -> None:
    """Builtin names resolve to the right matroid."""
    m = builtin(name)
    assert m.n == ground
    assert m.rank_of_ground == rank


def test_builtin_unknown_name() -> None:
    """Unknown builtin names fall through to the corpus and fail there."""
    with pytest.raises(BadParameters):
        builtin("U(2)")


@pytest.mark.parametrize(
    "r, n, p",
    [(2, 3, 2), (2, 4, 3), (3, 5, 5), (3, 6, 5), (1, 4, 2), (3, 3, 2)],
)
def test_uniform_matrix_represents_uniform(r: int, n: int, p: int) -> None:
    matrix = uniform_matrix(r, n, p)
    assert matrix.prime == p
    assert matroid_from_matrix(matrix) == uniform(r, n)


@pytest.mark.parametrize("r, n, p", [(2, 4, 2), (3, 7, 5), (0, 3, 2)])
def test_uniform_matrix_out_of_reach(r: int, n: int, p: int) -> None:
    with pytest.raises(BadParameters):
        uniform_matrix(r, n, p)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_incidence_matrix_represents_the_graph(p: int) -> None:
    k4 = Graph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))
    assert matroid_from_matrix(incidence_matrix(k4, p)) == complete_graph(4)


def test_incidence_matrix_of_a_self_loop() -> None:
    matrix = incidence_matrix(Graph(2, ((0, 1), (1, 1))), 3)
    assert matrix.rows == ((1, 0), (2, 0))
