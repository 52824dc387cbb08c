# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""Exact matroid invariants, Chow rings and Hodge-theoretic checks."""

from .catalog import boolean, builtin, fano, load_corpus, uniform, vamos
from .chow import (
    ChowRing,
    Filter,
    alpha,
    beta,
    chow_ring,
    full_filter,
    trivial_filter,
)
from .exceptions import (
    AxiomViolation,
    CheckFailed,
    MatroidError,
    ParseError,
    TooLarge,
)
from .fan import Fan, bergman_fan
from .formats import parse_matroid, read_matroid, serialize_matroid
from .invariants import char_poly, mu_vector
from .matroid import (
    Matroid,
    matroid_from_bases,
    matroid_from_circuits,
    matroid_from_flats,
    matroid_from_graph,
    matroid_from_matrix,
)
from .moebius_algebra import topheavy_check
from .report import Report
from .structures import FiniteFieldMatrix, Graph

__all__ = [
    "AxiomViolation",
    "CheckFailed",
    "ChowRing",
    "Fan",
    "Filter",
    "FiniteFieldMatrix",
    "Graph",
    "Matroid",
    "MatroidError",
    "ParseError",
    "Report",
    "TooLarge",
    "alpha",
    "bergman_fan",
    "beta",
    "boolean",
    "builtin",
    "char_poly",
    "chow_ring",
    "fano",
    "full_filter",
    "load_corpus",
    "matroid_from_bases",
    "matroid_from_circuits",
    "matroid_from_flats",
    "matroid_from_graph",
    "matroid_from_matrix",
    "mu_vector",
    "parse_matroid",
    "read_matroid",
    "serialize_matroid",
    "topheavy_check",
    "trivial_filter",
    "uniform",
    "vamos",
]
