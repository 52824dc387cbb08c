# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""Characteristic polynomials, Whitney numbers and sequence predicates."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from fractions import Fraction
from typing import Literal

from hodgematroid.bitsets import members, popcount
from hodgematroid.exceptions import BadParameters, HasLoops
from hodgematroid.lattice import FlatLattice, MoebiusTable
from hodgematroid.matroid import Matroid
from hodgematroid.polynomial import ONE, IntPolynomial, T

logger = logging.getLogger(__name__)

Algorithm = Literal["subset-sum", "moebius", "deletion-contraction"]
ALGORITHMS: tuple[Algorithm, ...] = (
    "subset-sum",
    "moebius",
    "deletion-contraction",
)


def _from_coranks(r: int, weights: dict[int, int]) -> IntPolynomial:
    """Build ``sum_c weights[c] T^c`` for coranks ``c`` in ``0..r``."""
    return IntPolynomial(weights.get(c, 0) for c in range(r + 1))


def _subset_sum(matroid: Matroid) -> IntPolynomial:
    r = matroid.rank_of_ground
    table = matroid.rank_table
    weights: dict[int, int] = {}
    for s in range(1 << matroid.n):
        corank = r - table[s]
        weights[corank] = weights.get(corank, 0) + (-1) ** popcount(s)
    return _from_coranks(r, weights)


def _moebius(matroid: Matroid) -> IntPolynomial:
    if not matroid.is_loop_free():
        return IntPolynomial()
    lattice = FlatLattice(matroid)
    row = MoebiusTable(lattice).row(lattice.bottom)
    r = matroid.rank_of_ground
    weights: dict[int, int] = {}
    for y, mu in row.items():
        corank = r - lattice.ranks[y]
        weights[corank] = weights.get(corank, 0) + mu
    return _from_coranks(r, weights)


def _power(base: IntPolynomial, exponent: int) -> IntPolynomial:
    result = ONE
    for _ in range(exponent):
        result = result * base
    return result


def _deletion_contraction(
    matroid: Matroid, memo: dict[tuple[int, tuple[int, ...]], IntPolynomial]
) -> IntPolynomial:
    key = matroid.canonical_key
    if key in memo:
        return memo[key]
    if not matroid.is_loop_free():
        result = IntPolynomial()
    elif matroid.n == 0:
        result = ONE
    else:
        coloops = matroid.coloops()
        if coloops:
            # M is the direct sum of M \ coloops and a free matroid
            rest = matroid.deletion(coloops)
            result = _power(T - ONE, popcount(coloops)) * (
                _deletion_contraction(rest, memo)
            )
        else:
            e = 1 << next(members(matroid.ground))
            result = _deletion_contraction(
                matroid.deletion(e), memo
            ) - _deletion_contraction(matroid.contraction(e), memo)
    memo[key] = result
    return result


def char_poly(
    matroid: Matroid, algorithm: Algorithm = "moebius"
) -> IntPolynomial:
    """The characteristic polynomial, constant term first.

    All three algorithms agree; ``moebius`` is the cheapest at desk scale.
    A matroid with a loop has characteristic polynomial zero.

    Raises:
        BadParameters: For an unknown algorithm name.
    """
    if algorithm == "subset-sum":
        return _subset_sum(matroid)
    if algorithm == "moebius":
        return _moebius(matroid)
    if algorithm == "deletion-contraction":
        memo: dict[tuple[int, tuple[int, ...]], IntPolynomial] = {}
        result = _deletion_contraction(matroid, memo)
        logger.debug("deletion-contraction visited %d minors", len(memo))
        return result
    raise BadParameters(f"unknown algorithm '{algorithm}'")


def reduced_char_poly(matroid: Matroid) -> IntPolynomial:
    """``char_poly / (T - 1)``, checked to be exact.

    Raises:
        BadParameters: On the empty ground set.
        NonzeroRemainder: If the division is not exact.
    """
    if matroid.n == 0:
        raise BadParameters("the reduced polynomial needs a nonempty ground")
    return char_poly(matroid).divide_by_linear(1)


def mu_vector(matroid: Matroid) -> list[int]:
    """``mu^k`` for ``k = 0..r``, read off the reduced polynomial.

    The reduced polynomial is ``sum_k (-1)^k mu^k T^(r-k)``.

    Raises:
        HasLoops: If the matroid has a loop.
    """
    if not matroid.is_loop_free():
        raise HasLoops(f"{matroid!r} has loops")
    reduced = reduced_char_poly(matroid)
    r = matroid.rank_of_ground - 1
    return [(-1) ** k * reduced.coefficient(r - k) for k in range(r + 1)]


def whitney_first(matroid: Matroid) -> list[int]:
    """Unsigned coefficients ``w_k`` of the characteristic polynomial."""
    chi = char_poly(matroid)
    r = matroid.rank_of_ground
    return [(-1) ** k * chi.coefficient(r - k) for k in range(r + 1)]


def whitney_second(matroid: Matroid) -> list[int]:
    """Number ``W_k`` of flats of each rank."""
    return [len(group) for group in matroid.flats_by_rank]


def brylawski_polynomial(matroid: Matroid) -> IntPolynomial:
    """``sum_k (-1)^k f_k T^(r-k)`` built from the f-vector."""
    f = matroid.f_vector()
    r = matroid.rank_of_ground
    return IntPolynomial((-1) ** (r - c) * f[r - c] for c in range(r + 1))


def brylawski_check(matroid: Matroid) -> bool:
    """The free coextension's reduced polynomial encodes the f-vector."""
    coextension = matroid.free_coextension()
    return reduced_char_poly(coextension) == brylawski_polynomial(matroid)


# -- sequences ----------------------------------------------------------------


def is_log_concave(seq: Sequence[int]) -> bool:
    return all(
        seq[k - 1] * seq[k + 1] <= seq[k] ** 2 for k in range(1, len(seq) - 1)
    )


def has_no_internal_zeros(seq: Sequence[int]) -> bool:
    nonzero = [k for k, a in enumerate(seq) if a]
    if not nonzero:
        return True
    return all(seq[k] for k in range(nonzero[0], nonzero[-1] + 1))


def is_unimodal(seq: Sequence[int]) -> bool:
    k = 0
    while k + 1 < len(seq) and seq[k] <= seq[k + 1]:
        k += 1
    while k + 1 < len(seq) and seq[k] >= seq[k + 1]:
        k += 1
    return k + 1 >= len(seq)


def is_positive(seq: Sequence[int]) -> bool:
    return all(a > 0 for a in seq)


def mason_ratios(
    seq: Sequence[int],
) -> list[tuple[int, Fraction, Fraction]]:
    """``(k, a_k^2 / (a_{k-1} a_{k+1}), (k+1)/k)`` for interior ``k``.

    Terms with a zero neighbour are skipped.
    """
    ratios = []
    for k in range(1, len(seq) - 1):
        below = seq[k - 1] * seq[k + 1]
        if below:
            ratios.append(
                (k, Fraction(seq[k] ** 2, below), Fraction(k + 1, k))
            )
    return ratios
