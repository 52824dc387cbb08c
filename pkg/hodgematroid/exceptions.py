# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""Exception classes for hodgematroid.

Every error raised on purpose by the library derives from `MatroidError`,
so callers (the CLI in particular) can tell domain failures apart from
programming errors with a single ``except`` clause.
"""

from __future__ import annotations

from collections.abc import Sequence


class MatroidError(ValueError):
    """Base class for all hodgematroid errors."""


class AxiomViolation(MatroidError):
    """Raised when a family of sets fails a matroid axiom.

    ``axiom`` is ``"i"`` for intersection closure, ``"ii"`` for the minimal
    cover axiom, or ``"circuits"`` for circuit elimination. ``witness`` is
    a human readable description of the offending sets.
    """

    def __init__(self, axiom: str, witness: str) -> None:
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"axiom ({axiom}) violated: {witness}")


class ExchangeViolation(MatroidError):
    """Raised when two bases fail the basis exchange axiom."""

    def __init__(self, first: str, second: str) -> None:
        self.pair = (first, second)
        super().__init__(f"basis exchange fails for {first} and {second}")


class NotPrime(MatroidError):
    """Raised when a finite field matrix is given a non-prime modulus."""


class BadParameters(MatroidError):
    """Raised for out of range constructor or operation parameters."""


class IndexOutOfRange(MatroidError):
    """Raised when a subset mentions elements outside the ground set."""


class NonzeroRemainder(MatroidError):
    """Raised when an exact polynomial division leaves a remainder."""


class HasLoops(MatroidError):
    """Raised when an operation needs a loop-free matroid."""


class InvalidFilter(MatroidError):
    """Raised when a family of flats is not a filter."""


class NotTopDegree(MatroidError):
    """Raised when the degree map receives a class outside the top degree."""


class NonIntegralDegree(MatroidError):
    """Raised when a degree that must be an integer is a proper fraction."""


class NotAmple(MatroidError):
    """Raised when a candidate class fails the strict convexity test."""


class NotMaximalFlat(MatroidError):
    """Raised when a flip center is not maximal outside the filter."""


class RelationNotPreserved(MatroidError):
    """Raised when a ring map sends a defining relation to a nonzero class.

    This signals an implementation bug rather than bad input.
    """


class ConeNotInFan(MatroidError):
    """Raised when a cone is looked up in a fan that does not contain it."""


class NotUnimodular(MatroidError):
    """Raised when a fan presentation needs a unimodular fan."""


class TooLarge(MatroidError):
    """Raised when an exhaustive computation exceeds its configured cap."""


class TorsionDetected(MatroidError):
    """Raised when a graded piece cannot be given an integral basis."""


class ConfigError(MatroidError):
    """Raised for invalid environment configuration."""


class ParseError(MatroidError):
    """Raised when a matroid file cannot be parsed.

    The offending line number (1-based, 0 when unknown) is kept alongside
    the message.
    """

    def __init__(self, line: int, message: str) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}")


class CheckFailed(MatroidError):
    """Raised when one or more requested checks fail."""

    def __init__(self, failures: Sequence[str]) -> None:
        self.failures = list(failures)
        super().__init__("failed checks: " + ", ".join(self.failures))
