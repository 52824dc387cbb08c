# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""Dense univariate polynomials with integer coefficients."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from hodgematroid.exceptions import NonzeroRemainder


def _trim(coefficients: Iterable[int]) -> tuple[int, ...]:
    values = list(coefficients)
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class IntPolynomial:
    """An integer polynomial, coefficients listed constant term first.

    The zero polynomial has no coefficients and degree -1.
    """

    coefficients: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", _trim(self.coefficients))

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> IntPolynomial:
        return cls((0,) * degree + (c,))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, k: int) -> int:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return 0

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        size = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(
            self.coefficient(k) + other.coefficient(k) for k in range(size)
        )

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coefficients)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if not self or not other:
            return IntPolynomial()
        product = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    product[i + j] += a * b
        return IntPolynomial(product)

    def __call__(self, x: int) -> int:
        """Evaluate by Horner's rule."""
        value = 0
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def divide_by_linear(self, root: int) -> IntPolynomial:
        """Exact division by ``T - root`` using synthetic division.

        Raises:
            NonzeroRemainder: If ``root`` is not a root.
        """
        if not self:
            return IntPolynomial()
        quotient = [0] * self.degree
        carry = 0
        for k in range(self.degree, 0, -1):
            carry = carry * root + self.coefficients[k]
            quotient[k - 1] = carry
        remainder = carry * root + self.coefficients[0]
        if remainder:
            raise NonzeroRemainder(
                f"{self} leaves remainder {remainder} modulo T - {root}"
            )
        return IntPolynomial(quotient)

    def to_json(self) -> list[int]:
        return list(self.coefficients)

    def __str__(self) -> str:
        if not self:
            return "0"
        terms: list[str] = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if k == 0:
                body = str(magnitude)
            else:
                power = "T" if k == 1 else f"T^{k}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            if not terms:
                terms.append(body if sign == "+" else f"-{body}")
            else:
                terms.append(f"{sign} {body}")
        return " ".join(terms)


T = IntPolynomial.monomial(1)
ONE = IntPolynomial.constant(1)
