# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""Subsets of a finite ground set as integer bitmasks.

Element ``i`` of the ground set ``{0, ..., n-1}`` is bit ``1 << i``.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from typing import TypeAlias

from hodgematroid.constants import MAX_GROUND
from hodgematroid.exceptions import IndexOutOfRange

Subset: TypeAlias = int

EMPTY: Subset = 0


def full(n: int) -> Subset:
    """Return the whole ground set ``{0, ..., n-1}``."""
    return (1 << n) - 1


def popcount(s: Subset) -> int:
    return s.bit_count()


def members(s: Subset) -> Iterator[int]:
    """Yield the elements of ``s`` in increasing order."""
    while s:
        low = s & -s
        yield low.bit_length() - 1
        s ^= low


def from_members(elements: Iterable[int]) -> Subset:
    s = EMPTY
    for e in elements:
        if e < 0:
            raise IndexOutOfRange(f"negative element {e}")
        s |= 1 << e
    return s


def lowest(s: Subset) -> int:
    """Return the smallest element of a nonempty subset."""
    return (s & -s).bit_length() - 1


def contains(s: Subset, e: int) -> bool:
    return bool(s >> e & 1)


def is_subset(a: Subset, b: Subset) -> bool:
    return a & ~b == 0


def check(s: Subset, n: int) -> Subset:
    """Validate that ``s`` only uses elements below ``n``.

    Raises:
        IndexOutOfRange: If ``s`` is negative or sets a bit at or above n.
    """
    if n > MAX_GROUND:
        raise IndexOutOfRange(f"ground set of {n} exceeds {MAX_GROUND}")
    if s < 0 or s >> n:
        raise IndexOutOfRange(
            f"subset {format_subset(max(s, 0))} not inside ground set of {n}"
        )
    return s


def subsets_of(s: Subset) -> Iterator[Subset]:
    """Yield every subset of ``s``, including ``s`` and the empty set."""
    sub = s
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & s


def expand(s: Subset, kept: Sequence[int]) -> Subset:
    """Send position ``j`` of ``s`` to element ``kept[j]``."""
    return from_members(kept[j] for j in members(s))


def format_subset(s: Subset) -> str:
    """Render a subset as ``{0,2,5}``."""
    return "{" + ",".join(str(e) for e in members(s)) + "}"


def parse_subset(text: str) -> Subset:
    """Parse the ``{0,2,5}`` notation produced by `format_subset`.

    Raises:
        ValueError: If the braces or the indices are malformed.
    """
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError(f"expected a braced subset, got {text!r}")
    body = text[1:-1].strip()
    if not body:
        return EMPTY
    return from_members(int(part) for part in body.split(","))
