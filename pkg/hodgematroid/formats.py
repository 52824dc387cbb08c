# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""Matroid text format and JSON report serialization.

A matroid file is a short header followed by one data line per item::

    matroid-format 1
    name: fano
    ground: 7
    kind: matrix
    prime: 2
    0 0 0 1 1 1 1
    0 1 1 0 0 1 1
    1 0 1 0 1 0 1

Blank lines and lines starting with ``#`` are ignored. Subsets are written
``{0,2,5}``, graph edges ``u-v`` and matrix rows as space-separated
residues.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from hodgematroid.bitsets import Subset, format_subset, parse_subset
from hodgematroid.constants import (
    FORMAT_KINDS,
    FORMAT_MAGIC,
    FORMAT_VERSION,
)
from hodgematroid.exceptions import MatroidError, ParseError
from hodgematroid.matroid import (
    Matroid,
    matroid_from_bases,
    matroid_from_circuits,
    matroid_from_flats,
    matroid_from_graph,
    matroid_from_matrix,
)
from hodgematroid.structures import FiniteFieldMatrix, Graph

_HEADER_KEYS = ("name", "ground", "kind", "prime", "vertices")


@dataclass
class MatroidSource:
    """The parsed, not yet validated, content of a matroid file."""

    name: str = ""
    ground: int = 0
    kind: str = ""
    prime: int | None = None
    vertices: int | None = None
    subsets: list[Subset] = field(default_factory=list)
    edges: list[tuple[int, int]] = field(default_factory=list)
    rows: list[tuple[int, ...]] = field(default_factory=list)


def _data_lines(content: str) -> list[tuple[int, str]]:
    lines = []
    for number, raw in enumerate(content.splitlines(), start=1):
        text = raw.strip()
        if text and not text.startswith("#"):
            lines.append((number, text))
    return lines


def _parse_int(number: int, key: str, value: str) -> int:
    try:
        return int(value)
    except ValueError as e:
        raise ParseError(number, f"{key} must be an integer") from e


def parse_source(content: str) -> MatroidSource:
    """Parse matroid file content without building the matroid.

    Raises:
        ParseError: On any syntactic problem, with the offending line.
    """
    lines = _data_lines(content)
    if not lines:
        raise ParseError(0, "empty matroid file")
    number, first = lines[0]
    parts = first.split()
    if len(parts) != 2 or parts[0] != FORMAT_MAGIC:
        raise ParseError(number, f"expected '{FORMAT_MAGIC} <version>'")
    if _parse_int(number, "version", parts[1]) != FORMAT_VERSION:
        raise ParseError(number, f"unsupported format version {parts[1]}")

    source = MatroidSource()
    seen: set[str] = set()
    index = 1
    while index < len(lines):
        number, text = lines[index]
        key, sep, value = text.partition(":")
        key = key.strip()
        if not sep or key not in _HEADER_KEYS:
            break
        if key in seen:
            raise ParseError(number, f"duplicate header '{key}'")
        seen.add(key)
        value = value.strip()
        if key == "name":
            source.name = value
        elif key == "ground":
            source.ground = _parse_int(number, key, value)
        elif key == "kind":
            if value not in FORMAT_KINDS:
                raise ParseError(
                    number,
                    f"kind must be one of {', '.join(FORMAT_KINDS)}",
                )
            source.kind = value
        elif key == "prime":
            source.prime = _parse_int(number, key, value)
        else:
            source.vertices = _parse_int(number, key, value)
        index += 1

    for required in ("ground", "kind"):
        if required not in seen:
            raise ParseError(number, f"missing '{required}' header")
    if source.kind == "matrix" and source.prime is None:
        raise ParseError(number, "matrix files need a 'prime' header")

    for number, text in lines[index:]:
        if source.kind in ("flats", "bases", "circuits"):
            try:
                subset = parse_subset(text)
            except ValueError as e:
                raise ParseError(number, str(e)) from e
            if subset >> source.ground:
                raise ParseError(
                    number, f"{text} exceeds ground set {source.ground}"
                )
            source.subsets.append(subset)
        elif source.kind == "graph":
            u, sep, v = text.partition("-")
            if not sep:
                raise ParseError(number, f"expected an edge 'u-v', got {text}")
            source.edges.append(
                (
                    _parse_int(number, "vertex", u),
                    _parse_int(number, "vertex", v),
                )
            )
        else:
            row = tuple(_parse_int(number, "entry", x) for x in text.split())
            if len(row) != source.ground:
                raise ParseError(
                    number,
                    f"row has {len(row)} entries, ground is {source.ground}",
                )
            source.rows.append(row)
    if source.kind == "graph" and len(source.edges) != source.ground:
        raise ParseError(
            number,
            f"{len(source.edges)} edges listed, ground is {source.ground}",
        )
    return source


def build_matroid(source: MatroidSource) -> Matroid:
    """Validate a parsed source into a `Matroid`.

    Raises:
        MatroidError: Whatever the relevant constructor raises.
    """
    if source.kind == "flats":
        return matroid_from_flats(
            source.ground, source.subsets, name=source.name
        )
    if source.kind == "bases":
        return matroid_from_bases(
            source.ground, source.subsets, name=source.name
        )
    if source.kind == "circuits":
        return matroid_from_circuits(
            source.ground, source.subsets, name=source.name
        )
    if source.kind == "graph":
        vertices = source.vertices
        if vertices is None:
            vertices = 1 + max((max(e) for e in source.edges), default=-1)
        return matroid_from_graph(
            Graph(vertices, tuple(source.edges)), name=source.name
        )
    assert source.prime is not None
    return matroid_from_matrix(
        FiniteFieldMatrix(source.prime, tuple(source.rows)),
        name=source.name,
    )


def parse_matroid(content: str) -> Matroid:
    """Parse and validate matroid file content.

    Example:
        >>> text = "matroid-format 1\\nground: 2\\nkind: bases\\n{0}\\n{1}\\n"
        >>> parse_matroid(text).rank_of_ground
        1
    """
    return build_matroid(parse_source(content))


def read_source(path: str | Path) -> MatroidSource:
    """Read and parse a matroid file, naming it after the file if the
    header has no name.

    Raises:
        ParseError: If the file cannot be read or parsed.
    """
    try:
        content = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(0, f"cannot read '{path}': {e}") from e
    source = parse_source(content)
    if not source.name:
        source.name = Path(path).stem
    return source


def read_matroid(path: str | Path) -> Matroid:
    """Read a matroid file from disk.

    Raises:
        ParseError: If the file cannot be read or parsed.
    """
    return build_matroid(read_source(path))


def serialize_matroid(matroid: Matroid) -> str:
    """Write a matroid as a ``kind: flats`` file."""
    lines = [
        f"{FORMAT_MAGIC} {FORMAT_VERSION}",
        f"name: {matroid.name}",
        f"ground: {matroid.n}",
        "kind: flats",
    ]
    lines.extend(format_subset(f) for f in matroid.flats)
    return "\n".join(lines) + "\n"


def parse_class(content: str, matroid: Matroid) -> dict[Subset, Fraction]:
    """Parse a degree one class written as one ``FLAT VALUE`` per line.

    Proper flats that are not listed get the value zero; values may be
    integers or fractions such as ``3/2``.

    Raises:
        ParseError: On a malformed line, a set that is not a proper
            nonempty flat, or a flat listed twice.
    """
    proper = set(matroid.proper_flats())
    values: dict[Subset, Fraction] = {}
    for number, text in _data_lines(content):
        head, _, tail = text.rpartition(" ")
        try:
            flat = parse_subset(head.strip())
            value = Fraction(tail)
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(number, f"expected 'FLAT VALUE': {e}") from e
        if flat not in proper:
            raise ParseError(
                number, f"{format_subset(flat)} is not a proper flat"
            )
        if flat in values:
            raise ParseError(number, f"{format_subset(flat)} listed twice")
        values[flat] = value
    return {f: values.get(f, Fraction(0)) for f in sorted(proper)}


def report_to_json(payload: object) -> str:
    """Serialize a report payload with sorted keys for byte-stable output."""
    try:
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    except (TypeError, ValueError) as e:
        raise MatroidError(f"report is not JSON serializable: {e}") from e
