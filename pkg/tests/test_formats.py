# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""Tests for the matroid file format and the class file format."""

import json
from fractions import Fraction
from pathlib import Path

import pytest

from hodgematroid.catalog import fano, uniform
from hodgematroid.exceptions import MatroidError, ParseError
from hodgematroid.formats import (
    parse_class,
    parse_matroid,
    parse_source,
    read_matroid,
    read_source,
    report_to_json,
    serialize_matroid,
)

U23 = """\
matroid-format 1
# three points on a line
name: u23

ground: 3
kind: flats
{}
{0}
{1}
{2}
{0,1,2}
"""


def test_parse_flats_with_comments_and_blanks() -> None:
    """Comments and blank lines are ignored."""
    m = parse_matroid(U23)
    assert m == uniform(2, 3)
    assert m.name == "u23"


def test_parse_graph_infers_vertices() -> None:
    """Without a vertices header the largest endpoint decides."""
    text = "matroid-format 1\nground: 3\nkind: graph\n0-1\n1-2\n2-0\n"
    m = parse_matroid(text)
    assert m == uniform(2, 3)
    assert m.provenance == "graph"


def test_parse_matrix() -> None:
    """Matrix rows are read with the prime from the header."""
    text = (
        "matroid-format 1\nground: 3\nkind: matrix\nprime: 5\n"
        "1 0 1\n0 1 1\n"
    )
    source = parse_source(text)
    assert source.prime == 5
    assert source.rows == [(1, 0, 1), (0, 1, 1)]
    assert parse_matroid(text) == uniform(2, 3)


@pytest.mark.parametrize(
    "text,line,message",
    [
        ("", 0, "empty matroid file"),
        ("# nothing\n", 0, "empty matroid file"),
        ("bogus 1\n", 1, "expected 'matroid-format"),
        ("matroid-format 2\n", 1, "unsupported format version"),
        ("matroid-format x\n", 1, "version must be an integer"),
        (
            "matroid-format 1\nground: 2\nground: 3\n",
            3,
            "duplicate header 'ground'",
        ),
        (
            "matroid-format 1\nground: 2\nkind: lines\n",
            3,
            "kind must be one of",
        ),
        (
            "matroid-format 1\nground: two\n",
            2,
            "ground must be an integer",
        ),
        ("matroid-format 1\nground: 2\n{0}\n", 3, "missing 'kind' header"),
        (
            "matroid-format 1\nground: 2\nkind: matrix\n1 0\n",
            4,
            "matrix files need a 'prime' header",
        ),
        (
            "matroid-format 1\nground: 2\nkind: bases\n{0}\n{2}\n",
            5,
            "exceeds ground set 2",
        ),
        (
            "matroid-format 1\nground: 2\nkind: bases\n0 1\n",
            4,
            "expected a braced subset",
        ),
        (
            "matroid-format 1\nground: 1\nkind: graph\n0 1\n",
            4,
            "expected an edge",
        ),
        (
            "matroid-format 1\nground: 2\nkind: graph\n0-1\n",
            4,
            "1 edges listed, ground is 2",
        ),
        (
            "matroid-format 1\nground: 2\nkind: matrix\nprime: 2\n1 0 1\n",
            5,
            "row has 3 entries",
        ),
    ],
    ids=[
        "empty",
        "only-comments",
        "bad-magic",
        "bad-version",
        "non-integer-version",
        "duplicate-header",
        "bad-kind",
        "non-integer-ground",
        "missing-kind",
        "matrix-without-prime",
        "subset-outside-ground",
        "unbraced-subset",
        "bad-edge",
        "edge-count",
        "row-length",
    ],
)
def test_parse_errors_carry_line_numbers(
    text: str, line: int, message: str
) -> None:
    """Every syntax error names the offending line."""
    with pytest.raises(ParseError) as exc_info:
        parse_source(text)
    assert exc_info.value.line == line
    assert message in str(exc_info.value)
    assert str(exc_info.value).startswith(f"line {line}:")


def test_axiom_errors_surface_from_build() -> None:
    """Syntactically fine files can still fail the axioms."""
    text = "matroid-format 1\nground: 3\nkind: flats\n{}\n{0}\n{1}\n{0,1,2}\n"
    with pytest.raises(MatroidError):
        parse_matroid(text)


def test_serialize_writes_a_flats_file() -> None:
    """Serialized matroids parse back to the same lattice."""
    text = serialize_matroid(fano())
    assert text.startswith("matroid-format 1\nname: fano\nground: 7\n")
    assert "kind: flats" in text
    assert parse_matroid(text) == fano()


def test_read_matroid_names_after_file(tmp_path: Path) -> None:
    """A file without a name header takes the file stem."""
    path = tmp_path / "triangle.matroid"
    path.write_text(
        "matroid-format 1\nground: 3\nkind: bases\n{0,1}\n{0,2}\n{1,2}\n",
        encoding="utf-8",
    )
    assert read_source(path).name == "triangle"
    m = read_matroid(path)
    assert m.name == "triangle"
    assert m == uniform(2, 3)


def test_read_missing_file(tmp_path: Path) -> None:
    """Unreadable files become parse errors on line 0."""
    with pytest.raises(ParseError) as exc_info:
        read_matroid(tmp_path / "absent.matroid")
    assert exc_info.value.line == 0
    assert "cannot read" in str(exc_info.value)


def test_parse_class_fills_missing_flats() -> None:
    """Unlisted proper flats get zero; fractions are exact."""
    m = uniform(2, 3)
    values = parse_class("# weights\n{0} 1\n{1} 3/2\n", m)
    assert values == {
        0b001: Fraction(1),
        0b010: Fraction(3, 2),
        0b100: Fraction(0),
    }


@pytest.mark.parametrize(
    "text,message",
    [
        ("{0,1} 1\n", "not a proper flat"),
        ("{} 1\n", "not a proper flat"),
        ("{0} 1\n{0} 2\n", "listed twice"),
        ("{0}\n", "expected 'FLAT VALUE'"),
        ("{0} x\n", "expected 'FLAT VALUE'"),
        ("{0} 1/0\n", "expected 'FLAT VALUE'"),
    ],
    ids=["not-flat", "empty", "duplicate", "no-value", "word", "zero-div"],
)
def test_parse_class_errors(text: str, message: str) -> None:
    """Malformed class files are rejected with a line number."""
    with pytest.raises(ParseError) as exc_info:
        parse_class(text, uniform(2, 3))
    assert message in str(exc_info.value)
    assert exc_info.value.line >= 1


def test_report_to_json_sorts_keys() -> None:
    """Output is deterministic and ends with a newline."""
    text = report_to_json({"b": 1, "a": [1, 2]})
    assert text.endswith("\n")
    assert text.index('"a"') < text.index('"b"')
    assert json.loads(text) == {"a": [1, 2], "b": 1}


def test_report_to_json_rejects_unserializable() -> None:
    """Non-JSON values raise a domain error."""
    with pytest.raises(MatroidError):
        report_to_json({"x": Fraction(1, 2)})
