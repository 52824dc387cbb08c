# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""Tests for check results and report rendering."""

from fractions import Fraction

from hodgematroid.catalog import fano, uniform
from hodgematroid.constants import REPORT_SCHEMA_VERSION
from hodgematroid.exceptions import TooLarge
from hodgematroid.report import (
    Outcome,
    Report,
    describe_matroid,
    plain,
    tool_version,
    verdict,
)


def passing() -> Outcome:
    return "pass", {"value": Fraction(3, 2)}


def failing() -> Outcome:
    return "fail", {}


def oversized() -> Outcome:
    raise TooLarge("ring too big")


def test_plain() -> None:
    assert plain(Fraction(4, 2)) == 2
    assert plain(Fraction(-1, 3)) == "-1/3"
    assert plain({1: (Fraction(1, 2), 3)}) == {"1": ["1/2", 3]}
    assert plain("text") == "text"


def test_verdict() -> None:
    assert verdict(True) == "pass"
    assert verdict(False) == "fail"


def test_describe_matroid() -> None:
    header = describe_matroid(fano(), representable=True)
    assert header["name"] == "fano"
    assert header["ground"] == 7
    assert header["rank"] == 3
    assert header["flats"] == 16
    assert header["provenance"] == "matrix"
    assert header["simple"] is True
    assert header["loops"] == "{}"
    assert header["representable"] is True
    assert len(str(header["digest"])) == 16


def test_digest_ignores_names() -> None:
    first = uniform(2, 3)
    second = uniform(2, 3)
    second.name = "renamed"
    assert (
        describe_matroid(first)["digest"]
        == describe_matroid(second)["digest"]
    )
    assert (
        describe_matroid(first)["digest"]
        != describe_matroid(uniform(1, 3))["digest"]
    )


def test_report_records_checks_in_order() -> None:
    report = Report("hodge", describe_matroid(fano()))
    report.run("first", passing)
    report.run("second", failing)
    report.skip("third", "not requested")
    assert [c.name for c in report.checks] == ["first", "second", "third"]
    assert [c.verdict for c in report.checks] == ["pass", "fail", "skipped"]
    assert report.failures == ["second"]
    assert not report.passed


def test_too_large_becomes_skipped() -> None:
    report = Report("chow", describe_matroid(fano()))
    result = report.run("big", oversized)
    assert result.verdict == "skipped"
    assert result.payload == {"reason": "ring too big"}
    assert report.passed


def test_reported_never_fails() -> None:
    report = Report("topheavy", describe_matroid(fano()))
    report.run("sweep", lambda: ("reported", {"passed": False}))
    assert report.passed


def test_json_is_deterministic_without_timings() -> None:
    report = Report("hodge", describe_matroid(fano()), info={"k": 1})
    report.run("first", passing)
    data = report.to_json()
    assert data["schema"] == REPORT_SCHEMA_VERSION
    assert data["tool"] == {"name": "hodgematroid", "version": tool_version()}
    assert data["requested"] == ["first"]
    assert data["info"] == {"k": 1}
    assert data["checks"] == [
        {"name": "first", "verdict": "pass", "payload": {"value": "3/2"}}
    ]
    assert data["passed"] is True
    assert "seconds" not in data
    assert data == report.to_json()


def test_json_with_timings() -> None:
    report = Report("hodge", describe_matroid(fano()))
    report.run("first", passing)
    data = report.to_json(timings=True)
    assert "seconds" in data
    checks = data["checks"]
    assert isinstance(checks, list)
    assert "seconds" in checks[0]


def test_render() -> None:
    report = Report("hodge", describe_matroid(fano()), info={"ell": "1/2"})
    report.run("first", passing)
    report.run("second", failing)
    lines = report.render().splitlines()
    assert lines[0] == "hodge: fano (n=7, rank=3)"
    assert lines[1] == "  ell: 1/2"
    assert lines[2] == "  [    pass] first"
    assert lines[3] == "  [    fail] second"
    assert lines[-1] == "FAILED"
