# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""Check results and the schema-versioned report they are collected in.

A check ends with one of four verdicts. ``pass`` and ``fail`` are
assertions; ``skipped`` marks a check whose input exceeded a size cap;
``reported`` records a result that is informative only and never fails
a run.
"""

from __future__ import annotations

import hashlib
import logging
import time
from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction
from importlib.metadata import PackageNotFoundError, version
from typing import Literal, TypeAlias

from hodgematroid.bitsets import format_subset
from hodgematroid.constants import REPORT_SCHEMA_VERSION
from hodgematroid.exceptions import TooLarge
from hodgematroid.matroid import Matroid

logger = logging.getLogger(__name__)

Verdict = Literal["pass", "fail", "skipped", "reported"]
Payload: TypeAlias = dict[str, object]
Outcome: TypeAlias = tuple[Verdict, Payload]


def tool_version() -> str:
    try:
        return version("hodgematroid")
    except PackageNotFoundError:
        return "0+unknown"


def verdict(ok: bool) -> Verdict:
    return "pass" if ok else "fail"


def plain(value: object) -> object:
    """Turn fractions and tuples into JSON values; exact fractions are
    written as ``"p/q"`` strings."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    return value


def describe_matroid(
    matroid: Matroid, *, representable: bool | None = None
) -> Payload:
    """Identifying data for a report header.

    The digest is taken over the sorted flat masks, so relabelled copies
    of the same input produce different digests.
    """
    key = repr(matroid.canonical_key).encode("utf-8")
    return {
        "name": matroid.name,
        "ground": matroid.n,
        "rank": matroid.rank_of_ground,
        "flats": len(matroid.flats),
        "provenance": matroid.provenance,
        "simple": matroid.is_simple(),
        "loops": format_subset(matroid.loops()),
        "representable": representable,
        "digest": hashlib.sha256(key).hexdigest()[:16],
    }


@dataclass(frozen=True)
class CheckResult:
    name: str
    verdict: Verdict
    payload: Payload
    seconds: float

    def to_json(self, *, timings: bool = False) -> Payload:
        data: Payload = {
            "name": self.name,
            "verdict": self.verdict,
            "payload": plain(self.payload),
        }
        if timings:
            data["seconds"] = round(self.seconds, 6)
        return data


@dataclass
class Report:
    """Every check run against one matroid, in the order they ran."""

    command: str
    matroid: Payload
    checks: list[CheckResult] = field(default_factory=list)
    info: Payload = field(default_factory=dict)

    def run(self, name: str, check: Callable[[], Outcome]) -> CheckResult:
        """Run one check and record it; `TooLarge` becomes ``skipped``."""
        start = time.perf_counter()
        try:
            outcome, payload = check()
        except TooLarge as e:
            outcome, payload = "skipped", {"reason": str(e)}
        result = CheckResult(
            name, outcome, payload, time.perf_counter() - start
        )
        self.checks.append(result)
        logger.info(
            "%s: %s (%.3fs)", name, result.verdict, result.seconds
        )
        return result

    def skip(self, name: str, reason: str) -> CheckResult:
        result = CheckResult(name, "skipped", {"reason": reason}, 0.0)
        self.checks.append(result)
        logger.info("%s: skipped, %s", name, reason)
        return result

    @property
    def failures(self) -> list[str]:
        return [c.name for c in self.checks if c.verdict == "fail"]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self, *, timings: bool = False) -> Payload:
        """The JSON form; timings are left out unless asked for, which
        keeps the output identical across runs."""
        data: Payload = {
            "schema": REPORT_SCHEMA_VERSION,
            "tool": {"name": "hodgematroid", "version": tool_version()},
            "command": self.command,
            "matroid": self.matroid,
            "requested": [c.name for c in self.checks],
            "info": plain(self.info),
            "checks": [c.to_json(timings=timings) for c in self.checks],
            "passed": self.passed,
        }
        if timings:
            data["seconds"] = round(sum(c.seconds for c in self.checks), 6)
        return data

    def render(self) -> str:
        """Plain text for the terminal."""
        name = self.matroid.get("name") or "<unnamed>"
        lines = [
            f"{self.command}: {name} "
            f"(n={self.matroid.get('ground')}, "
            f"rank={self.matroid.get('rank')})"
        ]
        for key, value in self.info.items():
            lines.append(f"  {key}: {plain(value)}")
        for check in self.checks:
            lines.append(f"  [{check.verdict:>8}] {check.name}")
        lines.append("PASSED" if self.passed else "FAILED")
        return "\n".join(lines)
