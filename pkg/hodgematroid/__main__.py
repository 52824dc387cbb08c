# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""Command-line interface for hodgematroid.

Exit codes: 0 when every requested check passes, 1 when a check fails,
2 for usage, parse and domain errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, cast

from hodgematroid.bitsets import Subset, parse_subset
from hodgematroid.catalog import corpus_names
from hodgematroid.constants import LOG_FORMAT
from hodgematroid.exceptions import CheckFailed, MatroidError
from hodgematroid.formats import parse_class, read_source, report_to_json
from hodgematroid.pipelines import (
    FAN_CHECKS,
    chow_pipeline,
    corpus_pipeline,
    fan_pipeline,
    hodge_pipeline,
    invariants_pipeline,
    load_subject,
    topheavy_pipeline,
    validate_source,
)
from hodgematroid.report import Report, tool_version
from hodgematroid.threads import worker_count

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2


def _subset(text: str) -> Subset:
    try:
        return parse_subset(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _degree(text: str) -> int | None:
    if text == "all":
        return None
    try:
        return int(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(
            f"expected 'all' or an integer, got {text!r}"
        ) from e


def _write_json(args: argparse.Namespace, payload: object) -> None:
    target: str | None = cast(str | None, args.json)
    if target is None:
        return
    text = report_to_json(payload)
    if target == "-":
        sys.stdout.write(text)
        return
    try:
        Path(target).write_text(text, encoding="utf-8")
    except OSError as e:
        raise MatroidError(f"cannot write '{target}': {e}") from e


def _emit(args: argparse.Namespace, reports: list[Report]) -> None:
    """Print and save the reports, then raise if any check failed.

    Raises:
        CheckFailed: With the names of the failed checks.
    """
    timings: bool = cast(bool, args.timings)
    quiet: bool = cast(bool, args.quiet)
    if not quiet and args.json != "-":
        for report in reports:
            print(report.render())
    if len(reports) == 1:
        _write_json(args, reports[0].to_json(timings=timings))
    else:
        _write_json(
            args, {"reports": [r.to_json(timings=timings) for r in reports]}
        )
    failures = [
        f"{r.matroid.get('name')}:{name}"
        for r in reports
        for name in r.failures
    ]
    if failures:
        raise CheckFailed(failures)


def _finish(
    args: argparse.Namespace, action: str, build: Callable[[], list[Report]]
) -> int:
    try:
        reports = build()
        _emit(args, reports)
    except CheckFailed as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_FAILED
    except MatroidError as e:
        print(f"Error {action}: {e}", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_OK


def cmd_validate(args: argparse.Namespace) -> int:
    """Handle the validate command."""
    path: str = cast(str, args.file)

    def build() -> list[Report]:
        report, _ = validate_source(read_source(path))
        return [report]

    return _finish(args, "validating matroid", build)


def cmd_invariants(args: argparse.Namespace) -> int:
    """Handle the invariants command."""
    path: str = cast(str, args.file)
    return _finish(
        args,
        "computing invariants",
        lambda: [invariants_pipeline(load_subject(path))],
    )


def cmd_chow(args: argparse.Namespace) -> int:
    """Handle the chow command."""
    path: str = cast(str, args.file)
    flats: list[Subset] | None = cast(list[Subset] | None, args.filter)
    trivial: bool = cast(bool, args.trivial)
    mu: bool = cast(bool, args.mu)
    flips: bool = cast(bool, args.flips)
    return _finish(
        args,
        "computing the Chow ring",
        lambda: [
            chow_pipeline(
                load_subject(path),
                flats=flats,
                trivial=trivial,
                mu=mu,
                flips=flips,
            )
        ],
    )


def cmd_hodge(args: argparse.Namespace) -> int:
    """Handle the hodge command."""
    path: str = cast(str, args.file)
    ell: str = cast(str, args.ell)
    degree: int | None = cast(int | None, args.k)

    def build() -> list[Report]:
        subject = load_subject(path)
        values = None
        if ell != "default":
            try:
                content = Path(ell).read_text(encoding="utf-8")
            except OSError as e:
                raise MatroidError(f"cannot read '{ell}': {e}") from e
            values = parse_class(content, subject.matroid)
        degrees = None if degree is None else [degree]
        return [hodge_pipeline(subject, ell=values, degrees=degrees)]

    return _finish(args, "checking Hodge theory", build)


def cmd_fan(args: argparse.Namespace) -> int:
    """Handle the fan command."""
    path: str = cast(str, args.file)
    checks: str = cast(str, args.check)
    chosen = [c.strip() for c in checks.split(",") if c.strip()]
    return _finish(
        args,
        "checking the fan",
        lambda: [fan_pipeline(load_subject(path), checks=chosen)],
    )


def cmd_topheavy(args: argparse.Namespace) -> int:
    """Handle the topheavy command."""
    path: str = cast(str, args.file)
    p: int | None = cast(int | None, args.p)
    q: int | None = cast(int | None, args.q)
    if cast(bool, args.sweep):
        p = q = None
    return _finish(
        args,
        "checking top-heaviness",
        lambda: [topheavy_pipeline(load_subject(path), p=p, q=q)],
    )


def cmd_corpus(args: argparse.Namespace) -> int:
    """Handle the corpus command."""
    names: list[str] = cast(list[str], args.names)
    if cast(bool, args.list):
        for name in corpus_names():
            print(name)
        return EXIT_OK
    if not cast(bool, args.all) and not names:
        print("Error: give corpus entry names or --all", file=sys.stderr)
        return EXIT_ERROR
    threads: int | None = cast(int | None, args.threads)

    def build() -> list[Report]:
        workers = worker_count(threads)
        return corpus_pipeline(names or None, workers=workers)

    return _finish(args, "running the corpus", build)


def _configure_logging(args: argparse.Namespace) -> None:
    verbose: int = cast(int, args.verbose)
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level, format=LOG_FORMAT, stream=sys.stderr, force=True
    )


def main(argv: list[str] | None = None) -> int:
    """Main CLI entry point."""
    parser = argparse.ArgumentParser(
        prog="hodgematroid",
        description=(
            "Exact matroid invariants, Chow rings, Bergman fans and "
            "Hodge-theoretic checks."
        ),
        epilog="Ex: hodgematroid hodge builtin:fano --k all",
    )
    parser.add_argument(
        "-v",
        "--version",
        action="version",
        version=f"hodgematroid {tool_version()}",
    )

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json",
        metavar="PATH",
        help="Write the JSON report to PATH, or to stdout for '-'",
    )
    common.add_argument(
        "--timings",
        action="store_true",
        help="Include per-check timings in the JSON report",
    )
    common.add_argument(
        "-q",
        "--quiet",
        action="store_true",
        help="Do not print the text report",
    )
    common.add_argument(
        "-V",
        "--verbose",
        action="count",
        default=0,
        help="Log progress on stderr (-VV for debug output)",
    )

    subparsers = parser.add_subparsers(dest="command", metavar="command")

    def verb(
        name: str,
        summary: str,
        description: str,
        examples: str,
        func: Callable[[argparse.Namespace], int],
        *,
        takes_file: bool = True,
    ) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(
            name,
            help=summary,
            description=description,
            epilog=f"Examples:\n{examples}",
            formatter_class=argparse.RawDescriptionHelpFormatter,
            parents=[common],
        )
        if takes_file:
            sub.add_argument(
                "file",
                metavar="FILE",
                help="Matroid file, or builtin:NAME (e.g. builtin:U(2,4))",
            )
        sub.set_defaults(func=func)
        return sub

    verb(
        "validate",
        "Check a matroid file against the axioms",
        "Parse a matroid file, validate its axioms and recompute rank, "
        "flats and closure by brute force.",
        "  hodgematroid validate fano.matroid",
        cmd_validate,
    )
    verb(
        "invariants",
        "Characteristic polynomial and Whitney numbers",
        "Compute the characteristic polynomial three ways, the Whitney "
        "numbers and the f-vector, and check their log-concavity.",
        "  hodgematroid invariants k4.matroid\n"
        "  hodgematroid invariants --json - builtin:fano",
        cmd_invariants,
    )

    chow = verb(
        "chow",
        "Dimensions of the Chow ring of a filter",
        "Build the Chow ring of a filter of flats and cross-check its "
        "Hilbert function.",
        "  hodgematroid chow builtin:fano --mu\n"
        "  hodgematroid chow builtin:B(3) --trivial --flips\n"
        "  hodgematroid chow builtin:U(3,4) --filter '{0,1}'",
        cmd_chow,
    )
    chow.add_argument(
        "--filter",
        action="append",
        type=_subset,
        metavar="FLAT",
        help="A filter member (repeatable; the ground set is implied)",
    )
    chow.add_argument(
        "--trivial",
        action="store_true",
        help="Use the filter holding only the ground set",
    )
    chow.add_argument(
        "--mu",
        action="store_true",
        help="Compare deg(alpha^(r-k) beta^k) with the mu vector",
    )
    chow.add_argument(
        "--flips",
        action="store_true",
        help="Check the decomposition along the full flip chain",
    )

    hodge = verb(
        "hodge",
        "Poincaré duality, hard Lefschetz and Hodge-Riemann",
        "Check the Kähler package of the Chow ring for an ample class, "
        "by default the submodular class |F|(n - |F|).",
        "  hodgematroid hodge builtin:k4 --k all\n"
        "  hodgematroid hodge builtin:fano --ell weights.txt --k 1",
        cmd_hodge,
    )
    hodge.add_argument(
        "--ell",
        default="default",
        metavar="FILE",
        help="'default', or a file of 'FLAT VALUE' lines",
    )
    hodge.add_argument(
        "--k",
        type=_degree,
        default=None,
        metavar="K",
        help="'all' (default) or one degree",
    )

    fan = verb(
        "fan",
        "Check the Bergman fan",
        "Check unimodularity, purity, validity and the ample cone of the "
        "Bergman fan, and validity of the filtered fans.",
        "  hodgematroid fan builtin:fano --check unimodular,pure",
        cmd_fan,
    )
    fan.add_argument(
        "--check",
        default=",".join(FAN_CHECKS),
        metavar="LIST",
        help=f"Comma separated subset of {', '.join(FAN_CHECKS)}",
    )

    topheavy = verb(
        "topheavy",
        "Top-heavy checks in the graded Möbius algebra",
        "Check that lambda^(q-p) is injective and that flats of rank p "
        "inject into flats of rank q.",
        "  hodgematroid topheavy builtin:fano --p 1 --q 2\n"
        "  hodgematroid topheavy builtin:vamos --sweep",
        cmd_topheavy,
    )
    topheavy.add_argument("--p", type=int, metavar="P", help="Lower rank")
    topheavy.add_argument("--q", type=int, metavar="Q", help="Upper rank")
    topheavy.add_argument(
        "--sweep",
        action="store_true",
        help="Every valid pair (the default without --p and --q)",
    )

    corpus = verb(
        "corpus",
        "Run every pipeline on the bundled corpus",
        "Validate each bundled matroid and run all pipelines on it.",
        "  hodgematroid corpus --list\n"
        "  hodgematroid corpus --all --threads 4\n"
        "  hodgematroid corpus fano k4",
        cmd_corpus,
        takes_file=False,
    )
    corpus.add_argument(
        "names", nargs="*", metavar="NAME", help="Corpus entries to run"
    )
    corpus.add_argument(
        "--list", action="store_true", help="List the corpus entries"
    )
    corpus.add_argument(
        "--all", action="store_true", help="Run every corpus entry"
    )
    corpus.add_argument(
        "--threads",
        type=int,
        metavar="N",
        help="Worker threads (overrides HODGE_MATROID_THREADS)",
    )

    args = parser.parse_args(argv)

    command: str | None = cast(str | None, args.command)
    if command is None:
        parser.print_help()
        return EXIT_OK

    _configure_logging(args)
    func: Callable[[argparse.Namespace], int] = cast(
        Callable[[argparse.Namespace], int], args.func
    )
    return func(args)


if __name__ == "__main__":
    sys.exit(main())
