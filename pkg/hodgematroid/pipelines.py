# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""Check pipelines behind the command-line verbs.

Each pipeline takes a `Subject` (a matroid plus the file it was parsed
from, when there is one) and returns a `Report`. Size caps turn checks
into ``skipped`` entries instead of errors; statements that are only
conjectured for the input, such as top-heaviness of a matroid with no
known representation, are recorded as ``reported``.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from hodgematroid.bitsets import Subset, format_subset, is_subset, popcount
from hodgematroid.catalog import (
    builtin,
    corpus_names,
    corpus_source,
    incidence_matrix,
    uniform_matrix,
)
from hodgematroid.chow import (
    ChowRing,
    Filter,
    alpha,
    ample_from_submodular,
    beta,
    chow_ring,
    classes_independent_of_element,
    cubic_submodular,
    feichtner_yuzvinsky_dims,
    filter_from_flats,
    flip,
    flip_sequence,
    full_filter,
    hard_lefschetz_check,
    hr_check,
    kt_inequality_check,
    lefschetz_decomposition_check,
    local_hr_check,
    mu_via_chow,
    poincare_pairing,
    signature_stability_check,
    trivial_filter,
)
from hodgematroid.constants import (
    AMPLE_PERTURBATION,
    AMPLE_PERTURBATION_MAX_RAYS,
    ASSOCIATIVITY_MAX_FLATS,
    CHOW_MAX_DEGREE,
    CHOW_MAX_FLATS,
    CHROMATIC_COLOURS,
    FAN_MAX_CONES,
    FLIP_MAX_FLATS,
    HODGE_MAX_DEGREE,
    HODGE_MAX_FLATS,
    TORUS_PRIMES,
)
from hodgematroid.exceptions import (
    AxiomViolation,
    BadParameters,
    ExchangeViolation,
    HasLoops,
    MatroidError,
    NotAmple,
    NotUnimodular,
    RelationNotPreserved,
    TooLarge,
)
from hodgematroid.fan import (
    Fan,
    ample_check,
    bergman_fan,
    bergman_fan_filtered,
    fan_chow_ring,
    flat_key,
    intersection_identity,
    is_pure,
    is_unimodular,
    nef_check,
    pl_from_class,
    reduced_bergman_fan,
    stays_ample,
    validate_fan,
)
from hodgematroid.flips import flip_chain
from hodgematroid.formats import MatroidSource, build_matroid, read_source
from hodgematroid.invariants import (
    brylawski_check,
    char_poly,
    is_log_concave,
    is_positive,
    is_unimodal,
    mason_ratios,
    mu_vector,
    reduced_char_poly,
    whitney_first,
    whitney_second,
)
from hodgematroid.lattice import (
    descending_flag_count,
    flat_lattice,
    moebius,
    moebius_sign_check,
    weisner_check,
)
from hodgematroid.matroid import Matroid
from hodgematroid.moebius_algebra import (
    lambda_matrix,
    moebius_algebra,
    topheavy_check,
    topheavy_sweep,
)
from hodgematroid.oracle import (
    Independence,
    bases_independence,
    brute_closure_oracle,
    brute_flat_oracle,
    brute_rank_oracle,
    component_count,
    graph_independence,
    matrix_independence,
    projective_torus_point_count,
    proper_colorings,
    torus_point_count,
)
from hodgematroid.report import Outcome, Report, describe_matroid, verdict
from hodgematroid.ring import RingElement
from hodgematroid.structures import FiniteFieldMatrix, Graph
from hodgematroid.threads import CorpusPool

logger = logging.getLogger(__name__)

BUILTIN_PREFIX = "builtin:"
FAN_CHECKS = ("unimodular", "pure", "valid", "ample", "filters")


def is_uniform(matroid: Matroid) -> bool:
    """Every set of fewer than ``rk(M)`` elements is a flat."""
    r = matroid.rank_of_ground
    return all(
        len(matroid.flats_of_rank(k)) == comb(matroid.n, k)
        and all(popcount(f) == k for f in matroid.flats_of_rank(k))
        for k in range(r)
    )


@dataclass(frozen=True)
class Subject:
    """A matroid and, when it came from a file, that file's content."""

    matroid: Matroid
    source: MatroidSource | None = None

    @property
    def matrix(self) -> FiniteFieldMatrix | None:
        s = self.source
        if s is None or s.kind != "matrix" or s.prime is None:
            return None
        return FiniteFieldMatrix(s.prime, tuple(s.rows))

    @property
    def graph(self) -> Graph | None:
        s = self.source
        if s is None or s.kind != "graph":
            return None
        vertices = s.vertices
        if vertices is None:
            vertices = 1 + max((max(e) for e in s.edges), default=-1)
        return Graph(vertices, tuple(s.edges))

    @property
    def representable(self) -> bool:
        """Certified by a matrix, a graph or a uniform flat lattice."""
        return (
            self.matrix is not None
            or self.graph is not None
            or is_uniform(self.matroid)
        )

    def describe(self) -> dict[str, object]:
        return describe_matroid(
            self.matroid, representable=self.representable
        )


def subject_from_source(source: MatroidSource) -> Subject:
    return Subject(build_matroid(source), source)


def load_subject(target: str) -> Subject:
    """A file path, or ``builtin:NAME`` for a catalog or corpus entry.

    Raises:
        ParseError: If the file cannot be read or parsed.
        MatroidError: If the content is not a matroid.
    """
    if target.startswith(BUILTIN_PREFIX):
        name = target[len(BUILTIN_PREFIX) :]
        if name in corpus_names():
            return subject_from_source(corpus_source(name))
        return Subject(builtin(name))
    return subject_from_source(read_source(target))


def _report(command: str, subject: Subject) -> Report:
    return Report(command, subject.describe())


def _independence(subject: Subject) -> Independence:
    """Independence straight from the input, where the input has it."""
    matrix = subject.matrix
    if matrix is not None:
        return matrix_independence(matrix)
    graph = subject.graph
    if graph is not None:
        return graph_independence(graph)
    source = subject.source
    if source is not None and source.kind == "bases":
        return bases_independence(source.subsets)
    return bases_independence(subject.matroid.bases())


def torus_matrices(subject: Subject) -> dict[int, FiniteFieldMatrix]:
    """Representations of the subject over the primes in `TORUS_PRIMES`.

    Graphs use their incidence matrix and uniform matroids the moment
    curve. A matrix in the input is used at its own prime only, since its
    entries are already reduced.
    """
    m = subject.matroid
    r = m.rank_of_ground
    graph = subject.graph
    matrices: dict[int, FiniteFieldMatrix] = {}
    for p in TORUS_PRIMES:
        if graph is not None and graph.vertices:
            matrices[p] = incidence_matrix(graph, p)
        elif r and is_uniform(m) and (r in (1, m.n) or m.n <= p + 1):
            matrices[p] = uniform_matrix(r, m.n, p)
    matrix = subject.matrix
    if matrix is not None:
        matrices[matrix.prime] = matrix
    return dict(sorted(matrices.items()))


# -- validate -----------------------------------------------------------------


def validate_source(source: MatroidSource) -> tuple[Report, Subject | None]:
    """Build the matroid, then recheck rank, flats and closure by brute
    force from the input's own notion of independence."""
    report = Report(
        "validate",
        {"name": source.name, "ground": source.ground, "rank": None},
    )
    try:
        subject = subject_from_source(source)
    except (AxiomViolation, ExchangeViolation) as e:
        payload: dict[str, object] = {"error": str(e)}
        if isinstance(e, AxiomViolation):
            payload.update(axiom=e.axiom, witness=e.witness)
        else:
            payload.update(pair=list(e.pair))
        report.run("axioms", lambda: ("fail", payload))
        return report, None
    report.matroid = subject.describe()
    m = subject.matroid
    report.run(
        "axioms",
        lambda: ("pass", {"kind": source.kind, "flats": len(m.flats)}),
    )
    independent = _independence(subject)

    def ranks() -> Outcome:
        brute = brute_rank_oracle(m.n, independent)
        return verdict(brute == m.rank_table), {}

    def flats() -> Outcome:
        brute = brute_flat_oracle(m.n, independent)
        return verdict(brute == sorted(m.flats)), {"count": len(brute)}

    def closures() -> Outcome:
        brute = brute_closure_oracle(m.n, independent)
        ok = all(brute[s] == m.closure(s) for s in range(1 << m.n))
        return verdict(ok), {}

    report.run("oracle-rank", ranks)
    report.run("oracle-flats", flats)
    report.run("oracle-closure", closures)

    def structure() -> Outcome:
        simple, kept = m.simplify()
        return "reported", {
            "loops": format_subset(m.loops()),
            "coloops": format_subset(m.coloops()),
            "simple": m.is_simple(),
            "simplification": {"ground": simple.n, "kept": list(kept)},
            "bases": len(m.bases()),
            "circuits": len(m.circuits()),
        }

    report.run("structure", structure)
    return report, subject


# -- invariants ---------------------------------------------------------------


def invariants_pipeline(subject: Subject) -> Report:
    """Characteristic polynomial, Whitney numbers, f-vector and the
    identities that tie them together."""
    report = _report("invariants", subject)
    m = subject.matroid
    chi = char_poly(m)
    loop_free = m.is_loop_free() and m.n > 0
    whitney = whitney_second(m)
    f = m.f_vector()
    report.info.update(
        chi=str(chi),
        whitney_first=whitney_first(m),
        whitney_second=whitney,
        f_vector=f,
    )
    if m.n:
        report.info["reduced_chi"] = str(reduced_char_poly(m))
    mu: list[int] = []
    if loop_free:
        mu = mu_vector(m)
        report.info["mu"] = mu

    def agreement() -> Outcome:
        values = {
            name: char_poly(m, name).to_json()
            for name in ("subset-sum", "moebius", "deletion-contraction")
        }
        same = len({tuple(v) for v in values.values()}) == 1
        return verdict(same), {"algorithms": values}

    report.run("char-poly-agreement", agreement)

    if loop_free:
        report.run(
            "mu-log-concave",
            lambda: (
                verdict(is_positive(mu) and is_log_concave(mu)),
                {"mu": mu},
            ),
        )
        w = whitney_first(m)
        report.run(
            "w-log-concave",
            lambda: (verdict(is_log_concave(w)), {"w": w}),
        )
    else:
        report.skip("mu-log-concave", "the matroid has loops")
        report.skip("w-log-concave", "the matroid has loops")
    report.run(
        "f-log-concave", lambda: (verdict(is_log_concave(f)), {"f": f})
    )
    if m.n:
        report.run(
            "brylawski-identity", lambda: (verdict(brylawski_check(m)), {})
        )

    lattice = flat_lattice(m)
    table = moebius(lattice)
    report.run(
        "moebius-signs",
        lambda: (verdict(moebius_sign_check(lattice, table)), {}),
    )
    report.run(
        "weisner",
        lambda: (
            verdict(
                all(
                    weisner_check(lattice, a, table)
                    for a in range(1, len(lattice))
                )
            ),
            {},
        ),
    )

    if loop_free:

        def flags() -> Outcome:
            r = len(mu) - 1
            counts = [descending_flag_count(m, k) for k in range(r + 1)]
            unrestricted = [
                descending_flag_count(m, k, exclude_first=False)
                for k in range(r + 1)
            ]
            return verdict(counts == mu), {
                "counts": counts,
                "without_exclusion": unrestricted,
            }

        report.run("descending-flags", flags)

        def truncations() -> Outcome:
            kept = {}
            for k in range(m.rank_of_ground):
                truncated = mu_vector(m.truncate(k))
                kept[str(k)] = truncated
                if truncated[: k + 2] != mu[: k + 2]:
                    return "fail", {"truncations": kept, "k": k}
            return "pass", {"truncations": kept}

        report.run("truncation-mu", truncations)

    graph = subject.graph
    if graph is not None:

        def chromatic() -> Outcome:
            c = component_count(graph)
            counts = {}
            ok = True
            for q in CHROMATIC_COLOURS:
                brute = proper_colorings(graph, q).value
                counts[str(q)] = brute
                ok = ok and brute == q**c * chi(q)
            return verdict(ok), {"colorings": counts, "components": c}

        report.run("chromatic-identity", chromatic)
    else:
        report.skip("chromatic-identity", "no graph in the input")

    matrices = torus_matrices(subject)
    if matrices:
        report.run("torus-identity", lambda: _torus_outcome(m, matrices))
    else:
        report.skip("torus-identity", "no representation over a prime field")

    def shape() -> Outcome:
        return "reported", {
            "whitney_second_log_concave": is_log_concave(whitney),
            "whitney_second_unimodal": is_unimodal(whitney),
            "mason_whitney": mason_ratios(whitney),
            "mason_f": mason_ratios(f),
        }

    report.run("sequence-shape", shape)
    return report


def _torus_outcome(
    m: Matroid, matrices: Mapping[int, FiniteFieldMatrix]
) -> Outcome:
    """Torus points over ``F_p`` against ``chi(p)``, and projective ones
    against the reduced polynomial, prime by prime."""
    chi = char_poly(m)
    reduced = reduced_char_poly(m) if m.n else None
    primes: dict[str, object] = {}
    ok = True
    for p, matrix in matrices.items():
        try:
            count = torus_point_count(matrix).value
            entry: dict[str, object] = {"count": count}
            ok = ok and count == chi(p)
            if reduced is not None:
                projective = projective_torus_point_count(matrix).value
                entry["projective"] = projective
                ok = ok and projective == reduced(p)
        except TooLarge as e:
            entry = {"skipped": str(e)}
        primes[str(p)] = entry
    return verdict(ok), {"primes": primes}


# -- chow ---------------------------------------------------------------------


def _ring_cap(matroid: Matroid, degree: int, flats: int) -> str | None:
    r = matroid.rank_of_ground - 1
    count = len(matroid.proper_flats())
    if r > degree:
        return f"r = {r} exceeds {degree}"
    if count > flats:
        return f"{count} proper flats exceed {flats}"
    return None


def _filter_for(
    matroid: Matroid, flats: Sequence[Subset] | None, trivial: bool
) -> Filter:
    if flats:
        return filter_from_flats(matroid, flats)
    if trivial:
        return trivial_filter(matroid)
    return full_filter(matroid)


def chow_pipeline(
    subject: Subject,
    *,
    flats: Sequence[Subset] | None = None,
    trivial: bool = False,
    mu: bool = False,
    flips: bool = False,
) -> Report:
    """Dimensions of ``A(M, P)`` and their cross-checks.

    Raises:
        HasLoops: If the matroid has a loop.
        InvalidFilter: If ``flats`` do not generate a filter.
    """
    report = _report("chow", subject)
    m = subject.matroid
    if not m.is_loop_free():
        raise HasLoops(f"{m!r} has loops")
    filt = _filter_for(m, flats, trivial)
    report.info["filter"] = filt.describe()
    reason = _ring_cap(m, CHOW_MAX_DEGREE, CHOW_MAX_FLATS)
    if reason:
        report.skip("chow-ring", reason)
        return report
    ring = chow_ring(m, filt)
    dims = ring.dims
    report.info.update(hilbert=dims, generators=len(ring.keys))
    report.run(
        "integral-basis", lambda: ("reported", {"integral": ring.integral})
    )
    report.run(
        "palindromic", lambda: (verdict(dims == dims[::-1]), {"dims": dims})
    )
    if filt.is_full():
        report.run(
            "feichtner-yuzvinsky",
            lambda: (
                verdict(feichtner_yuzvinsky_dims(m) == dims),
                {"expected": feichtner_yuzvinsky_dims(m)},
            ),
        )

    def fan_presentation() -> Outcome:
        fan = bergman_fan_filtered(m, filt.flats)
        try:
            fan_dims = fan_chow_ring(fan).dims
        except NotUnimodular as e:
            return "fail", {"error": str(e)}
        top = len(dims)
        ok = fan_dims[:top] == dims and not any(fan_dims[top:])
        return verdict(ok), {"fan": fan_dims}

    if ring.top <= 3:
        report.run("fan-presentation", fan_presentation)
    else:
        report.skip("fan-presentation", f"r = {ring.top} exceeds 3")

    if mu:
        full = ring if filt.is_full() else chow_ring(m)
        expected = mu_vector(m)

        def via_chow() -> Outcome:
            values = mu_via_chow(full)
            return verdict(
                values == expected and is_log_concave(values)
            ), {"degrees": values, "mu": expected}

        report.run("mu-via-chow", via_chow)

    if flips:
        count = len(m.proper_flats())
        if count > FLIP_MAX_FLATS:
            report.skip(
                "flip-chain", f"{count} proper flats exceed {FLIP_MAX_FLATS}"
            )
        else:
            report.run("flip-chain", lambda: _flip_outcome(m))
    return report


def _flip_outcome(matroid: Matroid) -> Outcome:
    try:
        steps = flip_chain(matroid)
    except RelationNotPreserved as e:
        return "fail", {"error": str(e)}
    return verdict(all(s.passed for s in steps)), {
        "steps": [s.to_json() for s in steps]
    }


# -- hodge --------------------------------------------------------------------


def _complete_flags(matroid: Matroid) -> list[list[Subset]]:
    """Chains of flats with ranks ``1, ..., rk(M) - 1``."""
    top = matroid.rank_of_ground - 1
    chains: list[list[Subset]] = [[]]
    for k in range(1, top + 1):
        chains = [
            chain + [f]
            for chain in chains
            for f in matroid.flats_of_rank(k)
            if not chain or is_subset(chain[-1], f)
        ]
    return chains


def hodge_pipeline(
    subject: Subject,
    *,
    ell: Mapping[Subset, Fraction] | None = None,
    degrees: Sequence[int] | None = None,
) -> Report:
    """Degree normalization, Poincaré duality, hard Lefschetz and the
    Hodge-Riemann relations on ``A(M)``.

    Raises:
        HasLoops: If the matroid has a loop.
        BadParameters: If a requested degree is outside ``0..r``.
    """
    report = _report("hodge", subject)
    m = subject.matroid
    if not m.is_loop_free():
        raise HasLoops(f"{m!r} has loops")
    r = m.rank_of_ground - 1
    chosen = list(range(r + 1)) if degrees is None else list(degrees)
    for k in chosen:
        if not 0 <= k <= r:
            raise BadParameters(f"degree {k} is outside 0..{r}")
    reason = _ring_cap(m, HODGE_MAX_DEGREE, HODGE_MAX_FLATS)
    if reason:
        report.skip("hodge", reason)
        return report
    ring = chow_ring(m)
    report.info.update(r=r, hilbert=ring.dims)
    a, b = alpha(ring), beta(ring)

    def normalization() -> Outcome:
        flags = _complete_flags(m)
        bad = [
            [format_subset(f) for f in flag]
            for flag in flags
            if ring.degree(ring.flag_monomial(flag)) != 1
        ]
        top = ring.degree(ring.power(a, r))
        return verdict(top == 1 and not bad), {
            "alpha_top": top,
            "flags": len(flags),
            "wrong": bad,
        }

    report.run("degree-normalization", normalization)
    report.run(
        "alpha-beta-well-defined",
        lambda: (verdict(classes_independent_of_element(ring)), {}),
    )

    def mu_check() -> Outcome:
        values = mu_via_chow(ring)
        expected = mu_vector(m)
        return verdict(values == expected), {
            "degrees": values,
            "mu": expected,
        }

    report.run("mu-via-chow", mu_check)

    ample: RingElement | None
    try:
        ample = ample_from_submodular(ring, ell)
    except NotAmple as e:
        error = str(e)
        report.run("ample-class", lambda: ("fail", {"error": error}))
        ample = None
    else:
        report.run(
            "ample-class", lambda: ("pass", {"class": ring.describe(ample)})
        )

    for k in chosen:
        pairing = poincare_pairing(ring, k)
        report.run(
            f"poincare-duality[{k}]",
            lambda: (
                verdict(pairing.unimodular),
                {"determinant": pairing.determinant},
            ),
        )
    for k in chosen:
        if ample is None:
            report.skip(f"hard-lefschetz[{k}]", "no ample class")
            continue
        _lefschetz_checks(report, ring, ample, k)
    middle = [k for k in chosen if 2 * k <= r]
    if ample is None:
        report.skip("signature-stability", "no ample class")
    elif middle:
        first = ample
        report.run(
            "signature-stability",
            lambda: _stability_outcome(ring, first, middle),
        )

    if r >= 2:
        report.run("khovanskii-teissier", lambda: _kt_outcome(ring, a, b))
    if ample is not None and ring.keys and r >= 1:
        local = local_hr_check(ring, 0, ample)
        report.run(
            "local-hodge-riemann",
            lambda: (
                "reported",
                {
                    "generator": ring.labels[0],
                    "dims": local.dims,
                    "duality": local.duality,
                    "passed": local.passed,
                },
            ),
        )
    return report


def _lefschetz_checks(
    report: Report, ring: ChowRing, ell: RingElement, k: int
) -> None:
    r = ring.top
    if 2 * k <= r:
        lefschetz = hard_lefschetz_check(ring, ell, k)
        report.run(
            f"hard-lefschetz[{k}]",
            lambda: (
                verdict(lefschetz.passed),
                {"rank": lefschetz.rank, "dim": lefschetz.source_dim},
            ),
        )
        form = hr_check(ring, ell, k)
        report.run(
            f"hodge-riemann[{k}]",
            lambda: (
                verdict(form.passed),
                {
                    "signature": list(form.signature),
                    "primitive": form.primitive_dim,
                },
            ),
        )
    report.run(
        f"lefschetz-decomposition[{k}]",
        lambda: (verdict(lefschetz_decomposition_check(ring, ell, k)), {}),
    )


def _stability_outcome(
    ring: ChowRing, first: RingElement, degrees: Sequence[int]
) -> Outcome:
    """Compare the Hodge-Riemann forms of ``first`` with those of a second
    certified class, built from `cubic_submodular` or the default."""
    try:
        second = ample_from_submodular(
            ring, cubic_submodular(ring.matroid.n)
        )
        if second == first:
            second = ample_from_submodular(ring)
    except NotAmple as e:
        return "fail", {"error": str(e)}
    stability = signature_stability_check(ring, first, second, degrees)
    return verdict(stability.passed), {
        "second": ring.describe(second),
        "distinct": stability.distinct,
        "signatures": stability.signatures(),
    }


def _kt_outcome(ring: ChowRing, a: RingElement, b: RingElement) -> Outcome:
    kt = kt_inequality_check(ring, a, b)
    return verdict(kt.passed), {"lhs": kt.lhs, "rhs": kt.rhs}


# -- fan ----------------------------------------------------------------------


def fan_pipeline(
    subject: Subject, *, checks: Sequence[str] = FAN_CHECKS
) -> Report:
    """Properties of the Bergman fan and of the filtered fans met along
    the flips from the trivial filter to the full one.

    Raises:
        HasLoops: If the matroid has a loop.
        BadParameters: For an unknown check name.
    """
    unknown = sorted(set(checks) - set(FAN_CHECKS))
    if unknown:
        raise BadParameters(f"unknown fan checks: {', '.join(unknown)}")
    report = _report("fan", subject)
    m = subject.matroid
    fan = bergman_fan(m)
    r = m.rank_of_ground - 1
    report.info.update(
        rays=len(fan.rays),
        cones=len(fan.cones),
        maximal=len(fan.maximal_cones),
    )
    small = len(fan.cones) <= FAN_MAX_CONES
    cap = f"{len(fan.cones)} cones exceed {FAN_MAX_CONES}"
    if "unimodular" in checks:
        report.run("unimodular", lambda: (verdict(is_unimodular(fan)), {}))
    if "pure" in checks:
        report.run(
            "pure", lambda: (verdict(is_pure(fan, r)), {"dimension": r})
        )
    if "valid" in checks:

        def valid() -> Outcome:
            validity = validate_fan(fan)
            return verdict(validity.passed and intersection_identity(fan)), {
                "missing_faces": [list(c) for c in validity.missing_faces],
                "exact_intersections": validity.intersections,
            }

        if small:
            report.run("valid", valid)
        else:
            report.skip("valid", cap)
    if "ample" in checks:
        if small:
            report.run("ample", lambda: _ample_outcome(m, fan))
        else:
            report.skip("ample", cap)
    if "filters" in checks:
        count = len(m.proper_flats())
        if count > FLIP_MAX_FLATS:
            report.skip(
                "filters", f"{count} proper flats exceed {FLIP_MAX_FLATS}"
            )
        else:
            report.run("filters", lambda: _filtered_fans_outcome(m))
    return report


def _ample_outcome(m: Matroid, fan: Fan) -> Outcome:
    """The default submodular class is ample and stays ample when one ray
    value moves by `AMPLE_PERTURBATION`; the zero function is nef, and
    ample only on the zero fan."""
    n = m.n
    values = {
        flat_key(f): popcount(f) * (n - popcount(f))
        for f in m.proper_flats()
    }
    phi = pl_from_class(fan, values)
    ample = ample_check(phi) and nef_check(phi)
    stable: bool | None = None
    if len(fan.rays) <= AMPLE_PERTURBATION_MAX_RAYS:
        stable = stays_ample(phi)
    zero = pl_from_class(fan, {})
    control = nef_check(zero) and ample_check(zero) == (not fan.rays)
    return verdict(ample and stable is not False and control), {
        "submodular_ample": ample,
        "perturbation": str(AMPLE_PERTURBATION),
        "stays_ample": stable,
        "zero_rejected": control,
    }


def _filtered_fans_outcome(matroid: Matroid) -> Outcome:
    filt = trivial_filter(matroid)
    r = matroid.rank_of_ground - 1
    results: list[dict[str, object]] = []
    for flat in [None, *flip_sequence(matroid)]:
        if flat is not None:
            filt = flip(filt, flat)
        fan = reduced_bergman_fan(matroid, filt.flats)
        ok = validate_fan(fan).passed and is_pure(fan, r)
        results.append(
            {
                "added": None if flat is None else format_subset(flat),
                "cones": len(fan.cones),
                "passed": ok,
            }
        )
    return verdict(all(x["passed"] for x in results)), {"filters": results}


# -- top-heavy ----------------------------------------------------------------


def topheavy_pipeline(
    subject: Subject,
    *,
    p: int | None = None,
    q: int | None = None,
) -> Report:
    """Injectivity of ``lambda^(q-p)`` in the graded Möbius algebra.

    With ``p`` and ``q`` both given one pair is checked, otherwise every
    valid pair. Matroids with no certified representation get
    ``reported`` verdicts.

    Raises:
        BadParameters: If only one of ``p`` and ``q`` is given, or the pair
            is out of range.
    """
    if (p is None) != (q is None):
        raise BadParameters("give both p and q, or neither")
    report = _report("topheavy", subject)
    m = subject.matroid
    asserted = subject.representable

    if p is not None and q is not None:
        reports = [topheavy_check(m, p, q)]
    else:
        sweep = topheavy_sweep(m)
        reports = sweep.reports
        report.info.update(
            whitney_second=sweep.whitney,
            log_concave=sweep.log_concave,
            unimodal=sweep.unimodal,
        )
    for item in reports:
        outcome = verdict(item.passed) if asserted else "reported"
        report.run(
            f"top-heavy[{item.p},{item.q}]",
            lambda: (outcome, item.to_json()),
        )
    pairs = [(x.p, x.q) for x in reports]
    report.run(
        "lambda-support",
        lambda: (
            verdict(
                all(
                    lambda_matrix(m, a, b).support_respects_containment()
                    for a, b in pairs
                )
            ),
            {},
        ),
    )
    if len(m.flats) <= ASSOCIATIVITY_MAX_FLATS:
        report.run(
            "moebius-associative",
            lambda: (verdict(moebius_algebra(m).is_associative()), {}),
        )
    else:
        report.skip(
            "moebius-associative",
            f"{len(m.flats)} flats exceed {ASSOCIATIVITY_MAX_FLATS}",
        )
    return report


# -- corpus -------------------------------------------------------------------


def subject_reports(subject: Subject) -> list[Report]:
    """Every pipeline with its default options, as the corpus runs them."""
    reports = [
        invariants_pipeline(subject),
        topheavy_pipeline(subject),
    ]
    if subject.matroid.is_loop_free() and subject.matroid.n:
        reports.append(chow_pipeline(subject, mu=True, flips=True))
        reports.append(hodge_pipeline(subject))
        reports.append(fan_pipeline(subject))
    return reports


def corpus_entry(name: str) -> list[Report]:
    """Validate one corpus entry and run every pipeline on it."""
    source = corpus_source(name)
    validation, subject = validate_source(source)
    if subject is None:
        return [validation]
    try:
        return [validation, *subject_reports(subject)]
    except MatroidError as e:
        failed = _report("corpus", subject)
        message = str(e)
        failed.run("pipelines", lambda: ("fail", {"error": message}))
        return [validation, failed]


def corpus_pipeline(
    names: Sequence[str] | None = None, *, workers: int = 1
) -> list[Report]:
    """Run `corpus_entry` over the named entries (all by default)."""
    chosen = list(names) if names is not None else corpus_names()
    for name in chosen:
        if name not in corpus_names():
            raise BadParameters(f"no corpus matroid named '{name}'")
    pool: CorpusPool[list[Report]] = CorpusPool(workers)
    results = pool.map(chosen, corpus_entry)
    reports = [r for group in results for r in group]
    logger.info(
        "corpus: %d reports, %d failed",
        len(reports),
        sum(1 for r in reports if not r.passed),
    )
    return reports
