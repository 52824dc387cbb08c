# SPDX-FileCopyrightText: 2025 Alexandre Gomes Gaigalas <alganet@gmail.com>
#
# SPDX-License-Identifier: ISC

"""Shared constants for the hodgematroid package.

This module centralizes the size caps, file format markers and tuning
values used throughout the codebase.
"""

from fractions import Fraction

MAX_GROUND = 64  # Subsets are machine-word bitmasks
EXHAUSTIVE_GROUND = 20  # Largest ground set for 2^n rank tables
CORPUS_GROUND = 16  # Builtin constructors refuse anything larger

# Hodge pipeline caps: r = rk(M) - 1 and number of proper nonempty flats
HODGE_MAX_DEGREE = 4
HODGE_MAX_FLATS = 70
# mu_via_chow runs on larger rings than the full Hodge pipeline
CHOW_MAX_DEGREE = 4
CHOW_MAX_FLATS = 160

TORUS_LIMIT = 10**6  # Largest p^r enumerated by the torus oracle
# Primes for the torus point count identity, where a representation exists
TORUS_PRIMES = (2, 3, 5)
COLORING_LIMIT = 10**6  # Largest q^vertices enumerated by the coloring oracle

FORMAT_MAGIC = "matroid-format"
FORMAT_VERSION = 1
FORMAT_KINDS = ("flats", "bases", "circuits", "graph", "matrix")

REPORT_SCHEMA_VERSION = 1

# Rational step used when probing that ample classes stay ample
AMPLE_PERTURBATION = Fraction(1, 1000)
# Fans with more rays skip the per-ray perturbation scan
AMPLE_PERTURBATION_MAX_RAYS = 20

THREADS_ENV = "HODGE_MATROID_THREADS"
DEFAULT_THREADS = 1

LOG_FORMAT = "%(name)s:%(levelname)s:%(message)s"

CORPUS_PACKAGE = "hodgematroid.corpus"
CORPUS_SUFFIX = ".matroid"

# Pairs of maximal cones checked by the exact intersection LP
FAN_PAIR_LIMIT = 2000

# Caps for the flip chain and the Möbius algebra associativity scan
FLIP_MAX_FLATS = 30
ASSOCIATIVITY_MAX_FLATS = 60

# Colour counts compared against the chromatic polynomial
CHROMATIC_COLOURS = (2, 3, 4, 5)

# Cones above which the fan pipeline skips the quadratic checks
FAN_MAX_CONES = 600
