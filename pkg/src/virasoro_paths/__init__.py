"""
virasoro_paths
~~~~~~~~~~~~~~

*virasoro_paths* computes, exactly, the generating functions of restricted
lattice paths and the bosonic and fermionic polynomials whose limits are the
characters of the Virasoro minimal models M(p, p+1) and M(t, 2t+1). Every
identity between them can be checked coefficient by coefficient, either from
Python or through the `virasoro-paths` command.

:copyright: (c) 2026 by the virasoro-paths developers
:license: GPLv3, see LICENSE for more details
"""

__title__ = "virasoro_paths"
__version__ = "1.0.0"
__author__ = "virasoro-paths developers"
__copyright__ = "Copyright (c) 2026 virasoro-paths developers"
__license__ = "GPLv3"

import os

from .base import (
    CheckRecord,
    DecompositionError,
    ExcludedCaseError,
    ExponentDenominatorError,
    InconsistentSystemError,
    InvalidParametersError,
    InvalidPathError,
    NonExactDivisionError,
    StabilityError,
    Suite,
    Task,
    TransformError,
    TruncationError,
    UndefinedTransformError,
    VirasoroPathsError,
)
from .bosonic import (
    BosonicLimits,
    BosonicRecurrences,
    CharacterParams,
    YParams,
    abf_bosonic_finitized,
    abf_limit_check,
    half_bosonic_extended,
    half_bosonic_finitized,
    half_limits_check,
    rocha_caridi,
    verify_bosonic_recurrences,
    y_limit,
    y_limits_check,
    y_polynomial,
)
from .fermionic import (
    Evaluation,
    Family,
    FermionicCase,
    MSystem,
    ParityVector,
    evaluate_character,
    evaluate_finitized,
    hl_character,
    hl_character_pair,
    hl_finitized,
    melzer_character,
    melzer_finitized,
    parity_q,
    parity_r,
    rabf_finitized,
)
from .harness import SweepConfig, SweepReport, emit_character, run_sweep
from .paths import (
    AbfPath,
    HalfLatticePath,
    VertexWord,
    abf_weight,
    dump_paths,
    enumerate_abf,
    enumerate_abf_restricted,
    enumerate_half,
    even_valley_count,
    gf_abf,
    gf_abf_m,
    gf_abf_restricted,
    gf_half,
    gf_half_via_restricted,
    half_from_restricted,
    half_weight,
    path_from_vertex_word,
    straight_count,
    vertex_word,
    weight_from_word,
)
from .qpoly import QExponent, QPoly, TruncatedSeries, poly_add, poly_div_exact, poly_mul, substitute_power, truncate
from .qspecial import (
    TrinomialIdentities,
    TrinomialIndex,
    inv_pochhammer_truncated,
    q_binomial,
    q_binomial_base,
    q_binomial_modified,
    q_pochhammer,
    q_trinomial,
    verify_trinomial_identities,
)
from .suites import AbfSuite, CharacterSuite, HalfSuite, ModifiedBinomialSuite, RestrictedSuite
from .transforms import (
    CDecomposition,
    Partition,
    TransformChecks,
    c1_transform,
    c2_insert,
    c3_wave,
    c_decompose,
    c_transform,
    forward_move,
    partitions_in_box,
    refined_bijection_check,
)

__all__ = [
    "VirasoroPathsError",
    "NonExactDivisionError",
    "ExponentDenominatorError",
    "TruncationError",
    "InvalidParametersError",
    "ExcludedCaseError",
    "InvalidPathError",
    "TransformError",
    "UndefinedTransformError",
    "DecompositionError",
    "StabilityError",
    "InconsistentSystemError",
    "CheckRecord",
    "Suite",
    "Task",
    "QExponent",
    "QPoly",
    "TruncatedSeries",
    "poly_add",
    "poly_mul",
    "poly_div_exact",
    "substitute_power",
    "truncate",
    "TrinomialIndex",
    "TrinomialIdentities",
    "q_pochhammer",
    "q_binomial",
    "q_binomial_base",
    "inv_pochhammer_truncated",
    "q_binomial_modified",
    "q_trinomial",
    "verify_trinomial_identities",
    "AbfPath",
    "HalfLatticePath",
    "VertexWord",
    "abf_weight",
    "half_weight",
    "vertex_word",
    "path_from_vertex_word",
    "weight_from_word",
    "straight_count",
    "even_valley_count",
    "enumerate_abf",
    "enumerate_abf_restricted",
    "enumerate_half",
    "gf_abf",
    "gf_abf_m",
    "gf_abf_restricted",
    "gf_half",
    "gf_half_via_restricted",
    "half_from_restricted",
    "dump_paths",
    "Partition",
    "CDecomposition",
    "TransformChecks",
    "partitions_in_box",
    "c1_transform",
    "c2_insert",
    "c3_wave",
    "c_transform",
    "c_decompose",
    "forward_move",
    "refined_bijection_check",
    "ParityVector",
    "parity_q",
    "parity_r",
    "Family",
    "FermionicCase",
    "MSystem",
    "Evaluation",
    "evaluate_finitized",
    "evaluate_character",
    "melzer_finitized",
    "hl_finitized",
    "rabf_finitized",
    "melzer_character",
    "hl_character",
    "hl_character_pair",
    "CharacterParams",
    "YParams",
    "rocha_caridi",
    "abf_bosonic_finitized",
    "y_polynomial",
    "half_bosonic_extended",
    "half_bosonic_finitized",
    "y_limit",
    "verify_bosonic_recurrences",
    "y_limits_check",
    "abf_limit_check",
    "half_limits_check",
    "BosonicRecurrences",
    "BosonicLimits",
    "AbfSuite",
    "RestrictedSuite",
    "HalfSuite",
    "CharacterSuite",
    "ModifiedBinomialSuite",
    "SweepConfig",
    "SweepReport",
    "run_sweep",
    "emit_character",
]

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

DEFAULT_JOBS = int(os.environ["VIRASORO_PATHS_JOBS"]) if "VIRASORO_PATHS_JOBS" in os.environ else 1
DEFAULT_ORDER = int(os.environ["VIRASORO_PATHS_ORDER"]) if "VIRASORO_PATHS_ORDER" in os.environ else 20
MAX_ORDER = int(os.environ["VIRASORO_PATHS_MAX_ORDER"]) if "VIRASORO_PATHS_MAX_ORDER" in os.environ else 60
LOG_LEVEL = os.environ.get("VIRASORO_PATHS_LOG_LEVEL", "WARNING").upper()
if LOG_LEVEL not in _LOG_LEVELS:
    raise ValueError(f"VIRASORO_PATHS_LOG_LEVEL must be one of {_LOG_LEVELS}, got {LOG_LEVEL!r}")
