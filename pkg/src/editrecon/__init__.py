"""Reconstruction codes for single-edit channels.

Core objects: words over {0, ..., q-1}, error balls and their exact
intersections, the Type-A/Type-B confusability characterisation, the code
families built on inversion and sum syndromes, coverage analysis and exact
optimal-code search, and a probabilistic channel plus bounded-distance
decoder for Monte Carlo experiments.
"""

from .analysis import (
    CoverageReport,
    OptimalSearchResult,
    VerifyResult,
    optimal_code_size,
    read_coverage,
    verify_reconstruction,
)
from .balls import (
    BallKind,
    ball,
    intersection_size,
    levenshtein_radius,
    n_sub_formula,
    sub_coverage_formula,
)
from .channel import ChannelParams, ReadSet, generate_reads, make_rng, transmit
from .codebooks import (
    Codebook,
    CodebookSpec,
    Family,
    best_syndromes,
    count_R,
    default_period,
    in_R,
    redundancy,
    syndrome_classes,
)
from .confusability import (
    ConfusabilityVerdict,
    VerdictKind,
    Witness,
    predicted_intersection,
    type_a_confusable,
    type_b_confusable,
)
from .decoder import DecodeResult, candidate_list, decode
from .errors import ResourceLimitError
from .sim import SimConfig, SimReport, SimRow, run_simulation, wilson_interval, write_csv
from .words import (
    Word,
    hamming_distance,
    has_period,
    inversions,
    longest_low_period_subword,
)

__version__ = "0.1.0"

__all__ = [
    "BallKind",
    "ChannelParams",
    "Codebook",
    "CodebookSpec",
    "ConfusabilityVerdict",
    "CoverageReport",
    "DecodeResult",
    "Family",
    "OptimalSearchResult",
    "ReadSet",
    "ResourceLimitError",
    "SimConfig",
    "SimReport",
    "SimRow",
    "VerdictKind",
    "VerifyResult",
    "Witness",
    "Word",
    "ball",
    "best_syndromes",
    "candidate_list",
    "count_R",
    "decode",
    "default_period",
    "generate_reads",
    "hamming_distance",
    "has_period",
    "in_R",
    "intersection_size",
    "inversions",
    "levenshtein_radius",
    "longest_low_period_subword",
    "make_rng",
    "n_sub_formula",
    "optimal_code_size",
    "predicted_intersection",
    "read_coverage",
    "redundancy",
    "run_simulation",
    "sub_coverage_formula",
    "syndrome_classes",
    "transmit",
    "type_a_confusable",
    "type_b_confusable",
    "verify_reconstruction",
    "wilson_interval",
    "write_csv",
]
