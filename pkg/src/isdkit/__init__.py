"""isdkit: decoding linear block codes by information-set pattern enumeration.

Unique (bounded-distance) and minimum-distance decoders that enumerate error
patterns only over the k information coordinates, certified against
brute-force oracle decoders, plus the combinatorial bounds that quantify the
saving and a seedable channel simulator.
"""

from .channel import ChannelSpec, Mismatch, TrialReport, run_trials, sample_error, trial_stream, verify_trials
from .codefile import CodeFileData, ParseError, code_to_file_data, format_code_file, load_code_file, parse_code_file
from .codes import (
    DEFAULT_GUARD,
    BoundsReport,
    GuardError,
    LinearCode,
    all_codewords,
    ball_volume,
    bounds_report,
    coset_leader_table,
    covering_radius,
    entropy_q,
    gv_distance,
    min_distance,
)
from .decoders import (
    DecodeOutcome,
    DecodeStats,
    DecodeStatus,
    md_decode,
    oracle_ball_decode,
    oracle_coset_table_decode,
    oracle_nearest_codeword,
    unique_decode,
)
from .fields import (
    ColumnPermutation,
    FieldSpec,
    FqMatrix,
    FqVector,
    RankError,
    hamming_distance,
    mat_mul,
    mat_vec_mul,
    rank,
    to_systematic,
)
from .known_codes import golay_23_12, hamming_7_4, repetition
from .patterns import PatternEnumerator, weight_ordered_patterns

__all__ = [
    "BoundsReport",
    "ChannelSpec",
    "CodeFileData",
    "ColumnPermutation",
    "DEFAULT_GUARD",
    "DecodeOutcome",
    "DecodeStats",
    "DecodeStatus",
    "FieldSpec",
    "FqMatrix",
    "FqVector",
    "GuardError",
    "LinearCode",
    "Mismatch",
    "ParseError",
    "PatternEnumerator",
    "RankError",
    "TrialReport",
    "all_codewords",
    "ball_volume",
    "bounds_report",
    "code_to_file_data",
    "coset_leader_table",
    "covering_radius",
    "entropy_q",
    "format_code_file",
    "golay_23_12",
    "gv_distance",
    "hamming_7_4",
    "hamming_distance",
    "load_code_file",
    "mat_mul",
    "mat_vec_mul",
    "md_decode",
    "min_distance",
    "oracle_ball_decode",
    "oracle_coset_table_decode",
    "oracle_nearest_codeword",
    "parse_code_file",
    "rank",
    "repetition",
    "run_trials",
    "sample_error",
    "to_systematic",
    "trial_stream",
    "unique_decode",
    "verify_trials",
    "weight_ordered_patterns",
]
