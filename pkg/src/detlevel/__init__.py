"""Exact computation with h-vectors of standard determinantal schemes.

The package decides, for the scheme cut out by the maximal minors of a
homogeneous polynomial matrix with a given degree matrix A:

* its h-vector (by two independent algorithms),
* whether the scheme is level (socle shifts),
* whether the h-vector is a pure O-sequence, with an explicit order
  ideal or an exhausted search as evidence,
* and, for equal-rows matrices, a matroid whose cover ideal realizes
  the same h-vector.

All arithmetic is exact.  See the cli module for the command line and
the service module for the HTTP wrapper.
"""

__version__ = "0.1.0"

from .analysis import (
    AnalysisReport,
    ConjectureRunSummary,
    analyze_matrix,
    run_conjecture,
)
from .degree_matrix import (
    DegreeMatrix,
    DegreeMatrixError,
    canonical_key,
    enumerate_matrices,
    matrix_from_key,
    max_equal_rows,
    parse_matrix,
    reduce_zeros,
    submatrix,
    validate,
)
from .hseries import (
    HVector,
    binom,
    ci_hpoly,
    flawless_violation,
    h_closed,
    h_recursive,
    is_flawless,
    is_log_concave,
    is_osequence,
    last_entry,
    macaulay_bound,
    tail_equal_rows,
    tau,
    validate_hvector,
)
from .level import NotLevel, SocleShifts, is_level, level_type, socle_shifts
from .matroid import (
    NotPureComplex,
    SimplicialComplex,
    complex_from_facets,
    cover_h,
    deletion,
    delta0,
    delta0_h,
    dual,
    is_cone_point,
    is_matroid,
    link,
    matrix_rank,
    represent_delta0,
)
from .pure_osequence import (
    OrderIdeal,
    PurityVerdict,
    SearchLimits,
    close_under_division,
    f_vector,
    gamma_from_matrix,
    hibi_violation_index,
    is_pure_ideal,
    is_pure_osequence,
    purity_of_matrix,
    screen,
    search_pure_witness,
)

__all__ = [
    "AnalysisReport",
    "ConjectureRunSummary",
    "DegreeMatrix",
    "DegreeMatrixError",
    "HVector",
    "NotLevel",
    "NotPureComplex",
    "OrderIdeal",
    "PurityVerdict",
    "SearchLimits",
    "SimplicialComplex",
    "SocleShifts",
    "analyze_matrix",
    "binom",
    "canonical_key",
    "ci_hpoly",
    "close_under_division",
    "complex_from_facets",
    "cover_h",
    "deletion",
    "delta0",
    "delta0_h",
    "dual",
    "enumerate_matrices",
    "f_vector",
    "flawless_violation",
    "gamma_from_matrix",
    "h_closed",
    "h_recursive",
    "hibi_violation_index",
    "is_cone_point",
    "is_flawless",
    "is_level",
    "is_log_concave",
    "is_matroid",
    "is_osequence",
    "is_pure_ideal",
    "is_pure_osequence",
    "last_entry",
    "level_type",
    "link",
    "macaulay_bound",
    "matrix_from_key",
    "matrix_rank",
    "max_equal_rows",
    "parse_matrix",
    "purity_of_matrix",
    "reduce_zeros",
    "represent_delta0",
    "run_conjecture",
    "screen",
    "search_pure_witness",
    "socle_shifts",
    "submatrix",
    "tail_equal_rows",
    "tau",
    "validate",
    "validate_hvector",
]
