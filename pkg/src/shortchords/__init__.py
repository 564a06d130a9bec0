"""Exact combinatorics of short chords in matchings.

Quasisymmetric generating functions are represented by descent multisets
(:class:`DescentVector`) and expanded exactly in the Schur basis.
"""
from .bessel import IntPolynomial, bessel_theta, schur_coeffs_via_bessel, shift_expand, short_chord_distribution
from .bijection import BallotPath, ReductionResult, forward, inverse, path_of_tableau, reduce, tableau_of
from .descents import DescentVector
from .knuth import class_generating_function, elementary_moves, equivalence_class, insert_short_chord
from .matchings import (
    Matching,
    MatchingError,
    ParseError,
    chords_intersect,
    combine,
    enumerate_matchings,
    parse_matching,
    restrict,
    short_set,
)
from .patterns import (
    avoiders,
    contains_pattern,
    crossing_number,
    intersect_counts,
    intersection_graph,
    refine_by,
    singleton_pattern_schur_positive,
)
from .schreier import apply_transposition, asc_des_loop, build_graph, check_conjecture
from .symfunc import (
    NotSymmetric,
    SchurExpansion,
    complement_vector,
    descent_vector,
    hook_criterion,
    is_symmetric_by_compositions,
    schur_expand,
    sparse_criterion,
)
from .tableaux import (
    SYT,
    conjugate_cmp,
    descent_set,
    descent_vector_of_shape,
    enumerate_syt,
    partitions_of,
    superstandard,
)

__version__ = "0.1.0"

__all__ = [
    "BallotPath",
    "DescentVector",
    "IntPolynomial",
    "Matching",
    "MatchingError",
    "NotSymmetric",
    "ParseError",
    "ReductionResult",
    "SYT",
    "SchurExpansion",
    "apply_transposition",
    "asc_des_loop",
    "avoiders",
    "bessel_theta",
    "build_graph",
    "check_conjecture",
    "chords_intersect",
    "class_generating_function",
    "combine",
    "complement_vector",
    "conjugate_cmp",
    "contains_pattern",
    "crossing_number",
    "descent_set",
    "descent_vector",
    "descent_vector_of_shape",
    "elementary_moves",
    "enumerate_matchings",
    "enumerate_syt",
    "equivalence_class",
    "forward",
    "hook_criterion",
    "insert_short_chord",
    "intersect_counts",
    "intersection_graph",
    "inverse",
    "is_symmetric_by_compositions",
    "parse_matching",
    "partitions_of",
    "path_of_tableau",
    "reduce",
    "refine_by",
    "restrict",
    "schur_coeffs_via_bessel",
    "schur_expand",
    "shift_expand",
    "short_chord_distribution",
    "short_set",
    "singleton_pattern_schur_positive",
    "sparse_criterion",
    "superstandard",
    "tableau_of",
]
