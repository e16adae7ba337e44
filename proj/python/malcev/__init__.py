"""Exact-arithmetic constructions and checks for extension structures on
finite-dimensional Malcev algebras."""

from ._malcev import (
    canonical_algebra,
    canonical_datum,
    check_algebra,
    check_flag,
    classify,
    cocycle_extension,
    crossed,
    extract,
    flag_equivalent,
    jacobiator,
    matched,
    semidirect,
    skew,
    solve_flag,
    unified,
)

__all__ = [
    "canonical_algebra",
    "canonical_datum",
    "check_algebra",
    "check_flag",
    "classify",
    "cocycle_extension",
    "crossed",
    "extract",
    "flag_equivalent",
    "jacobiator",
    "matched",
    "semidirect",
    "skew",
    "solve_flag",
    "unified",
]
