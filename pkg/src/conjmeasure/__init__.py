"""Exact symmetric-group characters, Plancherel and conjugacy measures, and
moments of normalized character ratios."""
from .characters import CharacterTable, build_table, conjugacy_multiplicity, hook_dimension, mn_character
from .class_algebra import TupleCountQuery, b_count, brute_force_count, c_count, frobenius_count
from .errors import ConjMeasureError, ConsistencyError, DomainError, ParseError, RefusalError
from .measures import SpectralMeasure, conjugacy, plancherel, sample, total_mass
from .moments import char_ratio, exact_mixed_moment, limit_mixed_moment, moment_via_counts
from .partitions import enumerate_partitions, format_partition, parse_partition
from .perms import Permutation, compose, parse_tuple, tuple_product, tuple_symbol
from .radical import RadicalRational
from .reduction import check_pairing, identity_by_reduction, reduce

__version__ = "0.1.0"

__all__ = [
    "CharacterTable",
    "build_table",
    "conjugacy_multiplicity",
    "hook_dimension",
    "mn_character",
    "TupleCountQuery",
    "b_count",
    "brute_force_count",
    "c_count",
    "frobenius_count",
    "ConjMeasureError",
    "ConsistencyError",
    "DomainError",
    "ParseError",
    "RefusalError",
    "SpectralMeasure",
    "conjugacy",
    "plancherel",
    "sample",
    "total_mass",
    "char_ratio",
    "exact_mixed_moment",
    "limit_mixed_moment",
    "moment_via_counts",
    "enumerate_partitions",
    "format_partition",
    "parse_partition",
    "Permutation",
    "compose",
    "parse_tuple",
    "tuple_product",
    "tuple_symbol",
    "RadicalRational",
    "check_pairing",
    "identity_by_reduction",
    "reduce",
]
