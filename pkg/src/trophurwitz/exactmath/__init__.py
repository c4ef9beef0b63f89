"""Exact scalar/symbolic arithmetic and shared combinatorial primitives."""

from fractions import Fraction

from .intlinalg import (
    RankDeficientError,
    determinant,
    elementary_divisors,
    integer_kernel_basis,
    lattice_index,
    rank,
)
from .partition import (
    HurwitzInput,
    Partition,
    all_inputs,
    aut_count,
    cycle_type_count,
    partitions_of,
    riemann_hurwitz_s,
)
from .polynomial import LinearForm, Polynomial, hurwitz_names, rational_text
from .poset import CyclicOrderError, count_linear_extensions, linear_extensions

ExactRational = Fraction

__all__ = [
    "CyclicOrderError",
    "ExactRational",
    "Fraction",
    "HurwitzInput",
    "LinearForm",
    "Partition",
    "Polynomial",
    "RankDeficientError",
    "all_inputs",
    "aut_count",
    "count_linear_extensions",
    "cycle_type_count",
    "determinant",
    "elementary_divisors",
    "hurwitz_names",
    "integer_kernel_basis",
    "lattice_index",
    "linear_extensions",
    "partitions_of",
    "rank",
    "rational_text",
    "riemann_hurwitz_s",
]
