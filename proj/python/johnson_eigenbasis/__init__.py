"""Exact eigenbasis construction and eigenspace projections for Johnson graphs."""

from ._core import (
    Decomposition,
    EigenVector,
    basis,
    binomial,
    coefficient_vector,
    count_pairs,
    count_predecessors,
    decompose,
    eigenspace_dimension,
    eigenvalue,
    enumerate_subsets,
    enumerate_top_sets,
    extract_coefficient,
    is_top_set,
    lift,
    make_eigenvector,
    norm_squared,
    project,
    subset_count,
    subset_rank,
    subset_unrank,
    transpose_lift,
    verify_basis,
)

__all__ = [
    "Decomposition",
    "EigenVector",
    "basis",
    "binomial",
    "coefficient_vector",
    "count_pairs",
    "count_predecessors",
    "decompose",
    "eigenspace_dimension",
    "eigenvalue",
    "enumerate_subsets",
    "enumerate_top_sets",
    "extract_coefficient",
    "is_top_set",
    "lift",
    "make_eigenvector",
    "norm_squared",
    "project",
    "subset_count",
    "subset_rank",
    "subset_unrank",
    "transpose_lift",
    "verify_basis",
]
