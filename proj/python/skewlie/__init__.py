"""Skew-symmetric algebras over the rationals: derivations, Hom-Lie twists,
dimension-3 classification and genericity sampling."""

from ._core import (
    Algebra,
    DimensionMismatch,
    Error,
    InvariantError,
    NonSquare,
    NotFound,
    ParseError,
    SingularMap,
    UnsupportedDim,
    determinant,
    filiform5,
    kernel,
    normal_form,
    random_algebra,
    rank,
    sample,
)

__all__ = [
    "Algebra",
    "DimensionMismatch",
    "Error",
    "InvariantError",
    "NonSquare",
    "NotFound",
    "ParseError",
    "SingularMap",
    "UnsupportedDim",
    "determinant",
    "filiform5",
    "kernel",
    "normal_form",
    "random_algebra",
    "rank",
    "sample",
]
