"""Exact torus-action computations: affine semigroups, Bialynicki-Birula
decompositions of graded algebras, and cells of Hilbert schemes of points."""

from ._torusbb import (
    Error,
    algebraize_check,
    analyze_monoid,
    bb_plus,
    cell_dimension,
    contains,
    fixed_locus,
    graded_dimension,
    intersection_dimension,
    open_immersion_check,
    outsider_variables,
    partitions,
    poincare_polynomial,
    reduce_to_zero,
    run,
    stabilization_check,
    tangent_character,
    truncate,
)

# Error args are (code, message, location).
Error.code = property(lambda self: self.args[0])
Error.message = property(lambda self: self.args[1])
Error.location = property(lambda self: self.args[2])

__all__ = [
    "Error",
    "algebraize_check",
    "analyze_monoid",
    "bb_plus",
    "cell_dimension",
    "contains",
    "fixed_locus",
    "graded_dimension",
    "intersection_dimension",
    "open_immersion_check",
    "outsider_variables",
    "partitions",
    "poincare_polynomial",
    "reduce_to_zero",
    "run",
    "stabilization_check",
    "tangent_character",
    "truncate",
]
