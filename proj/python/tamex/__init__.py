"""Exact tame automorphisms, monomial valuations and their links."""

from ._tamex import (
    BudgetExceeded,
    PreconditionError,
    Word,
    check_valuation_axioms,
    distance_lower,
    distance_upper,
    fano_link,
    fixed_region,
    fixes,
    hyperplanes_through,
    identity,
    linearize,
    multiplicity,
    nu_eval,
    octangle,
    point_eval,
    points_equal,
    rho,
)

__all__ = [
    "BudgetExceeded",
    "PreconditionError",
    "Word",
    "check_valuation_axioms",
    "distance_lower",
    "distance_upper",
    "fano_link",
    "fixed_region",
    "fixes",
    "hyperplanes_through",
    "identity",
    "linearize",
    "multiplicity",
    "nu_eval",
    "octangle",
    "point_eval",
    "points_equal",
    "rho",
]
