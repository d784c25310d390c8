"""Cohomological dimension types and Bockstein functions."""

from ._core import (
    BocksteinError,
    CdType,
    check_laws,
    evaluate,
    evaluate_json,
    from_json,
    homology,
    law_names,
    nat,
    phi_basis,
    sigma,
)

__all__ = [
    "BocksteinError",
    "CdType",
    "check_laws",
    "evaluate",
    "evaluate_json",
    "from_json",
    "homology",
    "law_names",
    "nat",
    "phi_basis",
    "sigma",
]
