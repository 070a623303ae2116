"""Exact Jack characters and Jack connection coefficients."""

from ._jackcc import (
    LaurentAlpha,
    Partition,
    TheoremViolation,
    a_r_lambda,
    b_coeff,
    c_coeff,
    character,
    denes_closed_form,
    jack_in_monomial,
    jackson_formula,
    jcc,
    partitions,
    theta,
    verify_oracles,
    verify_theorems,
)

__all__ = [
    "LaurentAlpha",
    "Partition",
    "TheoremViolation",
    "a_r_lambda",
    "b_coeff",
    "c_coeff",
    "character",
    "denes_closed_form",
    "jack_in_monomial",
    "jackson_formula",
    "jcc",
    "partitions",
    "theta",
    "verify_oracles",
    "verify_theorems",
]
