"""Ladder operators for equations of hypergeometric type.

Exact quantities (eigenvalues, polynomial coefficients, residuals) come back as
``fractions.Fraction``; parameters may be passed as ``int``, ``str`` or ``Fraction``.
"""

from ._core import (
    DomainError,
    Family,
    InternalError,
    NumericError,
    algebra,
    asf_part,
    classical_polynomial,
    coherent_state,
    commutator_checks,
    eigenvalue,
    epsilon_sequence,
    factorization_check,
    gauss_rule,
    inner_product,
    norm,
    numerov,
    potential,
    recurrence_coefficients,
    run_criterion,
    shape_invariance_check,
    superpotential,
    three_term_check,
    wavefunction,
)

__all__ = [
    "DomainError",
    "Family",
    "InternalError",
    "NumericError",
    "algebra",
    "asf_part",
    "classical_polynomial",
    "coherent_state",
    "commutator_checks",
    "eigenvalue",
    "epsilon_sequence",
    "factorization_check",
    "gauss_rule",
    "inner_product",
    "norm",
    "numerov",
    "potential",
    "recurrence_coefficients",
    "run_criterion",
    "shape_invariance_check",
    "superpotential",
    "three_term_check",
    "wavefunction",
]
