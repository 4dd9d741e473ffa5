"""Exact degenerate harmonic and hyperharmonic numbers.

Rational results are fractions.Fraction. Polynomials in lambda are lists of
Fraction, constant term first.
"""

from ._core import (
    DivisionByZero,
    InternalConsistencyError,
    PreconditionError,
    degen_harmonic,
    degen_hyper_gf,
    degen_hyperharmonic,
    degen_hyperharmonic_order0,
    harmonic,
    hyperharmonic,
    identity_names,
    q_poly,
    render_decimal,
    section3_report,
    stirling1,
    verify,
    zeta_degen_partial,
    zeta_partial,
)

__all__ = [
    "DivisionByZero",
    "InternalConsistencyError",
    "PreconditionError",
    "degen_harmonic",
    "degen_hyper_gf",
    "degen_hyperharmonic",
    "degen_hyperharmonic_order0",
    "harmonic",
    "hyperharmonic",
    "identity_names",
    "q_poly",
    "render_decimal",
    "section3_report",
    "stirling1",
    "verify",
    "zeta_degen_partial",
    "zeta_partial",
]
