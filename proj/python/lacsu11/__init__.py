"""Lacunary SU(1,1) trigonometric products.

Exact sparse construction of the partial products, the d_p metrics on
SU(1,1)-valued functions, identity and bound checks, representation
combinatorics, and seeded convergence experiments. The heavy lifting lives
in the C++ extension module ``lacsu11._core``.
"""

import json as _json

from lacsu11._core import (  # noqa: F401
    BudgetError,
    CoefficientPair,
    LacunarySequence,
    SU11Matrix,
    SignedRepresentation,
    TrigPoly,
    TrigPolyPair,
    ValidationError,
    autocorrelation,
    autocorrelation_bound_check,
    c_p,
    cauchy_bound_check,
    centered_identity_residual,
    classify_partition,
    coefficient_from_f,
    conj_reflect,
    d_p_between,
    d_p_window,
    energy_identity_residual,
    enumerate_representations,
    factor_at,
    generate_coefficients,
    generate_lacunary,
    inverse,
    make_coefficient,
    min_gap_check,
    mul,
    multiplicity_bound_check,
    multiply,
    nonlinear_parseval_residual,
    op_norm,
    pair_from_json,
    partial_product,
    required_grid,
    rho,
    rho_explicit,
    rho_pointwise,
    run_experiment_config,
    s_mn,
    shifted_energy_check,
    support,
    trig_poly_from_json,
    uniqueness_check,
)

__version__ = "0.1.0"


def run_experiment(config_text: str) -> dict:
    """Run an experiment from config text and return the report as a dict."""
    return _json.loads(run_experiment_config(config_text))
