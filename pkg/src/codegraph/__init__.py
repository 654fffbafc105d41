"""Threshold and chain graphs from binary generating codes.

Closed forms for metric dimension, threshold dimension, restricted threshold
dimension and the L(2,1) number, with exhaustive oracles to check them.
"""

from .code import GeneratingCode, enumerate_codes, expand_code, format_code, parse_code
from .graph import (
    Graph,
    build_chain,
    build_threshold,
    distance_matrix,
    recognize_chain,
    recognize_threshold,
)
from .labeling import (
    ChainPartition,
    Labeling,
    extend_diameter_two,
    lambda_chain,
    lambda_chain_bounds,
    lambda_threshold,
    verify_labeling,
)
from .metric import beta_bounds, beta_chain, beta_string, beta_threshold, general_bounds
from .oracle import (
    OracleBudget,
    exact_lambda,
    exact_metric_dimension,
    exact_tau,
    exact_tau_r,
    twin_reduced_metric_dimension,
)
from .threshold_dim import tau_code, tau_r_code, tau_r_string, tau_string

__version__ = "0.1.0"

__all__ = [
    "GeneratingCode", "parse_code", "expand_code", "format_code", "enumerate_codes",
    "Graph", "build_threshold", "build_chain", "distance_matrix",
    "recognize_threshold", "recognize_chain",
    "beta_string", "beta_threshold", "beta_chain", "beta_bounds", "general_bounds",
    "tau_string", "tau_code", "tau_r_string", "tau_r_code",
    "Labeling", "ChainPartition", "lambda_threshold", "extend_diameter_two",
    "lambda_chain", "lambda_chain_bounds", "verify_labeling",
    "OracleBudget", "exact_metric_dimension", "exact_lambda", "exact_tau",
    "exact_tau_r", "twin_reduced_metric_dimension",
]
