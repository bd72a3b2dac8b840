"""Entropy rate of the binary symmetric hidden Markov process.

Thin wrapper around the C++ core: exact finite-N entropies and bounds,
the 11th-order noise series, and exact symbolic verification of the
series coefficients.
"""

import json as _json

from ._core import (
    Boundary,
    InvalidInputError,
    IsingParams,
    ProcessParams,
    ResourceLimitError,
    UnsupportedOrderError,
    block_entropy,
    coefficient,
    coefficient_display,
    conditional_entropy,
    conditional_series_display,
    conditional_series_eval,
    emission_prob,
    entropy_series,
    free_element,
    iid_coefficient,
    iid_entropy,
    iid_radius_exact,
    ising_couplings,
    ising_z,
    ising_z_low_order,
    lower_bound,
    markov_prob,
    observed_prob_brute,
    observed_prob_forward,
    radius_estimate,
    sample,
    smb_estimate,
    verify_conjecture_json,
)

__all__ = [
    "Boundary",
    "InvalidInputError",
    "IsingParams",
    "ProcessParams",
    "ResourceLimitError",
    "UnsupportedOrderError",
    "block_entropy",
    "coefficient",
    "coefficient_display",
    "conditional_entropy",
    "conditional_series_display",
    "conditional_series_eval",
    "emission_prob",
    "entropy_series",
    "free_element",
    "iid_coefficient",
    "iid_entropy",
    "iid_radius_exact",
    "ising_couplings",
    "ising_z",
    "ising_z_low_order",
    "lower_bound",
    "markov_prob",
    "observed_prob_brute",
    "observed_prob_forward",
    "radius_estimate",
    "sample",
    "smb_estimate",
    "verify_conjecture",
    "verify_conjecture_json",
]

__version__ = "0.1.0"


def verify_conjecture(k_max: int, n_max: int) -> dict:
    """Settling verification of the series coefficients as a dict."""
    return _json.loads(verify_conjecture_json(k_max, n_max))
