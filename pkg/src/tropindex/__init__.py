"""Exact tropical and central indices of univariate polynomials, and the
diagonal operators that preserve them."""

from .indices import (
    IndexReport,
    Witness,
    central_indices,
    central_witness,
    index_report,
    is_central_index,
    is_sign_independently_real_rooted,
    is_tropical_index,
    is_tropically_real_rooted,
    sirr_bruteforce,
    tropical_indices,
    tropical_witness,
    verify_witness,
)
from .poly import GammaSequence, Polynomial, SignPattern, apply_diagonal, apply_signs
from .preservers import (
    classify_sequence,
    counterexample_central,
    counterexample_tropical,
    is_log_concave,
    preservation_witness,
    preserves_central_on,
    preserves_tropical_on,
)

__version__ = "0.1.0"
