"""Exact enumeration of lattice excursions.

For a weighted step set this computes the annihilating polynomial of the
excursion series, the bounded-height polynomials F_k with their rational
generating function, and the symmetric-function identities behind them,
each checked against brute-force counts.
"""

from .bounded import (
    check_recurrence,
    f_polynomial,
    f_polynomials,
    bounded_series,
    numerator,
    rational_gf,
    transfer_matrix,
)
from .oracle import count_bounded, count_excursions, verify_annihilation, verify_numerator_nonzero
from .platypus import annihilator, phi_elementary, platypus_q, plethysm_elementary, power_sums
from .schur import NumericAlphabet, e_spec, f_via_jacobi_trudi, rect_schur_gf, rect_schur_numeric
from .stepset import StepSet, Weight, char_poly_L, kernel_poly, normalize_steps, parse_stepset

__version__ = "0.1.0"
