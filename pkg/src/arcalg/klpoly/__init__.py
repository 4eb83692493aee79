"""Kazhdan–Lusztig polynomials of type (S_{m+n}, S_m × S_n)."""

from .kazhdan_lusztig import (
    arrow_chain_violations,
    arrow_layers,
    cartan_matrix,
    ell_drop_violations,
    inverse_kl_matrix,
    inverse_product,
    kl_matrix,
    matrix_to_rows,
    max_arrow_chain,
    n_poly,
    p_coefficient,
    p_poly,
    p_poly_coefficients,
    shortest_arrow_chain,
    verify_inverse,
)
from .polynomials import ONE, ZERO, Poly

__all__ = [
    "ONE",
    "ZERO",
    "Poly",
    "arrow_chain_violations",
    "arrow_layers",
    "cartan_matrix",
    "ell_drop_violations",
    "inverse_kl_matrix",
    "inverse_product",
    "kl_matrix",
    "matrix_to_rows",
    "max_arrow_chain",
    "n_poly",
    "p_coefficient",
    "p_poly",
    "p_poly_coefficients",
    "shortest_arrow_chain",
    "verify_inverse",
]
