"""Exact computation of permuted-basement Macdonald polynomials E_alpha^sigma,
by non-attacking fillings and by Demazure-Lusztig operators, with checks of
the column-swap symmetry and its probabilistic bijection."""

from .bijection import (
    VerificationReport,
    prob,
    probability_row,
    rho,
    swap_prefix,
    swap_row,
    verify_ale19,
    verify_balance,
    verify_normalization,
    verify_support,
    verify_symmetry,
)
from .exactalg import QTPolynomial, RationalQT, XPolynomial, divide_linear
from .fillings import Filling, arm_leg, enumerate_naf, statistics, tableau_E, weight
from .hecke import apply_g, apply_T, apply_T_inverse, apply_Y, k_exponents, operator_E
from .special import asep_F, symmetric_P, t_atom, t_key
from .wordcomb import coset_related, left_action, reduced_word, twinv

__version__ = "0.1.0"

__all__ = [
    "Filling",
    "QTPolynomial",
    "RationalQT",
    "VerificationReport",
    "XPolynomial",
    "apply_T",
    "apply_T_inverse",
    "apply_Y",
    "apply_g",
    "arm_leg",
    "asep_F",
    "coset_related",
    "divide_linear",
    "enumerate_naf",
    "k_exponents",
    "left_action",
    "operator_E",
    "prob",
    "probability_row",
    "reduced_word",
    "rho",
    "statistics",
    "swap_prefix",
    "swap_row",
    "symmetric_P",
    "t_atom",
    "t_key",
    "tableau_E",
    "twinv",
    "verify_ale19",
    "verify_balance",
    "verify_normalization",
    "verify_support",
    "verify_symmetry",
    "weight",
]
