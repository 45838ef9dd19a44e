"""Demazure-Lusztig operators, the shift g, Cherednik-Dunkl operators Y_i,
and the operator construction of E_alpha^sigma."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DimensionMismatch, IndexOutOfRange
from .exactalg import RationalQT, XPolynomial, divided_difference
from .fillings import tableau_E
from .wordcomb import composition, longest, permutation, reduced_word, rev, twinv

_T = RationalQT.t()
_ONE_MINUS_T = 1 - _T
_T_MINUS_ONE = _T - 1
_T_INV = RationalQT.monomial(1, 0, -1)


def _check_index(f: XPolynomial, i: int, upper: int) -> None:
    if not 1 <= i <= upper:
        raise IndexOutOfRange(f"index {i} outside 1..{upper} for n = {f.n}")


def apply_si(f: XPolynomial, i: int) -> XPolynomial:
    _check_index(f, i, f.n - 1)
    return f.swap_variables(i)


def _times_x(f: XPolynomial, j: int) -> XPolynomial:
    k = j - 1
    return XPolynomial._raw(f.n, {m[:k] + (m[k] + 1,) + m[k + 1:]: c for m, c in f.terms.items()})


def apply_T(f: XPolynomial, i: int) -> XPolynomial:
    """T_i f = t s_i f + (1 - t) x_{i+1} (f - s_i f)/(x_i - x_{i+1})."""
    _check_index(f, i, f.n - 1)
    swapped = f.swap_variables(i)
    dd = divided_difference(f, i)
    return swapped.scale(_T) + _times_x(dd, i + 1).scale(_ONE_MINUS_T)


def apply_T_inverse(f: XPolynomial, i: int) -> XPolynomial:
    """T_i^{-1} = t^{-1} (T_i - (t - 1)), from the quadratic relation."""
    return (apply_T(f, i) - f.scale(_T_MINUS_ONE)).scale(_T_INV)


def apply_g(f: XPolynomial) -> XPolynomial:
    """x^(e_1..e_n) -> q^{-e_n} x^(e_n, e_1, ..., e_{n-1})."""
    if f.n == 0:
        return f
    out = {}
    for m, c in f.terms.items():
        out[(m[-1],) + m[:-1]] = c * RationalQT.monomial(1, -m[-1], 0) if m[-1] else c
    return XPolynomial._raw(f.n, out)


def apply_Y(f: XPolynomial, i: int) -> XPolynomial:
    """Y_i = t^{i-1} T_{i-1}^{-1} ... T_1^{-1} g T_{n-1} ... T_i, rightmost first."""
    n = f.n
    _check_index(f, i, n)
    h = f
    for j in range(i, n):
        h = apply_T(h, j)
    h = apply_g(h)
    for j in range(1, i):
        h = apply_T_inverse(h, j)
    return h.scale(RationalQT.monomial(1, 0, i - 1))


def apply_T_word(f: XPolynomial, word: Iterable[int]) -> XPolynomial:
    """T_{i_1} ... T_{i_k} f, with T_{i_k} applied first."""
    for i in reversed(list(word)):
        f = apply_T(f, i)
    return f


def apply_T_perm(f: XPolynomial, sigma) -> XPolynomial:
    return apply_T_word(f, reduced_word(tuple(sigma)))


@dataclass(frozen=True)
class EigenData:
    alpha: tuple
    k: tuple
    eigenvalues: tuple

    def eigenvalue(self, i: int) -> RationalQT:
        return self.eigenvalues[i - 1]


def k_exponents(alpha) -> EigenData:
    """k_i = #{j < i : a_j > a_i} + #{j > i : a_j >= a_i}."""
    alpha = composition(alpha)
    n = len(alpha)
    k = tuple(
        sum(1 for j in range(i) if alpha[j] > alpha[i]) + sum(1 for j in range(i + 1, n) if alpha[j] >= alpha[i])
        for i in range(n)
    )
    ev = tuple(RationalQT.monomial(1, -a, ki) for a, ki in zip(alpha, k))
    return EigenData(alpha, k, ev)


def nonsymmetric_E(alpha) -> XPolynomial:
    """E_alpha, taken from the tableau sum with the longest basement."""
    alpha = composition(alpha)
    return tableau_E(rev(alpha), longest(len(alpha)))


def operator_E(alpha, sigma) -> XPolynomial:
    """t^{-twinv(alpha, sigma)} T_{rev(sigma)} E_{rev(alpha)}."""
    alpha, sigma = composition(alpha), permutation(sigma)
    if len(alpha) != len(sigma):
        raise DimensionMismatch(f"shape has {len(alpha)} parts but basement has {len(sigma)}")
    base = tableau_E(alpha, longest(len(alpha)))
    h = apply_T_perm(base, rev(sigma))
    return h.scale(RationalQT.monomial(1, 0, -twinv(alpha, sigma)))


def eigen_failures(alpha) -> list[int]:
    """Indices i where Y_i E_alpha differs from the predicted multiple of E_alpha."""
    data = k_exponents(alpha)
    E = nonsymmetric_E(alpha)
    return [i for i in range(1, len(data.alpha) + 1) if apply_Y(E, i) != E.scale(data.eigenvalue(i))]
