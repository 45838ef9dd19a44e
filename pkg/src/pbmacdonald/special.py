"""Specializations: t-atoms, t-keys, ASEP polynomials and symmetric P_lambda."""

from __future__ import annotations

from .bijection import VerificationReport
from .errors import NotAPartition
from .exactalg import XPolynomial
from .fillings import tableau_E
from .wordcomb import (
    all_permutations,
    composition,
    dec,
    distinct_rearrangements,
    identity,
    inc,
    is_partition,
    left_action,
    longest,
    permutation,
    rev,
)


def t_atom(alpha, sigma=None) -> XPolynomial:
    """A_alpha^sigma(x; t) = E_alpha^sigma(x; 0, t); sigma defaults to the identity."""
    alpha = composition(alpha)
    sigma = identity(len(alpha)) if sigma is None else permutation(sigma)
    return tableau_E(alpha, sigma).specialize_q_zero()


def t_key(alpha) -> XPolynomial:
    """K_alpha = A_alpha^{w0}."""
    alpha = composition(alpha)
    return t_atom(alpha, longest(len(alpha)))


def sorting_permutation(source, target) -> tuple:
    """The shortest pi with pi . source = target.

    Equal parts keep their relative order, which is what makes the choice
    shortest.
    """
    source, target = composition(source), composition(target)
    if sorted(source) != sorted(target):
        raise ValueError(f"{target} is not a rearrangement of {source}")
    src = sorted(range(len(source)), key=lambda k: (source[k], k))
    dst = sorted(range(len(target)), key=lambda k: (target[k], k))
    pi = [0] * len(source)
    for s, d in zip(src, dst):
        pi[s] = d + 1
    return tuple(pi)


def valid_taus(source, target) -> list[tuple]:
    """Every pi with pi . source = target, by brute force."""
    source, target = composition(source), composition(target)
    return [p for p in all_permutations(len(source)) if left_action(p, source) == target]


def asep_F(alpha, tau=None) -> XPolynomial:
    """F_alpha = E_{inc(alpha)}^tau for tau with tau . inc(alpha) = alpha."""
    alpha = composition(alpha)
    if tau is None:
        tau = sorting_permutation(inc(alpha), alpha)
    return tableau_E(inc(alpha), tau)


def symmetric_P(lam) -> XPolynomial:
    """Sum of E_{inc(lam)}^{sigma_mu} over the distinct rearrangements mu of lam."""
    lam = composition(lam)
    if not is_partition(lam):
        raise NotAPartition(f"{lam} is not weakly decreasing")
    base = inc(lam)
    total = XPolynomial(len(lam))
    for mu in distinct_rearrangements(lam):
        total = total + tableau_E(base, sorting_permutation(base, mu))
    return total


def _report(claim: str, alpha) -> VerificationReport:
    return VerificationReport(claim, {"shape": list(alpha)})


def verify_atoms(alpha) -> VerificationReport:
    """A_alpha = A_{inc(alpha)}^tau for every tau with tau . inc(alpha) = alpha.

    The key half is checked as K_alpha = A_{dec(alpha)}^pi over every pi with
    pi . dec(alpha) = rev(alpha); with K_alpha = A_alpha^{w0} that is the
    form that holds (pi . dec(alpha) = alpha already fails at alpha = (1, 0)).
    """
    alpha = composition(alpha)
    rep = _report("atoms", alpha)
    atom = t_atom(alpha)
    for tau in valid_taus(inc(alpha), alpha):
        rep.pairs_checked += 1
        if t_atom(inc(alpha), tau) != atom:
            rep.violations.append({"kind": "atom-basement", "tau": list(tau)})
    key = t_key(alpha)
    for pi in valid_taus(dec(alpha), rev(alpha)):
        rep.pairs_checked += 1
        if t_atom(dec(alpha), pi) != key:
            rep.violations.append({"kind": "key-basement", "pi": list(pi)})
    return rep


def verify_asep(alpha) -> VerificationReport:
    """tau-independence of F_alpha, and F_alpha(x; 0, t) = A_alpha(x; t)."""
    alpha = composition(alpha)
    rep = _report("asep", alpha)
    F = asep_F(alpha)
    for tau in valid_taus(inc(alpha), alpha):
        rep.pairs_checked += 1
        if asep_F(alpha, tau) != F:
            rep.violations.append({"kind": "asep-basement", "tau": list(tau)})
    rep.pairs_checked += 1
    if F.specialize_q_zero() != t_atom(alpha):
        rep.violations.append({"kind": "asep-atom"})
    return rep


def verify_symmetric_P(lam) -> VerificationReport:
    """Symmetry under every s_i and coefficient 1 at x^lam."""
    lam = composition(lam)
    rep = _report("symmetricP", lam)
    P = symmetric_P(lam)
    for i in range(1, len(lam)):
        rep.pairs_checked += 1
        if P.swap_variables(i) != P:
            rep.violations.append({"kind": "not-symmetric", "i": i})
    rep.pairs_checked += 1
    lead = P.coefficient(lam)
    if lead != 1:
        rep.violations.append({"kind": "not-monic", "coefficient": lead.to_json()})
    return rep
