"""Column swaps, the transition values rho, the probability map P_i and
exhaustive checks of the probabilistic bijection it defines."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import PreconditionViolated, RowOutOfRange, UnequalColumnHeights
from .exactalg import ONE, ZERO, RationalQT
from .fillings import (
    Filling,
    diagram,
    indicator3,
    naf_with_stats,
    qt_weight,
    row_weights,
    tableau_by_content,
)
from .wordcomb import composition, permutation, times_s


def _require_equal(alpha: tuple, i: int) -> None:
    if not 1 <= i < len(alpha):
        raise UnequalColumnHeights(f"column {i + 1} does not exist for n = {len(alpha)}")
    if alpha[i - 1] != alpha[i]:
        raise UnequalColumnHeights(f"columns {i} and {i + 1} have heights {alpha[i - 1]} and {alpha[i]}")


def swap_row(T: Filling, i: int, r: int) -> Filling:
    """Exchange the entries of boxes (i, r) and (i+1, r); r = 0 acts on the basement."""
    return swap_rows(T, i, (r,))


def swap_rows(T: Filling, i: int, rows) -> Filling:
    _require_equal(T.shape, i)
    rows = set(rows)
    for r in rows:
        if not 0 <= r <= T.shape[i - 1]:
            raise RowOutOfRange(f"row {r} outside 0..{T.shape[i - 1]}")
    basement = times_s(T.basement, i) if 0 in rows else T.basement
    ci, cj = list(T.columns[i - 1]), list(T.columns[i])
    for r in rows:
        if r:
            ci[r - 1], cj[r - 1] = cj[r - 1], ci[r - 1]
    cols = list(T.columns)
    cols[i - 1], cols[i] = tuple(ci), tuple(cj)
    return Filling(T.shape, basement, tuple(cols))


def swap_prefix(T: Filling, i: int, h: int) -> Filling:
    """swap^[0,h]: exchange columns i and i+1 in rows 0..h."""
    return swap_rows(T, i, range(h + 1))


def _pattern(*vals) -> tuple:
    """Relative order of the values, with ties, as small ranks."""
    ranks = {v: k for k, v in enumerate(sorted(set(vals)))}
    return tuple(ranks[v] for v in vals)


@lru_cache(maxsize=None)
def _rho_value(pattern: tuple, leg: int, arm: int) -> RationalQT:
    a, b, c, d = pattern
    distinct = len(set(pattern))
    if distinct == 4:
        zero = indicator3(c, d, a) == indicator3(c, d, b)
        one = indicator3(c, d, a) == indicator3(d, c, b)
        if zero == one:
            raise PreconditionViolated(f"four-value case is not exclusive for pattern {pattern}")
        return ZERO if zero else ONE
    if distinct == 3:
        if b == c:
            return ZERO
        if b == d:
            return ONE
        if a == c:
            x = RationalQT.cyclotomic(leg + 1, arm + 1) / RationalQT.cyclotomic(leg + 1, arm + 2)
            return x * RationalQT.monomial(1, 0, 1 - indicator3(d, a, b))
    if distinct == 2 and a == c and b == d:
        return ONE
    raise PreconditionViolated(f"no transition rule covers the row pattern {pattern}")


def rho(T: Filling, i: int, r: int) -> RationalQT:
    """Transition value for rows r, r+1 of columns i, i+1."""
    _require_equal(T.shape, i)
    h = T.shape[i - 1]
    if not 0 <= r <= h:
        raise RowOutOfRange(f"row {r} outside 0..{h}")
    if r == h:
        return ZERO
    a, b = T.label(i, r), T.label(i + 1, r)
    c, d = T.label(i, r + 1), T.label(i + 1, r + 1)
    dg = diagram(T.shape)
    k = dg.index[(i + 1, r + 1)] - dg.n
    return _rho_value(_pattern(a, b, c, d), dg.leg[k], dg.arm[k])


def rho_complement(T: Filling, i: int, r: int) -> RationalQT:
    return ONE - rho(T, i, r)


@dataclass(frozen=True)
class ProbabilityRow:
    source: Filling
    i: int
    rho: tuple
    dist: dict

    def total(self) -> RationalQT:
        return RationalQT.sum(self.dist.values())


def probability_row(T: Filling, i: int) -> ProbabilityRow:
    """Distribution of P_i(T, .) over the prefix swaps of T."""
    _require_equal(T.shape, i)
    h_max = T.shape[i - 1]
    rhos = tuple(rho(T, i, r) for r in range(h_max + 1))
    dist: dict = {}
    prefix = ONE
    for h in range(h_max + 1):
        p = prefix * (ONE - rhos[h])
        if not p.is_zero():
            U = swap_prefix(T, i, h)
            dist[U] = dist[U] + p if U in dist else p
        prefix = prefix * rhos[h]
        if prefix.is_zero():
            break
    return ProbabilityRow(T, i, rhos, dist)


def prob(T: Filling, U: Filling, i: int) -> RationalQT:
    """P_i(T, U), summed over every h with swap^[0,h](T) = U."""
    if T.shape != U.shape:
        raise PreconditionViolated("fillings have different shapes")
    return probability_row(T, i).dist.get(U, ZERO)


@dataclass
class VerificationReport:
    claim: str
    params: dict
    pairs_checked: int = 0
    cross_pairs: int = 0
    violations: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def merge(self, other: VerificationReport) -> None:
        self.pairs_checked += other.pairs_checked
        self.cross_pairs += other.cross_pairs
        self.violations.extend(other.violations)

    def to_json(self) -> dict:
        out = {
            "claim": self.claim,
            "params": self.params,
            "pairs_checked": self.pairs_checked,
            "cross_pairs": self.cross_pairs,
            "violations": self.violations,
        }
        if self.notes:
            out["notes"] = self.notes
        return out


def _params(alpha, sigma, i) -> dict:
    return {"shape": list(alpha), "basement": list(sigma), "i": i}


def _violation(kind: str, **data) -> dict:
    out = {"kind": kind}
    for k, v in data.items():
        out[k] = v.to_json() if hasattr(v, "to_json") else v
    return out


# Checks on the bijection between NAF(alpha, sigma) and NAF(alpha, sigma s_i).
BIJECTION_CHECKS = ("balance", "normalization", "support", "content", "row-lemmas")


def check_bijection(alpha, sigma, i: int, checks=BIJECTION_CHECKS) -> dict[str, VerificationReport]:
    """Run the requested checks over both directions of the map at once.

    Pairs without a prefix-swap relation have P = 0 in both directions, so
    detailed balance needs checking only on related pairs; ``cross_pairs``
    records the size of the full product set those zeros cover.
    """
    alpha, sigma = composition(alpha), permutation(sigma)
    _require_equal(alpha, i)
    checks = set(checks)
    params = _params(alpha, sigma, i)
    reports = {c: VerificationReport(c, dict(params)) for c in checks}
    tau = times_s(sigma, i)
    sides = {}
    for basement in (sigma, tau):
        sides[basement] = {T: (content, w) for T, content, w in naf_with_stats(alpha, basement)}
    rows = {}
    for basement, side in sides.items():
        for T in side:
            rows[T] = probability_row(T, i)
    for basement, side in sides.items():
        other = sides[tau if basement == sigma else sigma]
        for T, (content, w) in side.items():
            row = rows[T]
            if "normalization" in checks:
                rep = reports["normalization"]
                rep.pairs_checked += 1
                total = row.total()
                if total != ONE:
                    rep.violations.append(_violation("row-sum", filling=T, total=total))
            for U, p in row.dist.items():
                if "support" in checks:
                    rep = reports["support"]
                    rep.pairs_checked += 1
                    if U not in other:
                        rep.violations.append(_violation("attacking-target", source=T, target=U, prob=p))
                        continue
                elif U not in other:
                    continue
                u_content, u_w = other[U]
                if "content" in checks:
                    rep = reports["content"]
                    rep.pairs_checked += 1
                    if u_content != content:
                        rep.violations.append(_violation("content-changed", source=T, target=U))
                if "balance" in checks and basement == sigma:
                    rep = reports["balance"]
                    rep.pairs_checked += 1
                    back = rows[U].dist.get(T, ZERO)
                    lhs, rhs = w * p, u_w * back
                    if lhs != rhs:
                        rep.violations.append(_violation("detailed-balance", source=T, target=U, lhs=lhs, rhs=rhs))
            if "balance" in checks and basement == tau:
                # Reverse arrows with no forward partner break balance too.
                rep = reports["balance"]
                for U, p in row.dist.items():
                    if U in other and rows[U].dist.get(T, ZERO).is_zero():
                        rep.violations.append(_violation("one-way-arrow", source=T, target=U, prob=p))
            if "row-lemmas" in checks:
                _row_lemmas(T, i, row, other, reports["row-lemmas"])
    if "balance" in reports:
        reports["balance"].cross_pairs = len(sides[sigma]) * len(sides[tau])
    return reports


def _row_lemmas(T: Filling, i: int, row: ProbabilityRow, other: dict, rep: VerificationReport) -> None:
    """Row-local balance for every prefix swap of T that is non-attacking."""
    wt_T = row_weights(T)
    L = len(wt_T)
    h_max = T.shape[i - 1]

    def comp(ws, r):
        return ws[r] if r < L else ONE

    for h in range(h_max + 1):
        U = swap_prefix(T, i, h)
        if U not in other:
            continue
        wt_U = row_weights(U)
        rho_U = [rho(U, i, r) for r in range(h + 1)]
        for r in range(h):
            rep.pairs_checked += 1
            lhs, rhs = comp(wt_U, r) * rho_U[r], comp(wt_T, r) * row.rho[r]
            if lhs != rhs:
                rep.violations.append(_violation("row-balance", source=T, h=h, r=r, lhs=lhs, rhs=rhs))
        rep.pairs_checked += 1
        lhs = comp(wt_U, h) * (ONE - rho_U[h])
        rhs = comp(wt_T, h) * (ONE - row.rho[h])
        if lhs != rhs:
            rep.violations.append(_violation("top-row-balance", source=T, h=h, lhs=lhs, rhs=rhs))


def verify_balance(alpha, sigma, i: int) -> VerificationReport:
    """Detailed balance; the other per-pair checks report into its notes."""
    reports = check_bijection(alpha, sigma, i, ("balance", "normalization", "support", "content"))
    out = reports["balance"]
    for name in ("normalization", "support", "content"):
        out.violations.extend(reports[name].violations)
        out.notes[f"{name}_checked"] = reports[name].pairs_checked
    return out


def verify_normalization(alpha, sigma, i: int) -> VerificationReport:
    return check_bijection(alpha, sigma, i, ("normalization",))["normalization"]


def verify_support(alpha, sigma, i: int) -> VerificationReport:
    return check_bijection(alpha, sigma, i, ("support",))["support"]


def verify_row_lemmas(alpha, sigma, i: int) -> VerificationReport:
    return check_bijection(alpha, sigma, i, ("row-lemmas",))["row-lemmas"]


def verify_symmetry(alpha, sigma, i: int, claim: str = "symmetry") -> VerificationReport:
    """Compare E^sigma and E^{sigma s_i} coefficientwise.

    Each content is also summed again from a content-filtered enumeration,
    so the pruning path is checked against the unfiltered one.
    """
    alpha, sigma = composition(alpha), permutation(sigma)
    _require_equal(alpha, i)
    tau = times_s(sigma, i)
    rep = VerificationReport(claim, _params(alpha, sigma, i))
    left, right = tableau_by_content(alpha, sigma), tableau_by_content(alpha, tau)
    for beta in sorted(set(left) | set(right)):
        rep.pairs_checked += 1
        lv, rv = left.get(beta, ZERO), right.get(beta, ZERO)
        if lv != rv:
            rep.violations.append(_violation("coefficient", content=list(beta), lhs=lv, rhs=rv))
            continue
        for basement, full in ((sigma, lv), (tau, rv)):
            refined = tableau_by_content(alpha, basement, beta).get(beta, ZERO)
            if refined != full:
                rep.violations.append(
                    _violation("refined-sum", content=list(beta), basement=list(basement), lhs=refined, rhs=full)
                )
    return rep


def verify_ale19(alpha, sigma, i: int) -> VerificationReport:
    """The symmetry check under the extra hypothesis sigma_{i+1} = sigma_i +- 1."""
    sigma = permutation(sigma)
    if abs(sigma[i - 1] - sigma[i]) != 1:
        raise PreconditionViolated(f"basement entries {sigma[i - 1]} and {sigma[i]} are not consecutive")
    return verify_symmetry(alpha, sigma, i, claim="ale19")


def balance_at(T: Filling, U: Filling, i: int) -> tuple[RationalQT, RationalQT]:
    """Both sides of wtqt(T) P_i(T, U) = wtqt(U) P_i(U, T)."""
    return qt_weight(T) * prob(T, U, i), qt_weight(U) * prob(U, T, i)
