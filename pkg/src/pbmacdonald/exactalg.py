"""Exact arithmetic over Q(q, t) and Q(q, t)[x_1, ..., x_n].

Every element of Q(q, t) that shows up in this package has a denominator
that is a product of binomials ``1 - q^a t^b``.  :class:`RationalQT` keeps
such denominators in factored form, so addition only needs a least common
multiple of multisets and equality reduces to comparing cross-multiplied
integer polynomials.  No multivariate gcd is ever computed.

Integer polynomials in q, t are stored as ``dict[(i, j)] -> int`` with no
zero values.  The helpers prefixed with an underscore work on these raw
dicts and are shared with the hot loops in :mod:`pbmacdonald.fillings`.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Mapping

from .errors import DimensionMismatch, InexactDivision, NegativeQUnit

Exponent = tuple[int, int]
RawPoly = dict

# Modular fingerprint used for hashing and as a fast inequality filter.
_P = (1 << 61) - 1
_Q0 = 1_234_567_891
_T0 = 987_654_321


def _padd(acc: RawPoly, other: Mapping, dq: int = 0, dt: int = 0, scale: int = 1) -> None:
    """In place ``acc += scale * q^dq t^dt * other``."""
    for (i, j), c in other.items():
        key = (i + dq, j + dt)
        v = acc.get(key, 0) + scale * c
        if v:
            acc[key] = v
        elif key in acc:
            del acc[key]


def _pmul(a: Mapping, b: Mapping) -> RawPoly:
    if len(a) < len(b):
        a, b = b, a
    out: RawPoly = {}
    for (i2, j2), c2 in b.items():
        for (i1, j1), c1 in a.items():
            key = (i1 + i2, j1 + j2)
            out[key] = out.get(key, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def _mul_factor(p: Mapping, a: int, b: int) -> RawPoly:
    """``p * (1 - q^a t^b)``."""
    out = dict(p)
    for (i, j), c in p.items():
        key = (i + a, j + b)
        v = out.get(key, 0) - c
        if v:
            out[key] = v
        else:
            del out[key]
    return out


def _div_factor(p: Mapping, a: int, b: int) -> RawPoly | None:
    """Exact quotient ``p / (1 - q^a t^b)``, or None if it does not divide.

    Exponents of ``p`` split into lines ``base + k*(a, b)``.  Along each line
    the quotient coefficients are prefix sums, and the division is exact iff
    every line sums to zero.
    """
    lines: dict = defaultdict(dict)
    for (i, j), c in p.items():
        if a == 0:
            k = j // b
        elif b == 0:
            k = i // a
        else:
            k = min(i // a, j // b)
        lines[(i - k * a, j - k * b)][k] = c
    quo: RawPoly = {}
    for (bi, bj), seq in lines.items():
        if sum(seq.values()):
            return None
        acc = 0
        for k in range(min(seq), max(seq)):
            acc += seq.get(k, 0)
            if acc:
                quo[(bi + k * a, bj + k * b)] = acc
    return quo


@lru_cache(maxsize=4096)
def _factor_product(factors: tuple) -> tuple:
    """Expanded ``prod (1 - q^a t^b)^m`` for ``factors = ((a, b, m), ...)``."""
    p: RawPoly = {(0, 0): 1}
    for a, b, m in factors:
        for _ in range(m):
            p = _mul_factor(p, a, b)
    return tuple(p.items())


@lru_cache(maxsize=None)
def _raw_one_minus_t_power(m: int) -> tuple:
    """Items of ``(1 - t)^m``."""
    return tuple(((0, j), (-1) ** j * comb(m, j)) for j in range(m + 1))


def _pmul_factors(p: Mapping, factors: tuple) -> RawPoly:
    if not factors:
        return dict(p)
    return _pmul(p, dict(_factor_product(factors)))


def _peval(p: Mapping, qv: int, tv: int) -> int:
    s = 0
    for (i, j), c in p.items():
        s += c * pow(qv, i, _P) * pow(tv, j, _P)
    return s % _P


class QTPolynomial:
    """Polynomial in q, t with integer coefficients, in canonical form."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Exponent, int] | None = None):
        self._terms = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError("QTPolynomial exponents must be non-negative")
                if c:
                    self._terms[(int(i), int(j))] = int(c)

    @classmethod
    def _raw(cls, terms: RawPoly) -> QTPolynomial:
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms sorted by (q-exponent, t-exponent)."""
        return sorted(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other):
        other = _as_qtpoly(other)
        acc = dict(self._terms)
        _padd(acc, other._terms)
        return QTPolynomial._raw(acc)

    __radd__ = __add__

    def __neg__(self):
        return QTPolynomial._raw({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-_as_qtpoly(other))

    def __rsub__(self, other):
        return _as_qtpoly(other) - self

    def __mul__(self, other):
        other = _as_qtpoly(other)
        return QTPolynomial._raw(_pmul(self._terms, other._terms))

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = _as_qtpoly(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return f"QTPolynomial({dict(self.items())!r})"


def _as_qtpoly(x) -> QTPolynomial:
    if isinstance(x, QTPolynomial):
        return x
    if isinstance(x, int):
        return QTPolynomial({(0, 0): x})
    raise TypeError(f"cannot interpret {type(x).__name__} as a QTPolynomial")


class RationalQT:
    """Exact element ``q^uq t^ut N(q, t) / prod (1 - q^a t^b)^m`` of Q(q, t).

    The numerator ``N`` has non-negative exponents with minimal q- and
    t-exponents equal to zero (pure powers live in the unit).  A
    denominator factor is dropped only when it divides ``N`` exactly.
    Zero has an empty numerator, empty denominator and unit ``(0, 0)``.

    >>> q, t = RationalQT.q(), RationalQT.t()
    >>> (1 - t*t) / (1 - t) == 1 + t
    True
    """

    __slots__ = ("unit_q", "unit_t", "_num", "_den", "_fp")

    def __init__(self, numerator=None, denominator=(), unit_q: int = 0, unit_t: int = 0):
        if numerator is None:
            numerator = {}
        if isinstance(numerator, int):
            numerator = {(0, 0): numerator}
        elif isinstance(numerator, QTPolynomial):
            numerator = numerator._terms
        num: RawPoly = {}
        for (i, j), c in dict(numerator).items():
            if c:
                num[(int(i), int(j))] = int(c)
        den: dict = defaultdict(int)
        items = denominator.items() if isinstance(denominator, Mapping) else (
            (f, 1) if len(f) == 2 else ((f[0], f[1]), f[2]) for f in denominator
        )
        for (a, b), m in items:
            if a < 0 or b < 0 or (a == 0 and b == 0):
                raise ValueError(f"invalid denominator factor (1 - q^{a} t^{b})")
            if m < 0:
                raise ValueError("denominator multiplicities must be non-negative")
            den[(int(a), int(b))] += int(m)
        # Negative exponents in the given numerator are absorbed by the unit.
        if num:
            mq = min(i for i, _ in num)
            mt = min(j for _, j in num)
            if mq < 0 or mt < 0:
                sq, st = min(mq, 0), min(mt, 0)
                num = {(i - sq, j - st): c for (i, j), c in num.items()}
                unit_q += sq
                unit_t += st
        res = RationalQT._build(unit_q, unit_t, num, den)
        self.unit_q, self.unit_t = res.unit_q, res.unit_t
        self._num, self._den, self._fp = res._num, res._den, None

    # -- construction -------------------------------------------------
    @classmethod
    def _raw(cls, uq: int, ut: int, num: RawPoly, den: tuple) -> RationalQT:
        obj = cls.__new__(cls)
        obj.unit_q = uq
        obj.unit_t = ut
        obj._num = num
        obj._den = den
        obj._fp = None
        return obj

    @classmethod
    def _build(cls, uq: int, ut: int, num: RawPoly, den: Mapping) -> RationalQT:
        """Normalize: cancel dividing factors, move pure powers to the unit."""
        if not num:
            return ZERO
        out = []
        for (a, b), m in sorted(den.items()):
            while m > 0:
                quo = _div_factor(num, a, b)
                if quo is None:
                    break
                num = quo
                m -= 1
            if m > 0:
                out.append((a, b, m))
        mq = min(i for i, _ in num)
        mt = min(j for _, j in num)
        if mq or mt:
            num = {(i - mq, j - mt): c for (i, j), c in num.items()}
            uq += mq
            ut += mt
        return cls._raw(uq, ut, num, tuple(out))

    @classmethod
    def from_int(cls, c: int) -> RationalQT:
        return cls._raw(0, 0, {(0, 0): c}, ()) if c else ZERO

    @classmethod
    def monomial(cls, c: int = 1, q: int = 0, t: int = 0) -> RationalQT:
        return cls._raw(q, t, {(0, 0): c}, ()) if c else ZERO

    @classmethod
    def q(cls) -> RationalQT:
        return cls.monomial(1, 1, 0)

    @classmethod
    def t(cls) -> RationalQT:
        return cls.monomial(1, 0, 1)

    @classmethod
    def cyclotomic(cls, a: int, b: int) -> RationalQT:
        """The binomial ``1 - q^a t^b``."""
        return cls._build(0, 0, {(0, 0): 1, (a, b): -1}, {})

    @classmethod
    def cyclotomic_inverse(cls, a: int, b: int, m: int = 1) -> RationalQT:
        """``1 / (1 - q^a t^b)^m``."""
        return cls({(0, 0): 1}, {(a, b): m})

    @staticmethod
    def sum(values: Iterable[RationalQT]) -> RationalQT:
        """Sum many values at once, grouping terms by denominator."""
        groups: dict = {}
        units = []
        for v in values:
            if not v._num:
                continue
            units.append(v)
        if not units:
            return ZERO
        if len(units) == 1:
            return units[0]
        bq = min(v.unit_q for v in units)
        bt = min(v.unit_t for v in units)
        for v in units:
            acc = groups.get(v._den)
            if acc is None:
                acc = groups[v._den] = {}
            _padd(acc, v._num, v.unit_q - bq, v.unit_t - bt)
        return _combine_groups(groups, bq, bt)

    # -- accessors ----------------------------------------------------
    @property
    def numerator(self) -> QTPolynomial:
        return QTPolynomial._raw(dict(self._num))

    @property
    def denominator(self) -> tuple:
        """Sorted tuple of ``(a, b, multiplicity)``."""
        return self._den

    def is_zero(self) -> bool:
        return not self._num

    def is_polynomial(self) -> bool:
        """True when there is no denominator and no negative unit."""
        return not self._den and self.unit_q >= 0 and self.unit_t >= 0

    def is_monomial(self) -> bool:
        return not self._den and len(self._num) == 1

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._num:
            return self
        if not self._num:
            return other
        bq = min(self.unit_q, other.unit_q)
        bt = min(self.unit_t, other.unit_t)
        if self._den == other._den:
            acc: RawPoly = {}
            _padd(acc, self._num, self.unit_q - bq, self.unit_t - bt)
            _padd(acc, other._num, other.unit_q - bq, other.unit_t - bt)
            return RationalQT._build(bq, bt, acc, {(a, b): m for a, b, m in self._den})
        groups = {
            self._den: {},
            other._den: {},
        }
        _padd(groups[self._den], self._num, self.unit_q - bq, self.unit_t - bt)
        _padd(groups[other._den], other._num, other.unit_q - bq, other.unit_t - bt)
        return _combine_groups(groups, bq, bt)

    __radd__ = __add__

    def __neg__(self):
        if not self._num:
            return self
        return RationalQT._raw(self.unit_q, self.unit_t, {k: -v for k, v in self._num.items()}, self._den)

    def __sub__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._num or not other._num:
            return ZERO
        uq = self.unit_q + other.unit_q
        ut = self.unit_t + other.unit_t
        if not other._den and len(other._num) == 1:
            ((_, c),) = other._num.items()
            if c == 1:
                return RationalQT._raw(uq, ut, self._num, self._den)
            return RationalQT._raw(uq, ut, {k: c * v for k, v in self._num.items()}, self._den)
        if not self._den and len(self._num) == 1:
            return other * self
        num = _pmul(self._num, other._num)
        den: dict = defaultdict(int)
        for a, b, m in self._den:
            den[(a, b)] += m
        for a, b, m in other._den:
            den[(a, b)] += m
        return RationalQT._build(uq, ut, num, den)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return RationalQT.from_int(1) / self ** (-k)
        out = RationalQT.from_int(1)
        for _ in range(k):
            out = out * self
        return out

    def __truediv__(self, other):
        """Exact division.

        Binomial factors ``1 - q^a t^b`` of the divisor move to the
        denominator; any other cofactor must divide the numerator exactly,
        otherwise :class:`InexactDivision` is raised (coefficients are
        integers, so ``1/2`` or ``1/(1 + t)`` are not representable).
        """
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._num:
            raise ZeroDivisionError("division by zero in Q(q, t)")
        rest, factors = _factor_into_binomials(other._num)
        num = _pmul_factors(self._num, other._den)
        if rest != {(0, 0): 1}:
            num = _pdiv_exact(num, rest)
            if num is None:
                raise InexactDivision("divisor does not divide the numerator over the integers")
        den: dict = defaultdict(int)
        for a, b, m in self._den:
            den[(a, b)] += m
        for ab, m in factors.items():
            den[ab] += m
        return RationalQT._build(self.unit_q - other.unit_q, self.unit_t - other.unit_t, num, den)

    def __rtruediv__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    # -- comparison ---------------------------------------------------
    def _fingerprint(self) -> int:
        fp = self._fp
        if fp is None:
            if not self._num:
                fp = 0
            else:
                qv, tv = _Q0, _T0
                fp = _peval(self._num, qv, tv)
                fp = fp * pow(qv, self.unit_q, _P) * pow(tv, self.unit_t, _P) % _P
                for a, b, m in self._den:
                    d = (1 - pow(qv, a, _P) * pow(tv, b, _P)) % _P
                    fp = fp * pow(d, -m, _P) % _P
            self._fp = fp
        return fp

    def __eq__(self, other):
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return rq_eq(self, other)

    def __hash__(self):
        return hash(self._fingerprint())

    # -- specialization -----------------------------------------------
    def specialize_q_zero(self) -> RationalQT:
        """The value at q = 0.

        Every denominator factor with a >= 1 evaluates to 1 there.  A
        negative q-unit means a pole at q = 0 (the normalized numerator
        always has a q^0 term) and raises :class:`NegativeQUnit`.
        """
        if not self._num:
            return ZERO
        for a, b, _ in self._den:
            if a == 0:
                raise NegativeQUnit(f"factor (1 - t^{b}) has no q dependence; q = 0 leaves it")
        if self.unit_q < 0:
            raise NegativeQUnit(f"unit q^{self.unit_q} has no limit at q = 0")
        if self.unit_q > 0:
            return ZERO
        num = {(0, j): c for (i, j), c in self._num.items() if i == 0}
        return RationalQT._build(0, self.unit_t, num, {})

    # -- serialization ------------------------------------------------
    def to_json(self) -> dict:
        return {
            "unit": {"q": self.unit_q, "t": self.unit_t},
            "num": [{"q": i, "t": j, "c": str(c)} for (i, j), c in sorted(self._num.items())],
            "den": [{"a": a, "b": b, "m": m} for a, b, m in self._den],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> RationalQT:
        num = {(int(d["q"]), int(d["t"])): int(d["c"]) for d in data.get("num", [])}
        den = {(int(d["a"]), int(d["b"])): int(d["m"]) for d in data.get("den", [])}
        unit = data.get("unit", {})
        return cls(num, den, int(unit.get("q", 0)), int(unit.get("t", 0)))

    def __str__(self):
        from .render import rational_to_text

        return rational_to_text(self)

    def __repr__(self):
        return f"RationalQT({str(self)!r})"


def _as_rational(x):
    if isinstance(x, RationalQT):
        return x
    if isinstance(x, int):
        return RationalQT.from_int(x)
    if isinstance(x, QTPolynomial):
        return RationalQT(x._terms)
    return NotImplemented


def _combine_groups(groups: Mapping[tuple, RawPoly], bq: int, bt: int) -> RationalQT:
    """Sum ``num / den`` over groups keyed by a denominator tuple."""
    groups = {d: p for d, p in groups.items() if p}
    if not groups:
        return ZERO
    lcm: dict = defaultdict(int)
    for den in groups:
        for a, b, m in den:
            if m > lcm[(a, b)]:
                lcm[(a, b)] = m
    total: RawPoly = {}
    for den, num in groups.items():
        have = {(a, b): m for a, b, m in den}
        missing = tuple((a, b, m - have.get((a, b), 0)) for (a, b), m in sorted(lcm.items()) if m > have.get((a, b), 0))
        if missing:
            _padd(total, _pmul(num, dict(_factor_product(missing))))
        else:
            _padd(total, num)
    return RationalQT._build(bq, bt, total, lcm)


def sum_over_denominators(groups: Mapping[tuple, Mapping]) -> RationalQT:
    """Sum prepared fractions ``{denominator tuple: numerator dict}``.

    Numerators must have non-negative exponents; denominator tuples are
    ``((a, b, m), ...)`` sorted.  This is the bulk path used when summing
    filling weights.
    """
    return _combine_groups({d: dict(p) for d, p in groups.items()}, 0, 0)


def _factor_into_binomials(num: RawPoly) -> tuple[RawPoly, dict]:
    """Split binomials ``1 - q^a t^b`` off ``num``, largest first.

    Returns the cofactor left over and the factor multiplicities.
    """
    rest = dict(num)
    factors: dict = defaultdict(int)
    if len(rest) > 1:
        dq = max(i for i, _ in rest)
        dt = max(j for _, j in rest)
        cands = sorted(
            ((a, b) for a in range(dq + 1) for b in range(dt + 1) if a or b),
            key=lambda ab: (-(ab[0] + ab[1]), -ab[0]),
        )
        for a, b in cands:
            while len(rest) > 1:
                quo = _div_factor(rest, a, b)
                if quo is None:
                    break
                rest = quo
                factors[(a, b)] += 1
    return rest, factors


def _pdiv_exact(p: RawPoly, d: RawPoly) -> RawPoly | None:
    """Exact quotient ``p / d`` of integer polynomials by lex long division, or None."""
    lead = max(d)
    lc = d[lead]
    rem = dict(p)
    quo: RawPoly = {}
    while rem:
        top = max(rem)
        c, r = divmod(rem[top], lc)
        di, dj = top[0] - lead[0], top[1] - lead[1]
        if r or di < 0 or dj < 0:
            return None
        quo[(di, dj)] = c
        _padd(rem, d, di, dj, -c)
    return quo


def rq_eq(a: RationalQT, b: RationalQT) -> bool:
    """Value equality by cross-multiplication over the merged denominator."""
    if a._num.keys() == b._num.keys() and a._den == b._den and (a.unit_q, a.unit_t) == (b.unit_q, b.unit_t):
        if a._num == b._num:
            return True
    if not a._num or not b._num:
        return not a._num and not b._num
    if a._fingerprint() != b._fingerprint():
        return False
    # Multiplying by binomials keeps the lowest-order parts, so equal values
    # must already agree on units.
    if (a.unit_q, a.unit_t) != (b.unit_q, b.unit_t):
        return False
    da = {(x, y): m for x, y, m in a._den}
    db = {(x, y): m for x, y, m in b._den}
    keys = sorted(set(da) | set(db))
    miss_a = tuple((x, y, max(da.get((x, y), 0), db.get((x, y), 0)) - da.get((x, y), 0)) for x, y in keys)
    miss_b = tuple((x, y, max(da.get((x, y), 0), db.get((x, y), 0)) - db.get((x, y), 0)) for x, y in keys)
    na = _pmul_factors(a._num, tuple(f for f in miss_a if f[2]))
    nb = _pmul_factors(b._num, tuple(f for f in miss_b if f[2]))
    return na == nb


ZERO = RationalQT._raw(0, 0, {}, ())
ONE = RationalQT._raw(0, 0, {(0, 0): 1}, ())


# ---------------------------------------------------------------------------
# Polynomials in x_1..x_n over Q(q, t)


class XPolynomial:
    """Polynomial in ``x_1..x_n`` with :class:`RationalQT` coefficients.

    Monomials are exponent tuples of length ``n``; zero coefficients are
    never stored.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping | None = None):
        if n < 0:
            raise ValueError("number of variables must be non-negative")
        self.n = n
        self._terms = {}
        if terms:
            acc: dict = defaultdict(list)
            for mono, c in terms.items():
                mono = tuple(int(e) for e in mono)
                if len(mono) != n or any(e < 0 for e in mono):
                    raise DimensionMismatch(f"monomial {mono} is not an exponent vector of length {n}")
                acc[mono].append(_as_rational(c))
            for mono, cs in acc.items():
                c = RationalQT.sum(cs)
                if not c.is_zero():
                    self._terms[mono] = c

    @classmethod
    def _raw(cls, n: int, terms: dict) -> XPolynomial:
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = terms
        return obj

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[tuple, RationalQT]]) -> XPolynomial:
        """Build from ``(monomial, coefficient)`` pairs, summing duplicates."""
        acc: dict = defaultdict(list)
        for mono, c in pairs:
            acc[mono].append(c)
        terms = {}
        for mono, cs in acc.items():
            c = cs[0] if len(cs) == 1 else RationalQT.sum(cs)
            if c._num:
                terms[mono] = c
        return cls._raw(n, terms)

    @classmethod
    def one(cls, n: int) -> XPolynomial:
        return cls._raw(n, {(0,) * n: ONE})

    @classmethod
    def variable(cls, n: int, j: int) -> XPolynomial:
        """The variable ``x_j`` (1-indexed)."""
        if not 1 <= j <= n:
            raise DimensionMismatch(f"x_{j} does not exist among {n} variables")
        e = [0] * n
        e[j - 1] = 1
        return cls._raw(n, {tuple(e): ONE})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms in ascending lexicographic order of exponent vectors."""
        return sorted(self._terms.items())

    def monomials(self):
        return sorted(self._terms)

    def coefficient(self, mono) -> RationalQT:
        mono = tuple(mono)
        if len(mono) != self.n:
            raise DimensionMismatch(f"monomial {mono} has length {len(mono)}, expected {self.n}")
        return self._terms.get(mono, ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def _check(self, other: XPolynomial):
        if self.n != other.n:
            raise DimensionMismatch(f"polynomials in {self.n} and {other.n} variables")

    def __add__(self, other):
        if not isinstance(other, XPolynomial):
            other = _as_rational(other)
            if other is NotImplemented:
                return NotImplemented
            other = XPolynomial._raw(self.n, {(0,) * self.n: other} if other._num else {})
        self._check(other)
        out = dict(self._terms)
        for mono, c in other._terms.items():
            prev = out.get(mono)
            if prev is None:
                out[mono] = c
            else:
                s = prev + c
                if s._num:
                    out[mono] = s
                else:
                    del out[mono]
        return XPolynomial._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return XPolynomial._raw(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, XPolynomial):
            return self + (-other)
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: RationalQT) -> XPolynomial:
        c = _as_rational(c)
        if not c._num:
            return XPolynomial._raw(self.n, {})
        return XPolynomial._raw(self.n, {m: v * c for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, XPolynomial):
            self._check(other)
            pairs = []
            for m1, c1 in self._terms.items():
                for m2, c2 in other._terms.items():
                    pairs.append((tuple(a + b for a, b in zip(m1, m2)), c1 * c2))
            return XPolynomial.from_pairs(self.n, pairs)
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return self.scale(other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, XPolynomial):
            if self.n != other.n:
                return False
            if self._terms.keys() != other._terms.keys():
                return False
            return all(rq_eq(c, other._terms[m]) for m, c in self._terms.items())
        other = _as_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return self == XPolynomial._raw(self.n, {(0,) * self.n: other} if other._num else {})

    __hash__ = None

    def map_coefficients(self, fn) -> XPolynomial:
        out = {}
        for m, c in self._terms.items():
            v = fn(c)
            if v._num:
                out[m] = v
        return XPolynomial._raw(self.n, out)

    def specialize_q_zero(self) -> XPolynomial:
        return self.map_coefficients(RationalQT.specialize_q_zero)

    def swap_variables(self, i: int) -> XPolynomial:
        """Exchange ``x_i`` and ``x_{i+1}`` (1-indexed)."""
        k = i - 1
        out = {}
        for m, c in self._terms.items():
            e = list(m)
            e[k], e[k + 1] = e[k + 1], e[k]
            out[tuple(e)] = c
        return XPolynomial._raw(self.n, out)

    def to_json(self) -> dict:
        return {"n": self.n, "terms": [{"x": list(m), "coef": c.to_json()} for m, c in self.items()]}

    @classmethod
    def from_json(cls, data: Mapping) -> XPolynomial:
        n = int(data["n"])
        return cls(n, {tuple(d["x"]): RationalQT.from_json(d["coef"]) for d in data["terms"]})

    def __repr__(self):
        from .render import polynomial_to_text

        return f"XPolynomial({self.n}, {polynomial_to_text(self)!r})"

    def __iter__(self) -> Iterator:
        return iter(self.items())


def divide_linear(h: XPolynomial, i: int) -> XPolynomial:
    """Exact quotient ``h / (x_i - x_{i+1})`` by synthetic division.

    Terms are grouped by the exponents outside positions i, i+1 and by
    ``e_i + e_{i+1}``; within a group the quotient coefficients are negated
    prefix sums.  A group whose coefficients do not sum to zero leaves a
    remainder and raises :class:`InexactDivision`.
    """
    n = h.n
    if not 1 <= i < n:
        raise DimensionMismatch(f"x_{i} - x_{i + 1} is not defined for n = {n}")
    k = i - 1
    groups: dict = defaultdict(dict)
    for m, c in h._terms.items():
        a, b = m[k], m[k + 1]
        groups[(m[:k], m[k + 2:], a + b)][a] = c
    pairs = []
    for (pre, post, d), seq in groups.items():
        if not RationalQT.sum(seq.values()).is_zero():
            raise InexactDivision(f"nonzero remainder dividing by x_{i} - x_{i + 1}")
        running = ZERO
        for a in range(min(seq), d):
            c = seq.get(a)
            if c is not None:
                running = running + c
            if running._num:
                pairs.append((pre + (a, d - 1 - a) + post, -running))
    return XPolynomial.from_pairs(n, pairs)


def divided_difference(f: XPolynomial, i: int) -> XPolynomial:
    """``(f - s_i f) / (x_i - x_{i+1})``."""
    return divide_linear(f - f.swap_variables(i), i)
