"""Plain-text and LaTeX rendering of exact values."""

from __future__ import annotations

from .exactalg import RationalQT, XPolynomial, _div_factor


def _mono(i: int, j: int, mul: str = "*", latex: bool = False) -> str:
    parts = []
    for var, e in (("q", i), ("t", j)):
        if e == 0:
            continue
        if e == 1:
            parts.append(var)
        elif latex:
            parts.append(f"{var}^{{{e}}}")
        else:
            parts.append(f"{var}^{e}")
    return mul.join(parts)


def _poly(terms: dict, latex: bool = False) -> str:
    """Integer polynomial in q, t, lowest degree first."""
    mul = " " if latex else "*"
    out = []
    for (i, j), c in sorted(terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0])):
        m = _mono(i, j, mul, latex)
        if not m:
            s = str(abs(c))
        elif abs(c) == 1:
            s = m
        else:
            s = f"{abs(c)}{mul}{m}"
        if not out:
            out.append(s if c > 0 else f"-{s}")
        else:
            out.append(("+ " if c > 0 else "- ") + s)
    return " ".join(out) if out else "0"


def _binomial(a: int, b: int, latex: bool = False) -> str:
    return f"1 - {_mono(a, b, ' ' if latex else '*', latex)}"


def _pow(base: str, m: int, latex: bool) -> str:
    if m == 1:
        return f"({base})"
    return f"({base})^{{{m}}}" if latex else f"({base})^{m}"


def _numerator_parts(r: RationalQT, latex: bool) -> tuple[int, list[str]]:
    """Sign and factors of the numerator, pulling out powers of (1 - t)."""
    num = dict(r._num)
    k = 0
    while len(num) > 1:
        quo = _div_factor(num, 0, 1)
        if quo is None:
            break
        num, k = quo, k + 1
    sign = 1
    if len(num) == 1:
        ((_, c),) = num.items()
        sign = 1 if c > 0 else -1
        num = {(0, 0): abs(c)}
    elif min(num.items())[1] < 0:
        sign = -1
        num = {e: -c for e, c in num.items()}
    parts = []
    const = num.get((0, 0)) if len(num) == 1 else None
    if const is not None and const != 1:
        parts.append(str(const))
    unit = _mono(max(r.unit_q, 0), max(r.unit_t, 0), " " if latex else "*", latex)
    if unit:
        parts.append(unit)
    if k:
        parts.append(_pow("1 - t", k, latex))
    if const is None:
        parts.append(f"({_poly(num, latex)})")
    return sign, parts


def _denominator_parts(r: RationalQT, latex: bool) -> list[str]:
    dens = [_pow(_binomial(a, b, latex), m, latex) for a, b, m in r.denominator]
    neg = _mono(max(-r.unit_q, 0), max(-r.unit_t, 0), " " if latex else "*", latex)
    return ([neg] if neg else []) + dens


def rational_to_text(r: RationalQT) -> str:
    """Factored text such as ``t*(1 - t)/(1 - q*t^2)``."""
    if r.is_zero():
        return "0"
    sign, parts = _numerator_parts(r, False)
    s = "*".join(parts) if parts else "1"
    dens = _denominator_parts(r, False)
    if len(dens) == 1:
        s += f"/{dens[0]}"
    elif dens:
        s += "/(" + "*".join(dens) + ")"
    return f"-{s}" if sign < 0 else s


def rational_to_latex(r: RationalQT) -> str:
    if r.is_zero():
        return "0"
    sign, parts = _numerator_parts(r, True)
    num = " ".join(parts) if parts else "1"
    dens = _denominator_parts(r, True)
    s = f"\\frac{{{num}}}{{{' '.join(dens)}}}" if dens else num
    return f"-{s}" if sign < 0 else s


def _xmono(m: tuple, latex: bool) -> str:
    parts = []
    for k, e in enumerate(m, start=1):
        if e == 0:
            continue
        v = f"x_{{{k}}}" if latex else f"x{k}"
        if e > 1:
            v += f"^{{{e}}}" if latex else f"^{e}"
        parts.append(v)
    return (" " if latex else "*").join(parts)


def _needs_parens(s: str) -> bool:
    depth = 0
    for idx, ch in enumerate(s):
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        elif depth == 0 and ch in "+-" and idx > 0:
            return True
    return False


def _join_terms(terms: list[str]) -> str:
    if not terms:
        return "0"
    out = terms[0]
    for s in terms[1:]:
        out += f" - {s[1:]}" if s.startswith("-") else f" + {s}"
    return out


def polynomial_to_text(f: XPolynomial) -> str:
    """Monomials in descending lexicographic order, unit coefficients omitted."""
    terms = []
    for m, c in sorted(f.terms.items(), reverse=True):
        xm = _xmono(m, False)
        cs = rational_to_text(c)
        if not xm:
            terms.append(cs)
            continue
        if cs == "1":
            terms.append(xm)
        elif cs == "-1":
            terms.append(f"-{xm}")
        else:
            if _needs_parens(cs):
                cs = f"({cs})"
            terms.append(f"{cs}*{xm}")
    return _join_terms(terms)


def polynomial_to_latex(f: XPolynomial) -> str:
    terms = []
    for m, c in sorted(f.terms.items(), reverse=True):
        xm = _xmono(m, True)
        cs = rational_to_latex(c)
        if not xm:
            terms.append(cs)
        elif cs == "1":
            terms.append(xm)
        elif cs == "-1":
            terms.append(f"-{xm}")
        else:
            if _needs_parens(cs):
                cs = f"\\left({cs}\\right)"
            terms.append(f"{cs} {xm}")
    return _join_terms(terms)
