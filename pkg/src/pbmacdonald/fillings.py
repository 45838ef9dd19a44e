"""Non-attacking fillings of skyline diagrams and their statistics.

Boxes are ``(i, r)`` with 1-indexed column ``i`` and row ``r``; row 0 is the
basement.  A :class:`Diagram` caches all shape-only geometry (legs, arms,
triples, attacking constraints) so that enumeration and the tableau sum can
run on flat integer arrays.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import AttackingFilling, BoxOutsideDiagram, DimensionMismatch, InvalidArguments
from .exactalg import ONE, RationalQT, XPolynomial, _combine_groups, _raw_one_minus_t_power
from .wordcomb import composition, permutation

Box = tuple[int, int]


def in_adg(alpha: Sequence[int], box: Box) -> bool:
    i, r = box
    return 1 <= i <= len(alpha) and (r == 0 or 1 <= r <= alpha[i - 1])


def in_dg(alpha: Sequence[int], box: Box) -> bool:
    i, r = box
    return 1 <= i <= len(alpha) and 1 <= r <= alpha[i - 1]


def south(box: Box) -> Box:
    return (box[0], box[1] - 1)


def left_arm(alpha: Sequence[int], box: Box) -> list[Box]:
    i, r = box
    return [
        (j, r - 1)
        for j in range(1, i)
        if alpha[j - 1] < alpha[i - 1] and in_adg(alpha, (j, r - 1))
    ]


def right_arm(alpha: Sequence[int], box: Box) -> list[Box]:
    i, r = box
    return [
        (j, r)
        for j in range(i + 1, len(alpha) + 1)
        if alpha[j - 1] <= alpha[i - 1] and in_dg(alpha, (j, r))
    ]


@dataclass(frozen=True)
class ArmLeg:
    arm: int
    leg: int
    left_arm: tuple
    right_arm: tuple


def arm_leg(alpha: Sequence[int], box: Box) -> ArmLeg:
    if not in_dg(alpha, box):
        raise BoxOutsideDiagram(f"{box} is not a box of dg({tuple(alpha)})")
    la, ra = left_arm(alpha, box), right_arm(alpha, box)
    return ArmLeg(len(la) + len(ra), alpha[box[0] - 1] - box[1], tuple(la), tuple(ra))


def attacking(u: Box, v: Box) -> bool:
    """Same row, or consecutive rows with the higher box strictly right."""
    (i1, r1), (i2, r2) = u, v
    if u == v:
        return False
    if r1 == r2:
        return True
    if r1 == r2 + 1:
        return i1 > i2
    if r2 == r1 + 1:
        return i2 > i1
    return False


def indicator(a: int, b: int) -> int:
    return 1 if a > b else 0


def indicator3(a: int, b: int, c: int) -> int:
    """I(a, b, c) = [a > b] + [b > c] - [a > c]; requires a != b and b != c."""
    if a == b or b == c:
        raise InvalidArguments(f"indicator3 needs a != b and b != c, got {(a, b, c)}")
    return (a > b) + (b > c) - (a > c)


@dataclass(frozen=True)
class Triple:
    u: Box
    v: Box
    w: Box
    kind: str  # "I" when v is in the right arm, "II" when in the left arm


@lru_cache(maxsize=None)
def triples_of(alpha: tuple) -> tuple:
    out = []
    for i in range(1, len(alpha) + 1):
        for r in range(1, alpha[i - 1] + 1):
            u = (i, r)
            for v in right_arm(alpha, u):
                out.append(Triple(u, v, south(u), "I"))
            for v in left_arm(alpha, u):
                out.append(Triple(u, v, south(u), "II"))
    return tuple(out)


class Diagram:
    """Shape-only data for ``alpha``, indexed for fast enumeration.

    Values are addressed by a global index: ``0..n-1`` are basement
    entries, ``n + k`` is the k-th box in reading order (row 1 left to
    right, then row 2, ...).
    """

    def __init__(self, alpha: tuple):
        self.alpha = alpha
        n = self.n = len(alpha)
        self.rows = max(alpha, default=0)
        self.boxes = [(i, r) for r in range(1, self.rows + 1) for i in range(1, n + 1) if alpha[i - 1] >= r]
        index = {(i, 0): i - 1 for i in range(1, n + 1)}
        for k, b in enumerate(self.boxes):
            index[b] = n + k
        self.index = index
        self.south = [index[south(b)] for b in self.boxes]
        self.leg = [alpha[i - 1] - r for i, r in self.boxes]
        self.arm = [arm_leg(alpha, b).arm for b in self.boxes]
        self.factors = sorted({(l + 1, a + 1) for l, a in zip(self.leg, self.arm)})
        fid = {f: k for k, f in enumerate(self.factors)}
        self.factor_id = [fid[(l + 1, a + 1)] for l, a in zip(self.leg, self.arm)]
        # Labels a box must avoid: earlier boxes of its row, and boxes of
        # the row below that lie strictly to its left.
        self.avoid = []
        for i, r in self.boxes:
            av = [index[(j, r)] for j in range(1, i) if in_adg(alpha, (j, r))]
            av += [index[(j, r - 1)] for j in range(1, i) if in_adg(alpha, (j, r - 1))]
            self.avoid.append(tuple(av))
        # Each triple is scored once all three of its values are known.
        self.events: list[list[tuple[int, int, int]]] = [[] for _ in self.boxes]
        for tr in triples_of(alpha):
            g = (index[tr.u], index[tr.v], index[tr.w])
            last = max(g)
            self.events[last - n].append(g)
        self.row_of = [r for _, r in self.boxes]
        self.triple_rows = [(tr.u[1] - 1, index[tr.u], index[tr.v], index[tr.w]) for tr in triples_of(alpha)]

    def values(self, T: "Filling") -> list:
        """Global-index value array of a filling of this shape."""
        vals = list(T.basement) + [0] * len(self.boxes)
        for k, (i, r) in enumerate(self.boxes):
            vals[self.n + k] = T.columns[i - 1][r - 1]
        return vals


@lru_cache(maxsize=512)
def diagram(alpha: tuple) -> Diagram:
    return Diagram(tuple(alpha))


def _check(alpha, sigma, beta=None):
    alpha = composition(alpha)
    sigma = permutation(sigma)
    if len(alpha) != len(sigma):
        raise DimensionMismatch(f"shape has {len(alpha)} parts but basement has {len(sigma)}")
    if beta is not None:
        beta = composition(beta)
        if len(beta) != len(alpha):
            raise DimensionMismatch(f"content has {len(beta)} parts, expected {len(alpha)}")
    return alpha, sigma, beta


def _search(d: Diagram, sigma: tuple, beta: tuple | None, leaf) -> None:
    """Backtracking over non-attacking fillings in lexicographic reading order.

    ``leaf(vals, content, maj, coinv, fcount)`` is called once per filling;
    the arrays are live and must be copied if kept.
    """
    n = d.n
    nb = len(d.boxes)
    vals = list(sigma) + [0] * nb
    content = [0] * (n + 1)
    cap = [0] + list(beta) if beta is not None else None
    fcount = [0] * len(d.factors)
    avoid, south_, leg, fid, events = d.avoid, d.south, d.leg, d.factor_id, d.events
    labels = range(1, n + 1)
    stats = [0, 0]  # maj, coinv

    def rec(k: int) -> None:
        if k == nb:
            leaf(vals, content, stats[0], stats[1], fcount)
            return
        g = n + k
        banned = {vals[x] for x in avoid[k]}
        below = vals[south_[k]]
        for lab in labels:
            if lab in banned:
                continue
            if cap is not None:
                if cap[lab] == 0:
                    continue
                cap[lab] -= 1
            vals[g] = lab
            content[lab] += 1
            dm = dc = 0
            f = -1
            if lab != below:
                f = fid[k]
                fcount[f] += 1
                if lab > below:
                    dm = leg[k] + 1
            for gu, gv, gw in events[k]:
                a, b, c = vals[gu], vals[gv], vals[gw]
                if (a > b) + (b > c) - (a > c) == 0:
                    dc += 1
            stats[0] += dm
            stats[1] += dc
            rec(k + 1)
            stats[0] -= dm
            stats[1] -= dc
            if f >= 0:
                fcount[f] -= 1
            content[lab] -= 1
            if cap is not None:
                cap[lab] += 1
        vals[g] = 0

    if beta is not None and sum(beta) != nb:
        return
    rec(0)


@dataclass(frozen=True)
class Filling:
    """A filling of the augmented diagram of ``shape`` with basement ``basement``.

    ``columns[i-1]`` lists the labels of column ``i`` from row 1 upward.
    """

    shape: tuple
    basement: tuple
    columns: tuple

    def __post_init__(self):
        if len(self.shape) != len(self.basement) or len(self.columns) != len(self.shape):
            raise DimensionMismatch("shape, basement and columns must have the same length")
        for i, col in enumerate(self.columns):
            if len(col) != self.shape[i]:
                raise DimensionMismatch(f"column {i + 1} has {len(col)} labels, shape needs {self.shape[i]}")

    @property
    def n(self) -> int:
        return len(self.shape)

    @property
    def rows(self) -> int:
        return max(self.shape, default=0)

    def label(self, i: int, r: int) -> int:
        if r == 0:
            return self.basement[i - 1]
        if not in_dg(self.shape, (i, r)):
            raise BoxOutsideDiagram(f"{(i, r)} is not a box of dg({self.shape})")
        return self.columns[i - 1][r - 1]

    def row(self, r: int) -> list:
        """Labels of row r by column, None where the column is too short."""
        if r == 0:
            return list(self.basement)
        return [self.columns[i][r - 1] if self.shape[i] >= r else None for i in range(self.n)]

    @classmethod
    def from_rows(cls, shape, basement, rows) -> Filling:
        shape, basement, _ = _check(shape, basement)
        cols = []
        for i in range(len(shape)):
            cols.append(tuple(rows[r][i] for r in range(shape[i])))
        return cls(shape, basement, tuple(cols))

    @classmethod
    def from_columns(cls, shape, basement, columns) -> Filling:
        shape, basement, _ = _check(shape, basement)
        return cls(shape, basement, tuple(tuple(c) for c in columns))

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "basement": list(self.basement),
            "rows": [self.row(r) for r in range(1, self.rows + 1)],
        }

    @classmethod
    def from_json(cls, data) -> Filling:
        return cls.from_rows(data["shape"], data["basement"], data["rows"])

    def to_text(self) -> str:
        """Rows from the top down, basement last, ``.`` for empty cells."""
        width = len(str(self.n))
        lines = []
        for r in range(self.rows, -1, -1):
            cells = ["." if v is None else str(v) for v in self.row(r)]
            lines.append(" ".join(c.rjust(width) for c in cells))
        return "\n".join(lines)


def _filling_from_vals(d: Diagram, sigma: tuple, vals: list) -> Filling:
    n, index = d.n, d.index
    cols = tuple(tuple(vals[index[(i, r)]] for r in range(1, d.alpha[i - 1] + 1)) for i in range(1, n + 1))
    return Filling(d.alpha, sigma, cols)


def enumerate_naf(alpha, sigma, beta=None) -> Iterator[Filling]:
    """Non-attacking fillings of shape alpha, basement sigma, optional content beta."""
    alpha, sigma, beta = _check(alpha, sigma, beta)
    d = diagram(alpha)
    found: list = []
    _search(d, sigma, beta, lambda vals, *_: found.append(_filling_from_vals(d, sigma, vals)))
    return iter(found)


def naf_with_stats(alpha, sigma, beta=None) -> list[tuple[Filling, tuple, RationalQT]]:
    """Fillings paired with their content and q,t-weight, from one walk."""
    alpha, sigma, beta = _check(alpha, sigma, beta)
    d = diagram(alpha)
    out = []

    def leaf(vals, content, maj, coinv, fcount):
        out.append((_filling_from_vals(d, sigma, vals), tuple(content[1:]), _qt_weight(d.factors, maj, coinv, fcount)))

    _search(d, sigma, beta, leaf)
    return out


def count_naf(alpha, sigma, beta=None) -> int:
    alpha, sigma, beta = _check(alpha, sigma, beta)
    box = [0]

    def leaf(*_):
        box[0] += 1

    _search(diagram(alpha), sigma, beta, leaf)
    return box[0]


def is_non_attacking(T: Filling) -> bool:
    """Pairwise oracle over all boxes of the augmented diagram."""
    boxes = [(i, r) for i in range(1, T.n + 1) for r in range(0, T.shape[i - 1] + 1)]
    for x in range(len(boxes)):
        for y in range(x + 1, len(boxes)):
            u, v = boxes[x], boxes[y]
            if attacking(u, v) and T.label(*u) == T.label(*v):
                return False
    return True


@dataclass(frozen=True)
class Statistics:
    content: tuple
    descents: tuple
    maj: int
    triples: tuple  # (Triple, is_inversion)
    inv: int
    coinv: int


def statistics(T: Filling) -> Statistics:
    """All statistics computed directly from the definitions."""
    alpha = T.shape
    content = [0] * T.n
    for col in T.columns:
        for v in col:
            content[v - 1] += 1
    boxes = [(i, r) for i in range(1, T.n + 1) for r in range(1, alpha[i - 1] + 1)]
    des = tuple(u for u in boxes if T.label(*u) > T.label(*south(u)))
    maj = sum(arm_leg(alpha, u).leg + 1 for u in des)
    scored = []
    for tr in triples_of(alpha):
        a, b, c = T.label(*tr.u), T.label(*tr.v), T.label(*tr.w)
        scored.append((tr, indicator3(a, b, c) == 1))
    inv = sum(1 for _, x in scored if x)
    return Statistics(tuple(content), des, maj, tuple(scored), inv, len(scored) - inv)


@dataclass(frozen=True)
class WeightBreakdown:
    x_weight: tuple
    rows: tuple  # wtqt^(r) for r = 0..L-1
    qt: RationalQT

    def monomial(self) -> XPolynomial:
        return XPolynomial(len(self.x_weight), {self.x_weight: self.qt})


def _factor(T: Filling, u: Box) -> RationalQT:
    al = arm_leg(T.shape, u)
    return RationalQT({(0, 0): 1, (0, 1): -1}, {(al.leg + 1, al.arm + 1): 1})


def row_component(T: Filling, r: int) -> RationalQT:
    """wtqt^(r): row r+1 descents and factors, coinversion triples with u in row r+1."""
    alpha = T.shape
    top = r + 1
    value = ONE
    majr = 0
    for i in range(1, T.n + 1):
        u = (i, top)
        if not in_dg(alpha, u):
            continue
        a, b = T.label(*u), T.label(i, r)
        if a > b:
            majr += arm_leg(alpha, u).leg + 1
        if a != b:
            value = value * _factor(T, u)
    coinv = sum(
        1
        for tr in triples_of(alpha)
        if tr.u[1] == top and indicator3(T.label(*tr.u), T.label(*tr.v), T.label(*tr.w)) == 0
    )
    return value * RationalQT.monomial(1, majr, coinv)


def weight(T: Filling) -> WeightBreakdown:
    if not is_non_attacking(T):
        raise AttackingFilling("weights are defined only for non-attacking fillings")
    st = statistics(T)
    rows = tuple(row_component(T, r) for r in range(T.rows))
    qt = RationalQT.monomial(1, st.maj, st.coinv)
    for i in range(1, T.n + 1):
        for r in range(1, T.shape[i - 1] + 1):
            if T.label(i, r) != T.label(i, r - 1):
                qt = qt * _factor(T, (i, r))
    return WeightBreakdown(st.content, rows, qt)


def _qt_weight(factors: list, maj: int, coinv: int, fcount: list) -> RationalQT:
    m = sum(fcount)
    den = tuple((a, b, c) for (a, b), c in zip(factors, fcount) if c)
    return RationalQT._raw(maj, coinv, dict(_raw_one_minus_t_power(m)), den)


def row_weights(T: Filling) -> tuple:
    """wtqt^(r)(T) for r = 0..L-1, via the cached diagram."""
    d = diagram(T.shape)
    vals = d.values(T)
    L = d.rows
    maj = [0] * L
    coinv = [0] * L
    fc = [[0] * len(d.factors) for _ in range(L)]
    for k in range(len(d.boxes)):
        r = d.row_of[k] - 1
        lab, below = vals[d.n + k], vals[d.south[k]]
        if lab != below:
            fc[r][d.factor_id[k]] += 1
            if lab > below:
                maj[r] += d.leg[k] + 1
    for r, gu, gv, gw in d.triple_rows:
        a, b, c = vals[gu], vals[gv], vals[gw]
        if (a > b) + (b > c) - (a > c) == 0:
            coinv[r] += 1
    return tuple(_qt_weight(d.factors, maj[r], coinv[r], fc[r]) for r in range(L))


def qt_weight(T: Filling) -> RationalQT:
    """wtqt(T) via the cached diagram; no attacking check."""
    d = diagram(T.shape)
    vals = d.values(T)
    maj = coinv = 0
    fc = [0] * len(d.factors)
    for k in range(len(d.boxes)):
        lab, below = vals[d.n + k], vals[d.south[k]]
        if lab != below:
            fc[d.factor_id[k]] += 1
            if lab > below:
                maj += d.leg[k] + 1
    for _, gu, gv, gw in d.triple_rows:
        a, b, c = vals[gu], vals[gv], vals[gw]
        if (a > b) + (b > c) - (a > c) == 0:
            coinv += 1
    return _qt_weight(d.factors, maj, coinv, fc)


def tableau_by_content(alpha, sigma, beta=None) -> dict[tuple, RationalQT]:
    """Per-content sums of q,t-weights over NAF(alpha, sigma)."""
    alpha, sigma, beta = _check(alpha, sigma, beta)
    d = diagram(alpha)
    groups: dict = defaultdict(Counter)

    def leaf(vals, content, maj, coinv, fcount):
        groups[(tuple(content[1:]), tuple(fcount))][(maj, coinv)] += 1

    _search(d, sigma, beta, leaf)
    per_content: dict = defaultdict(dict)
    for (content, fc), counts in groups.items():
        den = tuple((a, b, c) for (a, b), c in zip(d.factors, fc) if c)
        poly = {}
        for (mq, ct), c in counts.items():
            for (i, j), e in _raw_one_minus_t_power(sum(fc)):
                key = (mq + i, ct + j)
                poly[key] = poly.get(key, 0) + c * e
        acc = per_content[content].setdefault(den, {})
        for key, v in poly.items():
            s = acc.get(key, 0) + v
            if s:
                acc[key] = s
            else:
                acc.pop(key, None)
    out = {}
    for content, dgroups in per_content.items():
        val = _combine_groups(dgroups, 0, 0)
        if not val.is_zero():
            out[content] = val
    return out


def tableau_E(alpha, sigma) -> XPolynomial:
    """E_alpha^sigma as the weighted sum over non-attacking fillings."""
    alpha, sigma, _ = _check(alpha, sigma)
    return XPolynomial._raw(len(alpha), tableau_by_content(alpha, sigma))


def tableau_E_slow(alpha, sigma) -> XPolynomial:
    """Same sum, with every weight recomputed from the definitions."""
    alpha, sigma, _ = _check(alpha, sigma)
    pairs = []
    for T in enumerate_naf(alpha, sigma):
        w = weight(T)
        pairs.append((w.x_weight, w.qt))
    return XPolynomial.from_pairs(len(alpha), pairs)

