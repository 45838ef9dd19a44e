"""Compositions and permutations in one-line notation.

Compositions and permutations are plain tuples of ints.  Permutations are
1-indexed windows ``(sigma_1, ..., sigma_n)``; products compose as
functions, so ``(sigma * pi)_i = sigma_{pi_i}``.
"""

from __future__ import annotations

from itertools import groupby, permutations
from typing import Iterable, Sequence

from .errors import DimensionMismatch, IndexOutOfRange

Composition = tuple
Permutation = tuple


def composition(parts: Iterable[int]) -> Composition:
    c = tuple(int(p) for p in parts)
    if any(p < 0 for p in c):
        raise ValueError(f"composition parts must be non-negative: {c}")
    return c


def permutation(window: Iterable[int]) -> Permutation:
    w = tuple(int(v) for v in window)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{w} is not a permutation of 1..{len(w)}")
    return w


def parse_list(text: str) -> tuple:
    """Parse ``"2,2,0,1"``; empty text gives the empty tuple."""
    text = text.strip().strip("[]<>()")
    if not text:
        return ()
    return tuple(int(s) for s in text.split(","))


def _same_length(a: Sequence, b: Sequence) -> None:
    if len(a) != len(b):
        raise DimensionMismatch(f"lengths {len(a)} and {len(b)} differ")


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def longest(n: int) -> Permutation:
    """The longest element w0 = [n, n-1, ..., 1]."""
    return tuple(range(n, 0, -1))


def compose(sigma: Permutation, pi: Permutation) -> Permutation:
    _same_length(sigma, pi)
    return tuple(sigma[p - 1] for p in pi)


def inverse(sigma: Permutation) -> Permutation:
    inv = [0] * len(sigma)
    for i, v in enumerate(sigma, start=1):
        inv[v - 1] = i
    return tuple(inv)


def simple_transposition(n: int, i: int) -> Permutation:
    if not 1 <= i < n:
        raise IndexOutOfRange(f"s_{i} is not defined in S_{n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def times_s(sigma: Permutation, i: int) -> Permutation:
    """``sigma * s_i``: exchange positions i and i+1 of the window."""
    if not 1 <= i < len(sigma):
        raise IndexOutOfRange(f"s_{i} is not defined in S_{len(sigma)}")
    w = list(sigma)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def length(sigma: Permutation) -> int:
    """Coxeter length, the number of inversions."""
    n = len(sigma)
    return sum(1 for i in range(n) for j in range(i + 1, n) if sigma[i] > sigma[j])


def rev(seq: Sequence) -> tuple:
    """Reverse a window or composition; for permutations this is sigma * w0."""
    return tuple(reversed(seq))


def inc(alpha: Composition) -> Composition:
    return tuple(sorted(alpha))


def dec(alpha: Composition) -> Composition:
    return tuple(sorted(alpha, reverse=True))


def sort_variants(alpha: Composition) -> tuple[Composition, Composition, Composition]:
    return inc(alpha), dec(alpha), rev(alpha)


def exponent_notation(alpha: Composition) -> list[tuple[int, int]]:
    """Runs of equal adjacent parts as ``(part, multiplicity)``."""
    return [(p, len(list(g))) for p, g in groupby(alpha)]


def is_partition(alpha: Composition) -> bool:
    return all(alpha[i] >= alpha[i + 1] for i in range(len(alpha) - 1))


def left_action(pi: Permutation, alpha: Composition) -> Composition:
    """``(pi . alpha)_j = alpha_{pi^{-1}(j)}``."""
    _same_length(pi, alpha)
    out = [0] * len(alpha)
    for i, v in enumerate(pi):
        out[v - 1] = alpha[i]
    return tuple(out)


def twinv(alpha: Composition, sigma: Permutation) -> int:
    """Pairs i < j with alpha_i >= alpha_j and sigma_i < sigma_j."""
    _same_length(alpha, sigma)
    n = len(alpha)
    return sum(
        1
        for i in range(n)
        for j in range(i + 1, n)
        if alpha[i] >= alpha[j] and sigma[i] < sigma[j]
    )


def reduced_word(sigma: Permutation) -> list[int]:
    """A reduced word ``[i_1, ..., i_k]`` with ``s_{i_1} ... s_{i_k} = sigma``.

    Peel off the rightmost descent each step: if sigma_j > sigma_{j+1} then
    ``sigma = (sigma s_j) s_j`` with ``sigma s_j`` one shorter.
    """
    w = list(sigma)
    peeled = []
    while True:
        j = next((k for k in range(len(w) - 2, -1, -1) if w[k] > w[k + 1]), None)
        if j is None:
            break
        w[j], w[j + 1] = w[j + 1], w[j]
        peeled.append(j + 1)
    return peeled[::-1]


def word_product(n: int, word: Iterable[int]) -> Permutation:
    w = identity(n)
    for i in word:
        w = times_s(w, i)
    return w


def blocks(alpha: Composition) -> list[range]:
    """0-indexed position ranges of maximal runs of equal adjacent parts."""
    out, start = [], 0
    for _, m in exponent_notation(alpha):
        out.append(range(start, start + m))
        start += m
    return out


def in_parabolic(alpha: Composition, pi: Permutation) -> bool:
    """Whether pi lies in the group generated by s_i with alpha_i = alpha_{i+1}."""
    _same_length(alpha, pi)
    for b in blocks(alpha):
        if {pi[k] - 1 for k in b} != set(b):
            return False
    return True


def coset_related(alpha: Composition, sigma: Permutation, tau: Permutation) -> bool:
    """Whether ``sigma^{-1} tau`` lies in the parabolic subgroup of alpha."""
    _same_length(alpha, sigma)
    _same_length(alpha, tau)
    return in_parabolic(alpha, compose(inverse(sigma), tau))


def stabilizes(pi: Permutation, alpha: Composition) -> bool:
    return left_action(pi, alpha) == tuple(alpha)


def all_permutations(n: int) -> list[Permutation]:
    return [tuple(p) for p in permutations(range(1, n + 1))]


def distinct_rearrangements(alpha: Composition) -> list[Composition]:
    return sorted(set(permutations(alpha)))


def compositions(n: int, part_max: int) -> list[Composition]:
    """All compositions with n parts, each in 0..part_max."""
    out: list = [()]
    for _ in range(n):
        out = [c + (p,) for c in out for p in range(part_max + 1)]
    return out


def weak_compositions_of(total: int, n: int) -> list[Composition]:
    """All n-part compositions with the given sum."""
    if n == 0:
        return [()] if total == 0 else []
    return [(p,) + rest for p in range(total + 1) for rest in weak_compositions_of(total - p, n - 1)]
