import pytest
from hypothesis import given
from hypothesis import strategies as st

from pbmacdonald.errors import DimensionMismatch, IndexOutOfRange
from pbmacdonald.wordcomb import (
    all_permutations,
    blocks,
    compose,
    composition,
    compositions,
    coset_related,
    dec,
    distinct_rearrangements,
    exponent_notation,
    identity,
    in_parabolic,
    inc,
    inverse,
    is_partition,
    left_action,
    length,
    longest,
    parse_list,
    permutation,
    reduced_word,
    rev,
    simple_transposition,
    sort_variants,
    stabilizes,
    times_s,
    twinv,
    weak_compositions_of,
    word_product,
)

from strategies import comps, perms


def test_parsing_and_validation():
    assert parse_list("2,2,0,1") == (2, 2, 0, 1)
    assert parse_list("<1,0>") == (1, 0)
    assert parse_list("") == ()
    with pytest.raises(ValueError):
        composition((1, -1))
    with pytest.raises(ValueError):
        permutation((1, 1, 2))


def test_sort_variants():
    alpha = (3, 1, 0, 2)
    assert sort_variants(alpha) == (inc(alpha), dec(alpha), rev(alpha))
    assert is_partition(dec(alpha)) and not is_partition(alpha)


def test_left_action_moves_entries_to_pi_positions():
    # alpha_i moves to position pi_i.
    assert left_action((2, 3, 1), (5, 6, 7)) == (7, 5, 6)
    with pytest.raises(DimensionMismatch):
        left_action((1, 2), (0, 0, 0))


def test_simple_transpositions():
    assert simple_transposition(3, 2) == (1, 3, 2)
    assert times_s((3, 1, 2), 1) == (1, 3, 2)
    with pytest.raises(IndexOutOfRange):
        simple_transposition(3, 3)


def test_blocks_and_parabolic():
    assert [list(b) for b in blocks((1, 1, 0, 2, 2))] == [[0, 1], [2], [3, 4]]
    assert in_parabolic((1, 1, 0), (2, 1, 3))
    assert not in_parabolic((1, 1, 0), (1, 3, 2))
    assert stabilizes((2, 1, 3), (1, 1, 0))


def test_enumerators():
    assert len(compositions(4, 2)) == 81
    assert len(weak_compositions_of(3, 3)) == 10
    assert distinct_rearrangements((1, 0, 0)) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert len(all_permutations(4)) == 24


@given(st.data())
def test_group_action_law(data):
    n = data.draw(st.integers(1, 6))
    sigma, pi = data.draw(perms(n)), data.draw(perms(n))
    alpha = data.draw(comps(n, 4))
    assert left_action(sigma, left_action(pi, alpha)) == left_action(compose(sigma, pi), alpha)
    assert left_action(identity(n), alpha) == alpha
    assert left_action(longest(n), alpha) == rev(alpha)


@given(perms())
def test_inverse(sigma):
    n = len(sigma)
    assert compose(sigma, inverse(sigma)) == identity(n) == compose(inverse(sigma), sigma)


@given(perms())
def test_reduced_word_is_reduced_and_correct(sigma):
    w = reduced_word(sigma)
    assert word_product(len(sigma), w) == sigma
    assert len(w) == length(sigma)


@given(st.data())
def test_twinv_changes_by_one_on_equal_columns(data):
    n = data.draw(st.integers(2, 6))
    alpha = list(data.draw(comps(n)))
    i = data.draw(st.integers(1, n - 1))
    alpha[i] = alpha[i - 1]
    alpha = tuple(alpha)
    sigma = data.draw(perms(n))
    delta = twinv(alpha, times_s(sigma, i)) - twinv(alpha, sigma)
    assert delta == (1 if sigma[i - 1] > sigma[i] else -1)


@given(st.data())
def test_coset_relation_matches_definition(data):
    n = data.draw(st.integers(1, 5))
    alpha = data.draw(comps(n, 1))
    sigma, tau = data.draw(perms(n)), data.draw(perms(n))
    pi = compose(inverse(sigma), tau)
    # Membership in the subgroup generated by the s_i with alpha_i = alpha_{i+1}.
    gens = [i for i in range(1, n) if alpha[i - 1] == alpha[i]]
    group = {identity(n)}
    frontier = list(group)
    while frontier:
        g = frontier.pop()
        for i in gens:
            h = times_s(g, i)
            if h not in group:
                group.add(h)
                frontier.append(h)
    assert coset_related(alpha, sigma, tau) == (pi in group)
    # The parabolic subgroup stabilizes alpha.
    for g in group:
        assert stabilizes(g, alpha)


@given(comps())
def test_exponent_notation_roundtrip(alpha):
    rebuilt = tuple(v for v, m in exponent_notation(alpha) for _ in range(m))
    assert rebuilt == alpha
