import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pbmacdonald.bijection import (
    _rho_value,
    check_bijection,
    prob,
    probability_row,
    rho,
    rho_complement,
    swap_prefix,
    swap_row,
    verify_ale19,
    verify_balance,
    verify_normalization,
    verify_row_lemmas,
    verify_support,
    verify_symmetry,
)
from pbmacdonald.errors import PreconditionViolated, RowOutOfRange, UnequalColumnHeights
from pbmacdonald.exactalg import ONE, ZERO, RationalQT
from pbmacdonald.fillings import Filling, count_naf, diagram, enumerate_naf, indicator3, is_non_attacking, statistics
from pbmacdonald.wordcomb import times_s

from strategies import perms

q, t = RationalQT.q(), RationalQT.t()

EX3 = Filling.from_columns((3, 4, 4, 0, 0), (5, 1, 3, 4, 2), [(3, 3, 4), (4, 4, 1, 3), (2, 1, 2, 2), (), ()])


def test_swap_errors():
    with pytest.raises(UnequalColumnHeights):
        swap_row(EX3, 1, 1)
    with pytest.raises(UnequalColumnHeights):
        swap_row(EX3, 5, 0)
    with pytest.raises(RowOutOfRange):
        swap_row(EX3, 2, 5)
    with pytest.raises(RowOutOfRange):
        rho(EX3, 2, 5)


def test_swap_row_basement_and_involution():
    U = swap_row(EX3, 2, 0)
    assert U.basement == (5, 3, 1, 4, 2) and U.columns == EX3.columns
    for h in range(5):
        assert swap_prefix(swap_prefix(EX3, 2, h), 2, h) == EX3


def test_top_row_value_is_zero():
    assert rho(EX3, 2, 4) == ZERO


def test_four_value_cases_are_exclusive():
    for a, b, c, d in itertools.permutations(range(1, 5)):
        zero = indicator3(c, d, a) == indicator3(c, d, b)
        one = indicator3(c, d, a) == indicator3(d, c, b)
        assert zero != one
        assert _rho_value((a - 1, b - 1, c - 1, d - 1), 0, 0) == (ZERO if zero else ONE)


@given(st.integers(0, 4), st.integers(0, 6), st.sampled_from([p for p in itertools.permutations(range(3))]))
def test_complement_formula(leg, arm, order):
    # Patterns (a, b, a, d) with a, b, d distinct.
    a, b, d = order
    val = _rho_value((a, b, a, d), leg, arm)
    x = RationalQT.monomial(1, leg + 1, arm + 1)
    expected = x ** indicator3(d, a, b) * (1 - t) / RationalQT.cyclotomic(leg + 1, arm + 2)
    assert ONE - val == expected


def test_rho_complement_method():
    for r in range(5):
        assert rho_complement(EX3, 2, r) == ONE - rho(EX3, 2, r)


def test_rho_uses_arm_of_upper_right_box():
    dg = diagram(EX3.shape)
    k = dg.index[(3, 2)] - dg.n
    assert (dg.leg[k], dg.arm[k]) == (2, 1)


def test_alternative_example_probability_is_not_reproduced():
    row = probability_row(EX3, 2)
    alternative = (q**3 * t - q**3 * t**2) / (1 - q**3 * t**2)
    computed = q**3 * t**2 * (1 - t) / (1 - q**3 * t**3)
    assert row.dist[swap_prefix(EX3, 2, 1)] == computed != alternative


bij_cases = st.integers(2, 4).flatmap(
    lambda n: st.tuples(
        st.lists(st.integers(0, 2), min_size=n, max_size=n), perms(n), st.integers(1, n - 1)
    )
)


def _prepare(case):
    alpha, sigma, i = case
    alpha[i] = alpha[i - 1]
    return tuple(alpha), sigma, i


@settings(max_examples=40)
@given(bij_cases)
def test_bijection_properties_on_random_instances(case):
    alpha, sigma, i = _prepare(case)
    reports = check_bijection(alpha, sigma, i)
    for name, rep in reports.items():
        assert rep.passed, (name, rep.violations[:2])
    tau = times_s(sigma, i)
    targets = set(enumerate_naf(alpha, tau))
    for T in enumerate_naf(alpha, sigma):
        row = probability_row(T, i)
        assert row.total() == ONE
        for U, p in row.dist.items():
            assert U in targets and is_non_attacking(U)
            assert statistics(U).content == statistics(T).content
            assert prob(T, U, i) == p


def test_claim_wrappers_agree():
    args = ((2, 2, 0, 1), (3, 1, 2, 4), 1)
    full = check_bijection(*args)
    assert verify_normalization(*args).pairs_checked == full["normalization"].pairs_checked
    assert verify_support(*args).pairs_checked == full["support"].pairs_checked
    assert verify_row_lemmas(*args).pairs_checked == full["row-lemmas"].pairs_checked
    rep = verify_balance(*args)
    left, right = count_naf(args[0], args[1]), count_naf(args[0], times_s(args[1], 1))
    assert rep.passed and rep.cross_pairs == left * right
    assert rep.notes["normalization_checked"] == left + right
    assert verify_symmetry(*args).passed


def test_ale19_precondition():
    with pytest.raises(PreconditionViolated):
        verify_ale19((1, 1, 0), (1, 3, 2), 1)
    assert verify_ale19((1, 1, 0), (2, 1, 3), 1).passed


def test_unequal_columns_rejected():
    with pytest.raises(UnequalColumnHeights):
        check_bijection((1, 0), (1, 2), 1)


def test_report_json():
    rep = verify_symmetry((1, 1), (1, 2), 1)
    doc = json.loads(json.dumps(rep.to_json()))
    assert doc["claim"] == "symmetry" and doc["violations"] == []
    assert doc["params"] == {"shape": [1, 1], "basement": [1, 2], "i": 1}
