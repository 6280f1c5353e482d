# tests/test_services/test_closed_form.py
import math

import pytest
import hypothesis.strategies as st
from hypothesis import given
from sympy import primefactors

from src.core.errors import InvalidDimensions, UnsupportedOddN
from src.core.models import BoundKind
from src.services.closed_form import (
    check_period_shift,
    l_exact_via_components,
    l_formula,
    split_prime_common,
)
from src.services.cycles import lp_values


# --- Prime Splitting ---

@pytest.mark.parametrize("n, m, pairs, n1, m1", [
    (12, 6, [(2, 2, 1), (3, 1, 1)], 1, 1),
    (20, 50, [(2, 2, 1), (5, 1, 2)], 1, 1),
    (4, 20, [(2, 2, 2)], 1, 5),
    (9, 8, [], 9, 8),
])
def test_split_examples(n, m, pairs, n1, m1):
    split = split_prime_common(n, m)
    assert [(c.p, c.k, c.l) for c in split.pairs] == pairs
    assert (split.n1, split.m1) == (n1, m1)


@given(st.integers(2, 5000), st.integers(2, 5000))
def test_split_rebuilds_inputs(n, m):
    split = split_prime_common(n, m)
    assert split.rebuild() == (n, m)
    assert math.gcd(split.n1, split.m1) == 1
    assert split.common_primes == sorted(primefactors(math.gcd(n, m)))


def test_split_rejects_small_values():
    with pytest.raises(InvalidDimensions):
        split_prime_common(1, 6)


# --- Closed Form ---

@pytest.mark.parametrize("n, m, value, kind, case_id", [
    (4, 5, 1, "exact", "1"),
    (6, 2, 2, "exact", "2"),
    (12, 2, 4, "exact", "2"),
    (6, 10, 2, "exact", "2"),
    (4, 4, 6, "bound", "3"),
    (4, 20, 6, "bound", "3"),
    (2, 4, 3, "bound", "3"),
    (8, 4, 12, "bound", "3"),
    (12, 6, 4, "exact", "4"),
    (12, 36, 6, "bound", "4"),
    (20, 10, 5, "exact", "4"),
])
def test_formula_values(n, m, value, kind, case_id):
    result = l_formula(n, m)
    assert (result.value, result.kind.value, result.case_id) == (value, kind, case_id)


def test_formula_summary_line():
    assert l_formula(6, 2).summary_line() == "L=2 kind=exact case=2"


@pytest.mark.parametrize("n, m, value", [(3, 2, 1), (5, 4, 2), (3, 12, 2), (7, 8, 3)])
def test_odd_length_formula(n, m, value):
    result = l_formula(n, m)
    assert (result.value, result.kind, result.case_id) == (value, BoundKind.EXACT, "odd-n")
    assert lp_values(n, m).len == value


def test_odd_length_with_odd_modulus_is_unsupported():
    with pytest.raises(UnsupportedOddN):
        l_formula(5, 9)


# --- Agreement With Cycle Detection ---

def test_case_1_coprime_lengths():
    for n in range(2, 13, 2):
        for m in range(2, 13):
            if math.gcd(n, m) == 1:
                assert lp_values(n, m).len == 1, (n, m)


def test_case_2_single_prime_to_first_power():
    checked = 0
    for n in range(2, 13, 2):
        for m in range(2, 13):
            result = l_formula(n, m)
            if result.case_id == "2":
                assert lp_values(n, m).len == result.value, (n, m)
                checked += 1
    assert checked > 10


def test_case_3_bound_and_equality():
    for n in range(2, 13, 2):
        for m in range(2, 28):
            result = l_formula(n, m)
            if result.case_id != "3":
                continue
            computed = lp_values(n, m).len
            assert computed <= result.value, (n, m)
            assert computed == result.value, (n, m)


@pytest.mark.parametrize("n, m", [(12, 6), (12, 36), (20, 10)])
def test_case_4_matches_components(n, m):
    assert lp_values(n, m).len == l_exact_via_components(n, m)


def test_components_with_coprime_cofactor():
    assert l_exact_via_components(4, 20) == 6


@pytest.mark.parametrize("k", range(1, 6))
@pytest.mark.parametrize("l", range(1, 6))
def test_powers_of_two_scale_with_k_and_l(k, l):
    assert l_formula(2 ** k, 2 ** l).value == 2 ** (k - 1) * (l + 1)


def test_components_need_a_common_prime():
    with pytest.raises(InvalidDimensions):
        l_exact_via_components(4, 9)


@pytest.mark.parametrize("n, m", [(4, 5), (6, 2), (4, 4), (12, 6), (6, 9), (8, 3)])
def test_period_shift_confirms_cycle_detection(n, m):
    report = check_period_shift(n, m)
    assert report.passed, report.counterexample
