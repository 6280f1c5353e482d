# tests/test_services/test_coefficients.py
import math
import random

import pytest
import hypothesis.strategies as st
from hypothesis import given

from src.core.errors import InvalidDimensions, NotPrime, PreconditionViolated, ShapeMismatch
from src.core.zmod import basic_tuple, ducci_iterate
from src.services.coefficients import (
    binom_mod,
    coeff_compose,
    coeff_next,
    coeff_row,
    identity_row,
    lucas_binom_mod_p,
    pascal_row,
    prime_power_row,
    verify_binom_lemmas,
    verify_coeff_lemmas,
)

# --- Binomials ---


@pytest.mark.parametrize("r, j, m, expected", [
    (6, 3, 3, 2),   # C(6,3) = 20
    (5, 2, 2, 0),   # C(5,2) = 10
    (4, 2, 5, 1),   # C(4,2) = 6
    (7, 9, 4, 0),   # j > r
    (0, 0, 7, 1),
])
def test_binom_mod_values(r, j, m, expected):
    assert binom_mod(r, j, m) == expected


@given(st.integers(0, 60), st.integers(0, 60), st.integers(2, 40))
def test_binom_mod_matches_exact_binomial(r, j, m):
    assert binom_mod(r, j, m) == (math.comb(r, j) % m if j <= r else 0)


def test_pascal_row_mod_3_of_row_6():
    assert [j for j, v in enumerate(pascal_row(6, 3).tolist()) if v] == [0, 3, 6]


def test_binom_mod_rejects_bad_modulus():
    with pytest.raises(InvalidDimensions):
        binom_mod(3, 1, 1)


@pytest.mark.parametrize("r, j, p, expected", [
    (8, 4, 3, 1),   # C(8,4) = 70
    (5, 2, 2, 0),
    (10, 3, 5, 0),  # C(10,3) = 120
])
def test_lucas_values(r, j, p, expected):
    assert lucas_binom_mod_p(r, j, p) == expected


@given(st.integers(0, 200), st.integers(0, 200), st.sampled_from([2, 3, 5, 7, 11]))
def test_lucas_matches_pascal(r, j, p):
    assert lucas_binom_mod_p(r, j, p) == binom_mod(r, j, p)


def test_lucas_rejects_composite_modulus():
    with pytest.raises(NotPrime):
        lucas_binom_mod_p(8, 4, 4)


# --- Coefficient Rows ---


def test_identity_and_first_rows():
    assert identity_row(4, 5).coeffs == (1, 0, 0, 0)
    assert coeff_next(identity_row(4, 5)).coeffs == (1, 1, 0, 0)


@pytest.mark.parametrize("r, expected", [
    (0, (1, 0, 0, 0)),
    (1, (1, 1, 0, 0)),
    (4, (2, 4, 1, 4)),
    (5, (1, 1, 0, 0)),
])
def test_rows_for_length_4_mod_5(r, expected):
    assert coeff_row(4, 5, r).coeffs == expected


def test_reversed_row_is_iterated_basic_tuple():
    for n in range(2, 9):
        for m in range(2, 9):
            basic = basic_tuple(n, m)
            for r in range(0, 3 * n + 1):
                assert coeff_row(n, m, r).reversed_tuple() == ducci_iterate(basic, r), (n, m, r)


@pytest.mark.parametrize("n, m, r", [(4, 5, 101), (6, 4, 250), (10, 9, 333), (8, 2, 64)])
def test_squaring_path_agrees_with_stepping(n, m, r):
    assert r > 4 * n
    assert coeff_row(n, m, r).reversed_tuple() == ducci_iterate(basic_tuple(n, m), r)


def test_coeff_row_rejects_bad_dimensions():
    with pytest.raises(InvalidDimensions):
        coeff_row(1, 5, 3)
    with pytest.raises(ValueError):
        coeff_row(4, 5, -1)


def test_compose_small_rows():
    row1 = coeff_row(4, 5, 1)
    assert coeff_compose(row1, row1).coeffs == (1, 2, 1, 0)
    assert coeff_compose(identity_row(4, 5), coeff_row(4, 5, 7)) == coeff_row(4, 5, 7)


def test_compose_consistency_on_random_triples():
    rng = random.Random(7)
    for _ in range(100):
        n, m = rng.randint(2, 9), rng.randint(2, 12)
        r, t = rng.randint(0, 40), rng.randint(0, 40)
        assert coeff_compose(coeff_row(n, m, t), coeff_row(n, m, r)).coeffs == coeff_row(n, m, r + t).coeffs


def test_compose_rejects_mismatched_rows():
    with pytest.raises(ShapeMismatch):
        coeff_compose(coeff_row(4, 5, 1), coeff_row(6, 5, 1))


def test_prime_power_row_layout():
    # length 2^2 * 3 = 12 mod 2 at r = 1 * 4: ones at positions 1 and 5
    row = prime_power_row(3, 2, 2, 1)
    assert row.n == 12 and row.r == 4
    assert [s for s in range(1, 13) if row.coefficient(s)] == [1, 5]
    assert row.coeffs == coeff_row(12, 2, 4).coeffs


# --- Lemma Verifiers ---


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_alt_sign_lemma_holds(p, k):
    assert verify_binom_lemmas(p, k, "alt-sign").passed


@pytest.mark.parametrize("p, k", [(3, 2), (3, 3), (5, 2)])
def test_gap_pattern_holds_for_odd_primes(p, k):
    report = verify_binom_lemmas(p, k, "gap-pattern")
    assert report.passed
    assert report.checked == p ** k - p ** (k - 1) + 1


def test_gap_pattern_nonzero_positions_for_9():
    report = verify_binom_lemmas(3, 2, "gap-pattern")
    assert report.detail == "nonzero at j in [0, 3, 6]"


@pytest.mark.parametrize("p, k", [(2, 2), (3, 1)])
def test_gap_pattern_rejects_outside_hypothesis(p, k):
    with pytest.raises(PreconditionViolated):
        verify_binom_lemmas(p, k, "gap-pattern")


def test_chu_vandermonde_for_9():
    report = verify_binom_lemmas(3, 2, "chu-vandermonde")
    assert report.passed and report.checked == 10


def test_binom_lemmas_reject_composites():
    with pytest.raises(NotPrime):
        verify_binom_lemmas(4, 1, "alt-sign")


@pytest.mark.parametrize("which", ["vanishing", "smaller-n", "combined"])
@pytest.mark.parametrize("p, k, n1, c", [(2, 1, 3, 1), (2, 2, 3, 5), (3, 1, 2, 4), (3, 2, 4, 2), (5, 1, 3, 6)])
def test_coeff_lemmas_hold(which, p, k, n1, c):
    assert verify_coeff_lemmas(p, k, n1, c, which).passed


@pytest.mark.parametrize("p, k, n1, c", [(2, 1, 4, 1), (3, 1, 1, 1), (3, 0, 2, 1), (3, 1, 2, 0)])
def test_coeff_lemmas_reject_outside_hypothesis(p, k, n1, c):
    with pytest.raises(PreconditionViolated):
        verify_coeff_lemmas(p, k, n1, c, "vanishing")
