# tests/test_core/test_zmod.py
import pytest
import hypothesis.strategies as st
from hypothesis import given

from src.core.errors import InvalidDimensions, OddLength, ShapeMismatch, TupleParseError
from src.core.models import ZmTuple
from src.core.zmod import (
    add_tuples,
    all_tuples,
    alternating_sum,
    basic_tuple,
    ducci_iterate,
    ducci_step,
    scale_tuple,
    zero_tuple,
)
from tests.strategies import zm_tuples


def test_step_on_worked_example(worked_example):
    assert ducci_step(worked_example).entries == (0, 0, 1, 1)


def test_step_wraps_last_entry():
    assert ducci_step(ZmTuple.of([1, 2, 3], 10)).entries == (3, 5, 4)


def test_iterate_matches_worked_orbit(worked_example, worked_orbit):
    for r, expected in enumerate(worked_orbit):
        assert ducci_iterate(worked_example, r).entries == expected


def test_iterate_zero_steps_is_identity(worked_example):
    assert ducci_iterate(worked_example, 0) == worked_example


def test_iterate_rejects_negative_steps(worked_example):
    with pytest.raises(ValueError):
        ducci_iterate(worked_example, -1)


@given(zm_tuples(), st.integers(min_value=0, max_value=15), st.integers(min_value=0, max_value=15))
def test_iterate_composes(u, r, s):
    assert ducci_iterate(ducci_iterate(u, r), s) == ducci_iterate(u, r + s)


@given(st.data())
def test_step_is_additive(data):
    u = data.draw(zm_tuples())
    entries = data.draw(st.lists(st.integers(0, u.m - 1), min_size=u.n, max_size=u.n))
    v = ZmTuple.of(entries, u.m)
    assert ducci_step(add_tuples(u, v)) == add_tuples(ducci_step(u), ducci_step(v))


@given(zm_tuples(), st.integers(min_value=-20, max_value=20))
def test_step_commutes_with_scaling(u, c):
    assert ducci_step(scale_tuple(u, c)) == scale_tuple(ducci_step(u), c)


def test_alternating_sum():
    assert alternating_sum(ZmTuple.of([0, 0, 1, 1], 5)) == 0
    assert alternating_sum(ZmTuple.of([0, 0, 0, 1], 5)) == 4


def test_alternating_sum_rejects_odd_length():
    with pytest.raises(OddLength):
        alternating_sum(ZmTuple.of([1, 1, 1], 2))


@given(zm_tuples(even=True))
def test_image_of_step_has_zero_alternating_sum(u):
    assert alternating_sum(ducci_step(u)) == 0


def test_basic_and_zero_tuples():
    assert basic_tuple(4, 5).entries == (0, 0, 0, 1)
    assert zero_tuple(3, 7).entries == (0, 0, 0)
    with pytest.raises(InvalidDimensions):
        basic_tuple(1, 5)
    with pytest.raises(InvalidDimensions):
        basic_tuple(4, 1)


def test_add_tuples_rejects_mismatched_shapes():
    with pytest.raises(ShapeMismatch):
        add_tuples(basic_tuple(4, 5), basic_tuple(4, 6))
    with pytest.raises(ShapeMismatch):
        add_tuples(basic_tuple(4, 5), basic_tuple(6, 5))


def test_all_tuples_is_lexicographic_and_complete():
    tuples = list(all_tuples(2, 3))
    assert len(tuples) == 9
    assert tuples[0].entries == (0, 0)
    assert tuples[1].entries == (0, 1)
    assert tuples[-1].entries == (2, 2)


def test_tuple_constructor_rejects_bad_values():
    with pytest.raises(TupleParseError):
        ZmTuple.of([0, 5], 5)
    with pytest.raises(InvalidDimensions):
        ZmTuple.of([0], 5)
    with pytest.raises(InvalidDimensions):
        ZmTuple.of([0, 0], 1)


def test_tuple_text_form(worked_example):
    assert str(worked_example) == "0,0,0,1"


def test_add_tuples_examples():
    assert add_tuples(ZmTuple.of([0, 0, 1, 1], 5), ZmTuple.of([0, 1, 2, 1], 5)).entries == (0, 1, 3, 2)
    assert add_tuples(ZmTuple.of([1, 1], 2), ZmTuple.of([1, 1], 2)).entries == (0, 0)
