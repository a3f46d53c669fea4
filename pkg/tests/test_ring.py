"""Exactness, canonical form, and text round-trips for Z[d]."""

import pytest
from hypothesis import given, strategies as st

from tlwb.ring import DELTA, ONE, ZERO, DeltaPoly

polys = st.lists(st.integers(-9, 9), max_size=6).map(DeltaPoly.from_coeffs)


def test_addition_disjoint_degrees():
    assert DeltaPoly.const(2) + 3 * DELTA == DeltaPoly.from_coeffs([2, 3])


def test_additive_inverse():
    x = ONE + DELTA
    assert x + (-x) == ZERO
    assert x - x == ZERO


def test_addition_merges_equal_degrees():
    assert DELTA**2 + DELTA**2 == 2 * DELTA**2


def test_multiplication():
    assert (ONE + DELTA) * DELTA == DELTA + DELTA**2
    assert DELTA * DELTA == DeltaPoly.delta_power(2)
    assert (ONE + 5 * DELTA) * ZERO == ZERO


def test_canonical_form_enforced():
    assert DeltaPoly.from_coeffs([1, 2, 0, 0]) == DeltaPoly((1, 2))
    assert DeltaPoly.from_coeffs([0, 0]) == ZERO
    with pytest.raises(ValueError):
        DeltaPoly((1, 0))
    with pytest.raises(TypeError):
        DeltaPoly((1.5,))


def test_delta_power_guard():
    assert DeltaPoly.delta_power(0) == ONE
    with pytest.raises(ValueError):
        DeltaPoly.delta_power(-1)


def test_text_form():
    assert str(ZERO) == "0"
    assert str(ONE) == "1"
    assert str(DELTA) == "d"
    assert str(-DELTA) == "-d"
    assert str(DeltaPoly.from_coeffs([3, -2])) == "3 - 2 d"
    assert str(DeltaPoly.from_coeffs([0, 0, 1])) == "d^2"
    assert str(DeltaPoly.from_coeffs([-1, 0, 4])) == "-1 + 4 d^2"


def test_parse_variants():
    assert DeltaPoly.parse("0") == ZERO
    assert DeltaPoly.parse("d") == DELTA
    assert DeltaPoly.parse("1 d") == DELTA
    assert DeltaPoly.parse("2d^3") == 2 * DeltaPoly.delta_power(3)
    assert DeltaPoly.parse(" 3 - 2 d + d^2 ") == DeltaPoly.from_coeffs([3, -2, 1])
    for bad in ["", "x", "3 3", "d^", "+"]:
        with pytest.raises(ValueError):
            DeltaPoly.parse(bad)


@given(polys)
def test_text_round_trip(a):
    assert DeltaPoly.parse(str(a)) == a


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    assert a * ZERO == ZERO


@given(polys, polys)
def test_canonical_uniqueness(a, b):
    # equal values have identical stored tuples, so == and hash agree
    if a == b:
        assert a.coeffs == b.coeffs and hash(a) == hash(b)
    s1, s2 = str(a), str(b)
    assert (s1 == s2) == (a == b)
