"""Exact rational values and the +infinity marker."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tough2f import Rational


def test_construction_reduces():
    assert Rational(6, 4) == Rational(3, 2)
    assert Rational(3, 2).numerator == 3
    assert Rational(3, 2).denominator == 2
    assert Rational(5).denominator == 1


def test_parse():
    assert Rational.parse("3/5") == Rational(3, 5)
    assert Rational.parse("7") == Rational(7)
    assert Rational.parse(" inf ") == Rational.infinity()
    assert Rational.parse("Infinity").is_infinite
    with pytest.raises(ValueError):
        Rational.parse("three")


def test_str():
    assert str(Rational(3, 5)) == "3/5"
    assert str(Rational(4, 2)) == "2"
    assert str(Rational.infinity()) == "inf"


def test_infinity_ordering():
    inf = Rational.infinity()
    assert inf.is_infinite
    assert inf > Rational(10 ** 9)
    assert Rational(10 ** 9) < inf
    assert inf >= inf and inf <= inf and inf == Rational.infinity()
    assert not inf < inf
    assert not inf > inf


def test_infinity_guards():
    inf = Rational.infinity()
    with pytest.raises(ValueError):
        inf.as_fraction()
    with pytest.raises(ValueError):
        _ = inf.numerator
    with pytest.raises(ValueError):
        inf + 1
    with pytest.raises(ValueError):
        1 - inf


def test_mixed_comparisons():
    assert Rational(3, 2) > 1
    assert Rational(3, 2) == Fraction(3, 2)
    assert 2 > Rational(3, 2)
    assert Rational(3, 2) <= Fraction(3, 2)
    assert Rational(1, 2) != "1/2"


def test_arithmetic():
    assert Rational(1, 2) + Rational(1, 3) == Rational(5, 6)
    assert Rational(1, 2) - 1 == Rational(-1, 2)
    assert 2 * Rational(3, 4) == Rational(3, 2)
    assert Rational(3, 4) / Rational(3, 2) == Rational(1, 2)
    assert 1 / Rational(4) == Rational(1, 4)


def test_hashable():
    assert len({Rational(1, 2), Rational(2, 4), Rational.infinity()}) == 2


fractions = st.fractions(min_value=-100, max_value=100,
                         max_denominator=50)


@given(fractions, fractions)
def test_matches_fraction_semantics(a, b):
    ra, rb = Rational.from_fraction(a), Rational.from_fraction(b)
    assert (ra < rb) == (a < b)
    assert (ra == rb) == (a == b)
    assert (ra + rb).as_fraction() == a + b
    assert (ra * rb).as_fraction() == a * b
    if b != 0:
        assert (ra / rb).as_fraction() == a / b
