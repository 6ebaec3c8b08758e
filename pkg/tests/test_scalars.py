from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dpdreal import Gauss, gauss_conjugate, gauss_norm, rational_sign

fractions = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 1000)
gauss = st.builds(Gauss, fractions, fractions)


def test_conjugate_examples():
    assert gauss_conjugate(Gauss(2, 3)) == Gauss(2, -3)
    assert gauss_conjugate(Gauss(5)) == Gauss(5)


def test_norm_examples():
    assert gauss_norm(Gauss(1, 1)) == 2
    assert gauss_norm(Gauss(0)) == 0
    assert gauss_norm(Gauss(Fraction(3, 5), Fraction(4, 5))) == 1


def test_sign_examples():
    assert rational_sign(Fraction(-3, 7)) == -1
    assert rational_sign(0) == 0
    assert rational_sign(Fraction(22, 7)) == 1


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        Gauss(0).inverse()


def test_mixed_arithmetic_and_str():
    x = Gauss(1, 2)
    assert x + 1 == Gauss(2, 2)
    assert 1 - x == Gauss(0, -2)
    assert 2 / Gauss(0, 1) == Gauss(0, -2)
    assert x ** -1 * x == 1
    assert str(Gauss(0, 1)) == "i"
    assert Gauss(3) == Fraction(3) and hash(Gauss(3)) == hash(Fraction(3))


@given(gauss, gauss, gauss)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if not a.is_zero():
        assert a * a.inverse() == 1


@given(gauss, gauss)
def test_conjugation_is_a_field_involution(a, b):
    assert a.conjugate().conjugate() == a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert gauss_norm(a * b) == gauss_norm(a) * gauss_norm(b)
    assert (a * a.conjugate()).is_real()
