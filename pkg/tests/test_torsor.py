from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import gen
from dpdreal import (
    AFFINE_LINE,
    CIRCLE_CURVE,
    QDivisor,
    norm_equation,
    parse_divisor,
    point,
    rf,
    torsor_iso,
    torsor_over_point,
    torsor_pair_validate,
)
from dpdreal.errors import CurveMismatch, TorsorConstraintViolation, ZeroScalar
from dpdreal.torsor import PointTorsor, check_torsor_iso


def test_norm_examples():
    res = norm_equation(rf("z^2 + 1"), AFFINE_LINE)
    assert res and res.witness.g == rf("1 + i*z") and res.witness.lam == 1
    assert str(res) == "Trivial(g = 1 + i*z, lambda = 1)"
    res = norm_equation(rf("z^2 - 1"), AFFINE_LINE)
    assert not res and res.obstruction == "OddOrderAt" and res.point == point(-1)
    assert res.points == [point(-1), point(1)]
    res = norm_equation(rf(-1))
    assert str(res) == "Nontrivial(NegativeSign)"
    res = norm_equation(rf(1))
    assert res and res.witness.g == rf(1) and res.witness.lam == 1


def test_norm_sees_removed_points_and_infinity():
    # z has odd order at 0 and at infinity; removing 0 does not help
    res = norm_equation(rf("z"), AFFINE_LINE.remove([point(0)]))
    assert not res and res.points == [point(0), point("inf")]
    assert norm_equation(rf("4*(z - 1)^2/(z^2 + 1)"))


@given(st.integers(0, 10**6))
def test_norm_round_trip(seed):
    r = gen.rng(seed)
    g = gen.random_function(r, 4)
    lam = Fraction(r.randint(1, 30), r.randint(1, 30))
    h = g * g.conjugate() * lam
    res = norm_equation(h)
    assert res and res.witness.check(h)
    assert not norm_equation(-h)


def test_torsor_over_point():
    assert torsor_over_point(1) is PointTorsor.CIRCLE
    assert torsor_over_point(-1) is PointTorsor.HAT_CIRCLE
    assert torsor_over_point(4) is PointTorsor.CIRCLE
    with pytest.raises(ZeroScalar):
        torsor_over_point(0)


def test_torsor_pair_validate():
    torsor_pair_validate(AFFINE_LINE, parse_divisor("-[i]"), rf("z^2 + 1"))
    torsor_pair_validate(AFFINE_LINE, QDivisor(), rf(1))
    with pytest.raises(TorsorConstraintViolation):
        torsor_pair_validate(AFFINE_LINE, QDivisor(), rf("z"))
    with pytest.raises(TorsorConstraintViolation):
        torsor_pair_validate(AFFINE_LINE, parse_divisor("1/2*[0]"), rf("1/z"))


def test_torsor_iso_examples():
    one = torsor_pair_validate(AFFINE_LINE, QDivisor(), rf(1))
    four = torsor_pair_validate(AFFINE_LINE, QDivisor(), rf(4))
    minus = torsor_pair_validate(AFFINE_LINE, QDivisor(), rf(-1))
    res = torsor_iso(one, four)
    assert res and res.lam == 4 and res.f == rf(1)
    res = torsor_iso(one, minus)
    assert not res and str(res) == "NotIsomorphic(NegativeSign)"
    t1 = torsor_pair_validate(AFFINE_LINE, parse_divisor("-[i]"), rf("z^2 + 1"))
    res = torsor_iso(t1, one)
    assert res and check_torsor_iso(t1, one, res.f, res.lam)
    assert res.f == rf("1/(z - i)")
    # the opposite direction gives z - i, which is 1 + i*z up to the unit i
    back = torsor_iso(one, t1)
    assert back and back.f == rf("z - i") and back.f * rf("i") == rf("1 + i*z")
    with pytest.raises(CurveMismatch):
        torsor_iso(one, torsor_pair_validate(CIRCLE_CURVE, QDivisor(), rf(1)))


def test_torsor_iso_detects_odd_obstruction():
    curve = AFFINE_LINE.remove([point(2), point(3)])
    a = torsor_pair_validate(curve, parse_divisor("-[i]"), rf("z^2 + 1"))
    h = rf("(z^2 + 1)*(z - 1)^2*(z - 2)/(z - 3)")
    b = torsor_pair_validate(curve, parse_divisor("-[i] - [1]"), h)
    res = torsor_iso(a, b)
    assert not res and res.obstruction.obstruction == "OddOrderAt"
