"""Circle torsors over Pic-trivial real curves and the norm equation h = lam * g * tau^*g."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .curves import QDivisor, RealCurve, principal_divisor
from .dpd import divisor_function
from .errors import CurveMismatch, NotReal, PointNotOnCurve, TorsorConstraintViolation, ZeroFunction, ZeroScalar
from .funcfield import RationalFunction, linear_factor, rf, rf_divisor_data
from .points import CurvePoint, sorted_points


@dataclass(frozen=True)
class NormWitness:
    """h = lam * g * tau^*g."""

    g: RationalFunction
    lam: Fraction

    def check(self, h) -> bool:
        return self.lam > 0 and rf(h) == self.g * self.g.conjugate() * self.lam


@dataclass
class NormResult:
    trivial: bool
    witness: Optional[NormWitness] = None
    obstruction: Optional[str] = None  # OddOrderAt | NegativeSign
    points: list = field(default_factory=list)  # real points of odd order

    @property
    def point(self) -> Optional[CurvePoint]:
        return self.points[0] if self.points else None

    def __bool__(self):
        return self.trivial

    def __str__(self):
        if self.trivial:
            return f"Trivial(g = {self.witness.g}, lambda = {self.witness.lam})"
        if self.obstruction == "OddOrderAt":
            return "Nontrivial(OddOrderAt(" + ", ".join(map(str, self.points)) + "))"
        return "Nontrivial(NegativeSign)"

    def to_dict(self) -> dict:
        if self.trivial:
            return {
                "verdict": "Trivial",
                "g": str(self.witness.g),
                "lambda": str(self.witness.lam),
                "verified": True,
            }
        out = {"verdict": "Nontrivial", "obstruction": self.obstruction}
        if self.points:
            out["points"] = [str(p) for p in self.points]
        return out


def norm_equation(h, C: Optional[RealCurve] = None) -> NormResult:
    """Decide h = lam * g * tau^*g with g over Q(i) and lam > 0 rational.

    The identity is global on P^1, so every real zero or pole of h, including
    at removed points and at infinity, must have even order.  The curve C is
    accepted for interface symmetry; it does not change the answer.
    """
    h = rf(h)
    if h.is_zero():
        raise ZeroFunction("norm equation for the zero function")
    if not h.is_real():
        raise NotReal(f"h = {h} has a non-real coefficient", h=str(h))
    data = rf_divisor_data(h)
    odd = [p for p, m in data if p.is_real and m % 2]
    if odd:
        return NormResult(False, obstruction="OddOrderAt", points=odd)
    g = RationalFunction.constant(1)
    for p, m in data:
        if p.is_infinite:
            continue
        if p.is_real:
            g = g * linear_factor(p.coord) ** (m // 2)
        elif p.coord.im > 0:
            # (1 - z/q) has value 1 at 0, e.g. 1 + i*z for q = i
            g = g * (RationalFunction.constant(1) - linear_factor(0) / RationalFunction.constant(p.coord)) ** m
    q = h / (g * g.conjugate())
    assert q.is_constant(), f"leftover {q} is not constant"
    lam = q.constant_value()
    assert lam.is_real()
    if lam.re < 0:
        return NormResult(False, obstruction="NegativeSign")
    w = NormWitness(g, lam.re)
    if not w.check(h):
        raise AssertionError("norm witness failed re-verification")
    return NormResult(True, witness=w)


class PointTorsor(enum.Enum):
    CIRCLE = "CircleTorsor"
    HAT_CIRCLE = "HatCircleTorsor"

    def __str__(self):
        return self.value


def torsor_over_point(c) -> PointTorsor:
    c = Fraction(c)
    if c == 0:
        raise ZeroScalar("the torsor datum over a point must be nonzero")
    return PointTorsor.CIRCLE if c > 0 else PointTorsor.HAT_CIRCLE


@dataclass(frozen=True)
class TorsorPair:
    """O(E) with O(E) (x) tau^*O(E) = h^{-1} O_C, i.e. E + tau^*E = -div(h)|_C."""

    curve: RealCurve
    E: QDivisor
    h: RationalFunction


def torsor_pair_validate(curve: RealCurve, E: QDivisor, h) -> TorsorPair:
    curve.validate()
    h = rf(h)
    if h.is_zero():
        raise ZeroFunction("h must be nonzero")
    if not h.is_real():
        raise NotReal(f"h = {h} has a non-real coefficient", h=str(h))
    if not E.is_integral():
        raise TorsorConstraintViolation("E must be integral", divisor=str(E))
    for p in E.support():
        if not curve.contains(p):
            raise PointNotOnCurve(f"{p} is not a point of the curve", point=p)
    lhs = E + E.pullback_tau()
    rhs = -principal_divisor(h, curve)
    for p in sorted_points(set(lhs.support()) | set(rhs.support())):
        if lhs[p] != rhs[p]:
            raise TorsorConstraintViolation(
                f"E + tau^*E = {lhs[p]} but -ord(h) = {rhs[p]} at {p}", point=p
            )
    return TorsorPair(curve, E, h)


@dataclass
class IsoResult:
    isomorphic: bool
    f: Optional[RationalFunction] = None
    lam: Optional[Fraction] = None
    shift: Optional[QDivisor] = None  # div(f)|_C = E1 - E2
    obstruction: Optional[NormResult] = None

    def __bool__(self):
        return self.isomorphic

    def __str__(self):
        if self.isomorphic:
            return f"Isomorphic(f = {self.f}, lambda = {self.lam})"
        return f"NotIsomorphic({self.obstruction.obstruction})"

    def to_dict(self) -> dict:
        if self.isomorphic:
            return {
                "verdict": "Isomorphic",
                "f": str(self.f),
                "lambda": str(self.lam),
                "shift": str(self.shift),
                "verified": True,
            }
        return {"verdict": "NotIsomorphic", "obstruction": self.obstruction.to_dict()}


def check_torsor_iso(t1: TorsorPair, t2: TorsorPair, f, lam) -> bool:
    """E2 = E1 - div(f)|_C and h2 = lam * f * tau^*f * h1."""
    f = rf(f)
    return (
        Fraction(lam) > 0
        and t2.E == t1.E - principal_divisor(f, t1.curve)
        and t2.h == f * f.conjugate() * t1.h * Fraction(lam)
    )


def torsor_iso(t1: TorsorPair, t2: TorsorPair) -> IsoResult:
    if t1.curve != t2.curve:
        raise CurveMismatch("torsor pairs live on different curves")
    C = t1.curve
    shift = t1.E - t2.E
    f0 = divisor_function(C, shift)
    q = t2.h / (t1.h * f0 * f0.conjugate())
    res = norm_equation(q, C)
    if not res:
        return IsoResult(False, obstruction=res)
    g = res.witness.g
    # g * tau^*g is a unit on C; cancel its conjugate-paired zeros/poles on C
    w = RationalFunction.constant(1)
    for p, m in rf_divisor_data(g):
        if C.contains(p) and not p.is_real and p.coord.im > 0:
            ratio = linear_factor(p.coord) / linear_factor(p.coord.conjugate())
            w = w * ratio ** (-m)
    f = f0 * g * w
    lam = res.witness.lam
    if not check_torsor_iso(t1, t2, f, lam):
        raise AssertionError("torsor isomorphism certificate failed re-verification")
    return IsoResult(True, f, lam, shift)
