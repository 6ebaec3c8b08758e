"""Fibers of the quotient map over real points and over pairs of conjugate points."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Optional

from .dpd import DpdPair, local_regular, require_regular
from .errors import NotRegular, PointNotOnCurve, RealPoint
from .points import CurvePoint, point, sorted_points
from .scalars import Gauss


class RealFiberType(enum.Enum):
    TORSOR_REAL_CIRCLE = "TorsorRealCircle"
    TORSOR_EMPTY_REAL = "TorsorEmptyReal"
    EXCEPTIONAL_MU2 = "ExceptionalMu2"
    TWO_LINES_FIXED_POINT = "TwoLinesFixedPoint"

    @property
    def has_real_points(self) -> bool:
        return self is not RealFiberType.TORSOR_EMPTY_REAL

    @property
    def is_torsor(self) -> bool:
        return self in (RealFiberType.TORSOR_REAL_CIRCLE, RealFiberType.TORSOR_EMPTY_REAL)

    @property
    def tag(self) -> str:
        """One-letter case label: a (torsor), b (mu_2 orbit), c (fixed point)."""
        if self.is_torsor:
            return "a"
        return "b" if self is RealFiberType.EXCEPTIONAL_MU2 else "c"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ConjFiberType:
    kind: str  # PrincipalPair | ExceptionalPairMultM | TwoLinesPair
    m: Optional[int] = None

    def __str__(self):
        return f"{self.kind}({self.m})" if self.m is not None else self.kind


PRINCIPAL_PAIR = ConjFiberType("PrincipalPair")
TWO_LINES_PAIR = ConjFiberType("TwoLinesPair")


def exceptional_pair(m: int) -> ConjFiberType:
    return ConjFiberType("ExceptionalPairMultM", m)


def chart_for(c: CurvePoint) -> str:
    return "w = 1/z" if c.is_infinite else "z"


def fiber_data(pair: DpdPair, c: CurvePoint):
    """(delta, r, e, leading value of h) at a real point c."""
    Dc = pair.D[c]
    delta = floor(Dc)
    r = Dc - delta
    order = pair.h.order_at(c)
    e = order - 2 * delta
    return delta, r, e, pair.h.leading_value_at(c)


def classify_real_fiber(pair: DpdPair, c) -> RealFiberType:
    c = point(c)
    if not pair.curve.contains(c):
        raise PointNotOnCurve(f"{c} is not a point of the curve", point=c)
    if not c.is_real:
        raise ValueError(f"{c} is not a real point; use classify_conjugate_fiber")
    Dc, order = pair.D[c], pair.h.order_at(c)
    if 2 * Dc < order and not local_regular(Dc, Dc, order):
        raise NotRegular(f"the pair is not regular at {c}", point=c)
    _, r, e, lead = fiber_data(pair, c)
    if r == 0 and e == 0:
        # the reduced value h/(z-c)^(2 delta) at c is the leading value
        if lead.re > 0:
            return RealFiberType.TORSOR_REAL_CIRCLE
        return RealFiberType.TORSOR_EMPTY_REAL
    if r == Fraction(1, 2) and e == 1:
        return RealFiberType.EXCEPTIONAL_MU2
    if r == 0 and e == 1:
        return RealFiberType.TWO_LINES_FIXED_POINT
    raise NotRegular(f"no fiber case applies at {c} (r = {r}, e = {e})", point=c)


def classify_conjugate_fiber(pair: DpdPair, q) -> ConjFiberType:
    q = point(q)
    if q.is_real:
        raise RealPoint(f"{q} is a real point", point=q)
    if not pair.curve.contains(q):
        raise PointNotOnCurve(f"{q} is not a point of the curve", point=q)
    Dq, Dqbar, order = pair.D[q], pair.D[q.conjugate()], pair.h.order_at(q)
    if Dq + Dqbar == order:
        if Dq.denominator == 1:
            return PRINCIPAL_PAIR
        return exceptional_pair(Dq.denominator)
    if not local_regular(Dq, Dqbar, order):
        raise NotRegular(f"the pair is not regular at {q}", point=q)
    return TWO_LINES_PAIR


# -- report ---------------------------------------------------------------------


@dataclass
class Arc:
    """An open arc of RP^1 between consecutive break points (None: full circle)."""

    start: Optional[CurvePoint]
    end: Optional[CurvePoint]
    sample: Fraction
    verdict: RealFiberType

    def describe(self) -> str:
        if self.start is None:
            return "RP1"
        return f"({_bound(self.start, True)}, {_bound(self.end, False)})"


def _bound(p: CurvePoint, left: bool) -> str:
    if p.is_infinite:
        return "-inf" if left else "inf"
    return str(p)


@dataclass
class FiberReport:
    pair: DpdPair
    points: list = field(default_factory=list)  # [(point, RealFiberType)]
    conjugate: list = field(default_factory=list)  # [(upper point, ConjFiberType)]
    arcs: list = field(default_factory=list)  # cyclic order, arcs[k] starts at breaks[k]
    breaks: list = field(default_factory=list)  # real special points and real punctures

    def point_type(self, c) -> Optional[RealFiberType]:
        c = point(c)
        for p, t in self.points:
            if p == c:
                return t
        return None

    def to_dict(self) -> dict:
        return {
            "points": [
                {"point": str(p), "fiber": t.value, "tag": t.tag, "chart": chart_for(p)}
                for p, t in self.points
            ],
            "conjugate_pairs": [
                {
                    "point": str(q),
                    "conjugate": str(q.conjugate()),
                    "fiber": c.kind,
                    **({"multiplicity": c.m} if c.m is not None else {}),
                }
                for q, c in self.conjugate
            ],
            "arcs": [
                {
                    "start": None if a.start is None else str(a.start),
                    "end": None if a.end is None else str(a.end),
                    "sample": str(a.sample),
                    "fiber": a.verdict.value,
                }
                for a in self.arcs
            ],
            "punctures": [str(p) for p in self.breaks if not self.pair.curve.contains(p)],
        }


def real_breaks(pair: DpdPair) -> list:
    """Real special points and real punctures in cyclic order, infinity last."""
    pts = {p for p in pair.special_points() if p.is_real}
    pts |= {p for p in pair.curve.removed if p.is_real}
    return sorted_points(pts)


def _arc_sample(a: CurvePoint, b: CurvePoint, n: int) -> Fraction:
    if n == 1:
        return Fraction(0) if a.is_infinite else a.coord.re + 1
    if b.is_infinite:
        return a.coord.re + 1
    if a.is_infinite:
        return b.coord.re - 1
    lo, hi = a.coord.re, b.coord.re
    if lo < hi:
        return (lo + hi) / 2
    return lo + 1  # wraps through infinity, which is not a break point


def _sign_verdict(pair: DpdPair, x: Fraction) -> RealFiberType:
    v = pair.h(Gauss(x))
    if v.re > 0:
        return RealFiberType.TORSOR_REAL_CIRCLE
    return RealFiberType.TORSOR_EMPTY_REAL


def fiber_report(pair: DpdPair) -> FiberReport:
    require_regular(pair)
    report = FiberReport(pair)
    for p in pair.special_points():
        if p.is_real:
            report.points.append((p, classify_real_fiber(pair, p)))
        elif p.coord.im > 0:
            report.conjugate.append((p, classify_conjugate_fiber(pair, p)))
    breaks = real_breaks(pair)
    report.breaks = breaks
    n = len(breaks)
    if n == 0:
        report.arcs.append(Arc(None, None, Fraction(0), _sign_verdict(pair, Fraction(0))))
    for k in range(n):
        a, b = breaks[k], breaks[(k + 1) % n]
        x = _arc_sample(a, b, n)
        report.arcs.append(Arc(a, b, x, _sign_verdict(pair, x)))
    _check_sign_law(report)
    return report


def _check_sign_law(report: FiberReport) -> None:
    # odd reduced order flips the generic verdict, even order keeps it
    n = len(report.breaks)
    types = dict(report.points)
    for k, c in enumerate(report.breaks):
        t = types.get(c)
        if t is None or n < 2:
            continue
        before, after = report.arcs[k - 1].verdict, report.arcs[k].verdict
        flips = before is not after
        assert flips == (not t.is_torsor), f"sign law violated at {c}"
