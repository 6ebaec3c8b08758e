"""Smooth rational real affine curves P^1 \\ S and Weil Q-divisors on them."""

from __future__ import annotations

import enum
from fractions import Fraction
from math import floor

from .errors import EmptyRemovedSet, NotConjugationStable, PointNotOnCurve
from .funcfield import rf, rf_divisor_data
from .points import INF, CurvePoint, point, sorted_points
from .scalars import I


class CurveKind(enum.Enum):
    INTERVAL = "IntervalType"
    CIRCLE = "CircleType"


class RealCurve:
    """P^1 minus a nonempty, conjugation-stable finite set of points."""

    __slots__ = ("removed",)

    def __init__(self, removed):
        self.removed = frozenset(point(p) for p in removed)

    def validate(self) -> "RealCurve":
        if not self.removed:
            raise EmptyRemovedSet("the removed set S must be nonempty")
        for p in sorted_points(self.removed):
            if p.conjugate() not in self.removed:
                raise NotConjugationStable(
                    f"{p} is removed but its conjugate {p.conjugate()} is not", point=p
                )
        return self

    def contains(self, p) -> bool:
        return point(p) not in self.removed

    def require(self, p) -> CurvePoint:
        p = point(p)
        if p in self.removed:
            raise PointNotOnCurve(f"{p} is not a point of the curve", point=p)
        return p

    def kind(self) -> CurveKind:
        if any(p.is_real for p in self.removed):
            return CurveKind.INTERVAL
        return CurveKind.CIRCLE

    def remove(self, points) -> "RealCurve":
        return RealCurve(self.removed | {point(p) for p in points})

    def add_back(self, points) -> "RealCurve":
        return RealCurve(self.removed - {point(p) for p in points})

    def real_removed(self) -> list:
        return sorted_points(p for p in self.removed if p.is_real)

    def __eq__(self, other):
        return isinstance(other, RealCurve) and self.removed == other.removed

    def __hash__(self):
        return hash(self.removed)

    def __repr__(self):
        return f"RealCurve({str(self)!r})"

    def __str__(self):
        from .parsing import format_curve

        return format_curve(self)


AFFINE_LINE = RealCurve([INF])
CIRCLE_CURVE = RealCurve([I, -I])


def curve_validate(C: RealCurve) -> RealCurve:
    return C.validate()


def curve_kind(C: RealCurve) -> CurveKind:
    return C.kind()


def point_conjugate(p: CurvePoint) -> CurvePoint:
    return point(p).conjugate()


class QDivisor:
    """Finite formal sum of points with nonzero rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        for p, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[point(p)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def single(cls, p, c=1) -> "QDivisor":
        return cls({point(p): c})

    def __getitem__(self, p) -> Fraction:
        return self._terms.get(point(p), Fraction(0))

    def support(self) -> list:
        return sorted_points(self._terms)

    def items(self) -> list:
        return [(p, self._terms[p]) for p in self.support()]

    def is_zero(self) -> bool:
        return not self._terms

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def degree(self) -> Fraction:
        return sum(self._terms.values(), Fraction(0))

    def __add__(self, other: "QDivisor") -> "QDivisor":
        out = dict(self._terms)
        for p, c in other._terms.items():
            out[p] = out.get(p, Fraction(0)) + c
        return QDivisor(out)

    def __neg__(self) -> "QDivisor":
        return QDivisor({p: -c for p, c in self._terms.items()})

    def __sub__(self, other: "QDivisor") -> "QDivisor":
        return self + (-other)

    def scale(self, k) -> "QDivisor":
        k = Fraction(k)
        return QDivisor({p: k * c for p, c in self._terms.items()})

    def __rmul__(self, k):
        return self.scale(k)

    def floor(self) -> "QDivisor":
        return QDivisor({p: floor(c) for p, c in self._terms.items()})

    def pullback_tau(self) -> "QDivisor":
        # (tau^* D)(p) = D(conj p)
        return QDivisor({p.conjugate(): c for p, c in self._terms.items()})

    def restrict(self, keep) -> "QDivisor":
        """Terms at points p with keep(p) true."""
        return QDivisor({p: c for p, c in self._terms.items() if keep(p)})

    def on_curve(self, C: RealCurve) -> "QDivisor":
        return self.restrict(C.contains)

    def __le__(self, other: "QDivisor") -> bool:
        return divisor_leq(self, other)

    def __eq__(self, other):
        return isinstance(other, QDivisor) and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"QDivisor({str(self)!r})"

    def __str__(self):
        from .parsing import format_divisor

        return format_divisor(self)


ZERO_DIVISOR = QDivisor()


def divisor_pullback_tau(D: QDivisor) -> QDivisor:
    return D.pullback_tau()


def divisor_leq(D1: QDivisor, D2: QDivisor) -> bool:
    for p in set(D1._terms) | set(D2._terms):
        if D1[p] > D2[p]:
            return False
    return True


def divisor_floor(D: QDivisor) -> QDivisor:
    return D.floor()


def principal_divisor(h, C: RealCurve) -> QDivisor:
    """div(h) restricted to the points of C."""
    return QDivisor({p: m for p, m in rf_divisor_data(rf(h)) if C.contains(p)})
