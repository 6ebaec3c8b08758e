"""Real Moebius reparametrizations w -> (a*w + b)/(c*w + d) with rational coefficients."""

from __future__ import annotations

from fractions import Fraction

from .curves import QDivisor, RealCurve
from .funcfield import Polynomial, RationalFunction, rf
from .points import INF, CurvePoint, point
from .scalars import Gauss


class Mobius:
    """psi(w) = (a*w + b)/(c*w + d), ad - bc != 0, all coefficients rational."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=1, b=0, c=0, d=1):
        a, b, c, d = (Fraction(x) for x in (a, b, c, d))
        if a * d - b * c == 0:
            raise ValueError("degenerate Moebius map (ad - bc = 0)")
        # normalize so that the first nonzero of (c, d) is 1
        s = c if c else d
        self.a, self.b, self.c, self.d = a / s, b / s, c / s, d / s

    @classmethod
    def identity(cls) -> "Mobius":
        return cls()

    @classmethod
    def affine(cls, a, b) -> "Mobius":
        return cls(a, b, 0, 1)

    @classmethod
    def from_rf(cls, f: RationalFunction) -> "Mobius":
        f = rf(f)
        if f.num.degree > 1 or f.den.degree > 1 or f.is_constant():
            raise ValueError(f"{f} is not a Moebius map")
        if not f.is_real():
            raise ValueError(f"{f} does not have rational coefficients")
        n = list(f.num.coeffs) + [Gauss(0)] * (2 - len(f.num.coeffs))
        d = list(f.den.coeffs) + [Gauss(0)] * (2 - len(f.den.coeffs))
        return cls(n[1].re, n[0].re, d[1].re, d[0].re)

    @classmethod
    def parse(cls, text: str) -> "Mobius":
        return cls.from_rf(rf(text))

    def as_rf(self) -> RationalFunction:
        return RationalFunction(Polynomial((self.b, self.a)), Polynomial((self.d, self.c)))

    def is_identity(self) -> bool:
        return (self.a, self.b, self.c, self.d) == (1, 0, 0, 1)

    def apply(self, p) -> CurvePoint:
        p = point(p)
        a, b, c, d = self.a, self.b, self.c, self.d
        if p.is_infinite:
            return INF if c == 0 else CurvePoint(Gauss(a / c))
        den = p.coord * c + d
        if den.is_zero():
            return INF
        return CurvePoint((p.coord * a + b) / den)

    __call__ = apply

    def inverse(self) -> "Mobius":
        return Mobius(self.d, -self.b, -self.c, self.a)

    def compose(self, other: "Mobius") -> "Mobius":
        """self o other."""
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = other.a, other.b, other.c, other.d
        return Mobius(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    # -- pullbacks ----------------------------------------------------------
    def pullback_rf(self, f) -> RationalFunction:
        """f o psi."""
        f = rf(f)
        if self.is_identity():
            return f
        psi = self.as_rf()
        return _horner(f.num, psi) / _horner(f.den, psi)

    def pullback_divisor(self, D: QDivisor) -> QDivisor:
        """(psi^* D)(w) = D(psi(w))."""
        inv = self.inverse()
        return QDivisor({inv.apply(p): c for p, c in D.items()})

    def pullback_curve(self, C: RealCurve) -> RealCurve:
        """psi^{-1}(S), the curve psi maps onto C."""
        inv = self.inverse()
        return RealCurve(inv.apply(p) for p in C.removed)

    def __eq__(self, other):
        return isinstance(other, Mobius) and (self.a, self.b, self.c, self.d) == (
            other.a,
            other.b,
            other.c,
            other.d,
        )

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def __repr__(self):
        return f"Mobius({self})"

    def __str__(self):
        return str(self.as_rf())


def _horner(p: Polynomial, x: RationalFunction) -> RationalFunction:
    acc = RationalFunction.constant(0)
    for c in reversed(p.coeffs):
        acc = acc * x + RationalFunction.constant(c)
    return acc


IDENTITY = Mobius()
