"""Real DPD pairs (C, D, h): validity, regularity, twists, local moves and graded sections."""

from __future__ import annotations

from fractions import Fraction
from math import floor

from .curves import QDivisor, RealCurve, principal_divisor
from .errors import (
    ExtensionObstruction,
    NotConjugationStable,
    NotInPiece,
    NotReal,
    NotRegular,
    PointNotOnCurve,
    RealPointRemoval,
    RelationFails,
    InfinityUnsupported,
    ValidityViolation,
    ZeroFunction,
)
from .funcfield import RationalFunction, linear_factor, rf
from .points import CurvePoint, point, sorted_points


class DpdPair:
    """A valid real DPD pair.  Build through :func:`dpd_validate`."""

    __slots__ = ("curve", "D", "h", "_div_h")

    def __init__(self, curve: RealCurve, D: QDivisor, h: RationalFunction):
        self.curve = curve
        self.D = D
        self.h = h
        self._div_h = None

    @property
    def div_h(self) -> QDivisor:
        """div(h) restricted to the curve."""
        if self._div_h is None:
            self._div_h = principal_divisor(self.h, self.curve)
        return self._div_h

    @property
    def d_plus(self) -> QDivisor:
        return self.D

    @property
    def d_minus(self) -> QDivisor:
        return dpd_d_minus(self)

    def special_points(self) -> list:
        """supp D, supp tau^*D and the zeros/poles of h on the curve."""
        pts = set(self.D.support()) | set(self.D.pullback_tau().support())
        pts |= set(self.div_h.support())
        return sorted_points(pts)

    def __eq__(self, other):
        return (
            isinstance(other, DpdPair)
            and self.curve == other.curve
            and self.D == other.D
            and self.h == other.h
        )

    def __hash__(self):
        return hash((self.curve, self.D, self.h))

    def __repr__(self):
        return f"DpdPair({self.curve}; D = {self.D}; h = {self.h})"

    def document(self) -> str:
        from .parsing import format_document

        return format_document(self.curve, self.D, self.h)


class TwistData:
    """Twist by a rational function f and a positive rational scalar lam."""

    __slots__ = ("f", "lam")

    def __init__(self, f=1, lam=1):
        self.f = rf(f)
        self.lam = Fraction(lam)
        if self.f.is_zero():
            raise ZeroFunction("twist by the zero function")
        if self.lam <= 0:
            raise ValueError("twist scalar must be positive")

    def is_trivial(self) -> bool:
        return self.lam == 1 and self.f == 1

    def compose(self, other: "TwistData") -> "TwistData":
        return TwistData(self.f * other.f, self.lam * other.lam)

    def inverse(self) -> "TwistData":
        return TwistData(self.f.inverse(), 1 / self.lam)

    def __eq__(self, other):
        return isinstance(other, TwistData) and (self.f, self.lam) == (other.f, other.lam)

    def __hash__(self):
        return hash((self.f, self.lam))

    def __repr__(self):
        return f"TwistData(f={self.f}, lam={self.lam})"


# -- validity -----------------------------------------------------------------


def dpd_validate(curve: RealCurve, D: QDivisor, h) -> DpdPair:
    if isinstance(curve, str):
        from .parsing import parse_curve

        curve = parse_curve(curve)
    if isinstance(D, str):
        from .parsing import parse_divisor

        D = parse_divisor(D)
    curve.validate()
    h = rf(h)
    if h.is_zero():
        raise ZeroFunction("h must be nonzero")
    if not h.is_real():
        raise NotReal(f"h = {h} has a non-real coefficient", h=str(h))
    for p in D.support():
        if not curve.contains(p):
            raise PointNotOnCurve(f"divisor point {p} is not on the curve", point=p)
    pair = DpdPair(curve, D, h)
    div_h = pair.div_h
    for p in pair.special_points():
        lhs = D[p] + D[p.conjugate()]
        if lhs > div_h[p]:
            raise ValidityViolation(
                f"D + tau^*D exceeds div(h) at {p}: {lhs} > {div_h[p]}",
                point=p,
                lhs=lhs,
                rhs=div_h[p],
            )
    return pair


def dpd_d_minus(pair: DpdPair) -> QDivisor:
    return pair.D.pullback_tau() - pair.div_h


# -- regularity ---------------------------------------------------------------


def regular_pair(r1, r2) -> bool:
    """|p1*q2 - p2*q1| = 1 for r1 = p1/q1, r2 = p2/q2 in lowest terms."""
    r1, r2 = Fraction(r1), Fraction(r2)
    return abs(r1.numerator * r2.denominator - r2.numerator * r1.denominator) == 1


class Regularity:
    """Outcome of the smoothness test; falsy when a witness point was found."""

    __slots__ = ("regular", "point", "d_plus", "d_minus")

    def __init__(self, regular: bool, point=None, d_plus=None, d_minus=None):
        self.regular = regular
        self.point = point
        self.d_plus = d_plus
        self.d_minus = d_minus

    def __bool__(self):
        return self.regular

    @property
    def witness_pair(self):
        return (self.d_plus, self.d_minus)

    def __repr__(self):
        if self.regular:
            return "Regularity(regular)"
        return f"Regularity(fails at {self.point}: ({self.d_plus}, {self.d_minus}))"


def local_regular(Dp, Dq, order) -> bool:
    """Local smoothness test at a point with strict inequality.

    The tested numbers are D(p) and ord_p(h) - D(conj p) = -D_-(p).  This
    pairing is unchanged by integral twists (D(p) -> D(p)+k, ord -> ord+2k).
    """
    return regular_pair(Dp, order - Dq)


def dpd_is_regular(pair: DpdPair) -> Regularity:
    D, div_h = pair.D, pair.div_h
    for p in pair.special_points():
        Dp, Dq, order = D[p], D[p.conjugate()], div_h[p]
        if Dp + Dq < order and not local_regular(Dp, Dq, order):
            return Regularity(False, p, Dp, Dq - order)
    return Regularity(True)


def require_regular(pair: DpdPair) -> None:
    r = dpd_is_regular(pair)
    if not r:
        raise NotRegular(
            f"the pair is not regular at {r.point}",
            point=r.point,
            d_plus=r.d_plus,
            d_minus=r.d_minus,
        )


# -- twists and local moves ---------------------------------------------------


def dpd_twist(pair: DpdPair, t: TwistData) -> DpdPair:
    f = t.f
    D = pair.D + principal_divisor(f, pair.curve)
    h = f * f.conjugate() * pair.h * t.lam
    return DpdPair(pair.curve, D, h)


def _require_real_finite(pair: DpdPair, c) -> CurvePoint:
    c = point(c)
    if not pair.curve.contains(c):
        raise PointNotOnCurve(f"{c} is not a point of the curve", point=c)
    if c.is_infinite:
        raise InfinityUnsupported("reparametrize to move infinity to a finite point first")
    if not c.is_real:
        raise ValueError(f"{c} is not a real point")
    return c


def local_reduction_twist(pair: DpdPair, c) -> TwistData:
    c = _require_real_finite(pair, c)
    delta = floor(pair.D[c])
    return TwistData(linear_factor(c.coord) ** (-delta))


def dpd_local_reduce(pair: DpdPair, c):
    t = local_reduction_twist(pair, c)
    return dpd_twist(pair, t), t


def _check_nonreal_stable(P) -> list:
    pts = {point(p) for p in P}
    for p in sorted_points(pts):
        if p.is_real:
            raise RealPointRemoval(f"{p} is a real point", point=p)
        if p.conjugate() not in pts:
            raise NotConjugationStable(f"{p} is listed without its conjugate", point=p)
    return sorted_points(pts)


def dpd_restrict(pair: DpdPair, P) -> DpdPair:
    pts = _check_nonreal_stable(P)
    for p in pts:
        if not pair.curve.contains(p):
            raise PointNotOnCurve(f"{p} is not a point of the curve", point=p)
    keep = set(pts)
    return DpdPair(pair.curve.remove(pts), pair.D.restrict(lambda q: q not in keep), pair.h)


def _check_removed(pair: DpdPair, pts) -> None:
    for p in pts:
        if pair.curve.contains(p):
            raise ValueError(f"{p} is already a point of the curve")
    if pair.curve.removed <= set(pts):
        raise ValueError("cannot extend over every removed point")


def dpd_extend(pair: DpdPair, P) -> DpdPair:
    pts = _check_nonreal_stable(P)
    _check_removed(pair, pts)
    for q in pts:
        if pair.h.order_at(q) != 0:
            raise ExtensionObstruction(f"h has order {pair.h.order_at(q)} at {q}", point=q)
    return DpdPair(pair.curve.add_back(pts), pair.D, pair.h)


def dpd_extend_empty_real(pair: DpdPair, P) -> DpdPair:
    """Fill in real punctures over which the quotient has empty-real torsor fibers.

    Each q must satisfy ord_q(h) = 0 and h(q) < 0, so the added fibers carry
    no real points and the real locus is unchanged.
    """
    pts = sorted_points({point(p) for p in P})
    for q in pts:
        if not q.is_real:
            raise ValueError(f"{q} is not a real point")
    _check_removed(pair, pts)
    for q in pts:
        if pair.h.order_at(q) != 0:
            raise ExtensionObstruction(f"h has order {pair.h.order_at(q)} at {q}", point=q)
        if pair.h.value_at(q).re >= 0:
            raise ExtensionObstruction(f"h is positive at {q}", point=q)
    return DpdPair(pair.curve.add_back(pts), pair.D, pair.h)


# -- graded sections ----------------------------------------------------------


def base_point(curve: RealCurve):
    """The smallest finite removed point, used to correct the order at infinity."""
    finite = [p for p in sorted_points(curve.removed) if not p.is_infinite]
    return finite[0] if finite else None


def piece_divisor(pair: DpdPair, n: int) -> QDivisor:
    """E with degree-n piece Gamma(C, O(E)): floor(n D_+) or floor(-n D_-)."""
    if n >= 0:
        return pair.D.scale(n).floor()
    return dpd_d_minus(pair).scale(-n).floor()


def divisor_function(curve: RealCurve, E: QDivisor) -> RationalFunction:
    """A function g with ord_p(g) = E(p) at every point p of the curve."""
    g = RationalFunction.constant(1)
    for p, c in E.items():
        if not p.is_infinite:
            g = g * linear_factor(p.coord) ** int(c)
    inf = point(None)
    if curve.contains(inf):
        s0 = base_point(curve)
        k = int(E.degree())
        if k:
            g = g * linear_factor(s0.coord) ** (-k)
    return g


def section_generator(pair: DpdPair, n: int) -> RationalFunction:
    if n == 0:
        return RationalFunction.constant(1)
    return divisor_function(pair.curve, -piece_divisor(pair, n))


def in_piece(pair: DpdPair, n: int, f) -> bool:
    f = rf(f)
    if f.is_zero():
        return True
    q = f / section_generator(pair, n)
    return all(q.order_at(p) >= 0 for p, _ in _zeros_poles(q) if pair.curve.contains(p))


def _zeros_poles(f: RationalFunction):
    from .funcfield import rf_divisor_data

    return rf_divisor_data(f)


def sigma_on_section(pair: DpdPair, n: int, f) -> RationalFunction:
    """f in degree n  ->  h^n * tau^*f in degree -n."""
    f = rf(f)
    if not in_piece(pair, n, f):
        raise NotInPiece(f"{f} is not in the degree-{n} piece", degree=n)
    g = pair.h**n * f.conjugate()
    assert in_piece(pair, -n, g), "sigma image left the opposite piece"
    return g


def _generator_env(generators) -> dict:
    if isinstance(generators, dict):
        return {name: (int(d), rf(f)) for name, (d, f) in generators.items()}
    names = "xyuvwst"
    out = {}
    for k, g in enumerate(generators):
        if len(g) == 3:
            name, d, f = g
        else:
            (d, f), name = g, names[k]
        out[name] = (int(d), rf(f))
    return out


def verify_presentation(pair: DpdPair, generators, relations) -> bool:
    """Check graded membership of the generators, then each relation identically.

    generators: list of (degree, f) named x, y, u, ... in order, or of
    (name, degree, f), or a dict name -> (degree, f).  relations: strings
    "lhs = rhs" over the generator names and z.
    """
    from .parsing import parse_expression

    env = _generator_env(generators)
    for name, (d, f) in env.items():
        if not in_piece(pair, d, f):
            raise NotInPiece(f"generator {name} = {f} is not in degree {d}", generator=name)
    values = {name: f for name, (_, f) in env.items()}
    for k, rel in enumerate(relations):
        lhs_text, sep, rhs_text = rel.partition("=")
        if not sep:
            lhs_text, rhs_text = rel, "0"
        lhs = parse_expression(lhs_text, values)
        rhs = parse_expression(rhs_text, values)
        if lhs != rhs:
            raise RelationFails(f"relation {k} ({rel.strip()}) does not hold", index=k)
    return True
