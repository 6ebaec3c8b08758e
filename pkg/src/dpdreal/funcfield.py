"""Polynomials and rational functions in z over Q(i).

Conjugation acts on coefficients (the standard real structure on the
z-line).  Zeros and poles are required to be Gaussian-rational; anything
else raises :class:`~dpdreal.errors.NonGaussianRoots`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import lcm

from . import gaussint
from .errors import NonGaussianRoots, PoleAtPoint, ZeroFunction
from .points import INF, CurvePoint, sorted_points
from .scalars import ONE, ZERO, Gauss


def _g(x) -> Gauss:
    return x if isinstance(x, Gauss) else Gauss.coerce(x)


class Polynomial:
    """Coefficients stored lowest degree first; the zero polynomial is ``()``."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        cs = [_g(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Polynomial":
        p = object.__new__(cls)
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c=1) -> "Polynomial":
        return cls([0] * degree + [c])

    @classmethod
    def linear_root(cls, root) -> "Polynomial":
        """The monic polynomial z - root."""
        return cls((-_g(root), ONE))

    @classmethod
    def from_roots(cls, roots, lead=1) -> "Polynomial":
        p = cls.constant(lead)
        for r in roots:
            p = p * cls.linear_root(r)
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def lc(self) -> Gauss:
        return self.coeffs[-1] if self.coeffs else ZERO

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = _poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_poly(other))

    def __rsub__(self, other):
        return _poly(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Gauss)):
            other = _g(other)
            if other.is_zero():
                return Polynomial()
            return Polynomial._raw(tuple(c * other for c in self.coeffs))
        other = _poly(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = _poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dlen = len(other.coeffs)
        inv_lc = other.lc().inverse()
        if len(rem) < dlen:
            return Polynomial(), self
        quot = [ZERO] * (len(rem) - dlen + 1)
        for k in range(len(rem) - dlen, -1, -1):
            q = rem[k + dlen - 1] * inv_lc
            quot[k] = q
            if q.is_zero():
                continue
            for j, c in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - q * c
        return Polynomial(quot), Polynomial(rem[: dlen - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        lc = self.lc()
        if lc == ONE:
            return self
        inv = lc.inverse()
        return Polynomial._raw(tuple(c * inv for c in self.coeffs))

    def derivative(self) -> "Polynomial":
        return Polynomial([c * k for k, c in enumerate(self.coeffs)][1:])

    def conjugate(self) -> "Polynomial":
        return Polynomial._raw(tuple(c.conjugate() for c in self.coeffs))

    def __call__(self, x) -> Gauss:
        x = _g(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    evaluate = __call__

    def multiplicity(self, root) -> int:
        """Order of vanishing at ``root`` (0 if p(root) != 0)."""
        if self.is_zero():
            raise ZeroFunction("order of the zero polynomial")
        lin = Polynomial.linear_root(root)
        p, k = self, 0
        while True:
            q, r = divmod(p, lin)
            if r:
                return k
            p, k = q, k + 1

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, Gauss)):
            return self.coeffs == Polynomial.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self):
        from .parsing import format_poly

        return f"Polynomial({format_poly(self)!r})"

    def __str__(self):
        from .parsing import format_poly

        return format_poly(self)


def _poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction, Gauss)):
        return Polynomial.constant(x)
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


Z = Polynomial((0, 1))


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd (zero only if both inputs are zero)."""
    while b:
        a, b = b, a % b
    return a.monic()


def squarefree_part(p: Polynomial) -> Polynomial:
    g = poly_gcd(p, p.derivative())
    return (p // g).monic()


# -- roots --------------------------------------------------------------------


def _to_gaussian_integers(p: Polynomial):
    """Scale p to a primitive polynomial with Z[i] coefficients, as (a, b) tuples."""
    den = 1
    for c in p.coeffs:
        den = lcm(den, c.re.denominator, c.im.denominator)
    coeffs = [((c.re * den).numerator, (c.im * den).numerator) for c in p.coeffs]
    content = (0, 0)
    for c in coeffs:
        content = gaussint.gcd(content, c)
    return [gaussint.exact_div(c, content) for c in coeffs]


def _is_root(coeffs, u, v) -> bool:
    # sum a_k u^k v^(n-k) == 0, all in Z[i]
    n = len(coeffs) - 1
    acc = (0, 0)
    upow = (1, 0)
    vpows = [(1, 0)]
    for _ in range(n):
        vpows.append(gaussint.mul(vpows[-1], v))
    for k, a in enumerate(coeffs):
        t = gaussint.mul(gaussint.mul(a, upow), vpows[n - k])
        acc = (acc[0] + t[0], acc[1] + t[1])
        upow = gaussint.mul(upow, u)
    return acc == (0, 0)


def _distinct_roots(sf: Polynomial) -> list:
    """Q(i)-roots of a squarefree polynomial via the rational root theorem over Z[i]."""
    roots = []
    p = sf
    while p.degree >= 1 and p.coeffs[0].is_zero():
        roots.append(ZERO)
        p = p // Z
    if p.degree < 1:
        return roots
    if p.degree == 1:
        return roots + [-p.coeffs[0] / p.coeffs[1]]
    coeffs = _to_gaussian_integers(p)
    found = []
    lead_divs = gaussint.divisors(coeffs[-1])
    for u0 in gaussint.divisors(coeffs[0]):
        for unit in gaussint.UNITS:
            u = gaussint.mul(u0, unit)
            for v in lead_divs:
                if _is_root(coeffs, u, v):
                    r = Gauss(u[0], u[1]) / Gauss(v[0], v[1])
                    if r not in found:
                        found.append(r)
        if len(found) == p.degree:
            break
    return roots + found


@lru_cache(maxsize=4096)
def _roots_cached(p: Polynomial) -> tuple:
    if p.degree <= 0:
        return ()
    sf = squarefree_part(p)
    distinct = _distinct_roots(sf)
    if len(distinct) < sf.degree:
        raise NonGaussianRoots(
            f"{p} has an irreducible factor of degree >= 2 over Q(i)", polynomial=p
        )
    out = []
    for r in distinct:
        out.append((r, p.multiplicity(r)))
    if sum(m for _, m in out) != p.degree:
        raise NonGaussianRoots(f"{p} does not split over Q(i)", polynomial=p)
    out.sort(key=lambda rm: CurvePoint(rm[0]).sort_key())
    return tuple(out)


def poly_gaussian_roots(p: Polynomial) -> list:
    """All roots of p in Q(i) with multiplicities; raises if p does not split over Q(i)."""
    if p.is_zero():
        raise ZeroFunction("roots of the zero polynomial")
    return list(_roots_cached(p))


# -- rational functions -------------------------------------------------------


class RationalFunction:
    """``num/den`` with gcd(num, den) = 1 and den monic."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        num = _poly(num)
        den = Polynomial.constant(1) if den is None else _poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = num, Polynomial.constant(1)
        else:
            if den.degree > 0:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num, den = num // g, den // g
            lc = den.lc()
            if lc != ONE:
                inv = lc.inverse()
                num, den = num * inv, den * inv
            self.num, self.den = num, den
        self._hash = None

    @classmethod
    def _raw(cls, num, den) -> "RationalFunction":
        f = object.__new__(cls)
        f.num, f.den, f._hash = num, den, None
        return f

    @classmethod
    def constant(cls, c) -> "RationalFunction":
        return cls._raw(Polynomial.constant(c), Polynomial.constant(1))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def constant_value(self) -> Gauss:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.lc() if self.num else ZERO

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def is_real(self) -> bool:
        return self.num.is_real() and self.den.is_real()

    def conjugate(self) -> "RationalFunction":
        return RationalFunction._raw(self.num.conjugate(), self.den.conjugate())

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = _rf(other)
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_rf(other))

    def __rsub__(self, other):
        return _rf(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Gauss)):
            return RationalFunction._raw(self.num * other, self.den) if other else _rf(0)
        other = _rf(other)
        # cross-cancel to keep intermediate degrees low
        g1 = poly_gcd(self.num, other.den) if other.den.degree > 0 else None
        g2 = poly_gcd(other.num, self.den) if self.den.degree > 0 else None
        n1, d2 = self.num, other.den
        n2, d1 = other.num, self.den
        if g1 is not None and g1.degree > 0:
            n1, d2 = n1 // g1, d2 // g1
        if g2 is not None and g2.degree > 0:
            n2, d1 = n2 // g2, d1 // g2
        num, den = n1 * n2, d1 * d2
        if num.is_zero():
            return _rf(0)
        lc = den.lc()
        if lc != ONE:
            inv = lc.inverse()
            num, den = num * inv, den * inv
        return RationalFunction._raw(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        return self * _rf(other).inverse()

    def __rtruediv__(self, other):
        return _rf(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction._raw(self.num**n, self.den**n)

    # -- evaluation and orders -------------------------------------------
    def __call__(self, c) -> Gauss:
        c = _g(c)
        d = self.den(c)
        if d.is_zero():
            raise PoleAtPoint(f"{self} has a pole at {c}", point=c)
        return self.num(c) / d

    evaluate = __call__

    def order_at(self, p: CurvePoint) -> int:
        if self.is_zero():
            raise ZeroFunction("order of the zero function")
        if p.is_infinite:
            return self.den.degree - self.num.degree
        return self.num.multiplicity(p.coord) - self.den.multiplicity(p.coord)

    def leading_value_at(self, p: CurvePoint) -> Gauss:
        """Value at p of f / t^ord_p(f), with t = z - c (finite p) or 1/z (infinity)."""
        if self.is_zero():
            raise ZeroFunction("leading value of the zero function")
        if p.is_infinite:
            return self.num.lc() / self.den.lc()
        lin = Polynomial.linear_root(p.coord)
        num, den = self.num, self.den
        while True:
            q, r = divmod(num, lin)
            if r:
                break
            num = q
        while True:
            q, r = divmod(den, lin)
            if r:
                break
            den = q
        return num(p.coord) / den(p.coord)

    def value_at(self, p: CurvePoint) -> Gauss:
        """Value at a point of P^1 where f is regular (infinity allowed)."""
        if p.is_infinite:
            if self.num.degree > self.den.degree:
                raise PoleAtPoint(f"{self} has a pole at inf", point=p)
            if self.num.degree < self.den.degree or self.is_zero():
                return ZERO
            return self.num.lc() / self.den.lc()
        return self(p.coord)

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, Gauss, Polynomial)):
            return self == _rf(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"RationalFunction({str(self)!r})"

    def __str__(self):
        from .parsing import format_rf

        return format_rf(self)


def _rf(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, Polynomial):
        return RationalFunction._raw(x, Polynomial.constant(1))
    if isinstance(x, (int, Fraction, Gauss)):
        return RationalFunction.constant(x)
    raise TypeError(f"cannot use {type(x).__name__} as a rational function")


def rf(x) -> RationalFunction:
    """Coerce scalars, polynomials and expression strings to a RationalFunction."""
    if isinstance(x, str):
        from .parsing import parse_expression

        return parse_expression(x)
    return _rf(x)


ZV = RationalFunction._raw(Z, Polynomial.constant(1))


def linear_factor(c) -> RationalFunction:
    """z - c as a rational function."""
    return RationalFunction._raw(Polynomial.linear_root(c), Polynomial.constant(1))


def rf_conjugate(f: RationalFunction) -> RationalFunction:
    return rf(f).conjugate()


def rf_is_real(f: RationalFunction) -> bool:
    return rf(f).is_real()


def rf_evaluate(f: RationalFunction, c) -> Gauss:
    return rf(f)(c)


def rf_order_at(f: RationalFunction, p: CurvePoint) -> int:
    return rf(f).order_at(p)


def rf_divisor_data(f: RationalFunction) -> list:
    """[(point, order), ...] over all of P^1 with nonzero order, sorted by point."""
    f = rf(f)
    if f.is_zero():
        raise ZeroFunction("divisor of the zero function")
    data = {}
    for r, m in poly_gaussian_roots(f.num):
        data[CurvePoint(r)] = m
    for r, m in poly_gaussian_roots(f.den):
        data[CurvePoint(r)] = data.get(CurvePoint(r), 0) - m
    inf_order = f.den.degree - f.num.degree
    if inf_order:
        data[INF] = inf_order
    return [(p, data[p]) for p in sorted_points(data) if data[p]]
