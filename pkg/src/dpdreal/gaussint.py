"""Gaussian integers as ``(a, b)`` tuples: gcd, prime factorization, divisors.

Only what the rational-root search over Z[i] needs.  Integer factorization of
norms is delegated to :func:`sympy.factorint`.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from sympy import factorint

UNITS = ((1, 0), (0, 1), (-1, 0), (0, -1))


def mul(x, y):
    a, b = x
    c, d = y
    return (a * c - b * d, a * d + b * c)


def norm(x) -> int:
    return x[0] * x[0] + x[1] * x[1]


def exact_div(x, y):
    """Return x / y if y divides x in Z[i], else None."""
    n = norm(y)
    a, b = x
    c, d = y
    re = a * c + b * d
    im = b * c - a * d
    if re % n or im % n:
        return None
    return (re // n, im // n)


def _round_div(p: int, q: int) -> int:
    return (2 * p + q) // (2 * q)


def gcd(x, y):
    while y != (0, 0):
        n = norm(y)
        a, b = x
        c, d = y
        qr = _round_div(a * c + b * d, n)
        qi = _round_div(b * c - a * d, n)
        r = (a - (qr * c - qi * d), b - (qr * d + qi * c))
        x, y = y, r
    return x


def _sqrt_minus_one(p: int) -> int:
    for g in range(2, p):
        x = pow(g, (p - 1) // 4, p)
        if x * x % p == p - 1:
            return x
    raise ValueError(f"no square root of -1 modulo {p}")


@lru_cache(maxsize=None)
def _split_prime(p: int):
    """A Gaussian prime of norm p, for a rational prime p = 1 mod 4."""
    x = _sqrt_minus_one(p)
    return gcd((p, 0), (x, 1))


def _valuation(x, pi):
    k = 0
    while True:
        q = exact_div(x, pi)
        if q is None:
            return k, x
        x = q
        k += 1


def factor(x) -> list:
    """Gaussian prime factorization of a nonzero x, up to a unit: [(pi, e), ...]."""
    if x == (0, 0):
        raise ValueError("cannot factor zero")
    out = []
    for p, e in sorted(factorint(norm(x)).items()):
        if p == 2:
            k, x = _valuation(x, (1, 1))
            out.append(((1, 1), k))
        elif p % 4 == 3:
            k, x = _valuation(x, (p, 0))
            out.append(((p, 0), k))
        else:
            pi = _split_prime(p)
            pibar = (pi[0], -pi[1])
            k1, x = _valuation(x, pi)
            k2, x = _valuation(x, pibar)
            if k1:
                out.append((pi, k1))
            if k2:
                out.append((pibar, k2))
    return out


def divisors(x) -> list:
    """All divisors of x up to multiplication by units."""
    fac = factor(x)
    result = []
    for exps in product(*(range(e + 1) for _, e in fac)):
        d = (1, 0)
        for (pi, _), k in zip(fac, exps):
            for _ in range(k):
                d = mul(d, pi)
        result.append(d)
    return result
