"""Seeded random generators for pairs, twists and move sequences."""

from __future__ import annotations

import random
from fractions import Fraction

from dpdreal.curves import QDivisor, RealCurve
from dpdreal.dpd import TwistData, dpd_is_regular, dpd_validate
from dpdreal.funcfield import RationalFunction, linear_factor
from dpdreal.mobius import Mobius
from dpdreal.points import INF, CurvePoint
from dpdreal.scalars import Gauss
from dpdreal.topology import (
    ExtendNonReal,
    FlipSign,
    LocalReduce,
    Reparametrize,
    RestrictNonReal,
    Twist,
)

SEED = 20261016


def rng(offset: int = 0) -> random.Random:
    return random.Random(SEED + offset)


def small_fraction(r: random.Random, num: int = 4, den: int = 3) -> Fraction:
    return Fraction(r.randint(-num, num), r.randint(1, den))


def real_point(r: random.Random, taken) -> CurvePoint:
    while True:
        p = CurvePoint(Gauss(small_fraction(r)))
        if p not in taken:
            taken.add(p)
            return p


def upper_point(r: random.Random, taken) -> CurvePoint:
    while True:
        im = Fraction(r.randint(1, 4), r.randint(1, 2))
        p = CurvePoint(Gauss(small_fraction(r), im))
        if p not in taken:
            taken.add(p)
            taken.add(p.conjugate())
            return p


def farey_pair(r: random.Random):
    """x < y with |p1 q2 - p2 q1| = 1."""
    while True:
        m, n = r.randint(1, 4), r.randint(1, 4)
        a = r.randint(-2 * m, 2 * m)
        for b in range(-3 * n, 3 * n + 1):
            if a * n - b * m == -1:
                return Fraction(a, m), Fraction(b, n)


def random_regular_pair(r: random.Random, circle: bool = None):
    """A valid regular pair built point by point from the allowed local cases."""
    if circle is None:
        circle = r.random() < 0.3
    taken = set()
    removed = []
    if circle:
        q = upper_point(r, taken)
        removed += [q, q.conjugate()]
    else:
        if r.random() < 0.6:
            removed.append(INF)
            taken.add(INF)
        else:
            removed.append(real_point(r, taken))
        for _ in range(r.randint(0, 1)):
            removed.append(real_point(r, taken))
    for _ in range(r.randint(0, 1)):
        q = upper_point(r, taken)
        removed += [q, q.conjugate()]
    D = {}
    h = RationalFunction.constant(Fraction(r.choice([1, 2, 3, 5]), r.choice([1, 2, 4])) * r.choice([1, -1]))
    # stray zeros/poles at removed finite points
    for p in removed:
        if p.is_infinite or r.random() < 0.5:
            continue
        k = r.randint(-2, 2)
        if p.is_real:
            h = h * linear_factor(p.coord) ** k
        elif p.coord.im > 0:
            h = h * (linear_factor(p.coord) * linear_factor(p.coord.conjugate())) ** k
    for _ in range(r.randint(0, 3)):
        c = real_point(r, taken)
        delta = r.randint(-2, 2)
        case = r.choice("abc")
        if case == "a":
            D[c], order = Fraction(delta), 2 * delta
        elif case == "b":
            D[c], order = delta + Fraction(1, 2), 2 * delta + 1
        else:
            D[c], order = Fraction(delta), 2 * delta + 1
        h = h * linear_factor(c.coord) ** order
    for _ in range(r.randint(0, 2)):
        q = upper_point(r, taken)
        qb = q.conjugate()
        order = r.randint(-2, 2)
        if r.random() < 0.5:
            m = r.randint(1, 4)
            a = Fraction(r.randint(-2 * m, 2 * m), m)
            D[q], D[qb] = a, order - a
        else:
            x, y = farey_pair(r)
            D[q], D[qb] = x, order - y
        h = h * (linear_factor(q.coord) * linear_factor(qb.coord)) ** order
    curve = RealCurve(removed)
    if curve.contains(INF):
        k = h.order_at(INF)
        if k % 2 == 0:
            D[INF] = Fraction(k, 2)
        else:
            D[INF] = Fraction(k, 2) if r.random() < 0.5 else Fraction(k - 1, 2)
    pair = dpd_validate(curve, QDivisor(D), h)
    assert dpd_is_regular(pair), pair
    return pair


def random_function(r: random.Random, max_factors: int = 3, real_only=False) -> RationalFunction:
    f = RationalFunction.constant(1)
    for _ in range(r.randint(0, max_factors)):
        if real_only or r.random() < 0.5:
            p = Gauss(small_fraction(r))
        else:
            p = Gauss(small_fraction(r), Fraction(r.choice([-3, -2, -1, 1, 2, 3]), r.randint(1, 2)))
        f = f * linear_factor(p) ** r.choice([-2, -1, 1, 2])
    c = Gauss(small_fraction(r), small_fraction(r))
    if c.is_zero():
        c = Gauss(1)
    return f * c


def random_twist(r: random.Random) -> TwistData:
    return TwistData(random_function(r), Fraction(r.randint(1, 9), r.randint(1, 9)))


def random_mobius(r: random.Random) -> Mobius:
    while True:
        a, b, c, d = (r.randint(-3, 3) for _ in range(4))
        if a * d - b * c:
            return Mobius(a, b, c, d)


def random_move(r: random.Random, pair):
    """A move applicable to the pair, chosen at random."""
    while True:
        kind = r.choice(["twist", "twist", "restrict", "extend", "reparam", "reduce", "flip"])
        if kind == "twist":
            return Twist(random_twist(r))
        if kind == "restrict":
            taken = set(pair.curve.removed) | set(pair.special_points())
            q = upper_point(r, taken)
            return RestrictNonReal([q, q.conjugate()])
        if kind == "extend":
            cands = [
                p
                for p in pair.curve.removed
                if not p.is_real and p.coord.im > 0 and pair.h.order_at(p) == 0
            ]
            real_left = any(p.is_real for p in pair.curve.removed)
            if cands and (real_left or len(pair.curve.removed) > 2):
                q = r.choice(sorted(cands, key=CurvePoint.sort_key))
                return ExtendNonReal([q, q.conjugate()])
            continue
        if kind == "reparam":
            return Reparametrize(random_mobius(r))
        if kind == "reduce":
            reals = [p for p in pair.special_points() if p.is_real and not p.is_infinite]
            if reals:
                return LocalReduce(r.choice(reals))
            continue
        return FlipSign()
