"""Real image of the quotient map, the four compact models, normalization and certificates."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .curves import AFFINE_LINE, CIRCLE_CURVE, CurveKind, QDivisor, RealCurve, principal_divisor
from .dpd import (
    DpdPair,
    TwistData,
    dpd_extend,
    dpd_extend_empty_real,
    dpd_restrict,
    dpd_twist,
    dpd_validate,
    local_reduction_twist,
)
from .errors import CurveMismatch, NotAModel
from .fibers import FiberReport, RealFiberType, fiber_report
from .funcfield import Polynomial, RationalFunction, linear_factor, rf
from .mobius import Mobius
from .points import INF, CurvePoint, point, sorted_points
from .scalars import Gauss


class ModelType(enum.Enum):
    TORUS = "Torus"
    SPHERE = "Sphere"
    RP2 = "RP2"
    KLEIN_BOTTLE = "KleinBottle"

    def __str__(self):
        return self.value


SURFACE_NAMES = {
    ModelType.TORUS: "torus S^1 x S^1",
    ModelType.SPHERE: "sphere S^2",
    ModelType.RP2: "real projective plane RP^2",
    ModelType.KLEIN_BOTTLE: "Klein bottle K",
}


@dataclass(frozen=True)
class TopologyVerdict:
    kind: str  # Model | EmptyRealLocus | NonCompactOrNotConnected | Undetermined
    model: Optional[ModelType] = None
    reason: Optional[str] = None

    @property
    def is_model(self) -> bool:
        return self.kind == "Model"

    def __str__(self):
        if self.model is not None:
            return self.model.value
        if self.reason:
            return f"{self.kind}({self.reason})"
        return self.kind

    def to_dict(self) -> dict:
        out = {"kind": self.kind}
        if self.model is not None:
            out["model"] = self.model.value
            out["surface"] = SURFACE_NAMES[self.model]
        if self.reason:
            out["reason"] = self.reason
        return out


def model_verdict(m: ModelType) -> TopologyVerdict:
    return TopologyVerdict("Model", m)


EMPTY_REAL_LOCUS = TopologyVerdict("EmptyRealLocus")


# -- real image -----------------------------------------------------------------


@dataclass
class Component:
    """A connected piece of the image, walked in increasing cyclic order.

    ``start``/``end`` are the extreme points; ``*_open`` marks an end at a
    puncture (the image runs into a removed point and is not closed there).
    """

    start: CurvePoint
    end: CurvePoint
    start_open: bool
    end_open: bool
    interior: list = field(default_factory=list)  # special points strictly inside

    def describe(self) -> str:
        lb = "(" if self.start_open else "["
        rb = ")" if self.end_open else "]"
        lo = "-inf" if self.start.is_infinite else str(self.start)
        return f"{lb}{lo}, {self.end}{rb}"


@dataclass
class RealImage:
    kind: str  # empty | circle | arcs
    components: list = field(default_factory=list)
    report: Optional[FiberReport] = None

    def describe(self) -> str:
        if self.kind == "empty":
            return "empty"
        if self.kind == "circle":
            return "RP1"
        return " U ".join(c.describe() for c in self.components)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "components": [
                {
                    "start": str(c.start),
                    "end": str(c.end),
                    "start_open": c.start_open,
                    "end_open": c.end_open,
                }
                for c in self.components
            ],
            "text": self.describe(),
        }


def _cyclic_elements(report: FiberReport) -> list:
    """[(kind, payload, in_image)] alternating break point, arc, break point, ..."""
    curve = report.pair.curve
    types = dict(report.points)
    out = []
    for k, b in enumerate(report.breaks):
        if curve.contains(b):
            out.append(("point", b, types[b].has_real_points))
        else:
            out.append(("puncture", b, False))
        arc = report.arcs[k]
        out.append(("arc", arc, arc.verdict is RealFiberType.TORSOR_REAL_CIRCLE))
    return out


def real_image(pair: DpdPair, report: Optional[FiberReport] = None) -> RealImage:
    report = report or fiber_report(pair)
    if not report.breaks:
        full = report.arcs[0].verdict is RealFiberType.TORSOR_REAL_CIRCLE
        return RealImage("circle" if full else "empty", report=report)
    elems = _cyclic_elements(report)
    if all(e[2] for e in elems):
        return RealImage("circle", report=report)
    if not any(e[2] for e in elems):
        return RealImage("empty", report=report)
    # rotate so the walk starts just after an element outside the image
    n = len(elems)
    k0 = next(k for k in range(n) if not elems[k][2])
    order = [elems[(k0 + 1 + j) % n] for j in range(n)]
    components = []
    run = []
    for j, e in enumerate(order):
        if e[2]:
            run.append((j, e))
            continue
        if run:
            components.append(_component(run, order))
            run = []
    if run:
        components.append(_component(run, order))
    return RealImage("arcs", components, report)


def _component(run, order) -> Component:
    n = len(order)
    (j0, first), (j1, last) = run[0], run[-1]
    if first[0] == "point":
        start, start_open = first[1], False
    else:
        prev = order[(j0 - 1) % n]
        start, start_open = first[1].start, prev[0] == "puncture"
    if last[0] == "point":
        end, end_open = last[1], False
    else:
        nxt = order[(j1 + 1) % n]
        end, end_open = last[1].end, nxt[0] == "puncture"
    interior = [e[1] for _, e in run[1:-1] if e[0] == "point"]
    return Component(start, end, start_open, end_open, interior)


# -- classification ---------------------------------------------------------------


def classify_real_locus(pair: DpdPair, report: Optional[FiberReport] = None) -> TopologyVerdict:
    report = report or fiber_report(pair)
    image = real_image(pair, report)
    kind = pair.curve.kind()
    if image.kind == "empty":
        return EMPTY_REAL_LOCUS
    if image.kind == "circle":
        if kind is CurveKind.CIRCLE:
            return model_verdict(ModelType.TORUS)
        return TopologyVerdict("NonCompactOrNotConnected", reason="image meets a puncture")
    comps = image.components
    if len(comps) > 1:
        return TopologyVerdict(
            "NonCompactOrNotConnected", reason=f"image has {len(comps)} components"
        )
    comp = comps[0]
    if comp.start_open or comp.end_open:
        return TopologyVerdict("NonCompactOrNotConnected", reason="image runs into a puncture")
    if comp.start == comp.end:
        return TopologyVerdict("Undetermined", reason="image is a single point")
    if kind is CurveKind.CIRCLE:
        return TopologyVerdict("Undetermined", reason="proper arc over a circle-type base")
    tags = sorted(report.point_type(p).tag for p in (comp.start, comp.end))
    model = {
        ("c", "c"): ModelType.SPHERE,
        ("b", "c"): ModelType.RP2,
        ("b", "b"): ModelType.KLEIN_BOTTLE,
    }[tuple(tags)]
    return model_verdict(model)


# -- canonical pairs ----------------------------------------------------------------

ONE_MINUS_Z2 = RationalFunction(Polynomial((1, 0, -1)))


def canonical_pair(model: ModelType) -> DpdPair:
    half = Fraction(1, 2)
    if model is ModelType.TORUS:
        return dpd_validate(CIRCLE_CURVE, QDivisor(), 1)
    D = {
        ModelType.SPHERE: {},
        ModelType.RP2: {point(-1): half},
        ModelType.KLEIN_BOTTLE: {point(-1): half, point(1): half},
    }[model]
    return dpd_validate(AFFINE_LINE, QDivisor(D), ONE_MINUS_Z2)


# -- moves ------------------------------------------------------------------------------


class Move:
    name = "Move"

    def apply(self, pair: DpdPair) -> DpdPair:
        raise NotImplementedError

    def params(self) -> dict:
        return {}

    def to_dict(self) -> dict:
        return {"move": self.name, **self.params()}

    def __eq__(self, other):
        return type(self) is type(other) and self.params() == other.params()

    def __hash__(self):
        return hash((self.name, repr(sorted(self.params().items()))))

    def __repr__(self):
        args = ", ".join(f"{k}={v}" for k, v in self.params().items())
        return f"{self.name}({args})"


class Twist(Move):
    name = "Twist"

    def __init__(self, f=1, lam=1):
        self.t = f if isinstance(f, TwistData) else TwistData(f, lam)

    def apply(self, pair):
        return dpd_twist(pair, self.t)

    def params(self):
        return {"f": str(self.t.f), "lambda": str(self.t.lam)}


class _PointsMove(Move):
    def __init__(self, points):
        self.points = sorted_points({point(p) for p in points})

    def params(self):
        return {"points": [str(p) for p in self.points]}


class RestrictNonReal(_PointsMove):
    name = "RestrictNonReal"

    def apply(self, pair):
        return dpd_restrict(pair, self.points)


class ExtendNonReal(_PointsMove):
    name = "ExtendNonReal"

    def apply(self, pair):
        return dpd_extend(pair, self.points)


class ExtendEmptyReal(_PointsMove):
    name = "ExtendEmptyReal"

    def apply(self, pair):
        return dpd_extend_empty_real(pair, self.points)


def reparametrize(pair: DpdPair, psi: Mobius) -> DpdPair:
    """Pull the pair back along psi: the new curve is psi^{-1}(C)."""
    return DpdPair(psi.pullback_curve(pair.curve), psi.pullback_divisor(pair.D), psi.pullback_rf(pair.h))


class Reparametrize(Move):
    name = "Reparametrize"

    def __init__(self, psi):
        self.psi = psi if isinstance(psi, Mobius) else Mobius.parse(psi)

    def apply(self, pair):
        return reparametrize(pair, self.psi)

    def params(self):
        return {"psi": str(self.psi)}


class LocalReduce(Move):
    name = "LocalReduce"

    def __init__(self, c):
        self.point = point(c)

    def apply(self, pair):
        return dpd_twist(pair, local_reduction_twist(pair, self.point))

    def params(self):
        return {"point": str(self.point)}


FLIP = Mobius(-1, 0, 0, 1)


class FlipSign(Move):
    name = "FlipSign"

    def apply(self, pair):
        return reparametrize(pair, FLIP)


def replay(pair: DpdPair, moves) -> DpdPair:
    for m in moves:
        pair = m.apply(pair)
    return pair


def move_from_dict(d: dict) -> Move:
    kind = d["move"]
    if kind == "Twist":
        return Twist(rf(d["f"]), Fraction(d["lambda"]))
    if kind == "Reparametrize":
        return Reparametrize(d["psi"])
    if kind == "LocalReduce":
        return LocalReduce(d["point"])
    if kind == "FlipSign":
        return FlipSign()
    cls = {"RestrictNonReal": RestrictNonReal, "ExtendNonReal": ExtendNonReal, "ExtendEmptyReal": ExtendEmptyReal}[kind]
    return cls(d["points"])


# -- normalization ---------------------------------------------------------------------


class _Normalizer:
    def __init__(self, pair: DpdPair, verdict: TopologyVerdict):
        self.pair = pair
        self.verdict = verdict
        self.moves = []

    def step(self, move: Move) -> None:
        new = move.apply(self.pair)
        got = classify_real_locus(new)
        assert got == self.verdict, f"{move} changed the verdict to {got}"
        self.pair = new
        self.moves.append(move)

    def twist(self, f, lam=1) -> None:
        f = rf(f)
        if f == 1 and lam == 1:
            return
        self.step(Twist(f, lam))

    def clear_nonreal(self) -> None:
        # zeros and poles of h at non-real points, removed or not
        f = RationalFunction.constant(1)
        for p in sorted_points(_zeros_poles(self.pair.h)):
            if not p.is_real and p.coord.im > 0:
                f = f * linear_factor(p.coord) ** (-self.pair.h.order_at(p))
        self.twist(f)

    def clear_real(self, keep) -> None:
        f = RationalFunction.constant(1)
        for p in sorted_points(_zeros_poles(self.pair.h)):
            if p.is_real and not p.is_infinite and not keep(p):
                k = self.pair.h.order_at(p)
                assert k % 2 == 0, f"odd order at {p} outside the image"
                f = f * linear_factor(p.coord) ** (-(k // 2))
        self.twist(f)

    def restrict_nonreal(self, extra=()) -> None:
        curve = self.pair.curve
        pts = {p for p in self.pair.D.support() if not p.is_real}
        pts |= {p.conjugate() for p in pts}
        pts |= {point(p) for p in extra if curve.contains(point(p))}
        if pts:
            self.step(RestrictNonReal(pts))

    def extend(self, target: RealCurve) -> None:
        extra = self.pair.curve.removed - target.removed
        nonreal = [p for p in extra if not p.is_real]
        real = [p for p in extra if p.is_real]
        if nonreal:
            self.step(ExtendNonReal(nonreal))
        if real:
            self.step(ExtendEmptyReal(real))

    def final_scale(self, target: RationalFunction) -> None:
        q = target / self.pair.h
        assert q.is_constant() and q.constant_value().is_real(), f"h = {self.pair.h} is not a multiple of {target}"
        lam = q.constant_value().re
        if lam != 1:
            self.step(Twist(1, lam))


def _zeros_poles(f: RationalFunction) -> list:
    from .funcfield import rf_divisor_data

    return [p for p, _ in rf_divisor_data(f)]


def normalize_to_model(pair: DpdPair):
    """(model, moves, canonical pair) with replay(pair, moves) == canonical pair."""
    verdict = classify_real_locus(pair)
    if not verdict.is_model:
        raise NotAModel(f"the real locus is not one of the compact models: {verdict}", verdict=str(verdict))
    N = _Normalizer(pair, verdict)
    model = verdict.model
    if model is ModelType.TORUS:
        N.clear_nonreal()
        N.clear_real(lambda p: False)
        N.restrict_nonreal(extra=(Gauss(0, 1), Gauss(0, -1)))
        N.extend(CIRCLE_CURVE)
        N.final_scale(RationalFunction.constant(1))
    else:
        if N.pair.curve.contains(INF):
            r0 = N.pair.curve.real_removed()[0].coord.re
            N.step(Reparametrize(Mobius(r0, 1, 1, 0)))
        a, b = _image_interval(N.pair)
        N.clear_nonreal()
        N.clear_real(lambda p: a <= p.coord.re <= b)
        N.restrict_nonreal()
        N.extend(AFFINE_LINE)
        psi = Mobius((b - a) / 2, (a + b) / 2, 0, 1)
        if not psi.is_identity():
            N.step(Reparametrize(psi))
        for c in sorted_points(set(N.pair.special_points())):
            if c.is_real and N.pair.D[c] // 1 != 0:
                N.step(LocalReduce(c))
        if N.pair.D[point(-1)] < N.pair.D[point(1)]:
            N.step(FlipSign())
        N.final_scale(ONE_MINUS_Z2)
    canonical = canonical_pair(model)
    assert N.pair == canonical, f"normalization ended at {N.pair}, expected {canonical}"
    return model, N.moves, N.pair


def _image_interval(pair: DpdPair):
    comp = real_image(pair).components[0]
    a, b = comp.start.coord.re, comp.end.coord.re
    assert a < b
    return a, b


# -- certificates -------------------------------------------------------------------------


def verify_equivalence(pair1: DpdPair, pair2: DpdPair, psi, f, lam) -> bool:
    """psi^*D2 = D1 + div(f)|_C1 and psi^*h2 = lam * f * tau^*f * h1."""
    psi = psi if isinstance(psi, Mobius) else Mobius.parse(psi)
    f = rf(f)
    lam = Fraction(lam)
    if lam <= 0:
        raise ValueError("lambda must be positive")
    if f.is_zero():
        raise ValueError("f must be nonzero")
    if psi.pullback_curve(pair2.curve) != pair1.curve:
        raise CurveMismatch(
            "psi does not map the removed set of the first curve onto that of the second",
            expected=str(pair1.curve),
            got=str(psi.pullback_curve(pair2.curve)),
        )
    if psi.pullback_divisor(pair2.D) != pair1.D + principal_divisor(f, pair1.curve):
        return False
    return psi.pullback_rf(pair2.h) == f * f.conjugate() * pair1.h * lam
