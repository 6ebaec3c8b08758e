"""Points of P^1 over Q(i), with the standard conjugation z -> conj(z)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .scalars import Gauss, format_gauss


@dataclass(frozen=True)
class CurvePoint:
    """A finite point ``coord`` of the z-line, or the point at infinity (``coord=None``)."""

    coord: Optional[Gauss] = None

    @property
    def is_infinite(self) -> bool:
        return self.coord is None

    @property
    def is_real(self) -> bool:
        return self.coord is None or self.coord.is_real()

    def conjugate(self) -> "CurvePoint":
        if self.coord is None or self.coord.is_real():
            return self
        return CurvePoint(self.coord.conjugate())

    def sort_key(self):
        # Finite points by real part, then |imaginary part|, upper half-plane
        # before lower; infinity last.  Conjugate pairs end up adjacent.
        if self.coord is None:
            return (1,)
        c = self.coord
        return (0, c.re, abs(c.im), c.im < 0)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return "inf" if self.coord is None else format_gauss(self.coord)

    def __repr__(self):
        return f"CurvePoint({self})"


INF = CurvePoint(None)


def point(x) -> CurvePoint:
    """Build a point from a scalar, a ``CurvePoint`` or the strings ``"inf"``/``"oo"``."""
    if isinstance(x, CurvePoint):
        return x
    if x is None or (isinstance(x, str) and x.strip() in ("inf", "oo", "∞")):
        return INF
    if isinstance(x, str):
        from .parsing import parse_point

        return parse_point(x)
    return CurvePoint(Gauss.coerce(x))


def sorted_points(points) -> list:
    return sorted(points, key=CurvePoint.sort_key)
