"""Exact integer predicates on grid points and segments in Z^3.

Every decision is made with integer cross products and cross-multiplied
parameter comparisons, so results are exact for all inputs within
``COORD_LIMIT``.  The batch routines used by the drawer and the verifier live
in the compiled kernel (``gridbend._kernels``) with a pure-Python twin in
``gridbend._kernels_py``; both agree with the scalar functions here.
"""
from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import NamedTuple, Optional, Tuple

COORD_LIMIT = 1 << 20


class CoordinateOverflow(ValueError):
    """A coordinate exceeds ``COORD_LIMIT`` in absolute value."""


class GridPoint(NamedTuple):
    x: int
    y: int
    z: int


class Segment(NamedTuple):
    p: GridPoint
    q: GridPoint

    @property
    def delta(self) -> Tuple[int, int, int]:
        return (self.q[0] - self.p[0], self.q[1] - self.p[1], self.q[2] - self.p[2])

    def reversed(self) -> "Segment":
        return Segment(self.q, self.p)


class Kind(enum.IntEnum):
    DISJOINT = 0
    POINT = 1
    OVERLAP = 2


class Intersection(NamedTuple):
    """Result of :func:`segments_intersect`.

    ``point`` holds the exact (possibly fractional) meeting point for
    ``Kind.POINT`` and is ``None`` otherwise.
    """

    kind: Kind
    point: Optional[Tuple[Fraction, Fraction, Fraction]] = None

    @property
    def integral(self) -> bool:
        return self.point is not None and all(c.denominator == 1 for c in self.point)

    def grid_point(self) -> Optional[GridPoint]:
        if not self.integral:
            return None
        return GridPoint(*(int(c) for c in self.point))


DISJOINT = Intersection(Kind.DISJOINT)
OVERLAP = Intersection(Kind.OVERLAP)


def check_bounds(*points) -> None:
    for pt in points:
        for c in pt:
            if c > COORD_LIMIT or c < -COORD_LIMIT:
                raise CoordinateOverflow(f"coordinate {c} of {tuple(pt)} exceeds 2^20")


def _sub(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def _cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def collinear(p, q, r) -> bool:
    return _cross(_sub(q, p), _sub(r, p)) == (0, 0, 0)


def point_on_segment(pt, s, include_endpoints: bool = True) -> bool:
    p, q = s
    d = _sub(q, p)
    w = _sub(pt, p)
    if _cross(d, w) != (0, 0, 0):
        return False
    t = _dot(w, d)
    dd = _dot(d, d)
    if include_endpoints:
        return 0 <= t <= dd
    return 0 < t < dd


def _point_at(p, d, num: int, den: int) -> Tuple[Fraction, Fraction, Fraction]:
    return tuple(Fraction(p[i] * den + num * d[i], den) for i in range(3))  # type: ignore[return-value]


def segments_intersect(s1, s2) -> Intersection:
    """Classify how two closed segments meet.

    Both segments must be non-degenerate.  Raises :class:`CoordinateOverflow`
    when an endpoint lies outside the supported coordinate range.
    """
    p1, q1 = s1
    p2, q2 = s2
    check_bounds(p1, q1, p2, q2)
    d1 = _sub(q1, p1)
    d2 = _sub(q2, p2)
    r = _sub(p2, p1)
    n = _cross(d1, d2)
    if n != (0, 0, 0):
        if _dot(r, n) != 0:
            return DISJOINT
        nn = _dot(n, n)
        t = _dot(_cross(r, d2), n)
        if t < 0 or t > nn:
            return DISJOINT
        u = _dot(_cross(r, d1), n)
        if u < 0 or u > nn:
            return DISJOINT
        return Intersection(Kind.POINT, _point_at(p1, d1, t, nn))
    if _cross(r, d1) != (0, 0, 0):
        return DISJOINT
    # collinear: compare parameters along s1 scaled by |d1|^2
    dd = _dot(d1, d1)
    ta = _dot(r, d1)
    tb = _dot(_sub(q2, p1), d1)
    lo = max(0, min(ta, tb))
    hi = min(dd, max(ta, tb))
    if lo > hi:
        return DISJOINT
    if lo == hi:
        return Intersection(Kind.POINT, _point_at(p1, d1, lo, dd))
    return OVERLAP


def interior_lattice_count(s) -> int:
    dx, dy, dz = _sub(s[1], s[0])
    g = math.gcd(math.gcd(abs(dx), abs(dy)), abs(dz))
    if g == 0:
        raise ValueError("degenerate segment")
    return g - 1
