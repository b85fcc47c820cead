"""The four parabola families through PPT plot points.

Upward parabolas ``y = (x^2 - d^2) / (2d)`` (and their reflections opening
right) carry every plotted point with difference value d. Downward parabolas
``y = -d0 x^2 / (2 a1^2) + a1^2 / (2 d0)`` (and reflections opening left) are
anchored at a point (a1, b1) of the d0 in {1, 2, 8} family and pass through
every point (t a1, y) whose d factors as t^2 d0.

All coefficients, vertices, foci and slopes are exact ``Fraction`` values.
Each parabola is written internally as ``v = A u^2 + C`` in axis coordinates
(u across the axis, v along it); for up/down families u = x, v = y, for
right/left families u = y, v = x.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Optional, Union

from .dvalues import is_allowable
from .triples import DomainError, Triple, is_primitive, is_pythagorean

Point = tuple[int, int]

D0_VALUES = (1, 2, 8)


class Orientation(enum.Enum):
    UP = "up"
    RIGHT = "right"
    DOWN = "down"
    LEFT = "left"

    @property
    def mirrored(self) -> "Orientation":
        return _MIRROR[self]

    @property
    def vertical_axis(self) -> bool:
        return self in (Orientation.UP, Orientation.DOWN)


_MIRROR = {
    Orientation.UP: Orientation.RIGHT,
    Orientation.RIGHT: Orientation.UP,
    Orientation.DOWN: Orientation.LEFT,
    Orientation.LEFT: Orientation.DOWN,
}


def _axis_coords(orientation: Orientation, point: Point) -> Point:
    x, y = point
    return (x, y) if orientation.vertical_axis else (y, x)


@dataclass(frozen=True)
class UpParabola:
    """``2 d v = u^2 - d^2``: opens up (u=x, v=y) or right (u=y, v=x)."""

    d: int
    orientation: Orientation = Orientation.UP

    def __post_init__(self):
        if self.orientation not in (Orientation.UP, Orientation.RIGHT):
            raise DomainError(f"UpParabola cannot open {self.orientation.value}")
        if not is_allowable(self.d):
            raise DomainError(f"d = {self.d} is not allowable")

    @property
    def coefficients(self) -> tuple[Fraction, Fraction]:
        """(A, C) with v = A u^2 + C."""
        return Fraction(1, 2 * self.d), Fraction(-self.d, 2)

    def mirror(self) -> "UpParabola":
        return UpParabola(self.d, self.orientation.mirrored)

    def contains(self, point: Point) -> bool:
        return up_contains(self, point)

    def equation(self) -> str:
        return _equation(self.orientation, *self.coefficients)


def anchor_leg(a1: int, d0: int) -> int:
    """The other leg b1 of the anchor point (a1, b1) on the d0 parabola."""
    num = a1 * a1 - d0 * d0
    den = 2 * d0
    if num <= 0 or num % den:
        raise DomainError(f"a1 = {a1} has no integer point on the d = {d0} parabola")
    return num // den


def anchor_triple(a1: int, d0: int) -> Triple:
    """The PPT behind the anchor point, e.g. (15, 112, 113) for a1=15, d0=1.

    Raises DomainError unless (a1, b1, b1 + d0) is primitive.
    """
    if d0 not in D0_VALUES:
        raise DomainError(f"d0 must be one of {D0_VALUES}, got {d0}")
    b1 = anchor_leg(a1, d0)
    t = Triple.of(a1, b1, b1 + d0)
    if not t.primitive:
        raise DomainError(f"anchor {tuple(t)} is not primitive")
    return t


@dataclass(frozen=True)
class DownParabola:
    """``2 a1^2 d0 v = -d0^2 u^2 + a1^4``: opens down (u=x) or left (u=y)."""

    a1: int
    d0: int
    orientation: Orientation = Orientation.DOWN

    def __post_init__(self):
        if self.orientation not in (Orientation.DOWN, Orientation.LEFT):
            raise DomainError(f"DownParabola cannot open {self.orientation.value}")
        anchor_triple(self.a1, self.d0)

    @property
    def coefficients(self) -> tuple[Fraction, Fraction]:
        a2 = self.a1 * self.a1
        return Fraction(-self.d0, 2 * a2), Fraction(a2, 2 * self.d0)

    @property
    def anchor_point(self) -> Point:
        b1 = anchor_leg(self.a1, self.d0)
        return (self.a1, b1) if self.orientation is Orientation.DOWN else (b1, self.a1)

    def mirror(self) -> "DownParabola":
        return DownParabola(self.a1, self.d0, self.orientation.mirrored)

    def contains(self, point: Point) -> bool:
        return down_contains(self, point)

    def equation(self) -> str:
        return _equation(self.orientation, *self.coefficients)


Parabola = Union[UpParabola, DownParabola]


def family_d1(a: int) -> Triple:
    if a < 3 or a % 2 == 0:
        raise DomainError(f"d = 1 family needs odd a >= 3, got {a}")
    return Triple(a, (a * a - 1) // 2, (a * a + 1) // 2)


def family_d2(k: int) -> Triple:
    if k < 1:
        raise DomainError(f"d = 2 family needs k >= 1, got {k}")
    return Triple.of(4 * k, 4 * k * k - 1, 4 * k * k + 1)


def up_contains(p: UpParabola, point: Point) -> bool:
    u, v = _axis_coords(p.orientation, point)
    return 2 * p.d * v == u * u - p.d * p.d


def down_contains(p: DownParabola, point: Point) -> bool:
    u, v = _axis_coords(p.orientation, point)
    a2 = p.a1 * p.a1
    return 2 * a2 * p.d0 * v == -p.d0 * p.d0 * u * u + a2 * a2


def _hypotenuse(x: int, y: int) -> int:
    cc = x * x + y * y
    c = isqrt(cc)
    if c * c != cc:
        raise DomainError(f"({x}, {y}) is not a Pythagorean point")
    return c


def _check_ppt_point(point: Point, c: int) -> None:
    x, y = point
    if x < 1 or y < 1 or not is_pythagorean(x, y, c):
        raise DomainError(f"({x}, {y}, {c}) is not a Pythagorean triple")
    if not is_primitive((x, y, c)):
        raise DomainError(f"({x}, {y}, {c}) is not primitive")


def classify_point(point: Point, c: Optional[int] = None) -> tuple[UpParabola, UpParabola]:
    """The opening-up and opening-right parabolas through a plotted PPT point.

    ``point`` is (x, y) as plotted; a canonical :class:`Triple` may be passed
    instead, meaning its below-diagonal point (a, b).
    """
    if isinstance(point, Triple):
        point, c = (point.a, point.b), point.c
    x, y = point
    if c is None:
        c = _hypotenuse(x, y)
    _check_ppt_point(point, c)
    up = UpParabola(c - y, Orientation.UP)
    right = UpParabola(c - x, Orientation.RIGHT)
    assert up.contains(point) and right.contains(point)
    return up, right


def factor_d(d: int) -> tuple[int, int]:
    """Split an allowable d as ``t^2 * d0``, returning (t, d0).

    d = s^2 (s odd) -> (s, 1); d = 2 s^2 with s odd -> (s, 2); with s even
    -> (s/2, 8). This is the only split with d0 in {1, 2, 8} where t is odd
    whenever d0 is 1 or 2.
    """
    if not is_allowable(d):
        raise DomainError(f"d = {d} is not allowable")
    if d % 2:
        return isqrt(d), 1
    s = isqrt(d // 2)
    return (s, 2) if s % 2 else (s // 2, 8)


@dataclass(frozen=True)
class Anchor:
    a1: int
    d0: int
    t: int
    anchor_triple: Triple

    @property
    def b1(self) -> int:
        return anchor_leg(self.a1, self.d0)


def anchor_of(point: Point, c: Optional[int] = None) -> Anchor:
    """Anchor (a1, d0, t) of a plotted PPT point (x, y).

    With d = c - y = t^2 d0, the anchor is a1 = x / t on the d0 parabola, and
    the downward parabola through (a1, b1) also passes through (x, y).
    """
    x, y = point
    if c is None:
        c = _hypotenuse(x, y)
    d = c - y
    t, d0 = factor_d(d)
    if x % t:
        raise ArithmeticError(f"t = {t} does not divide x = {x}; ({x}, {y}, {c}) is not a PPT")
    _check_ppt_point(point, c)
    a1 = x // t
    anchor = Anchor(a1, d0, t, anchor_triple(a1, d0))
    b1 = anchor.b1
    if b1 < y or (b1 == y) != (t == 1):
        raise ArithmeticError(f"anchor ({a1}, {b1}) inconsistent with ({x}, {y})")
    return anchor


def anchor_by_divisor_search(point: Point, c: Optional[int] = None) -> Anchor:
    """Anchor found by the hand method.

    A point already on its d0 parabola anchors itself. Otherwise a1 is the
    smallest divisor of x, valid for the d0 family, with anchor leg b1 > y.

    Kept as an independent cross-check of :func:`anchor_of`.
    """
    x, y = point
    if c is None:
        c = _hypotenuse(x, y)
    d = c - y
    # the d0 family is fixed by d alone: odd, 2 * odd, or a multiple of 8
    if d % 2:
        d0 = 1
    else:
        d0 = 2 if (d // 2) % 2 else 8
    if d == d0:
        return Anchor(x, d0, 1, anchor_triple(x, d0))
    for a1 in range(1, x):
        if x % a1:
            continue
        try:
            trip = anchor_triple(a1, d0)
        except DomainError:
            continue
        if anchor_leg(a1, d0) > y:
            return Anchor(a1, d0, x // a1, trip)
    raise DomainError(f"no anchor divisor for ({x}, {y})")


def down_parabola_of(anchor: Anchor, orientation: Orientation = Orientation.DOWN) -> DownParabola:
    return DownParabola(anchor.a1, anchor.d0, orientation)


def down_points(p: DownParabola, primitive_only: bool = True) -> list[Point]:
    """Lattice points of ``p`` with positive coordinates, in axis order.

    Integrality of v forces the across-axis coordinate u to be a multiple
    of a1 (d0 = 1, 2) or of a1/2 (d0 = 8); the scan steps through those and
    keeps exact hits. Every such point completes to a Pythagorean triple,
    so primitivity reduces to gcd(u, v) = 1.
    """
    a1, d0 = p.a1, p.d0
    step = a1 // 2 if d0 == 8 else a1
    a2 = a1 * a1
    den = 2 * a2 * d0
    pts = []
    u = step
    while True:
        num = a2 * a2 - d0 * d0 * u * u
        if num <= 0:
            break
        if num % den == 0:
            v = num // den
            if not primitive_only or gcd(u, v) == 1:
                pts.append((u, v) if p.orientation is Orientation.DOWN else (v, u))
        u += step
    return pts


def slopes_at(up: UpParabola, down: DownParabola, point: Point) -> tuple[Fraction, Fraction]:
    """Exact tangent slopes dy/dx of both curves at their common point.

    For the up/down pair these are x/d and -x d0 / a1^2; for the mirrored
    right/left pair the reciprocals in y. The product is -1 either way.
    """
    if up.orientation.vertical_axis != down.orientation.vertical_axis:
        raise DomainError("parabolas must share an axis (up with down, right with left)")
    if not (up.contains(point) and down.contains(point)):
        raise DomainError(f"{point} is not on both parabolas")
    u, _ = _axis_coords(up.orientation, point)
    # dv/du = 2 A u
    m_up = 2 * up.coefficients[0] * u
    m_down = 2 * down.coefficients[0] * u
    if up.orientation is Orientation.RIGHT:
        # dy/dx = 1 / (dx/dy); u = y > 0 so neither derivative vanishes
        return 1 / m_up, 1 / m_down
    return m_up, m_down


@dataclass(frozen=True)
class Geometry:
    vertex: tuple[Fraction, Fraction]
    focus: tuple[Fraction, Fraction]
    intercepts: Optional[tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]]


def geometry_of(p: Parabola) -> Geometry:
    """Vertex, focus and the two crossings of the coordinate axis
    perpendicular to the parabola's own axis.

    For v = A u^2 + C the focus sits at v = C + 1/(4A) on the axis; the
    crossings are u = +-sqrt(-C/A), which is rational for every member of
    these families (+-d upward, +-a1^2/d0 downward).
    """
    A, C = p.coefficients
    vertex_v = C
    focus_v = C + 1 / (4 * A)
    ratio = -C / A
    intercepts = None
    if ratio > 0:
        num, den = isqrt(ratio.numerator), isqrt(ratio.denominator)
        if num * num == ratio.numerator and den * den == ratio.denominator:
            r = Fraction(num, den)
            intercepts = ((-r, Fraction(0)), (r, Fraction(0)))

    def place(u, v):
        return (u, v) if p.orientation.vertical_axis else (v, u)

    return Geometry(
        vertex=place(Fraction(0), vertex_v),
        focus=place(Fraction(0), focus_v),
        intercepts=None if intercepts is None else tuple(place(*uv) for uv in intercepts),
    )


def _frac_json(q: Fraction) -> list[int]:
    return [q.numerator, q.denominator]


def to_dict(p: Parabola) -> dict:
    """JSON-ready description with exact values as [numerator, denominator]."""
    g = geometry_of(p)
    out: dict = {"family": p.orientation.value}
    if isinstance(p, UpParabola):
        out["d"] = p.d
    else:
        out["a1"] = p.a1
        out["d0"] = p.d0
    out["vertex"] = [_frac_json(q) for q in g.vertex]
    out["focus"] = [_frac_json(q) for q in g.focus]
    out["intercepts"] = None if g.intercepts is None else [
        [_frac_json(q) for q in pt] for pt in g.intercepts
    ]
    return out


def format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _equation(orientation: Orientation, A: Fraction, C: Fraction) -> str:
    u, v = ("x", "y") if orientation.vertical_axis else ("y", "x")
    sign = "-" if A < 0 else ""
    A = abs(A)
    head = f"{u}^2" if A.numerator == 1 else f"{A.numerator}*{u}^2"
    if A.denominator != 1:
        head += f"/{A.denominator}"
    tail = f" - {format_fraction(-C)}" if C < 0 else f" + {format_fraction(C)}"
    return f"{v} = {sign}{head}{tail}"
