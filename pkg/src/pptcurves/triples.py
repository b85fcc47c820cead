"""Primitive Pythagorean triples: the Triple type, a fast generator and a
brute-force oracle.

Everything here is exact integer arithmetic. Python ints are unbounded, so
legs of 10**6 and beyond (squares past 10**12) need no special care.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd, isqrt
from typing import Iterable, Iterator, NamedTuple


class DomainError(ValueError):
    """Input outside an operation's mathematical domain (e.g. a non-PPT)."""


def is_pythagorean(a: int, b: int, c: int) -> bool:
    return a * a + b * b == c * c


@dataclass(frozen=True, order=True)
class Triple:
    """A Pythagorean triple stored canonically, ``a < b < c``.

    The primitivity flag is derived, not stored; see :attr:`primitive`.
    Iterating yields ``a, b, c`` so triples unpack like tuples.
    """

    a: int
    b: int
    c: int

    def __post_init__(self):
        if not (0 < self.a < self.b < self.c):
            raise DomainError(f"not canonical (need 0 < a < b < c): {tuple(self)}")
        if not is_pythagorean(self.a, self.b, self.c):
            raise DomainError(f"not a Pythagorean triple: {tuple(self)}")

    @classmethod
    def of(cls, x: int, y: int, c: int) -> "Triple":
        """Build from legs in either order."""
        return cls(min(x, y), max(x, y), c)

    def __iter__(self) -> Iterator[int]:
        return iter((self.a, self.b, self.c))

    @property
    def primitive(self) -> bool:
        return is_primitive(self)


def is_primitive(t: Iterable[int]) -> bool:
    a, b, c = t
    return gcd(gcd(a, b), c) == 1


class Region(enum.Enum):
    """Which copy of a triple a plot point is.

    Names follow leg order rather than geometry: BELOW is the point
    ``(a, b)`` with x < y, ABOVE the reflected ``(b, a)``.
    """

    BELOW = "below"
    ABOVE = "above"


class PlotPoint(NamedTuple):
    x: int
    y: int
    region: Region


def plot_points(triples: Iterable[Triple]) -> list[PlotPoint]:
    out = []
    for t in triples:
        out.append(PlotPoint(t.a, t.b, Region.BELOW))
        out.append(PlotPoint(t.b, t.a, Region.ABOVE))
    return out


def enumerate_ppts(max_leg: int) -> list[Triple]:
    """All PPTs with both legs strictly below ``max_leg``, sorted by (a, b).

    Sweeps the parameters m > n >= 1, coprime and of opposite parity, with
    legs m^2 - n^2 and 2mn. For a fixed m the admissible n form a contiguous
    window: 2mn < max_leg bounds n above, m^2 - n^2 < max_leg bounds it below.
    """
    out = []
    m = 2
    while 2 * m < max_leg:  # n = 1 gives the smallest even leg 2m
        n_hi = min(m - 1, (max_leg - 1) // (2 * m))
        excess = m * m - max_leg  # need n^2 > excess
        n_lo = 1 if excess < 0 else isqrt(excess) + 1
        for n in range(n_lo, n_hi + 1):
            if (m - n) % 2 == 0 or gcd(m, n) != 1:
                continue
            odd, even = m * m - n * n, 2 * m * n
            out.append(Triple.of(odd, even, m * m + n * n))
        m += 1
    out.sort()
    return out


def enumerate_ppts_oracle(max_leg: int) -> list[Triple]:
    """Same contract as :func:`enumerate_ppts`, by exhaustive search.

    Deliberately naive: every pair a < b < max_leg, exact square test, gcd
    filter. Used only to check the fast generator.
    """
    out = []
    for a in range(1, max_leg):
        aa = a * a
        for b in range(a + 1, max_leg):
            cc = aa + b * b
            c = isqrt(cc)
            if c * c == cc and gcd(a, b) == 1:
                out.append(Triple(a, b, c))
    return out


def ppts_by_short_leg(max_short: int) -> list[Triple]:
    """All PPTs whose shorter leg is at most ``max_short``, sorted by (a, b).

    For a fixed short leg a the long leg never exceeds (a^2 - 1) / 2 (the
    d = 1 member), so a finite leg bound covers the whole set.
    """
    if max_short < 3:
        return []
    bound = (max_short * max_short - 1) // 2 + 1
    return [t for t in enumerate_ppts(bound) if t.a <= max_short]


def first_ppts(count: int) -> list[Triple]:
    """The first ``count`` PPTs ordered by short leg, then long leg."""
    if count <= 0:
        return []
    short = 3
    while True:
        found = ppts_by_short_leg(short)
        if len(found) >= count:
            return found[:count]
        short = 2 * short
