"""Difference values of plotted PPT points and the allowable-d sequence.

For a plotted point (x, y) of a triple with hypotenuse c, ``d = c - y`` and
``d' = c - x``. The point lies on the upward parabola of parameter d and the
rightward parabola of parameter d'. Only odd squares and twice squares ever
occur for primitive triples (OEIS A096033); the verifiers below check the
four-way case analysis behind that by exhaustive search over a finite range.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from math import gcd, isqrt
from typing import Iterable, NamedTuple

from .triples import Triple, is_primitive


def d_of(point: Iterable[int]) -> int:
    """``c - y`` for a point given as ``(x, y, c)``.

    A canonical :class:`Triple` is read as its below-diagonal point (a, b).
    """
    x, y, c = point
    return c - y


def d_prime_of(point: Iterable[int]) -> int:
    x, y, c = point
    return c - x


class DClass(NamedTuple):
    d: int
    d_prime: int


def dclass_of(point: Iterable[int]) -> DClass:
    x, y, c = point
    return DClass(c - y, c - x)


def _is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def is_allowable(d: int) -> bool:
    if d < 1:
        return False
    if d % 2:
        return _is_square(d)
    return _is_square(d // 2)


def allowable_sequence(max_d: int) -> list[int]:
    """Allowable d values up to ``max_d``, increasing."""
    seq = []
    s = 1
    while s * s <= max_d:
        seq.append(s * s)
        s += 2
    s = 1
    while 2 * s * s <= max_d:
        seq.append(2 * s * s)
        s += 1
    return sorted(seq)


class ClaimId(str, enum.Enum):
    ODD_NONSQUARE = "odd-nonsquare"
    ODD_SQUARE = "odd-square"
    EVEN_NOT_TWICE_SQUARE = "even-not-twice-square"
    TWICE_SQUARE_S_ODD = "twice-square-s-odd"
    TWICE_SQUARE_S_EVEN = "twice-square-s-even"


def claim_case(d: int) -> ClaimId:
    if d % 2:
        return ClaimId.ODD_SQUARE if _is_square(d) else ClaimId.ODD_NONSQUARE
    half = d // 2
    if not _is_square(half):
        return ClaimId.EVEN_NOT_TWICE_SQUARE
    if isqrt(half) % 2:
        return ClaimId.TWICE_SQUARE_S_ODD
    return ClaimId.TWICE_SQUARE_S_EVEN


def triples_with_d(d: int, max_leg: int) -> list[tuple[int, int, int]]:
    """Every Pythagorean triple (primitive or not) plotted as (x, y, c) with
    ``c - y == d`` and both legs below ``max_leg``.

    From x^2 = d (2y + d): y = (x^2 - d^2) / (2d), so scanning x covers all
    candidates, in both leg orders.
    """
    out = []
    dd, two_d = d * d, 2 * d
    for x in range(1, max_leg):
        num = x * x - dd
        if num <= 0 or num % two_d:
            continue
        y = num // two_d
        if y < max_leg:
            out.append((x, y, y + d))
    return out


@dataclass
class ClaimReport:
    """Outcome of testing one case of the allowable-d analysis.

    For a non-allowable d the claim is that no triple with that d is
    primitive; each primitive one found is a counterexample. For an
    allowable d the claim is that primitive triples exist. Finding none is
    inconclusive (the range may just be too small) and is reported with
    ``verdict=False, inconclusive=True`` and no counterexamples.
    """

    claim_id: ClaimId
    d: int
    range_max: int
    pt_count: int
    ppt_count: int
    counterexamples: list[Triple] = field(default_factory=list)
    verdict: bool = True
    inconclusive: bool = False

    def to_dict(self) -> dict:
        return {
            "claim_id": self.claim_id.value,
            "d": self.d,
            "range_max": self.range_max,
            "pt_count": self.pt_count,
            "ppt_count": self.ppt_count,
            "counterexamples": [list(t) for t in self.counterexamples],
            "verdict": self.verdict,
            "inconclusive": self.inconclusive,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def verify_d_claim(d: int, max_leg: int) -> ClaimReport:
    case = claim_case(d)
    found = triples_with_d(d, max_leg)
    prim = [p for p in found if is_primitive(p)]
    report = ClaimReport(case, d, max_leg, len(found), len(prim))
    if is_allowable(d):
        if not prim:
            report.verdict = False
            report.inconclusive = True
    else:
        report.counterexamples = [Triple.of(*p) for p in prim]
        report.verdict = not prim
        report.inconclusive = not found
    return report


class ResidueReport(NamedTuple):
    """Check of a "by examples" residue observation for one d.

    ``checked`` counts the triples the observation was applied to (primitive
    ones for allowable d, all of them otherwise); ``violations`` lists the
    (x, y, c) points whose leg x misses ``residue`` mod ``modulus``.
    """

    d: int
    residue: int
    modulus: int
    checked: int
    violations: list[tuple[int, int, int]]


def observed_residue(d: int) -> tuple[int, int]:
    """(residue, modulus) the short-leg coordinate x is observed to satisfy.

    odd non-square d: x = d mod 2d; odd square s^2: x = s mod 2s;
    even non-twice-square d: x = 0 mod 2d; 2s^2 with s odd: x = 0 mod 4s;
    2s^2 with s even: x = 0 mod 2s.
    """
    case = claim_case(d)
    if case is ClaimId.ODD_NONSQUARE:
        return d, 2 * d
    if case is ClaimId.ODD_SQUARE:
        s = isqrt(d)
        return s, 2 * s
    if case is ClaimId.EVEN_NOT_TWICE_SQUARE:
        return 0, 2 * d
    s = isqrt(d // 2)
    return (0, 4 * s) if case is ClaimId.TWICE_SQUARE_S_ODD else (0, 2 * s)


def residue_report(d: int, max_leg: int) -> ResidueReport:
    residue, modulus = observed_residue(d)
    found = triples_with_d(d, max_leg)
    if is_allowable(d):
        found = [p for p in found if is_primitive(p)]
    bad = [p for p in found if p[0] % modulus != residue]
    return ResidueReport(d, residue, modulus, len(found), bad)


def d2_residue_split(max_leg: int) -> dict[int, list[tuple[tuple[int, int, int], bool]]]:
    """Triples with d = 2 grouped by x mod 4, each tagged with primitivity.

    x is always even here; x = 0 mod 4 gives (4k, 4k^2 - 1, 4k^2 + 1) and
    x = 2 mod 4 gives an all-even triple.
    """
    groups: dict[int, list] = {0: [], 2: []}
    for p in triples_with_d(2, max_leg):
        groups.setdefault(p[0] % 4, []).append((p, is_primitive(p)))
    return groups


def common_factor(p: Iterable[int]) -> int:
    a, b, c = p
    return gcd(gcd(a, b), c)
