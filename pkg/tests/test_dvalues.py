import json
from math import gcd

import pytest

from pptcurves.dvalues import (
    ClaimId,
    allowable_sequence,
    claim_case,
    d2_residue_split,
    d_of,
    d_prime_of,
    dclass_of,
    is_allowable,
    residue_report,
    triples_with_d,
    verify_d_claim,
)
from pptcurves.triples import Triple, enumerate_ppts, enumerate_ppts_oracle

SEQUENCE_PREFIX = [1, 2, 8, 9, 18, 25, 32, 49, 50]


def _oracle_d_values(max_leg):
    """d = c - y over both plot orientations of the oracle's PPTs."""
    out = set()
    for t in enumerate_ppts_oracle(max_leg):
        out.add(t.c - t.b)
        out.add(t.c - t.a)
    return out


def test_d_values_of_worked_points():
    assert d_of(Triple(3, 4, 5)) == 1
    assert d_of((105, 88, 137)) == 49
    assert d_of((140, 51, 149)) == 98
    assert d_prime_of((105, 88, 137)) == 32
    assert d_prime_of((3, 4, 5)) == 2
    assert d_prime_of((20, 99, 101)) == 81
    assert is_allowable(81)
    assert dclass_of((105, 88, 137)) == (49, 32)


def test_is_allowable():
    assert all(is_allowable(d) for d in SEQUENCE_PREFIX)
    assert not is_allowable(4)
    assert is_allowable(98)
    assert not any(is_allowable(d) for d in range(10, 18))
    assert not is_allowable(0)


def test_allowable_sequence():
    assert allowable_sequence(50) == SEQUENCE_PREFIX
    assert allowable_sequence(1) == [1]
    assert allowable_sequence(100) == [1, 2, 8, 9, 18, 25, 32, 49, 50, 72, 81, 98]


def test_allowable_sequence_against_oracle():
    # every allowable d <= 100 has a witness with legs below 200 (largest: d=98 at (112, 15))
    realized = {d for d in _oracle_d_values(200) if d <= 100}
    assert sorted(realized) == allowable_sequence(100)


def test_membership_matches_sequence():
    seq = set(allowable_sequence(2000))
    for d in range(1, 2001):
        assert is_allowable(d) == (d in seq)


def test_every_ppt_has_allowable_d_and_d_prime():
    for t in enumerate_ppts(5000):
        assert is_allowable(d_of(t)) and is_allowable(d_prime_of(t))
        assert d_of(t) < d_prime_of(t)


@pytest.mark.parametrize("d,case", [
    (3, ClaimId.ODD_NONSQUARE),
    (1, ClaimId.ODD_SQUARE),
    (49, ClaimId.ODD_SQUARE),
    (4, ClaimId.EVEN_NOT_TWICE_SQUARE),
    (18, ClaimId.TWICE_SQUARE_S_ODD),
    (98, ClaimId.TWICE_SQUARE_S_ODD),
    (8, ClaimId.TWICE_SQUARE_S_EVEN),
    (32, ClaimId.TWICE_SQUARE_S_EVEN),
])
def test_claim_case(d, case):
    assert claim_case(d) is case


def test_triples_with_d_matches_brute_force():
    for d in (1, 2, 3, 4, 9, 27):
        brute = sorted(
            (x, y, y + d)
            for x in range(1, 300) for y in range(1, 300)
            if x * x + y * y == (y + d) ** 2
        )
        assert sorted(triples_with_d(d, 300)) == brute


def test_verify_odd_nonsquare_3():
    r = verify_d_claim(3, 500)
    assert r.claim_id is ClaimId.ODD_NONSQUARE
    assert r.verdict and not r.inconclusive
    assert r.ppt_count == 0 and r.pt_count > 0
    found = triples_with_d(3, 500)
    assert (9, 12, 15) in found
    assert all(x % 3 == 0 and y % 3 == 0 for x, y, _ in found)


def test_verify_d1():
    r = verify_d_claim(1, 500)
    assert r.verdict and r.ppt_count > 0
    found = triples_with_d(1, 500)
    assert (3, 4, 5) in found and (5, 12, 13) in found


def test_d2_mod4_split():
    groups = d2_residue_split(500)
    assert set(groups) == {0, 2}
    assert groups[0] and groups[2]
    assert all(prim for _, prim in groups[0])
    assert not any(prim for _, prim in groups[2])
    # x = 4k gives (4k, 4k^2 - 1, 4k^2 + 1)
    for (x, y, c), _ in groups[0]:
        k = x // 4
        assert (y, c) == (4 * k * k - 1, 4 * k * k + 1)


@pytest.mark.parametrize("d", [d for d in range(1, 101) if not is_allowable(d)])
def test_non_allowable_never_primitive(d):
    r = verify_d_claim(d, 2000)
    assert r.ppt_count == 0 and r.verdict and r.counterexamples == []
    for p in triples_with_d(d, 2000):
        assert gcd(gcd(p[0], p[1]), p[2]) > 1


def test_allowable_with_too_small_range_is_inconclusive():
    r = verify_d_claim(98, 20)
    assert r.ppt_count == 0
    assert r.inconclusive and not r.verdict
    assert verify_d_claim(98, 200).verdict


def test_claim_report_json_fields():
    r = verify_d_claim(27, 300)
    obj = json.loads(r.to_json())
    assert list(obj) == ["claim_id", "d", "range_max", "pt_count", "ppt_count",
                         "counterexamples", "verdict", "inconclusive"]
    assert obj["claim_id"] == "odd-nonsquare"


@pytest.mark.parametrize("s", [1, 3, 5, 7, 9])
def test_odd_square_residue_holds(s):
    rep = residue_report(s * s, 2000)
    assert rep.checked > 0
    assert rep.violations == []


def test_odd_nonsquare_residue_is_only_observational():
    # x = d mod 2d fails for d = 27: (45, 24, 51) has x = 45
    rep = residue_report(27, 300)
    assert (45, 24, 51) in rep.violations
