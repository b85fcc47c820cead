"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line which conftest.py prints in the terminal
summary. All comparisons are exact; runtimes are checked against their
stated limits.
"""

import time
from fractions import Fraction
from math import gcd, isqrt

import numpy as np
import pytest

from pptcurves.cli import run
from pptcurves.dvalues import allowable_sequence, is_allowable, triples_with_d, verify_d_claim
from pptcurves.parabolas import (
    DownParabola,
    Orientation,
    anchor_of,
    classify_point,
    down_contains,
    down_parabola_of,
    down_points,
    geometry_of,
    slopes_at,
)
from pptcurves.plot import PlotConfig, render_svg
from pptcurves.triples import enumerate_ppts, enumerate_ppts_oracle, first_ppts

RESULTS: list[str] = []


@pytest.fixture
def criterion(request):
    def record(number, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}"
        if detail:
            line += f"  ({detail})"
        RESULTS.append(line)
        assert ok, line
    return record


def test_01_first_18(criterion, capsys):
    start = time.perf_counter()
    assert run(["gen", "--first", "18"]) == 0
    rows = capsys.readouterr().out.splitlines()[1:]
    got = [tuple(int(v) for v in r.split(",")[:3]) for r in rows]
    elapsed = time.perf_counter() - start
    expected = [
        (3, 4, 5), (5, 12, 13), (7, 24, 25), (8, 15, 17), (9, 40, 41), (11, 60, 61),
        (12, 35, 37), (13, 84, 85), (15, 112, 113), (16, 63, 65), (17, 144, 145), (19, 180, 181),
        (20, 21, 29), (20, 99, 101), (21, 220, 221), (23, 264, 265), (24, 143, 145), (25, 312, 313),
    ]
    ok = got == expected and [tuple(t) for t in first_ppts(18)] == expected and elapsed < 1.0
    criterion(1, "first 18 PPTs by short leg match the table", ok, f"{elapsed:.3f}s")


def test_02_allowable_sequence(criterion):
    start = time.perf_counter()
    seq = allowable_sequence(50)
    # independent brute force: scan y, c = y + d, x = sqrt(c^2 - y^2)
    realized = []
    for d in range(1, 51):
        for y in range(1, 5000):
            c = y + d
            xx = c * c - y * y
            x = isqrt(xx)
            if x * x == xx and x < 5000 and gcd(x, y) == 1:
                realized.append(d)
                break
    elapsed = time.perf_counter() - start
    ok = seq == [1, 2, 8, 9, 18, 25, 32, 49, 50] and realized == seq and elapsed < 10
    criterion(2, "allowable_sequence(50) and brute-force realizability agree", ok, f"{elapsed:.2f}s")


def test_03_worked_example_105_88(criterion, capsys):
    assert run(["anchor", "105", "88", "137"]) == 0
    out = capsys.readouterr().out
    up, right = classify_point((105, 88), 137)
    anc = anchor_of((105, 88), 137)
    down = down_parabola_of(anc)
    ok = (
        (up.d, right.d) == (49, 32)
        and (anc.a1, anc.d0, anc.t) == (15, 1, 7)
        and tuple(anc.anchor_triple) == (15, 112, 113)
        and down.coefficients == (Fraction(-1, 450), Fraction(225, 2))
        and down_contains(down, (105, 88)) and down_contains(down, (15, 112))
        and "point (105, 88): d = 49, d' = 32" in out
        and "a1 = 15, d0 = 1, t = 7; down: y = -x^2/450 + 225/2" in out
    )
    criterion(3, "anchor 105 88 137 -> a1=15, (15,112,113), y = -x^2/450 + 225/2", ok)


def test_04_worked_example_140_51(criterion, capsys):
    assert run(["anchor", "140", "51", "149"]) == 0
    out = capsys.readouterr().out
    up, _ = classify_point((140, 51), 149)
    anc = anchor_of((140, 51), 149)
    down = down_parabola_of(anc)
    ok = (
        up.d == 98
        and up.coefficients == (Fraction(1, 196), Fraction(-49))
        and up.equation() == "y = x^2/196 - 49"
        and (anc.a1, anc.d0, anc.t) == (20, 2, 7)
        and tuple(anc.anchor_triple) == (20, 99, 101)
        and down.coefficients == (Fraction(-1, 400), Fraction(100))
        and down_contains(down, (140, 51))
        and "a1 = 20, d0 = 2, t = 7; down: y = -x^2/400 + 100" in out
    )
    criterion(4, "anchor 140 51 149 -> d=98, a1=20, (20,99,101), y = -x^2/400 + 100", ok)


def test_05_downward_sequences(criterion):
    cases = [
        (13, 1, [(13, 84), (39, 80), (65, 72), (91, 60), (117, 44), (143, 24)]),
        (20, 2, [(20, 99), (60, 91), (140, 51), (180, 19)]),
        (28, 8, [(28, 45), (56, 33), (84, 13)]),
    ]
    ok = True
    for a1, d0, pts in cases:
        p = DownParabola(a1, d0)
        ok &= all(down_contains(p, pt) for pt in pts)
        ok &= [x for x, _ in down_points(p, primitive_only=True)] == [x for x, _ in pts]
    criterion(5, "point sequences on the curves anchored at 13, 20, 28", bool(ok))


def test_06_perpendicularity(criterion):
    start = time.perf_counter()
    checked = 0
    ok = True
    for t in enumerate_ppts(2000):
        for point in ((t.a, t.b), (t.b, t.a)):
            up, right = classify_point(point, t.c)
            down = down_parabola_of(anchor_of(point, t.c))
            m1, m2 = slopes_at(up, down, point)
            ok &= m1 * m2 == -1
            # the mirrored right/left pair through the reflected point
            anc_r = anchor_of((point[1], point[0]), t.c)
            left = down_parabola_of(anc_r, Orientation.LEFT)
            n1, n2 = slopes_at(right, left, point)
            ok &= n1 * n2 == -1
            checked += 1
    elapsed = time.perf_counter() - start
    criterion(6, "slope product exactly -1 at every PPT point, legs < 2000",
              bool(ok) and elapsed < 30, f"{checked} points, {elapsed:.2f}s")


def test_07_focus(criterion):
    ok = True
    count = 0
    for t in enumerate_ppts(500):
        for point in ((t.a, t.b), (t.b, t.a)):
            up, right = classify_point(point, t.c)
            down = down_parabola_of(anchor_of(point, t.c))
            for p in (up, right, down, down.mirror()):
                ok &= geometry_of(p).focus == (0, 0)
                count += 1
    criterion(7, "focus exactly (0,0) for all four orientations, legs < 500",
              bool(ok), f"{count} parabolas")


def test_08_oracle_equivalence(criterion):
    start = time.perf_counter()
    fast = enumerate_ppts(2000)
    slow = enumerate_ppts_oracle(2000)
    elapsed = time.perf_counter() - start
    criterion(8, "enumerate_ppts(2000) == oracle(2000)",
              set(fast) == set(slow) and len(fast) == len(slow) and elapsed < 60,
              f"{len(fast)} triples, {elapsed:.2f}s")


def test_09_non_allowable(criterion):
    bad = []
    checked = 0
    for d in range(1, 101):
        if is_allowable(d):
            continue
        checked += 1
        r = verify_d_claim(d, 2000)
        shared = all(gcd(gcd(x, y), c) > 1 for x, y, c in triples_with_d(d, 2000))
        if r.ppt_count != 0 or not r.verdict or not shared:
            bad.append(d)
    criterion(9, "no PPT for any non-allowable d <= 100 (max_leg 2000)",
              not bad, f"{checked} values of d, failures: {bad}")


def _numpy_ppt_count(max_leg):
    """Independent count: vectorised scan over all pairs a < b < max_leg."""
    total = 0
    b = np.arange(1, max_leg, dtype=np.int64)
    for a in range(1, max_leg):
        bb = b[a:]
        cc = a * a + bb * bb
        c = np.rint(np.sqrt(cc.astype(np.float64))).astype(np.int64)
        hit = (c * c == cc) & (np.gcd(a, bb) == 1)
        total += int(hit.sum())
    return total


def test_10_main_graph(criterion):
    start = time.perf_counter()
    n = len(enumerate_ppts(10000))
    svg = render_svg(PlotConfig(max_leg=10000, canvas_px=1000, point_radius_px=0.6))
    circles = svg.count("<circle ")
    elapsed = time.perf_counter() - start
    independent = _numpy_ppt_count(10000)
    criterion(10, "Main Graph at max_leg 10000 has exactly 2N points",
              circles == 2 * n and n == independent and elapsed < 60,
              f"N = {n}, {circles} circles, {elapsed:.2f}s")
