"""Acceptance criteria, one test per criterion at its stated tolerance.

Each test records a PASS/FAIL line; conftest.py prints them in the terminal
summary.  Run ``python tests/test_acceptance.py`` for the lines alone.
"""
import math
import random
import time
from itertools import permutations

import pytest

from hypmut import commens, dehn, hypcore, packing, pretzel
from hypmut.commens import HoroballPattern

RESULTS: dict[int, tuple[bool, str]] = {}


def _record(num, ok, detail):
    RESULTS[num] = (bool(ok), detail)
    print(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}")
    return ok


def criterion_1():
    t0 = time.perf_counter()
    r = dehn.min_L_for_radius(2 * math.log(1 + math.sqrt(2)))
    L = dehn.min_L_for_total_length(0.015)
    dt = time.perf_counter() - t0
    ok = 14.80 <= r <= 14.90 and 20.66 <= L <= 20.81 and dt < 1.0
    return ok, f"radius constant {r:.6f}, length constant {L:.6f}, {dt:.3f} s"


def criterion_2():
    lstar = hypcore.max_length_for_chi(2)
    rad = hypcore.collar_radius(0.015)
    ok = abs(lstar - 0.01516) <= 0.0005 and rad > 2 * math.log(1 + math.sqrt(2))
    return ok, f"collar cutoff {lstar:.7f}, collar_radius(0.015) = {rad:.6f}"


def criterion_3():
    value, ok = dehn.published_I_check()
    return ok and value <= 222.01, f"I(tanh(2 ln(1+sqrt 2))) = {value:.6f} <= 222.01"


def criterion_4():
    t0 = time.perf_counter()
    rect = packing.solve_crossing_rectangle(2)
    # analytic quadratic oracle: middle radius t solves t^2 + 2t - 1/4 = 0
    t = -1 + math.sqrt(1.25)
    quad_ok = abs(rect.ell_w - (1 + 2 * t)) < 1e-9 and abs(rect.ell_w - (math.sqrt(5) - 1)) < 1e-9
    worst = 0.0
    for n in range(2, 13):
        a = packing.solve_crossing_rectangle(n)
        b = packing.steiner_cross_check(n)
        worst = max(worst, abs(a.ell_w - b.ell_w))
    dt = time.perf_counter() - t0
    ok = quad_ok and worst < 1e-9 and dt < 5.0
    return ok, (f"ell_w(2) - (sqrt5 - 1) = {rect.ell_w - (math.sqrt(5) - 1):.1e}, "
                f"max Newton/Steiner gap n=2..12 {worst:.1e}, {dt:.2f} s")


def criterion_5():
    bad = []
    min_margin = math.inf
    for n in range(2, 21):
        for b in packing.knot_rectangle_bounds(packing.solve_knot_rectangle(n)):
            min_margin = min(min_margin, b.margin)
            if not b.holds:
                bad.append((n, b.name))
    nl_bad = []
    for n in range(2, 11):
        rect = packing.solve_crossing_rectangle(n)
        for q in (7, 9, 101, 1001):
            if not packing.normalized_slope_length(rect, q, True) >= \
                    packing.normalized_length_lower_bound(n, q):
                nl_bad.append((n, q))
    ok = not bad and not nl_bad
    return ok, (f"rectangle-size bounds n=2..20 (min margin {min_margin:.3e}), "
                f"normalized-length bound n=2..10; failures {bad + nl_bad}")


def _same_link(a, b):
    m = len(a)
    imgs = {tuple(a[(i + k) % m] for i in range(m)) for k in range(m)}
    imgs |= {tuple(reversed(x)) for x in imgs}
    return tuple(b) in imgs


def criterion_6():
    f2 = pretzel.enumerate_mutants((8, 9, 11, 13, 15))
    t0 = time.perf_counter()
    f3 = pretzel.enumerate_mutants((8, 9, 11, 13, 15, 17, 19))
    dt = time.perf_counter() - t0
    distinct = all(not _same_link(a.q, b.q) for i, a in enumerate(f2) for b in f2[i + 1:])
    covered = all(sum(_same_link(p, f.q) for f in f2) == 1 for p in permutations(f2[0].q))
    distinct3 = len({pretzel.canonical_form(f.q) for f in f3}) == len(f3)
    ok = len(f2) == 12 and len(f3) == 360 and distinct and covered and distinct3 and dt < 30
    return ok, f"n=2: {len(f2)} classes, n=3: {len(f3)} classes ({dt:.3f} s), brute force ok={distinct and covered}"


def criterion_7():
    orders = set()
    bad = []
    for n in range(2, 21):
        for rect in (packing.solve_crossing_rectangle(n),
                     packing.solve_knot_rectangle(n, cross_check=False)):
            if 1 < rect.ell_w < 2:
                o = commens.rotation_orders(commens.crossing_pattern(n, rect))
                orders |= o
                if o != {2}:
                    bad.append((n, rect.rect_kind.value, sorted(o)))
    sq = commens.rotation_orders(HoroballPattern([[1, 0], [0, 1]], [((0, 0), 1.0)]))
    hx = commens.rotation_orders(HoroballPattern([[1, 0], [0.5, math.sqrt(3) / 2]],
                                                 [((0, 0), 1.0)]))
    ok = not bad and sq == {2, 4} and hx == {2, 3, 6}
    return ok, f"solved patterns {sorted(orders)}, square {sorted(sq)}, hexagonal {sorted(hx)}"


def criterion_8():
    rng = random.Random(20240611)
    worst = 0.0
    for _ in range(1000):
        r = rng.uniform(1e-3, 10.0)
        length = rng.uniform(0.0, 50.0)
        a = hypcore.cone_area(length, r)
        b = length * math.tanh(r / 2)
        worst = max(worst, abs(a - b) / max(1.0, abs(b)))
    cone_ok = all(abs(hypcore.cone_area(2 * math.pi * math.sinh(r), r)
                      - hypcore.geodesic_disk_area(r)) <= 1e-12 * hypcore.geodesic_disk_area(r)
                  for r in (0.1, 1.0, 3.0))
    base = (76, 77, 79, 81, 83)
    ref = pretzel.certify(base)
    inv_ok = True
    for a in range(1, 5):
        rep = pretzel.certify(pretzel.mutate(base, a))
        inv_ok &= (rep.thresholds_met, rep.preserved_lengths, rep.mutant_count_enumerated,
                   rep.volume_bounds) == (ref.thresholds_met, ref.preserved_lengths,
                                          ref.mutant_count_enumerated, ref.volume_bounds)
    # composite Simpson with step halving and Richardson extrapolation
    gap = 0.0
    for z in (0.2, 0.5, 0.9428, 0.99):
        prev, panels = None, 8
        while True:
            h = (z - 1.0) / (2 * panels)
            xs = [1.0 + i * h for i in range(2 * panels + 1)]
            ys = [dehn.F_integrand(x) for x in xs]
            s = h / 3 * (ys[0] + ys[-1] + 4 * sum(ys[1:-1:2]) + 2 * sum(ys[2:-1:2]))
            if prev is not None and abs(s - prev) < 1e-13:
                est = s + (s - prev) / 15
                break
            prev, panels = s, panels * 2
        gap = max(gap, abs(dehn.integral_F(z) - est))
    ok = worst <= 1e-12 and cone_ok and inv_ok and gap <= 1e-10
    return ok, (f"cone identity max rel err {worst:.1e} (1000 samples), cone=disk {cone_ok}, "
                f"certify mutation-invariant {inv_ok}, quadrature gap {gap:.1e}")


def criterion_9():
    Q = pretzel.q_threshold(2)
    rep = pretzel.certify((76, 77, 79, 81, 83), "Cusped")
    ok = abs(Q - 75.80) <= 0.01 and rep.thresholds_met and rep.preserved_lengths == 5
    return ok, f"Q(2) = {Q:.5f}, thresholds_met {rep.thresholds_met}, preserved {rep.preserved_lengths}"


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 10)}


@pytest.mark.parametrize("num", sorted(CRITERIA))
def test_criterion(num):
    ok, detail = CRITERIA[num]()
    _record(num, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    for i, fn in CRITERIA.items():
        _record(i, *fn())
