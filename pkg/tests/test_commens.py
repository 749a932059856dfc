import math

import pytest
from hypothesis import given, settings, strategies as st

from hypmut import commens, packing
from hypmut.commens import HoroballPattern
from hypmut.errors import DomainError
from hypmut.pretzel import Incommensurability

S3 = math.sqrt(3)


def lattice(b1, b2, marks=None):
    return HoroballPattern([b1, b2], marks or [((0.0, 0.0), 1.0)])


# exact point groups (rotation orders) of analytically constructed patterns
CONTROLS = [
    (lattice((1, 0), (0, 1)), {2, 4}),
    (lattice((1, 0), (0.5, S3 / 2)), {2, 3, 6}),
    (lattice((2, 0), (0, 1.236)), {2}),
    (lattice((1, 0), (0.3, 0.8)), {2}),                       # oblique
    (lattice((1, 0), (0.5, 1.3)), {2}),                       # rhombic (centered rect)
    (lattice((1, 0), (0, S3), [((0, 0), 1.0), ((0.5, S3 / 2), 1.0)]), {2, 3, 6}),  # hex supercell
    (lattice((1, 0), (0.5, S3 / 2), [((0, 0), 1.0), ((0.5, S3 / 6), 0.5)]), {3}),  # p3-like
    (lattice((1, 0), (0, 1), [((0, 0), 1.0), ((0.5, 0.5), 0.5)]), {2, 4}),
]


@pytest.mark.parametrize("pattern,expected", CONTROLS)
def test_controls(pattern, expected):
    assert commens.rotation_orders(pattern) == expected


def test_pattern_validation():
    with pytest.raises(DomainError):
        lattice((1, 0), (2, 0))
    with pytest.raises(DomainError):
        lattice((1, 0), (0, 1), [((0, 0), 1.5)])
    with pytest.raises(DomainError):
        commens.rotation_orders(lattice((1, 0), (0, 1)), tol=0.1)


@pytest.mark.parametrize("n", range(2, 21))
def test_crossing_patterns_only_order_two(n):
    for rect in (packing.solve_crossing_rectangle(n),
                 packing.solve_knot_rectangle(n, cross_check=False)):
        assert 1 < rect.ell_w < 2
        p = commens.crossing_pattern(n, rect)
        assert commens.rotation_orders(p) == {2}


def test_crossing_pattern_n2():
    p = commens.crossing_pattern(2, packing.solve_crossing_rectangle(2))
    assert p.basis[0] == pytest.approx([2.0, 0.0])
    assert p.basis[1] == pytest.approx([0.0, math.sqrt(5) - 1])
    assert all(d == 1.0 for _, d in p.marks)
    # invariant under both basis translations
    for v in p.basis:
        assert commens._is_period(p, v, 1e-9)


@settings(deadline=None)
@given(st.floats(1.01, 3.0), st.floats(0.2, 5.0))
def test_rectangular_scale_and_transpose_invariance(aspect, scale):
    p = lattice((1, 0), (0, aspect))
    q = p.scaled(scale)
    t = lattice((aspect, 0), (0, 1))
    orders = commens.rotation_orders(p)
    assert commens.rotation_orders(q) == orders == commens.rotation_orders(t)


def lattice_orders(b1, b2):
    """Exact rotation orders of a one-mark lattice from its Gauss-reduced basis,
    or None when the shape is too close to square/hexagonal to call."""
    u, v = list(map(float, b1)), list(map(float, b2))
    dot = lambda a, b: a[0] * b[0] + a[1] * b[1]
    while True:
        if dot(u, u) > dot(v, v):
            u, v = v, u
        mu = round(dot(u, v) / dot(u, u))
        if mu == 0:
            break
        v = [v[0] - mu * u[0], v[1] - mu * u[1]]
    ratio = math.sqrt(dot(v, v) / dot(u, u))
    cos = abs(dot(u, v)) / math.sqrt(dot(u, u) * dot(v, v))
    if abs(ratio - 1) < 1e-12 and cos < 1e-12:
        return {2, 4}
    if abs(ratio - 1) < 1e-12 and abs(cos - 0.5) < 1e-12:
        return {2, 3, 6}
    if abs(ratio - 1) < 1e-6 and (cos < 1e-6 or abs(cos - 0.5) < 1e-6):
        return None
    return {2}


@settings(deadline=None)
@given(st.floats(-1.0, 1.0), st.floats(0.2, 2.0))
def test_soundness_on_random_lattices(x, y):
    expected = lattice_orders((1, 0), (x, y))
    if expected is None:
        return
    assert commens.rotation_orders(lattice((1, 0), (x, y))) == expected


@pytest.mark.parametrize("b2", [(0.5, 0.5), (0.5, S3 / 2), (0.0, 1.0), (1.5, S3 / 2), (0.3, 0.7)])
def test_soundness_special_lattices(b2):
    assert commens.rotation_orders(lattice((1, 0), b2)) == lattice_orders((1, 0), b2)


def test_nearest_string_analysis():
    p = commens.crossing_pattern(2, packing.solve_crossing_rectangle(2))
    r = commens.nearest_string_analysis(p)
    assert r.minimum == pytest.approx(1.2360680, abs=1e-7)
    assert r.unique and r.direction == "w" and r.assertion_holds
    edge = commens.nearest_string_analysis(lattice((2, 0), (0, 2)))
    assert not edge.unique and not edge.in_range and edge.assertion_holds is None


@given(st.floats(0.01, 10.0))
def test_diagonal_exceeds_two(lw):
    r = commens.nearest_string_analysis(lattice((2, 0), (0, lw)))
    assert r.distances["diagonal"] > 2


def test_checklist():
    rep = commens.commensurability_checklist((76, 77, 79, 81, 83))
    assert rep.all_passed and rep.conclusion is Incommensurability.CERTIFIED_CONDITIONAL
    assert rep.rotation_orders == {2}
    assert commens.commensurability_checklist((-2, 3, 7)).conclusion is \
        Incommensurability.NOT_APPLICABLE
    two_even = commens.commensurability_checklist((76, 78, 79, 81, 83))
    sym = [i for i in two_even.items if "strong inversion" in i.name][0]
    assert not sym.passed
    assert two_even.conclusion is Incommensurability.NOT_APPLICABLE
