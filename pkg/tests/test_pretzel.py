import math
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from hypmut import pretzel
from hypmut.errors import DomainError, SizeGuardError
from hypmut.pretzel import GeneratorKind, MutationGenerators, Violation

BASE = (8, 9, 11, 13, 15)
GOOD = (76, 77, 79, 81, 83)


def family_tuples(n):
    """Strategy for valid family tuples with 2n+1 entries."""
    odds = st.lists(st.integers(3, 60).map(lambda k: 2 * k + 1), min_size=2 * n,
                    max_size=2 * n, unique=True)
    even = st.integers(4, 60).map(lambda k: 2 * k)
    return st.tuples(even, odds, st.integers(0, 2 * n)).map(
        lambda t: tuple(t[1][:t[2]] + [t[0]] + t[1][t[2]:]))


def same_link(a, b):
    """Brute force: b is one of the 2m dihedral images of a."""
    m = len(a)
    imgs = {tuple(a[(i + k) % m] for i in range(m)) for k in range(m)}
    imgs |= {tuple(reversed(x)) for x in imgs}
    return tuple(b) in imgs


def test_validate_examples():
    assert pretzel.validate(BASE) == []
    assert pretzel.validate((8, 9, 9, 13, 15)) == [Violation.DUPLICATE_ENTRY]
    assert pretzel.validate((8, 10, 11, 13, 15)) == [Violation.MORE_THAN_ONE_EVEN]
    assert Violation.EVEN_LENGTH in pretzel.validate((8, 9))
    assert Violation.ENTRY_TOO_SMALL in pretzel.validate((4, 9, 11, 13, 15))
    assert Violation.NO_EVEN_ENTRY in pretzel.validate((7, 9, 11, 13, 15))
    # even entry elsewhere is allowed, recorded as a note
    assert pretzel.validate((9, 8, 11, 13, 15)) == []
    assert pretzel.validation_notes((9, 8, 11, 13, 15))


def test_canonical_form_examples():
    assert pretzel.canonical_form((9, 7, 8)).q == (7, 8, 9)
    assert pretzel.canonical_form((15, 13, 11, 9, 8)).q == BASE


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=9))
def test_canonical_form_properties(q):
    c = pretzel.canonical_form(q)
    assert pretzel.canonical_form(c) == c
    assert pretzel.canonical_form(q[::-1]) == c
    assert pretzel.canonical_form(q[1:] + q[:1]) == c
    assert same_link(q, c.q)


def test_mutate():
    assert pretzel.mutate(BASE, 1).q == (9, 8, 11, 13, 15)
    assert pretzel.mutate(BASE, 4).q == (8, 9, 11, 15, 13)
    with pytest.raises(DomainError):
        pretzel.mutate(BASE, 5)


@given(family_tuples(2), st.integers(1, 4))
def test_mutate_involution(t, a):
    assert pretzel.mutate(pretzel.mutate(t, a), a).q == t


def test_generators():
    assert MutationGenerators.for_n(2).indices == (1, 2, 3, 4)
    assert MutationGenerators.for_n(2, "UnlinkedOnly").indices == (2, 3, 4)


def test_orbit_counts():
    assert len(pretzel.enumerate_mutants(BASE)) == 12
    assert len(pretzel.enumerate_mutants((8, 9, 11, 13, 15, 17, 19))) == 360
    assert pretzel.mutant_count_formula(2) == 12 and pretzel.mutant_count_formula(3) == 360


def test_orbit_brute_force_n2():
    forms = pretzel.enumerate_mutants(BASE)
    # no two listed forms are the same link
    for i, a in enumerate(forms):
        for b in forms[i + 1:]:
            assert not same_link(a.q, b.q)
    # every rearrangement is one of them
    for p in permutations(BASE):
        assert sum(same_link(p, f.q) for f in forms) == 1


@settings(max_examples=25, deadline=None)
@given(st.one_of(family_tuples(2), family_tuples(3)))
def test_orbit_formula_agreement(t):
    n = (len(t) - 1) // 2
    assert len(pretzel.enumerate_mutants(t)) == math.factorial(2 * n) // 2


@given(family_tuples(3))
def test_free_action(t):
    assert pretzel.stabilizer_order(t) == 1


def test_unlinked_count_reported():
    forms = pretzel.enumerate_mutants(BASE, MutationGenerators.for_n(2, GeneratorKind.UNLINKED_ONLY))
    assert len(forms) == 12
    assert pretzel.mutant_count_formula(2, "UnlinkedOnly") == 3


def test_size_guard():
    big = tuple([8] + [9 + 2 * i for i in range(12)])
    with pytest.raises(SizeGuardError):
        pretzel.enumerate_mutants(big)


def test_orbit_sorted_and_deterministic():
    a = pretzel.enumerate_mutants((8, 15, 11, 13, 9))
    b = pretzel.enumerate_mutants(BASE)
    assert a == b and [f.q for f in a] == sorted(f.q for f in a)


def test_q_threshold():
    assert pretzel.q_threshold(2) == pytest.approx(math.sqrt(20.76 ** 2 * 40 / 3 - 1))
    assert pretzel.q_threshold(2) == pytest.approx(75.80, abs=0.01)
    qs = [pretzel.q_threshold(n) for n in range(2, 21)]
    assert all(a < b for a, b in zip(qs, qs[1:]))
    n = 10 ** 4
    # (2n+1)(4n)/(2n-1) ~ 4n, so Q(n)/sqrt(n) -> 2 * 20.76
    assert pretzel.q_threshold(n) / math.sqrt(n) == pytest.approx(2 * 20.76, rel=0.01)
    assert pretzel.q_threshold_derived(2) < pretzel.q_threshold(2)


def test_volume_bounds():
    lo, hi = pretzel.volume_bounds(2, pretzel.V_OCT_PUBLISHED)
    assert lo == pytest.approx(5.4958, abs=1e-3) and hi == pytest.approx(36.639, abs=1e-3)
    lo, hi = pretzel.volume_bounds(3, pretzel.V_OCT_PUBLISHED)
    assert lo == pytest.approx(9.1597, abs=1e-3) and hi == pytest.approx(51.294, abs=1e-3)
    for n in range(2, 30):
        lo, hi = pretzel.volume_bounds(n)
        assert lo < hi


def test_certify_examples():
    rep = pretzel.certify(GOOD)
    assert rep.thresholds_met and rep.preserved_lengths == 5
    assert rep.mutant_count_enumerated == 12 == rep.mutant_count_formula
    assert rep.incommensurability is pretzel.Incommensurability.CERTIFIED_CONDITIONAL
    assert all(L >= rep.normalized_length_threshold for L in rep.normalized_lengths)
    assert any("sufficiently large" in s for s in rep.notes)

    bad = pretzel.certify(BASE)
    assert not bad.thresholds_met and 8 in bad.failing_entries
    assert bad.preserved_lengths == 0

    closed = pretzel.certify(GOOD, "Closed")
    assert closed.preserved_lengths == 6 and closed.mutant_count_formula == 3
    assert closed.volume_bounds[0] is None
    assert any("sufficiently large" in s for s in closed.notes)


def test_certify_partial_failure():
    rep = pretzel.certify((76, 77, 79, 81, 75))
    assert not rep.thresholds_met and rep.failing_entries == [75]


@settings(max_examples=20, deadline=None)
@given(family_tuples(2).map(lambda t: tuple(x + 70 for x in t)), st.integers(1, 4))
def test_certify_invariant_under_mutation(t, a):
    r1 = pretzel.certify(t)
    r2 = pretzel.certify(pretzel.mutate(t, a))
    for key in ("thresholds_met", "preserved_lengths", "mutant_count_enumerated",
                "mutant_count_formula", "volume_bounds", "q_threshold", "incommensurability"):
        assert getattr(r1, key) == getattr(r2, key)
    assert sorted(r1.normalized_lengths) == pytest.approx(sorted(r2.normalized_lengths))
