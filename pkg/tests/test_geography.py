from fractions import Fraction

import pytest

from covergeo.fields import primes_between
from covergeo.geography import (
    SurfaceInvariants,
    bmy_char0_check,
    c2_floor_check,
    canonical_map_bounds,
    char3_example,
    clifford_case,
    delta_degree,
    intersection_floor_check,
    kappa_conjectural,
    kappa_limit_gap,
    kappa_proven_lower,
    kappa_report,
    noether_check,
    raynaud_invariants,
    sb_lower_bound_check,
    smallest_admissible_l,
)

CHAR2_REFERENCE = SurfaceInvariants(p=2, K2=14, c2=-2, chi=1)


def test_noether_check():
    assert noether_check(SurfaceInvariants(p=5, K2=64, c2=-40, chi=2))
    assert noether_check(CHAR2_REFERENCE)
    assert not noether_check(SurfaceInvariants(p=2, K2=14, c2=0, chi=1))


def test_c2_floor():
    inv = raynaud_invariants(5, 4)
    assert c2_floor_check(inv) and inv.c2 == -4 * (inv.q - 1)
    assert not c2_floor_check(
        SurfaceInvariants(p=5, K2=0, c2=-4 * 10 - 1, chi=0, q=11)
    )
    assert c2_floor_check(SurfaceInvariants(p=5, K2=0, c2=0, chi=0, q=11))


def test_kappa_values():
    assert kappa_conjectural(5) == Fraction(1, 32)
    assert kappa_conjectural(7) == Fraction(5, 88)
    assert kappa_proven_lower(5) == Fraction(1, 32)
    assert kappa_proven_lower(7) == 0
    assert kappa_proven_lower(13) == Fraction(1, 20)
    assert kappa_proven_lower(3) is None
    assert kappa_report(3).note == "positive, no explicit value"
    with pytest.raises(ValueError):
        kappa_conjectural(3)
    with pytest.raises(ValueError):
        kappa_conjectural(6)


def test_kappa_orderings():
    for p in primes_between(7, 199):
        assert kappa_conjectural(p) > kappa_proven_lower(p)
    gaps = [kappa_limit_gap(p) for p in primes_between(5, 500)]
    assert all(g > 0 for g in gaps)
    assert gaps == sorted(gaps, reverse=True)  # increases toward 1/12
    for p in primes_between(100, 999):
        assert abs(kappa_conjectural(p) - Fraction(1, 12)) < Fraction(1, p)


def test_raynaud_invariants():
    inv = raynaud_invariants(5, 4)
    assert (inv.chi, inv.K2, inv.c2, inv.q) == (2, 64, -40, 11)
    inv = raynaud_invariants(7, 8)
    assert (inv.chi, inv.K2, inv.c2, inv.q) == (20, 352, -112, 29)
    assert 12 * inv.chi - inv.K2 == inv.c2
    assert Fraction(inv.chi, inv.K2) == kappa_conjectural(7)
    assert inv.g == 3


def test_raynaud_rejects_odd_l():
    with pytest.raises(ValueError, match="even"):
        raynaud_invariants(5, 1)
    with pytest.raises(ValueError):
        raynaud_invariants(4, 2)


def test_raynaud_family_identities():
    for p in (5, 7, 11, 13):
        assert smallest_admissible_l(p, 3) == [2, 4, 6]
        for l in (2, 4, 6):
            inv = raynaud_invariants(p, l)
            assert noether_check(inv)
            assert inv.c2 == -4 * (inv.q - 1)
            assert Fraction(inv.chi, inv.K2) == kappa_conjectural(p)


def test_char3_example():
    ex = char3_example(2)
    assert (ex.q - 1, ex.m, ex.c2_upper) == (20, 8, -56)
    ex = char3_example(3)
    assert (ex.q - 1, ex.m, ex.c2_upper) == (299, 26, -1118)
    with pytest.raises(ValueError):
        char3_example(1)


def test_char3_ratio_tends_to_minus_four():
    ratios = [char3_example(n).ratio for n in range(2, 9)]
    assert all(r > -4 for r in ratios)
    assert ratios == sorted(ratios, reverse=True)  # decreasing toward -4
    assert abs(ratios[4] + 4) < Fraction(1, 10)  # n = 6


def test_bmy_fails_on_negative_c2():
    assert not bmy_char0_check(raynaud_invariants(5, 4))


def test_canonical_map_bounds():
    g_max, d_max = canonical_map_bounds(5, 3, Fraction(1, 32))
    assert g_max == 41
    assert d_max == 128
    with pytest.raises(ValueError):
        canonical_map_bounds(5, 2, Fraction(1, 32))


def test_sb_lower_bound():
    report = sb_lower_bound_check(raynaud_invariants(7, 8))
    assert report.applicable and report.passed
    assert report.threshold == Fraction(224, 3)
    report = sb_lower_bound_check(
        SurfaceInvariants(p=5, K2=8, c2=0, chi=0, q=4, g=3)
    )
    assert report.applicable and not report.passed  # 8 > 8 fails
    report = sb_lower_bound_check(
        SurfaceInvariants(p=5, K2=8, c2=0, chi=0, q=4, g=2)
    )
    assert not report.applicable


def test_intersection_floor():
    assert not intersection_floor_check(Fraction(6), 1, 8, 11)
    assert intersection_floor_check(Fraction(6), 1, 2 * 1 * 10, 11)
    assert intersection_floor_check(Fraction(6), 0, 0, 11)
    with pytest.raises(ValueError):
        intersection_floor_check(Fraction(0), 1, 8, 11)


def test_clifford_cases():
    assert clifford_case(4, 3, 2) == "case1"
    assert clifford_case(2, 2, 2) == "case2"
    assert clifford_case(4, 5, 2) == "inconsistent"


def test_delta_degree():
    assert delta_degree(2, 5) == 5
    assert delta_degree(2, 3) == 6
    with pytest.raises(ValueError):
        delta_degree(13, 5)
    with pytest.raises(ValueError):
        delta_degree(3, 5)


def test_invariants_serialization_roundtrip():
    from covergeo.geography import invariants_from_json, invariants_to_json

    inv = raynaud_invariants(7, 8)
    text = invariants_to_json(inv)
    assert invariants_from_json(text) == inv
    assert invariants_to_json(invariants_from_json(text)) == text
