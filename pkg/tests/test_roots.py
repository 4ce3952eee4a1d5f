from fractions import Fraction

import pytest

from relthue.errors import IndistinguishableRoots, ReducibleParameter
from relthue.forms import QUARTIC, SEXTIC, make_form
from relthue.roots import (
    LARGE_T,
    SMALL_T,
    certify_interval,
    gap_stats,
    isolate_real_roots,
    isolate_roots,
    regime_of,
    regime_table,
    root_gap_data,
    sign_at,
)


def test_quartic_t1_isolation():
    f = make_form(QUARTIC, 1)
    ivs = isolate_roots(f, Fraction(1, 1024))
    assert len(ivs) == 4
    for lo, hi in ivs:
        assert hi - lo <= Fraction(1, 1024)
        assert certify_interval(f.poly, (lo, hi))
        assert sign_at(f.poly, lo) * sign_at(f.poly, hi) < 0
    assert all(a[1] < b[0] for a, b in zip(ivs, ivs[1:]))


def test_sextic_t2_isolation():
    ivs = isolate_roots(make_form(SEXTIC, 2), Fraction(1, 1024))
    assert len(ivs) == 6


def test_excluded_upstream():
    with pytest.raises(ReducibleParameter):
        isolate_roots(make_form(QUARTIC, 3), Fraction(1, 1024))


def test_rational_root():
    # (x - 1/2)(x - 3)(x + 2)
    p = [2, -3, -11, 6]
    ivs = isolate_real_roots(p, Fraction(1, 2**20))
    assert len(ivs) == 3
    assert any(lo <= Fraction(1, 2) <= hi for lo, hi in ivs)


def test_gap_stats_touching():
    with pytest.raises(IndistinguishableRoots):
        gap_stats([(Fraction(0), Fraction(1)), (Fraction(1), Fraction(2))])


def test_gap_stats_monotone_under_refinement():
    f = make_form(QUARTIC, 5)
    coarse = gap_stats(isolate_roots(f, Fraction(1, 64)))
    fine = gap_stats(isolate_roots(f, Fraction(1, 2**30)))
    assert fine[0] >= coarse[0] and fine[1] >= coarse[1]


def test_root_gap_values():
    rd = root_gap_data(make_form(QUARTIC, 1))
    assert abs(float(rd.A_lower) - 0.832079) < 1e-6
    assert abs(float(rd.B_lower) - 4.611445) < 1e-6
    assert rd.A_lower <= rd.A_upper and rd.B_lower <= rd.B_upper
    rd = root_gap_data(make_form(SEXTIC, -1))
    assert rd.A_lower > Fraction("0.4646")
    assert rd.B_lower > Fraction("3.3121")


def test_regimes():
    assert regime_table(QUARTIC, LARGE_T) == (Fraction("0.9833"), Fraction("58.1"))
    assert regime_table(SEXTIC, SMALL_T) == (Fraction("0.4646"), Fraction("3.3121"))
    assert regime_of(QUARTIC, 57) == SMALL_T and regime_of(QUARTIC, 58) == LARGE_T
    assert regime_of(SEXTIC, 88) == SMALL_T and regime_of(SEXTIC, 89) == LARGE_T


def test_json():
    d = root_gap_data(make_form(QUARTIC, 2)).to_json()
    assert d["family"] == "quartic" and len(d["intervals"]) == 4
