"""Property-test groups; each ``GROUPS`` entry is a standalone suite."""

import math
from fractions import Fraction

import numpy as np
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from relthue.absolute import brute_box, naive_box
from relthue.forms import (
    QUARTIC,
    SEXTIC,
    SolutionPair,
    dual,
    dual_t,
    evaluate,
    is_valid_t,
    make_form,
    orbit,
)
from relthue.quadring import QuadInt, coords_split, enumerate_disc, from_split, make_ring, mul, norm
from relthue.roots import (
    certify_interval,
    count_roots,
    gap_enclosure,
    isolate_roots,
    sign_at,
    sturm_sequence,
)
from relthue.solver import SEARCH, solve_relative

RINGS = [1, 2, 3, 5, 6, 7, 10, 11, 15, 19]
FAST = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
SLOW = settings(max_examples=12, deadline=None, suppress_health_check=[HealthCheck.too_slow])

ms = st.sampled_from(RINGS)
small = st.integers(-50, 50)
big = st.integers(-10**9, 10**9)
families = st.sampled_from([QUARTIC, SEXTIC])


def valid_t(lo=-60, hi=60):
    return st.tuples(families, st.integers(lo, hi)).filter(lambda ft: is_valid_t(*ft))


# -- quad-ring --

@FAST
@given(ms, big, big, big, big)
def test_norm_multiplicative(m, a1, a2, b1, b2):
    r = make_ring(m)
    z, w = QuadInt(a1, a2, r), QuadInt(b1, b2, r)
    assert norm(mul(z, w)) == norm(z) * norm(w)


@FAST
@given(ms, big, big)
def test_norm_nonnegative_integer(m, a1, a2):
    z = QuadInt(a1, a2, make_ring(m))
    n = norm(z)
    assert isinstance(n, int) and n >= 0
    assert (n == 0) == (a1 == 0 and a2 == 0)
    assert math.isclose(abs(complex(z)) ** 2, n, rel_tol=1e-9, abs_tol=1e-6)


@FAST
@given(ms, big, big)
def test_coords_split_roundtrip(m, a1, a2):
    r = make_ring(m)
    z = QuadInt(a1, a2, r)
    c1, c2 = coords_split(z)
    assert c2 == a2
    if r.half_basis:
        assert (c1 - c2) % 2 == 0
    assert from_split(r, c1, c2) == z


@settings(max_examples=25, deadline=None)
@given(ms, st.integers(0, 100**2))
def test_enumeration_completeness(m, r_sq):
    r = make_ring(m)
    got = [z.coords() for z in enumerate_disc(r, r_sq)]
    # box implied by the norm: |a2| <= 2 sqrt(r/m), |a1| <= sqrt(r) + |a2|
    b2 = 2 * math.isqrt(r_sq // m + 1) + 2
    b1 = math.isqrt(r_sq) + b2 + 2
    want = sorted((a1, a2) for a1 in range(-b1, b1 + 1) for a2 in range(-b2, b2 + 1)
                  if r.norm_coords(a1, a2) <= r_sq)
    assert got == want


# -- forms --

elements = st.tuples(small, small)


@FAST
@given(valid_t(), ms, elements, elements)
def test_orbit_invariance(ft, m, x, y):
    family, t = ft
    r = make_ring(m)
    f = make_form(family, t)
    p = SolutionPair(QuadInt(*x, r), QuadInt(*y, r))
    base = evaluate(f, p.x, p.y).norm()
    for q in orbit(family, p):
        assert evaluate(f, q.x, q.y).norm() == base


@FAST
@given(valid_t(-10**6, 10**6), ms, elements, elements)
def test_duality_identity(ft, m, x, y):
    family, t = ft
    r = make_ring(m)
    p = SolutionPair(QuadInt(*x, r), QuadInt(*y, r))
    t2, q = dual(family, t, p)
    assert t2 == dual_t(family, t)
    assert evaluate(make_form(family, t), p.x, p.y) == evaluate(make_form(family, t2), q.x, q.y)


@FAST
@given(valid_t(), st.sampled_from([1, 3, 7]), elements, elements, st.data())
def test_unit_homogeneity(ft, m, x, y, data):
    family, t = ft
    r = make_ring(m)
    f = make_form(family, t)
    u = data.draw(st.sampled_from(r.units()))
    X, Y = QuadInt(*x, r), QuadInt(*y, r)
    assert evaluate(f, u * X, u * Y) == u ** f.n * evaluate(f, X, Y)


@settings(max_examples=20, deadline=None)
@given(valid_t(), ms)
def test_zero_locus(ft, m):
    family, t = ft
    r = make_ring(m)
    f = make_form(family, t)
    pts = enumerate_disc(r, 9)
    for x in pts:
        for y in pts:
            if x or y:
                assert evaluate(f, x, y)


# -- root analysis --

@settings(max_examples=40, deadline=None)
@given(valid_t(-500, 500), st.integers(6, 40))
def test_sturm_certificates(ft, bits):
    family, t = ft
    f = make_form(family, t)
    width = Fraction(1, 2**bits)
    ivs = isolate_roots(f, width)
    seq = sturm_sequence(f.poly)
    lo_all = min(a for a, _ in ivs) - 1
    hi_all = max(b for _, b in ivs) + 1
    assert count_roots(seq, lo_all, hi_all) == f.n
    for lo, hi in ivs:
        assert hi - lo <= width
        assert certify_interval(f.poly, (lo, hi))
        if lo != hi:
            assert sign_at(f.poly, lo) * sign_at(f.poly, hi) < 0
    # float oracle: numpy roots lie in the enclosures, gap bounds are directional
    approx = sorted(np.roots([float(c) for c in f.coeffs]).real)
    for (lo, hi), a in zip(ivs, approx):
        assert float(lo) - 1e-7 * max(1, abs(a)) <= a <= float(hi) + 1e-7 * max(1, abs(a))
    a_lo, a_hi, b_lo, _ = gap_enclosure(ivs)
    true_a = min(b - a for a, b in zip(approx, approx[1:]))
    assert float(a_lo) <= true_a * (1 + 1e-9) + 1e-12


# -- absolute inequalities --

@settings(max_examples=15, deadline=None)
@given(valid_t(-80, 80), st.integers(1, 30), st.integers(1, 25))
def test_box_pruning_sound(ft, d, v_max):
    family, t = ft
    f = make_form(family, t)
    lst = brute_box(f, d, v_max)
    assert set(lst.pairs) == naive_box(f, d, v_max)
    assert all(abs(f.value(u, v)) <= d for u, v in lst.pairs)


# -- relative solver --

def _pairs(report):
    return {(p.x.coords(), p.y.coords()) for p in report.solutions} | \
        {((-p.x).coords(), (-p.y).coords()) for p in report.solutions}


@SLOW
@given(valid_t(-40, 40).filter(lambda ft: is_valid_t(ft[0], dual_t(*ft))), st.sampled_from([1, 2, 3, 5, 7]))
def test_duality_transport(ft, m):
    family, t = ft
    a = _pairs(solve_relative(family, t, m, SEARCH, compare_golden=False))
    b = _pairs(solve_relative(family, dual_t(family, t), m, SEARCH, compare_golden=False))
    assert {(y, x) for x, y in a} == b


@SLOW
@given(valid_t(-40, 40), st.sampled_from([1, 3]))
def test_unit_closure(ft, m):
    family, t = ft
    r = make_ring(m)
    sols = _pairs(solve_relative(family, t, m, SEARCH, compare_golden=False))
    for u in r.units():
        for x, y in sols:
            ux, uy = (u * QuadInt(*x, r)).coords(), (u * QuadInt(*y, r)).coords()
            assert (ux, uy) in sols


@SLOW
@given(valid_t(-40, 40), st.sampled_from(RINGS))
def test_soundness_and_base_pairs(ft, m):
    family, t = ft
    r = make_ring(m)
    f = make_form(family, t)
    rep = solve_relative(family, t, m, SEARCH, compare_golden=False)
    for p in rep.solutions:
        assert evaluate(f, p.x, p.y).norm() <= 1
    keys = {p.key() for p in rep.solutions}
    assert not any((-p).key() in keys for p in rep.solutions if p.x or p.y)
    base = [(0, 0, 0, 0), (0, 0, 1, 0), (1, 0, 0, 0)]
    if family == SEXTIC:
        base.append((-1, 0, 1, 0))  # (1, -1) up to sign
    pairs = _pairs(rep)
    for a, b, c, d in base:
        assert ((a, b), (c, d)) in pairs


GROUPS = {
    "norm multiplicativity": [test_norm_multiplicative, test_norm_nonnegative_integer],
    "enumeration completeness": [test_enumeration_completeness, test_coords_split_roundtrip],
    "orbit/duality/homogeneity identities": [test_orbit_invariance, test_duality_identity,
                                             test_unit_homogeneity, test_zero_locus],
    "Sturm-certificate validity": [test_sturm_certificates],
    "absolute-box pruning": [test_box_pruning_sound],
    "solver duality/unit closure/soundness": [test_duality_transport, test_unit_closure,
                                              test_soundness_and_base_pairs],
}
