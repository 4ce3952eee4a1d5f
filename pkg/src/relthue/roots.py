"""Certified real-root isolation and root-gap bounds.

Polynomials are coefficient sequences, highest degree first, with integer or
Fraction entries.  Everything is exact: Sturm sequences are computed over Q
and intervals have rational endpoints.  An isolating interval is either a
pair ``(lo, hi)`` with ``lo < hi`` and exactly one root in the open interval,
or ``(r, r)`` for an exact rational root ``r``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from relthue.errors import IndistinguishableRoots, PrecisionExhausted
from relthue.forms import QUARTIC, SEXTIC, ParamForm, check_family, make_form

Poly = Sequence  # highest degree first

MAX_BISECTIONS = 4000


# -- dense polynomial helpers over Q --

def strip(p: Poly) -> list:
    p = list(p)
    while len(p) > 1 and p[0] == 0:
        p.pop(0)
    return p


def degree(p: Poly) -> int:
    p = strip(p)
    return -1 if p == [0] else len(p) - 1


def peval(p: Poly, x):
    acc = 0
    for c in p:
        acc = acc * x + c
    return acc


def sign_at(p: Poly, x) -> int:
    v = peval(p, x)
    return (v > 0) - (v < 0)


def deriv(p: Poly) -> list:
    n = len(p) - 1
    return strip([c * (n - i) for i, c in enumerate(p[:-1])]) if n > 0 else [0]


def divmod_poly(a: Poly, b: Poly) -> tuple[list, list]:
    a = [Fraction(c) for c in strip(a)]
    b = [Fraction(c) for c in strip(b)]
    if b == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [Fraction(0)], a
    q = []
    for i in range(len(a) - len(b) + 1):
        coef = a[i] / b[0]
        q.append(coef)
        if coef:
            for j, bj in enumerate(b):
                a[i + j] -= coef * bj
    return strip(q), strip(a[len(a) - len(b) + 1:] or [Fraction(0)])


def rem(a: Poly, b: Poly) -> list:
    return divmod_poly(a, b)[1]


def gcd_poly(a: Poly, b: Poly) -> list:
    a, b = strip(a), strip(b)
    while b != [0]:
        a, b = b, rem(a, b)
    lead = Fraction(a[0])
    return [Fraction(c) / lead for c in a]


def squarefree(p: Poly) -> list:
    g = gcd_poly(p, deriv(p))
    if len(g) == 1:
        return strip(p)
    return divmod_poly(p, g)[0]


def sturm_sequence(p: Poly) -> list[list]:
    """Sturm chain ``p, p', -rem(p, p'), ...`` of the square-free part of ``p``."""
    p = squarefree(p)
    seq = [p, deriv(p)]
    while degree(seq[-1]) > 0:
        r = rem(seq[-2], seq[-1])
        if r == [0]:
            break
        seq.append([-c for c in r])
    return seq


def sign_variations(seq: list[list], x) -> int:
    signs = [s for s in (sign_at(q, x) for q in seq) if s]
    return sum(1 for s0, s1 in zip(signs, signs[1:]) if s0 != s1)


def count_roots(seq: list[list], a, b) -> int:
    """Number of distinct real roots in ``(a, b]``."""
    return sign_variations(seq, a) - sign_variations(seq, b)


def cauchy_bound(p: Poly) -> Fraction:
    p = strip(p)
    lead = Fraction(p[0])
    return 1 + max((abs(Fraction(c) / lead) for c in p[1:]), default=Fraction(0))


def _split_point(p: Poly, a: Fraction, b: Fraction) -> Fraction:
    mid = (a + b) / 2
    step = (b - a) / 64
    k = 1
    while peval(p, mid) == 0:
        mid = (a + b) / 2 + k * step
        k = -k if k > 0 else -k + 1
    return mid


def refine_interval(p: Poly, iv: tuple, width) -> tuple[Fraction, Fraction]:
    """Bisect a sign-change interval of ``p`` down to ``width``."""
    a, b = Fraction(iv[0]), Fraction(iv[1])
    if a == b:
        return a, b
    width = Fraction(width)
    sa = sign_at(p, a)
    if sa == 0 or sa == sign_at(p, b):
        raise ValueError(f"no certified sign change on [{a}, {b}]")
    steps = 0
    while b - a > width:
        steps += 1
        if steps > MAX_BISECTIONS:
            raise PrecisionExhausted(f"refinement to width {width} exceeded {MAX_BISECTIONS} steps")
        mid = (a + b) / 2
        sm = sign_at(p, mid)
        if sm == 0:
            return mid, mid
        if sm == sa:
            a = mid
        else:
            b = mid
    return a, b


def isolate_real_roots(p: Poly, width=None) -> list[tuple[Fraction, Fraction]]:
    """Certified isolating intervals for all distinct real roots of ``p``.

    Intervals come back sorted, pairwise disjoint and, when ``width`` is given,
    no wider than ``width``.  Non-degenerate intervals have a sign change of
    the square-free part at their endpoints.
    """
    p = squarefree(p)
    if degree(p) <= 0:
        return []
    seq = sturm_sequence(p)
    bound = cauchy_bound(p)
    found = []
    stack = [(-bound, bound)]
    steps = 0
    while stack:
        a, b = stack.pop()
        k = count_roots(seq, a, b)
        if k == 0:
            continue
        if k == 1:
            found.append(refine_interval(p, (a, b), width if width is not None else b - a))
            continue
        steps += 1
        if steps > MAX_BISECTIONS:
            raise PrecisionExhausted("root separation exceeded the bisection cap")
        mid = _split_point(p, a, b)
        stack.append((a, mid))
        stack.append((mid, b))
    return sorted(found)


def certify_interval(p: Poly, iv: tuple) -> bool:
    """Check an isolating interval by sign change and by Sturm count."""
    p = squarefree(p)
    lo, hi = Fraction(iv[0]), Fraction(iv[1])
    if lo == hi:
        return peval(p, lo) == 0
    seq = sturm_sequence(p)
    return sign_at(p, lo) * sign_at(p, hi) < 0 and count_roots(seq, lo, hi) == 1


# -- root gaps of the family forms --

def isolate_roots(form: ParamForm, width) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals of the n real roots of ``F_t(x, 1)``."""
    ivs = isolate_real_roots(form.poly, Fraction(width))
    if len(ivs) != form.n:
        raise ArithmeticError(f"{form}: expected {form.n} real roots, found {len(ivs)}")
    return ivs


def _distance_bounds(ivs):
    n = len(ivs)
    lower = [[None] * n for _ in range(n)]
    upper = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            lo = ivs[j][0] - ivs[i][1]
            if lo <= 0:
                raise IndistinguishableRoots(f"intervals {i} and {j} touch; refine first")
            hi = ivs[j][1] - ivs[i][0]
            lower[i][j] = lower[j][i] = lo
            upper[i][j] = upper[j][i] = hi
    return lower, upper


def _products(mat, i, n):
    out = Fraction(1)
    for j in range(n):
        if j != i:
            out *= mat[i][j]
    return out


def gap_enclosure(ivs) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """``(A_lower, A_upper, B_lower, B_upper)`` for sorted disjoint intervals."""
    ivs = sorted((Fraction(a), Fraction(b)) for a, b in ivs)
    n = len(ivs)
    lower, upper = _distance_bounds(ivs)
    a_lo = min(lower[i][i + 1] for i in range(n - 1))
    a_hi = min(upper[i][i + 1] for i in range(n - 1))
    b_lo = min(_products(lower, i, n) for i in range(n))
    b_hi = min(_products(upper, i, n) for i in range(n))
    return a_lo, a_hi, b_lo, b_hi


def gap_stats(ivs) -> tuple[Fraction, Fraction]:
    """Certified lower bounds on the minimal root distance A and on B.

    ``B`` is the minimum over roots of the product of distances to the others.
    """
    a_lo, _, b_lo, _ = gap_enclosure(ivs)
    return a_lo, b_lo


@dataclass(frozen=True)
class RootGapData:
    form: ParamForm
    root_intervals: tuple[tuple[Fraction, Fraction], ...]
    A_lower: Fraction
    B_lower: Fraction
    A_upper: Fraction
    B_upper: Fraction

    def to_json(self) -> dict:
        return {
            "family": self.form.family,
            "t": self.form.t,
            "intervals": [[str(a), str(b)] for a, b in self.root_intervals],
            "A_lower": str(self.A_lower),
            "B_lower": str(self.B_lower),
            "A_lower_decimal": f"{float(self.A_lower):.9f}",
            "B_lower_decimal": f"{float(self.B_lower):.9f}",
        }


def root_gap_data(form: ParamForm, width=None, rel_tol=Fraction(1, 10**9),
                  max_halvings: int = 80) -> RootGapData:
    """Isolate, then halve interval widths until A and B stabilise."""
    cb = cauchy_bound(form.poly)
    width = Fraction(width) if width is not None else cb / 2**20
    ivs = isolate_roots(form, width)
    a_lo, a_hi, b_lo, b_hi = gap_enclosure(ivs)
    for _ in range(max_halvings):
        width /= 2
        ivs = [refine_interval(form.poly, iv, width) for iv in ivs]
        new = gap_enclosure(ivs)
        stable = (new[0] - a_lo <= rel_tol * new[0]) and (new[2] - b_lo <= rel_tol * new[2])
        a_lo, a_hi, b_lo, b_hi = new
        if stable:
            break
    return RootGapData(form, tuple(ivs), a_lo, b_lo, a_hi, b_hi)


@lru_cache(maxsize=4096)
def cached_root_data(family: str, t: int) -> RootGapData:
    return root_gap_data(make_form(family, t))


@lru_cache(maxsize=4096)
def fine_roots(family: str, t: int, reverse: bool = False, bits: int = 48):
    """Isolating intervals of width ``2**-bits`` for ``F(x,1)`` (or ``F(1,y)``)."""
    form = make_form(family, t)
    p = form.reversed_poly if reverse else form.poly
    width = Fraction(1, 2**bits)
    return tuple(isolate_real_roots(p, width))


LARGE_T = "large_t"
SMALL_T = "small_t"

_REGIME_TABLE = {
    (QUARTIC, LARGE_T): (Fraction("0.9833"), Fraction("58.1")),
    (QUARTIC, SMALL_T): (Fraction("0.8284"), Fraction("4.6114")),
    (SEXTIC, LARGE_T): (Fraction("0.4986"), Fraction("101.83")),
    (SEXTIC, SMALL_T): (Fraction("0.4646"), Fraction("3.3121")),
}

# first parameter of the large-t regime (after dualising to the canonical half)
LARGE_T_START = {QUARTIC: 58, SEXTIC: 89}


def regime_table(family: str, regime: str) -> tuple[Fraction, Fraction]:
    """Tabulated lower bounds ``(A, B)`` for the given parameter regime."""
    return _REGIME_TABLE[(check_family(family), regime)]


def regime_of(family: str, t: int) -> str:
    """Regime of a parameter already in the canonical half (t > 0, resp. t >= -1)."""
    return LARGE_T if t >= LARGE_T_START[check_family(family)] else SMALL_T
