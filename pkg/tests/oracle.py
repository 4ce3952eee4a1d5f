"""Independent reference: direct enumeration of x, y over a disc of radius R.

Everything here is recomputed from scratch with numpy int64 arrays, in
"split" coordinates z = (c1 + c2*i*sqrt(m)) / s, s = 2 for m = 3 (mod 4) and
s = 1 otherwise.  It shares no code with the package beyond the ring and pair
containers used to report results.
"""

import math

import numpy as np


def _coeffs(family, t):
    if family == "quartic":
        return [1, -t, -6, t, 1]
    return [1, -2 * t, -(5 * t + 15), -20, 5 * t, 2 * t + 6, 1]


def disc_points(m, R):
    """Split coordinates (c1, c2) of all ring elements with |z| <= R."""
    s = 2 if m % 4 == 3 else 1
    lim = s * R
    pts = []
    for c2 in range(-lim, lim + 1):
        for c1 in range(-lim, lim + 1):
            if s == 2 and (c1 - c2) % 2:
                continue
            if c1 * c1 + m * c2 * c2 <= (s * R) ** 2:
                pts.append((c1, c2))
    return np.array(pts, dtype=np.int64)


def _powers(P, m, n):
    A = [np.ones(len(P), dtype=np.int64)]
    B = [np.zeros(len(P), dtype=np.int64)]
    for _ in range(n):
        a, b = A[-1], B[-1]
        A.append(a * P[:, 0] - m * b * P[:, 1])
        B.append(a * P[:, 1] + b * P[:, 0])
    return A, B


def relative_solutions(family, t, m, R=40, chunk=400):
    """All (x, y) in split coordinates with |x|, |y| <= R and |F_t(x, y)| <= 1."""
    c = _coeffs(family, t)
    n = len(c) - 1
    s = 2 if m % 4 == 3 else 1
    P = disc_points(m, R)
    XA, XB = _powers(P, m, n)
    bound = s ** n
    out = []
    for start in range(0, len(P), chunk):
        sl = slice(start, start + chunk)
        FA = np.zeros((len(P[sl]), len(P)), dtype=np.int64)
        FB = np.zeros_like(FA)
        for k, ck in enumerate(c):
            if ck == 0:
                continue
            xa, xb = XA[n - k][sl, None], XB[n - k][sl, None]
            ya, yb = XA[k][None, :], XB[k][None, :]
            FA += ck * (xa * ya - m * xb * yb)
            FB += ck * (xa * yb + xb * ya)
        # |F|^2 = (FA^2 + m FB^2) / s^(2n) <= 1 forces |FA|, |FB| <= s^n
        ii, jj = np.nonzero((np.abs(FA) <= bound) & (np.abs(FB) <= bound))
        for i, j in zip(ii, jj):
            fa, fb = int(FA[i, j]), int(FB[i, j])
            if fa * fa + m * fb * fb <= bound * bound:
                x = tuple(int(v) for v in P[start + i])
                y = tuple(int(v) for v in P[j])
                out.append((x, y))
    return out


def to_basis(m, c):
    """Split coordinates to integral-basis coordinates."""
    c1, c2 = c
    if m % 4 == 3:
        return ((c1 - c2) // 2, c2)
    return (c1, c2)


def squarefree_values(limit):
    return [m for m in range(1, limit + 1)
            if all(m % (p * p) for p in range(2, math.isqrt(m) + 1))]
