"""Thue inequalities ``|F_t(u, v)| <= d`` in rational integers.

Two sources of solution lists:

* :func:`known_abs_solutions` expands the complete solution lists that are
  known from the literature (right-hand side 1 for both families; all
  right-hand sides up to ``6t+7`` resp. ``120t+323`` in the large-t regimes).
  Results are tagged ``proof_backed``.
* :func:`brute_box` searches ``|v| <= v_max`` exhaustively and is tagged
  ``box_bounded``.

The trivial pair ``(0, 0)`` is never listed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Iterable

from relthue.forms import QUARTIC, SEXTIC, ParamForm, dual_t, make_form, orbit_maps
from relthue.roots import LARGE_T_START, fine_roots

PROOF_BACKED = "proof_backed"
BOX_BOUNDED = "box_bounded"

LEMMA_UNIT_RHS = {QUARTIC: "Chen-Voutier (|F| = 1, t >= 1)", SEXTIC: "Lettl-Petho-Voutier / Hoshi (|F| = 1)"}
LEMMA_LARGE_RHS = {QUARTIC: "Lettl-Petho-Voutier (|F| <= 6t+7, t >= 58)",
                   SEXTIC: "Lettl-Petho-Voutier (|F| <= 120t+323, t >= 89)"}

_UNIT_EXTRA = {QUARTIC: {1: [(1, 2), (2, -1)], 4: [(2, 3), (3, -2)]}}
_LARGE_GENERATORS = {
    QUARTIC: [(0, 1), (1, 1), (-1, 1), (1, 2), (-1, 2)],
    SEXTIC: [(0, 1), (1, 1), (1, 2), (-1, 3)],
}


@dataclass(frozen=True)
class AbsSolutionList:
    form: ParamForm
    rhs: int
    box: int | None
    pairs: tuple[tuple[int, int], ...]
    completeness: str
    source: str = ""
    values: dict = field(default_factory=dict, compare=False, repr=False)

    def second_coords(self) -> set[int]:
        return {v for _, v in self.pairs}

    def to_json(self) -> dict:
        return {
            "family": self.form.family,
            "t": self.form.t,
            "d_max": self.rhs,
            "v_max": self.box,
            "completeness": self.completeness,
            "source": self.source,
            "pairs": [[u, v, self.form.value(u, v)] for u, v in self.pairs],
        }


def _canonical(form: ParamForm, pairs: Iterable[tuple[int, int]], d_max: int) -> tuple:
    out = set()
    for u, v in pairs:
        if (u, v) == (0, 0):
            continue
        # re-check at emission
        if abs(form.value(u, v)) <= d_max:
            out.add((u, v))
    return tuple(sorted(out))


def _orbit_closure(family: str, pairs: Iterable[tuple[int, int]]) -> set[tuple[int, int]]:
    out = set()
    for u, v in pairs:
        out.update(orbit_maps(family, u, v))
    return out


def expand_scalings(primitives: AbsSolutionList, d_max: int) -> AbsSolutionList:
    """Add the multiples ``(g*u, g*v)``, ``g >= 2``, with ``g^n |F(u,v)| <= d_max``."""
    form = primitives.form
    n = form.n
    extra = []
    for u, v in primitives.pairs:
        val = abs(form.value(u, v))
        if val == 0:
            continue
        g = 2
        while g**n * val <= d_max:
            extra.append((g * u, g * v))
            g += 1
    pairs = _canonical(form, list(primitives.pairs) + extra, d_max)
    return replace(primitives, rhs=d_max, pairs=pairs)


def known_abs_solutions(family: str, t: int, d_max: int) -> AbsSolutionList | None:
    """Complete solution list from the cited lemmas, or None when not covered."""
    form = make_form(family, t)
    d_max = int(d_max)
    if d_max < 0:
        return AbsSolutionList(form, d_max, None, (), PROOF_BACKED, "empty")
    if d_max == 0:
        # F is irreducible over Q, so F(u, v) = 0 only at (0, 0)
        return AbsSolutionList(form, 0, None, (), PROOF_BACKED, "irreducibility")
    if family == QUARTIC and t < 0:
        base = known_abs_solutions(family, dual_t(family, t), d_max)
        if base is None:
            return None
        return replace(base, form=form, pairs=_canonical(form, ((v, u) for u, v in base.pairs), d_max),
                       source=base.source + " via duality")
    if family == SEXTIC and t < -1 and d_max > 1:
        base = known_abs_solutions(family, dual_t(family, t), d_max)
        if base is None:
            return None
        return replace(base, form=form, pairs=_canonical(form, ((v, u) for u, v in base.pairs), d_max),
                       source=base.source + " via duality")

    large_start = LARGE_T_START[family]
    large_cap = 6 * t + 7 if family == QUARTIC else 120 * t + 323
    if t >= large_start and d_max <= large_cap:
        gens = [p for p in _LARGE_GENERATORS[family] if abs(form.value(*p)) <= d_max]
        prim = AbsSolutionList(form, d_max, None, tuple(sorted(_orbit_closure(family, gens))),
                               PROOF_BACKED, LEMMA_LARGE_RHS[family])
        return expand_scalings(prim, d_max)
    if d_max == 1:
        pairs = [(1, 0), (0, 1)] + _UNIT_EXTRA.get(family, {}).get(t, [])
        if family == SEXTIC:
            pairs.append((1, -1))
        pairs += [(-u, -v) for u, v in pairs]
        return AbsSolutionList(form, 1, None, _canonical(form, pairs, 1), PROOF_BACKED,
                               LEMMA_UNIT_RHS[family])
    return None


def _walk(form: ParamForm, v: int, start: int, step: int, d_max: int, out: set) -> None:
    u = start
    while abs(form.value(u, v)) <= d_max:
        out.add((u, v))
        u += step


def _column(form: ParamForm, roots, v: int, d_max: int, out: set) -> None:
    """All u with |F(u, v)| <= d_max for a fixed v != 0.

    For fixed v != 0, g(u) = F(u, v) has n distinct real roots alpha_i * v and
    |g| is unimodal between consecutive roots and monotone outside them.  So
    walking away from each root until |g| first exceeds d_max misses nothing.
    """
    for lo, hi in roots:
        a, b = (lo * v, hi * v) if v > 0 else (hi * v, lo * v)
        first, last = math.floor(a), math.ceil(b)
        for u in range(first, last + 1):
            if abs(form.value(u, v)) <= d_max:
                out.add((u, v))
        _walk(form, v, last + 1, 1, d_max, out)
        _walk(form, v, first - 1, -1, d_max, out)


def brute_box(form: ParamForm, d_max: int, v_max: int = 1000) -> AbsSolutionList:
    """All pairs with ``|v| <= v_max`` and ``|F(u, v)| <= d_max`` (root-proximity search)."""
    d_max, v_max = int(d_max), int(v_max)
    out: set[tuple[int, int]] = set()
    if d_max >= 1:
        umax = 1
        while (umax + 1) ** form.n <= d_max:
            umax += 1
        out.update((u, 0) for u in range(-umax, umax + 1) if u)
        roots = fine_roots(form.family, form.t)
        for v in range(1, v_max + 1):
            _column(form, roots, v, d_max, out)
            _column(form, roots, -v, d_max, out)
    return AbsSolutionList(form, d_max, v_max, _canonical(form, out, d_max), BOX_BOUNDED,
                           f"box search |v| <= {v_max}")


@lru_cache(maxsize=2048)
def cached_brute_box(family: str, t: int, d_max: int, v_max: int) -> AbsSolutionList:
    return brute_box(make_form(family, t), d_max, v_max)


def naive_box(form: ParamForm, d_max: int, v_max: int) -> set[tuple[int, int]]:
    """Unpruned double loop; independent reference for small boxes.

    If |u| > R|v| + d_max^(1/n) with R >= max|alpha_i| then every factor
    |u - alpha_i v| exceeds d_max^(1/n), so ``|u| <= R*v_max + d_max`` suffices.
    """
    R = 1 + max(abs(c) for c in form.coeffs)
    umax = R * v_max + d_max
    return {(u, v) for v in range(-v_max, v_max + 1) for u in range(-umax, umax + 1)
            if (u, v) != (0, 0) and abs(form.value(u, v)) <= d_max}
