"""Complete resolution of ``|F_t(x, y)| <= 1`` in ``x, y`` from Z_M.

Pipeline for one ``(family, t, m)``:

1. Move t to the canonical half with the duality ``F_t(x, y) = F_t'(y, x)``.
2. Pick the (eps, eta) preset, certify that the root gaps of ``F_t'`` beat the
   tabulated A and B, derive the bound set and the eight case rules.
3. Resolve the absolute inequality of each rule: trivially (rhs < 1), from
   the cited solution tables, or by a box search (search mode only).
4. Turn the resolved rules into finite sets of split components that a
   solution with ``|y| > T`` may have (``component_constraints``).
5. Enumerate:

   * every y with ``|y| <= T``, all x found by root proximity;
   * "explicit" regime (both components constrained): every y with
     ``|y| > T`` built from the component sets, all x by root proximity;
   * "ray" regime (one component j constrained): every x with ``|x| <= T``,
     all y by root proximity; for ``|x|, |y| > T`` the relation
     ``x2 y1 = x1 y2`` leaves one free integer on each pair of fixed
     j-components, which :func:`ray_solutions` settles; ``c_j(x) = c_j(y) = 0``
     is settled by the zero rule of component j.

Every emitted pair is re-checked exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from relthue.absolute import (
    BOX_BOUNDED,
    PROOF_BACKED,
    AbsSolutionList,
    cached_brute_box,
    known_abs_solutions,
)
from relthue.bounds import (
    Bound,
    BoundParams,
    BoundSet,
    CaseRule,
    case_rules,
    derive_bounds,
    nth_root,
    presets,
    scenario_for,
)
from relthue.errors import DegenerateRay, UnresolvedCase
from relthue.forms import (
    QUARTIC,
    SEXTIC,
    ParamForm,
    SolutionPair,
    dual_t,
    eval_coords,
    make_form,
    normalize_sign,
)
from relthue.golden import Comparison, compare, expected_solutions
from relthue.quadring import QuadInt, RingSpec, from_split, iter_disc, make_ring
from relthue.roots import cached_root_data, fine_roots, isolate_real_roots, peval

CITED = "cited"
SEARCH = "search"
MODES = (CITED, SEARCH)

DEFAULT_V_MAX = 1000
# largest right-hand side that was swept by machine in the published proofs
DEFAULT_SEARCH_RHS_CAP = 17

EXPLICIT = "explicit"
RAY = "ray"


# -- case resolution --

@dataclass(frozen=True)
class Resolution:
    rule: CaseRule
    method: str  # trivial | lemma | box | unresolved
    abs_list: AbsSolutionList | None

    @property
    def resolved(self) -> bool:
        return self.abs_list is not None

    @property
    def completeness(self) -> str | None:
        if self.abs_list is None:
            return None
        return BOX_BOUNDED if self.method == "box" else PROOF_BACKED

    def to_json(self) -> dict:
        out = self.rule.to_json() | {"method": self.method, "completeness": self.completeness}
        if self.abs_list is not None:
            out["source"] = self.abs_list.source
            out["abs_solutions"] = [list(p) for p in self.abs_list.pairs]
        return out


def resolve_rule(family: str, t: int, rule: CaseRule, mode: str,
                 v_max: int = DEFAULT_V_MAX, search_rhs_cap: int = DEFAULT_SEARCH_RHS_CAP) -> Resolution:
    d = rule.d_max
    if d <= 0:
        lst = known_abs_solutions(family, t, 0)
        return Resolution(rule, "trivial", lst)
    lst = known_abs_solutions(family, t, d)
    if lst is not None:
        return Resolution(rule, "lemma", lst)
    if mode == SEARCH and d <= search_rhs_cap:
        return Resolution(rule, "box", cached_brute_box(family, t, d, v_max))
    return Resolution(rule, "unresolved", None)


def component_constraints(rules: Iterable[CaseRule],
                          resolutions: Iterable[Resolution]) -> dict[int, frozenset | None]:
    """Split-component values ``c_j(y) != 0`` compatible with ``|y| > T``.

    For each component j the "large" rule says: either ``|c_j(y)|`` stays below
    the rule threshold, or ``c_j(y)`` is the second coordinate of a solution
    of the rule's absolute inequality.  None marks an unresolved component.
    """
    by_id = {r.rule.case_id: r for r in resolutions}
    out: dict[int, frozenset | None] = {}
    for rule in rules:
        if rule.kind != "large":
            continue
        res = by_id[rule.case_id]
        if not res.resolved:
            out[rule.component] = None
            continue
        thr = rule.threshold
        below = thr.hi.__ceil__() - 1 if thr.hi.denominator == 1 else thr.hi.__floor__()
        vals = {s * u for u in range(1, below + 1) for s in (1, -1)}
        vals.update(v for _, v in res.abs_list.pairs if v and abs(v) >= thr.lo)
        out[rule.component] = frozenset(vals)
    return out


# -- root proximity --

def partners(form: ParamForm, ring: RingSpec, known: tuple[int, int], K: int = 1,
             reverse: bool = False) -> list[tuple[int, int]]:
    """All z with ``norm(F(z, known)) <= K^2`` (or ``F(known, z)`` if reverse).

    ``F(x, y) = prod (x - alpha_j y)``; a product of absolute value at most K
    has a factor at most ``K^(1/n)``, so x lies in a disc of that radius about
    some ``alpha_j * y``.  Root enclosures widen the discs accordingly.
    """
    n = form.n
    r = nth_root(K, n).hi
    coeffs = form.coeffs
    out = []
    if known == (0, 0):
        # F(z, 0) = z^n
        pool = set(iter_disc(ring, r * r))
    else:
        size = math.isqrt(ring.norm_coords(*known)) + 1
        pool = set()
        for lo, hi in fine_roots(form.family, form.t, reverse):
            mid = (lo + hi) / 2
            rad = r + (hi - lo) / 2 * size
            pool.update(iter_disc(ring, rad * rad, (mid * known[0], mid * known[1])))
    limit = K * K
    for z in pool:
        x, y = (known, z) if reverse else (z, known)
        if ring.norm_coords(*eval_coords(ring, coeffs, x, y)) <= limit:
            out.append(z)
    return sorted(out)


# -- rays --

def _pmul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _padd(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, bi in enumerate(b):
        out[i] += bi
    return out


def _qmul(u, v, m):
    # (A + B th)(C + D th) with th^2 = -m; polys lowest degree first
    A, B = u
    C, D = v
    return (_padd(_pmul(A, C), [-m * c for c in _pmul(B, D)]), _padd(_pmul(A, D), _pmul(B, C)))


def ray_norm_poly(form: ParamForm, ring: RingSpec, x2: int, y2: int, component: int = 2) -> list:
    """``s^(2n) * norm(F(x(z), y(z)))`` as an integer polynomial in z, lowest degree first.

    Elements are written in split coordinates as ``(c1 + c2*i*sqrt(m)) / s``.
    The fixed component is ``(x2, y2)``; the other one is ``z * (x2, y2) / g``.
    """
    g = math.gcd(x2, y2)
    m = ring.m
    if component == 2:
        X = ([0, x2 // g], [x2])
        Y = ([0, y2 // g], [y2])
    else:
        X = ([x2], [0, x2 // g])
        Y = ([y2], [0, y2 // g])
    acc = ([form.coeffs[0]], [])
    ypow = ([1], [])
    for c in form.coeffs[1:]:
        ypow = _qmul(ypow, Y, m)
        acc = _qmul(acc, X, m)
        acc = (_padd(acc[0], [c * a for a in ypow[0]]), _padd(acc[1], [c * b for b in ypow[1]]))
    A, B = acc
    N = _padd(_pmul(A, A), [m * v for v in _pmul(B, B)])
    while len(N) > 1 and N[-1] == 0:
        N.pop()
    return N


def ray_solutions(form: ParamForm, ring: RingSpec, x2: int, y2: int, K: int = 1,
                  component: int = 2) -> list[SolutionPair]:
    """Solutions on the ray through the fixed j-components ``(x2, y2)``."""
    if (x2, y2) == (0, 0):
        raise ValueError("ray direction must be nonzero")
    s = 2 if ring.half_basis else 1
    N = ray_norm_poly(form, ring, x2, y2, component)
    if len(N) == 1:
        raise DegenerateRay(f"norm polynomial is constant on the ray ({x2}, {y2})")
    bound = K * K * s ** (2 * form.n)
    R = [N[0] - bound] + N[1:]
    hi_first = R[::-1]
    ivs = isolate_real_roots(hi_first)
    if not ivs:
        zs = [0] if peval(hi_first, 0) <= 0 else []
    else:
        lo = min(a for a, _ in ivs).__floor__()
        hi = max(b for _, b in ivs).__ceil__()
        zs = [z for z in range(lo, hi + 1) if peval(hi_first, z) <= 0]
    g = math.gcd(x2, y2)
    out = []
    for z in zs:
        if component == 2:
            xs, ys = (z * x2 // g, x2), (z * y2 // g, y2)
        else:
            xs, ys = (x2, z * x2 // g), (y2, z * y2 // g)
        x, y = from_split(ring, *xs), from_split(ring, *ys)
        if x is None or y is None:
            continue
        if ring.norm_coords(*eval_coords(ring, form.coeffs, x.coords(), y.coords())) <= K * K:
            out.append(SolutionPair(x, y))
    return sorted(out)


# -- reports --

@dataclass
class SolveReport:
    family: str
    t: int
    m: int
    mode: str
    canonical_t: int
    scenario: str
    params: BoundParams
    bounds: BoundSet
    threshold: Bound
    root_check: dict
    resolutions: list[Resolution]
    constraints: dict
    regime: str
    stage_counts: dict
    solutions: list[SolutionPair]
    provenance: dict
    completeness: str
    comparison: Comparison | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.comparison is None or self.comparison.ok

    def to_json(self) -> dict:
        form = make_form(self.family, self.t)
        ring = make_ring(self.m)

        def value(p):
            v = eval_coords(ring, form.coeffs, p.x.coords(), p.y.coords())
            return {"a1": v[0], "a2": v[1], "norm": ring.norm_coords(*v)}

        out = {
            "schema": 1,
            "family": self.family,
            "t": self.t,
            "m": self.m,
            "mode": self.mode,
            "canonical_t": self.canonical_t,
            "scenario": self.scenario,
            "preset": self.params.to_json(),
            "bounds": self.bounds.to_json(),
            "threshold": self.threshold.to_json(),
            "root_check": self.root_check,
            "case_trace": [r.to_json() for r in self.resolutions],
            "constraints": {str(k): (None if v is None else sorted(v)) for k, v in self.constraints.items()},
            "regime": self.regime,
            "stage_counts": self.stage_counts,
            "solutions": [p.to_json() | {"text": str(p), "stages": self.provenance.get(p.key(), [])}
                          for p in self.solutions],
            "completeness": self.completeness,
            "notes": self.notes,
        }
        if self.comparison is not None:
            out["missing"] = [p.to_json() | {"text": str(p)} for p in self.comparison.missing]
            out["extra"] = [p.to_json() | {"text": str(p), "value": value(p)} for p in self.comparison.extra]
        return out


def canonical_parameter(family: str, t: int) -> tuple[int, bool]:
    """The parameter actually solved, and whether (x, y) must be swapped back."""
    if family == QUARTIC and t < 0:
        return dual_t(family, t), True
    if family == SEXTIC and t < -1:
        return dual_t(family, t), True
    return t, False


def _norm_gt(ring: RingSpec, c: tuple[int, int], bound: Fraction) -> bool:
    return ring.norm_coords(*c) > bound


class _Collector:
    def __init__(self, form: ParamForm, ring: RingSpec):
        self.form, self.ring = form, ring
        self.found: dict[tuple, set] = {}
        self.counts: dict[str, int] = {}

    def count(self, stage: str, k: int) -> None:
        self.counts[stage] = self.counts.get(stage, 0) + k

    def add(self, stage: str, x: tuple[int, int], y: tuple[int, int]) -> None:
        if self.ring.norm_coords(*eval_coords(self.ring, self.form.coeffs, x, y)) <= 1:
            self.found.setdefault((x, y), set()).add(stage)


def solve_relative(family: str, t: int, m: int, mode: str = SEARCH, *,
                   v_max: int = DEFAULT_V_MAX, search_rhs_cap: int = DEFAULT_SEARCH_RHS_CAP,
                   scenario: str | None = None, compare_golden: bool = True) -> SolveReport:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    make_form(family, t)
    ring = make_ring(m)
    tc, swapped = canonical_parameter(family, t)
    form = make_form(family, tc)
    scenario = scenario or scenario_for(family, m, tc)
    params = presets(family, scenario)
    rd = cached_root_data(family, tc)
    root_check = {
        "A_lower": f"{float(rd.A_lower):.9f}", "B_lower": f"{float(rd.B_lower):.9f}",
        "A_preset": str(params.A), "B_preset": str(params.B),
        "certified": rd.A_lower >= params.A and rd.B_lower >= params.B,
    }
    if not root_check["certified"]:
        raise UnresolvedCase(f"{family} t={tc}: root gaps A={float(rd.A_lower):.6f}, "
                             f"B={float(rd.B_lower):.6f} below the {scenario} preset")
    bset = derive_bounds(params)
    rules = case_rules(m, params, bset)
    T = bset.threshold(m)
    T_sq = T.hi * T.hi
    resolutions = [resolve_rule(family, tc, r, mode, v_max, search_rhs_cap) for r in rules]
    res_by = {(r.rule.component, r.rule.kind): r for r in resolutions}
    cons = component_constraints(rules, resolutions)

    col = _Collector(form, ring)
    used: list[Resolution] = []

    # |y| <= T: all x by root proximity
    small = list(iter_disc(ring, T_sq))
    col.count("disc_y", len(small))
    for y in small:
        for x in partners(form, ring, y):
            col.add("disc_y", x, y)

    if cons[1] is not None and cons[2] is not None:
        regime = EXPLICIT
        used = [res_by[(1, "large")], res_by[(2, "large")]]
        ys = []
        for c1 in sorted(cons[1] | {0}):
            for c2 in sorted(cons[2] | {0}):
                y = from_split(ring, c1, c2)
                if y is not None and _norm_gt(ring, y.coords(), T_sq):
                    ys.append(y.coords())
        col.count("large_y", len(ys))
        for y in ys:
            for x in partners(form, ring, y):
                col.add("large_y", x, y)
    else:
        j = next((c for c in (2, 1) if cons[c] is not None and res_by[(c, "zero")].resolved), None)
        if j is None:
            open_ids = [r.rule.case_id for r in resolutions if not r.resolved]
            raise UnresolvedCase(f"{family} t={tc} m={m} mode={mode}: cases {', '.join(open_ids)} "
                                 "are neither covered by a cited table nor searched")
        regime = f"{RAY}{j}"
        zero = res_by[(j, "zero")]
        used = [res_by[(j, "large")], zero]
        # |x| <= T: all y by root proximity
        col.count("disc_x", len(small))
        for x in small:
            for y in partners(form, ring, x, reverse=True):
                col.add("disc_x", x, y)
        # |x|, |y| > T with c_j(x) = c_j(y) = 0
        for u, v in zero.abs_list.pairs:
            if j == 2:
                x, y = (u, 0), (v, 0)
            else:
                xq, yq = from_split(ring, 0, u), from_split(ring, 0, v)
                if xq is None or yq is None:
                    continue
                x, y = xq.coords(), yq.coords()
            col.count("zero_rule", 1)
            col.add("zero_rule", x, y)
        # |x|, |y| > T with fixed nonzero j-components: rays
        vals = sorted(cons[j] | {0})
        for P in vals:
            for Q in vals:
                if (P, Q) == (0, 0):
                    continue
                col.count("ray", 1)
                for p in ray_solutions(form, ring, P, Q, 1, component=j):
                    col.add("ray", p.x.coords(), p.y.coords())

    # map back through the duality and re-verify at the requested t
    target = make_form(family, t)
    pairs = []
    provenance = {}
    for (x, y), stages in col.found.items():
        if swapped:
            x, y = y, x
        if ring.norm_coords(*eval_coords(ring, target.coeffs, x, y)) > 1:
            raise ArithmeticError("duality transport produced a non-solution")
        p = SolutionPair(QuadInt(*x, ring), QuadInt(*y, ring))
        pairs.append(p)
        prov = sorted(stages)
        provenance[p.key()] = sorted(set(provenance.get(p.key(), [])) | set(prov))
        provenance[(-p).key()] = provenance[p.key()]
    sols = normalize_sign(pairs + [SolutionPair(ring.zero, ring.zero)])
    provenance.setdefault((0, 0, 0, 0), ["trivial"])
    completeness = PROOF_BACKED if all(r.completeness == PROOF_BACKED for r in used) else BOX_BOUNDED
    report = SolveReport(
        family=family, t=t, m=m, mode=mode, canonical_t=tc, scenario=scenario, params=params,
        bounds=bset, threshold=T, root_check=root_check, resolutions=resolutions,
        constraints=cons, regime=regime, stage_counts=dict(sorted(col.counts.items())),
        solutions=sols, provenance={p.key(): provenance.get(p.key(), []) for p in sols},
        completeness=completeness,
    )
    if swapped:
        report.notes.append(f"solved at dual parameter t' = {tc} and swapped (x, y)")
    if compare_golden:
        report.comparison = compare(expected_solutions(family, m, t), sols)
    return report


# -- verification harness --

@dataclass
class VerifyCell:
    family: str
    t: int
    m: int
    report: SolveReport | None
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None and self.report is not None and self.report.ok

    def summary(self) -> dict:
        r = self.report
        return {
            "t": self.t, "m": self.m,
            "solutions": None if r is None else len(r.solutions),
            "completeness": None if r is None else r.completeness,
            "regime": None if r is None else r.regime,
            "missing": None if r is None or r.comparison is None else len(r.comparison.missing),
            "extra": None if r is None or r.comparison is None else len(r.comparison.extra),
            "error": self.error,
        }


@dataclass
class VerifyReport:
    family: str
    mode: str
    cells: list[VerifyCell]
    skipped: list[int]

    @property
    def mismatches(self) -> list[VerifyCell]:
        return [c for c in self.cells if not c.ok]

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "family": self.family,
            "mode": self.mode,
            "skipped_t": self.skipped,
            "cells": [c.summary() for c in self.cells],
            "mismatch_details": [c.report.to_json() if c.report else c.summary() for c in self.mismatches],
            "mismatches": len(self.mismatches),
        }


def _solve_cell(args) -> VerifyCell:
    family, t, m, mode, kw = args
    try:
        return VerifyCell(family, t, m, solve_relative(family, t, m, mode, **kw))
    except (UnresolvedCase, DegenerateRay, ArithmeticError) as exc:
        return VerifyCell(family, t, m, None, f"{type(exc).__name__}: {exc}")


def verify_theorem(family: str, ms: Iterable[int], t_range: Iterable[int], mode: str = SEARCH,
                   jobs: int = 1, **kw) -> VerifyReport:
    """Solve every (t, m) cell and compare against the expected tables."""
    from relthue.forms import is_valid_t

    ts = list(t_range)
    skipped = [t for t in ts if not is_valid_t(family, t)]
    tasks = [(family, t, m, mode, kw) for m in ms for t in ts if is_valid_t(family, t)]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            cells = list(pool.map(_solve_cell, tasks, chunksize=4))
    else:
        cells = [_solve_cell(task) for task in tasks]
    cells.sort(key=lambda c: (c.m, c.t))
    return VerifyReport(family, mode, cells, skipped)
