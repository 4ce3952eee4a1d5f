"""Bound constants for relative Thue inequalities and the derived case rules.

Given root-gap lower bounds ``A``, ``B`` for ``f(x) = F(x, 1)`` of degree n,
parameters ``0 < eps < 1``, ``0 < eta < 1`` and ``K >= 1``:

    C  = max(K / ((1-eps)^(n-1) B), 1)
    C1 = max(K^(1/n) / (eps A), (2C)^(1/(n-2)))
    C2 = max(K^(1/n) / (eps A), C^(1/(n-2)))
    D  = (K / (eta (1-eps)^(n-1) A B))^(1/n)
    E  = (1+eta)^(n-1) K / (1-eps)^(n-1)

Inputs are exact rationals.  Irrational quantities (n-th roots, sqrt(m)) are
carried as two-sided rational enclosures; callers use ``hi`` whenever a bound
has to be conservative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import gmpy2

from relthue.forms import QUARTIC, SEXTIC, check_family
from relthue.quadring import as_fraction, make_ring
from relthue.roots import LARGE_T, LARGE_T_START, SMALL_T, regime_table

ENCLOSURE_BITS = 40

GENERIC_M = "generic_m"
M1 = "m1"
M3_LARGE_T = "m3_large_t"
M3_SMALL_T = "m3_small_t"
SCENARIOS = (GENERIC_M, M1, M3_LARGE_T, M3_SMALL_T)


@dataclass(frozen=True)
class Bound:
    """A real number known to lie in ``[lo, hi]``."""

    lo: Fraction
    hi: Fraction

    @classmethod
    def exact(cls, value) -> "Bound":
        v = as_fraction(value)
        return cls(v, v)

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __float__(self):
        return float((self.lo + self.hi) / 2)

    def contains(self, x) -> bool:
        return self.lo <= as_fraction(x) <= self.hi

    def distance(self, x) -> Fraction:
        x = as_fraction(x)
        if x < self.lo:
            return self.lo - x
        if x > self.hi:
            return x - self.hi
        return Fraction(0)

    # positive enclosures only; every use in this module is on positive reals
    def __mul__(self, other):
        other = other if isinstance(other, Bound) else Bound.exact(other)
        return Bound(self.lo * other.lo, self.hi * other.hi)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = other if isinstance(other, Bound) else Bound.exact(other)
        return Bound(self.lo / other.hi, self.hi / other.lo)

    def to_json(self) -> dict:
        return {"lo": str(self.lo), "hi": str(self.hi), "decimal": f"{float(self.hi):.6f}"}


def bmax(*bounds: Bound) -> Bound:
    return Bound(max(b.lo for b in bounds), max(b.hi for b in bounds))


def nth_root(x, n: int, bits: int = ENCLOSURE_BITS) -> Bound:
    """Enclosure of ``x^(1/n)`` for rational ``x >= 0`` with width ``2**-bits``."""
    x = as_fraction(x)
    if x < 0:
        raise ValueError("nth_root of a negative number")
    scale = 1 << bits
    num = (x.numerator * scale**n) // x.denominator
    r, exact = gmpy2.iroot(gmpy2.mpz(num), n)
    r = int(r)
    lo = Fraction(r, scale)
    if exact and Fraction(r, scale) ** n == x:
        return Bound(lo, lo)
    return Bound(lo, Fraction(r + 1, scale))


def sqrt_m_power(m: int, n: int) -> Bound:
    """Enclosure of ``(sqrt m)^n``; exact for even n."""
    if n % 2 == 0:
        return Bound.exact(m ** (n // 2))
    return nth_root(m, 2) * (m ** (n // 2))


@dataclass(frozen=True)
class BoundParams:
    K: Fraction
    epsilon: Fraction
    eta: Fraction
    n: int
    A: Fraction
    B: Fraction

    def __post_init__(self):
        for name in ("K", "epsilon", "eta", "A", "B"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if not (0 < self.epsilon < 1 and 0 < self.eta < 1):
            raise ValueError("need 0 < epsilon < 1 and 0 < eta < 1")
        if self.K < 1:
            raise ValueError("need K >= 1")
        if self.A <= 0 or self.B <= 0:
            raise ValueError("need A > 0 and B > 0")
        if self.n < 3:
            raise ValueError("degree must be at least 3")

    def to_json(self) -> dict:
        return {k: str(getattr(self, k)) for k in ("K", "epsilon", "eta", "A", "B")} | {"n": self.n}


@dataclass(frozen=True)
class BoundSet:
    C: Bound
    C1: Bound
    C2: Bound
    D: Bound
    E: Bound

    def threshold(self, m: int) -> Bound:
        """The |y| threshold of the lemma: C1 for m = 3 (mod 4), C2 otherwise."""
        return self.C1 if m % 4 == 3 else self.C2

    def to_json(self) -> dict:
        return {k: getattr(self, k).to_json() for k in ("C", "C1", "C2", "D", "E")}


def derive_bounds(p: BoundParams) -> BoundSet:
    n, K, eps, eta, A, B = p.n, p.K, p.epsilon, p.eta, p.A, p.B
    one_minus = (1 - eps) ** (n - 1)
    C = max(K / (one_minus * B), Fraction(1))
    lead = nth_root(K, n) / (eps * A)
    C1 = bmax(lead, nth_root(2 * C, n - 2))
    C2 = bmax(lead, nth_root(C, n - 2))
    D = nth_root(K / (eta * one_minus * A * B), n)
    E = (1 + eta) ** (n - 1) * K / one_minus
    return BoundSet(Bound.exact(C), C1, C2, D, Bound.exact(E))


@dataclass(frozen=True)
class CaseRule:
    """One implication of the lemma, valid for solutions with |y| above the threshold.

    ``component`` says which split coordinate of y the trigger tests (1 for
    ``2y1+y2`` resp. ``y1``, 2 for ``y2``).  ``kind`` is ``"zero"`` (trigger
    "component = 0") or ``"large"`` (trigger "|component| >= threshold").
    """

    case_id: str
    component: int
    kind: str
    trigger: str
    forces: str
    conclusion_form_args: str
    threshold: Bound | None
    rhs_bound: Bound

    @property
    def d_max(self) -> int:
        """Largest integer the absolute form may take under this rule."""
        return self.rhs_bound.hi.__floor__()

    def to_json(self) -> dict:
        return {
            "case": self.case_id,
            "trigger": self.trigger,
            "forces": self.forces,
            "inequality": f"|F({self.conclusion_form_args})| <= rhs",
            "threshold": None if self.threshold is None else self.threshold.to_json(),
            "rhs": self.rhs_bound.to_json(),
            "d_max": self.d_max,
        }


def case_rules(m: int, p: BoundParams, b: BoundSet) -> list[CaseRule]:
    ring = make_ring(m)
    n, K = p.n, p.K
    root_m = nth_root(m, 2)
    mpow = sqrt_m_power(m, n)
    if ring.half_basis:
        two_n = 2**n
        twoD = b.D * 2
        return [
            CaseRule("IA1", 1, "zero", "2y1+y2 = 0", "2x1+x2 = 0", "x2, y2",
                     None, Bound.exact(two_n * K) / mpow),
            CaseRule("IA2", 1, "large", "|2y1+y2| >= 2D", "", "2x1+x2, 2y1+y2",
                     twoD, b.E * two_n),
            CaseRule("IB1", 2, "zero", "y2 = 0", "x2 = 0", "x1, y1",
                     None, Bound.exact(K)),
            CaseRule("IB2", 2, "large", "|y2| >= 2D/sqrt(m)", "", "x2, y2",
                     twoD / root_m, (b.E * two_n) / mpow),
        ]
    return [
        CaseRule("IIA1", 1, "zero", "y1 = 0", "x1 = 0", "x2, y2",
                 None, Bound.exact(K) / mpow),
        CaseRule("IIA2", 1, "large", "|y1| >= D", "", "x1, y1", b.D, b.E),
        CaseRule("IIB1", 2, "zero", "y2 = 0", "x2 = 0", "x1, y1", None, Bound.exact(K)),
        CaseRule("IIB2", 2, "large", "|y2| >= D/sqrt(m)", "", "x2, y2", b.D / root_m, b.E / mpow),
    ]


_PRESETS = {
    (QUARTIC, GENERIC_M): ("0.1924", "0.169", SMALL_T),
    (QUARTIC, M1): ("0.1792", "0.0308", SMALL_T),
    (QUARTIC, M3_LARGE_T): ("0.6273", "0.0361", LARGE_T),
    (QUARTIC, M3_SMALL_T): ("0.0348", "0.0005", SMALL_T),
    (SEXTIC, GENERIC_M): ("0.12", "0.23", SMALL_T),
    (SEXTIC, M1): ("0.11", "0.02", SMALL_T),
    (SEXTIC, M3_LARGE_T): ("0.41", "0.02", LARGE_T),
    (SEXTIC, M3_SMALL_T): ("0.1124", "0.0195", SMALL_T),
}

DEGREE = {QUARTIC: 4, SEXTIC: 6}


def preset_regime(family: str, scenario: str) -> str:
    return _PRESETS[(check_family(family), scenario)][2]


def presets(family: str, scenario: str, K=1) -> BoundParams:
    """The shipped (eps, eta) choice for a family and field scenario.

    The generic and m = 1 scenarios use the small-t root-gap bounds, which are
    valid for every parameter in the canonical half.
    """
    if scenario not in SCENARIOS:
        raise ValueError(f"unknown scenario {scenario!r}; expected one of {SCENARIOS}")
    eps, eta, regime = _PRESETS[(check_family(family), scenario)]
    A, B = regime_table(family, regime)
    return BoundParams(K=as_fraction(K), epsilon=Fraction(eps), eta=Fraction(eta),
                       n=DEGREE[family], A=A, B=B)


def scenario_for(family: str, m: int, t: int) -> str:
    """Scenario for a canonical-half parameter t and field m."""
    if m == 1:
        return M1
    if m == 3:
        return M3_LARGE_T if t >= LARGE_T_START[family] else M3_SMALL_T
    return GENERIC_M


def grid_search_epsilon(p: BoundParams, m: int, step: float = 1e-4) -> tuple[float, float]:
    """Exploration helper: the eps on a grid minimising the |y| threshold.

    The threshold does not depend on eta, so the search is one-dimensional.
    Floating point; not used by any verification path.
    """
    n, K, A, B = p.n, float(p.K), float(p.A), float(p.B)
    best = (float("inf"), 0.0)
    steps = int(round(1 / step))
    for i in range(1, steps):
        eps = i * step
        C = max(K / ((1 - eps) ** (n - 1) * B), 1.0)
        tail = (2 * C if m % 4 == 3 else C) ** (1 / (n - 2))
        val = max(K ** (1 / n) / (eps * A), tail)
        if val < best[0]:
            best = (val, eps)
    return best[1], best[0]


# Constants as printed for each scenario.  Class-I values are stated for the
# smallest admissible m = 3 (mod 4), class-II values for the smallest m = 1, 2 (mod 4).
PRINTED_CONSTANTS = [
    # family, scenario, m, quantity, printed
    (QUARTIC, GENERIC_M, 7, "threshold", "6.2741"),
    (QUARTIC, GENERIC_M, 7, "IA1.rhs", "0.326"),
    (QUARTIC, GENERIC_M, 7, "IA2.threshold", "2.618"),
    (QUARTIC, GENERIC_M, 7, "IA2.rhs", "48.526"),
    (QUARTIC, GENERIC_M, 7, "IB1.rhs", "1"),
    (QUARTIC, GENERIC_M, 7, "IB2.threshold", "0.989"),
    (QUARTIC, GENERIC_M, 7, "IB2.rhs", "0.990"),
    (QUARTIC, GENERIC_M, 2, "threshold", "6.2741"),
    (QUARTIC, GENERIC_M, 2, "IIA1.rhs", "0.25"),
    (QUARTIC, GENERIC_M, 2, "IIA2.threshold", "1.309"),
    (QUARTIC, GENERIC_M, 2, "IIA2.rhs", "3.032"),
    (QUARTIC, GENERIC_M, 2, "IIB1.rhs", "1"),
    (QUARTIC, GENERIC_M, 2, "IIB2.threshold", "0.925"),
    (QUARTIC, GENERIC_M, 2, "IIB2.rhs", "0.7582"),
    (QUARTIC, M1, 1, "threshold", "6.736"),
    (QUARTIC, M1, 1, "IIA1.rhs", "1"),
    (QUARTIC, M1, 1, "IIA2.threshold", "1.98"),
    (QUARTIC, M1, 1, "IIA2.rhs", "1.981"),
    (QUARTIC, M1, 1, "IIB1.rhs", "1"),
    (QUARTIC, M1, 1, "IIB2.threshold", "1.98"),
    (QUARTIC, M1, 1, "IIB2.rhs", "1.981"),
    (QUARTIC, M3_LARGE_T, 3, "threshold", "1.621"),
    (QUARTIC, M3_LARGE_T, 3, "IA1.rhs", "1.778"),
    (QUARTIC, M3_LARGE_T, 3, "IA2.threshold", "3.497"),
    (QUARTIC, M3_LARGE_T, 3, "IA2.rhs", "343.753"),
    (QUARTIC, M3_LARGE_T, 3, "IB1.rhs", "1"),
    (QUARTIC, M3_LARGE_T, 3, "IB2.threshold", "2.019"),
    (QUARTIC, M3_LARGE_T, 3, "IB2.rhs", "38.195"),
    (QUARTIC, M3_SMALL_T, 3, "threshold", "34.688"),
    (QUARTIC, M3_SMALL_T, 3, "IA1.rhs", "1.778"),
    (QUARTIC, M3_SMALL_T, 3, "IA2.threshold", "9.824"),
    (QUARTIC, M3_SMALL_T, 3, "IA2.rhs", "17.825"),
    (QUARTIC, M3_SMALL_T, 3, "IB1.rhs", "1"),
    (QUARTIC, M3_SMALL_T, 3, "IB2.threshold", "5.672"),
    (QUARTIC, M3_SMALL_T, 3, "IB2.rhs", "1.981"),
    (SEXTIC, GENERIC_M, 7, "threshold", "17.937"),
    (SEXTIC, GENERIC_M, 7, "IA1.rhs", "0.1866"),
    (SEXTIC, GENERIC_M, 7, "IA2.threshold", "2.6453"),
    (SEXTIC, GENERIC_M, 7, "IA2.rhs", "341.42"),
    (SEXTIC, GENERIC_M, 7, "IB1.rhs", "1"),
    (SEXTIC, GENERIC_M, 7, "IB2.threshold", "0.99983"),
    (SEXTIC, GENERIC_M, 7, "IB2.rhs", "0.9954"),
    (SEXTIC, GENERIC_M, 2, "threshold", "17.937"),
    (SEXTIC, GENERIC_M, 2, "IIA1.rhs", "0.125"),
    (SEXTIC, GENERIC_M, 2, "IIA2.threshold", "1.3227"),
    (SEXTIC, GENERIC_M, 2, "IIA2.rhs", "5.3347"),
    (SEXTIC, GENERIC_M, 2, "IIB1.rhs", "1"),
    (SEXTIC, GENERIC_M, 2, "IIB2.threshold", "0.93526"),
    (SEXTIC, GENERIC_M, 2, "IIB2.rhs", "0.66684"),
    (SEXTIC, M1, 1, "threshold", "19.5671"),
    (SEXTIC, M1, 1, "IIA1.rhs", "1"),
    (SEXTIC, M1, 1, "IIA2.threshold", "1.9685"),
    (SEXTIC, M1, 1, "IIA2.rhs", "1.9772"),
    (SEXTIC, M1, 1, "IIB1.rhs", "1"),
    (SEXTIC, M1, 1, "IIB2.threshold", "1.9865"),
    (SEXTIC, M1, 1, "IIB2.rhs", "1.9772"),
    (SEXTIC, M3_LARGE_T, 3, "threshold", "4.8917"),
    (SEXTIC, M3_LARGE_T, 3, "IA1.rhs", "2.3703"),
    (SEXTIC, M3_LARGE_T, 3, "IA2.threshold", "3.0965"),
    (SEXTIC, M3_LARGE_T, 3, "IA2.rhs", "988.372"),
    (SEXTIC, M3_LARGE_T, 3, "IB1.rhs", "1"),
    (SEXTIC, M3_LARGE_T, 3, "IB2.threshold", "1.7877"),
    (SEXTIC, M3_LARGE_T, 3, "IB2.rhs", "36.606"),
    (SEXTIC, M3_SMALL_T, 3, "threshold", "19.149"),
    (SEXTIC, M3_SMALL_T, 3, "IA1.rhs", "2.371"),
    (SEXTIC, M3_SMALL_T, 3, "IA2.threshold", "3.962"),
    (SEXTIC, M3_SMALL_T, 3, "IA2.rhs", "127.946"),
    (SEXTIC, M3_SMALL_T, 3, "IB1.rhs", "1"),
    (SEXTIC, M3_SMALL_T, 3, "IB2.threshold", "2.287"),
    (SEXTIC, M3_SMALL_T, 3, "IB2.rhs", "4.739"),
]


def computed_quantity(family: str, scenario: str, m: int, quantity: str) -> Bound:
    """Look up a named constant, e.g. ``"threshold"`` or ``"IB2.rhs"``."""
    p = presets(family, scenario)
    b = derive_bounds(p)
    if quantity == "threshold":
        return b.threshold(m)
    if quantity in ("C", "C1", "C2", "D", "E"):
        return getattr(b, quantity)
    case_id, attr = quantity.split(".")
    for rule in case_rules(m, p, b):
        if rule.case_id == case_id:
            return rule.rhs_bound if attr == "rhs" else rule.threshold
    raise KeyError(quantity)


@dataclass(frozen=True)
class ConstantCheck:
    family: str
    scenario: str
    m: int
    quantity: str
    printed: Fraction
    computed: Bound
    deviation: Fraction

    def ok(self, tol) -> bool:
        return self.deviation <= as_fraction(tol)


def check_printed_constants() -> list[ConstantCheck]:
    """Recompute every tabulated constant and measure its distance to the enclosure."""
    out = []
    for family, scenario, m, quantity, printed in PRINTED_CONSTANTS:
        bound = computed_quantity(family, scenario, m, quantity)
        value = Fraction(printed)
        out.append(ConstantCheck(family, scenario, m, quantity, value, bound, bound.distance(value)))
    return out


def flagged_constants(tol="0.002") -> list[ConstantCheck]:
    return [c for c in check_printed_constants() if not c.ok(tol)]
