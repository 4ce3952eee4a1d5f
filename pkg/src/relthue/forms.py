"""The simplest quartic and simplest sextic binary forms.

    F4_t(x, y) = x^4 - t x^3 y - 6 x^2 y^2 + t x y^3 + y^4              t not in {-3, 0, 3}
    F6_t(x, y) = x^6 - 2t x^5 y - (5t+15) x^4 y^2 - 20 x^3 y^3
                 + 5t x^2 y^4 + (2t+6) x y^5 + y^6                       t not in {-8, -3, 0, 5}

Both forms are monic in x and in y, so ``|F(x, y)|`` factors as the product of
``|x - alpha_i y|`` over the real roots ``alpha_i`` of ``F(x, 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from relthue.errors import DualParameterReducible, ReducibleParameter, RingMismatch
from relthue.quadring import QuadInt, RingSpec, coords_split

QUARTIC = "quartic"
SEXTIC = "sextic"
FAMILIES = (QUARTIC, SEXTIC)

EXCLUDED = {
    QUARTIC: frozenset({-3, 0, 3}),
    SEXTIC: frozenset({-8, -3, 0, 5}),
}


def family_coeffs(family: str, t: int) -> tuple[int, ...]:
    if family == QUARTIC:
        return (1, -t, -6, t, 1)
    if family == SEXTIC:
        return (1, -2 * t, -(5 * t + 15), -20, 5 * t, 2 * t + 6, 1)
    raise ValueError(f"unknown family {family!r}")


def check_family(family: str) -> str:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    return family


def is_valid_t(family: str, t: int) -> bool:
    return t not in EXCLUDED[check_family(family)]


def dual_t(family: str, t: int) -> int:
    return -t if check_family(family) == QUARTIC else -t - 3


@dataclass(frozen=True)
class ParamForm:
    family: str
    t: int
    coeffs: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.coeffs) - 1

    @property
    def poly(self) -> tuple[int, ...]:
        """Coefficients of ``F(x, 1)``, highest degree first."""
        return self.coeffs

    @property
    def reversed_poly(self) -> tuple[int, ...]:
        """Coefficients of ``F(1, y)``, highest degree first."""
        return self.coeffs[::-1]

    def value(self, u: int, v: int) -> int:
        """``F(u, v)`` for rational integers."""
        acc = 0
        vp = 1
        for c in self.coeffs:
            acc = acc * u + c * vp
            vp *= v
        return acc

    def __str__(self):
        return render(self)

    def to_json(self) -> dict:
        return {"family": self.family, "t": self.t}


def make_form(family: str, t: int) -> ParamForm:
    check_family(family)
    t = int(t)
    if t in EXCLUDED[family]:
        raise ReducibleParameter(f"{family} form is reducible for t = {t}")
    return ParamForm(family, t, family_coeffs(family, t))


def render(form: ParamForm) -> str:
    n = form.n
    parts = []
    for i, c in enumerate(form.coeffs):
        if c == 0:
            continue
        mono = "*".join(
            s for s in (
                f"x^{n - i}" if n - i > 1 else ("x" if n - i == 1 else ""),
                f"y^{i}" if i > 1 else ("y" if i == 1 else ""),
            ) if s
        )
        mag = abs(c)
        term = mono if mag == 1 else f"{mag}*{mono}"
        parts.append(("- " if c < 0 else "+ ") + term)
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def eval_coords(ring: RingSpec, coeffs: Sequence[int], x: tuple[int, int],
                y: tuple[int, int]) -> tuple[int, int]:
    """Homogeneous Horner evaluation on basis coordinates."""
    mul = ring.mul_coords
    x1, x2 = x
    y1, y2 = y
    r1, r2 = coeffs[0], 0
    p1, p2 = 1, 0
    for c in coeffs[1:]:
        p1, p2 = mul(p1, p2, y1, y2)
        r1, r2 = mul(r1, r2, x1, x2)
        r1 += c * p1
        r2 += c * p2
    return r1, r2


def evaluate(form: ParamForm, x: QuadInt, y: QuadInt) -> QuadInt:
    if x.ring != y.ring:
        raise RingMismatch("x and y live in different rings")
    ring = x.ring
    return QuadInt(*eval_coords(ring, form.coeffs, (x.a1, x.a2), (y.a1, y.a2)), ring)


@dataclass(frozen=True)
class SolutionPair:
    x: QuadInt
    y: QuadInt

    def __post_init__(self):
        if self.x.ring != self.y.ring:
            raise RingMismatch("x and y live in different rings")

    @property
    def ring(self) -> RingSpec:
        return self.x.ring

    def __neg__(self):
        return SolutionPair(-self.x, -self.y)

    def key(self) -> tuple[int, int, int, int]:
        return self.x.a1, self.x.a2, self.y.a1, self.y.a2

    def __lt__(self, other: "SolutionPair"):
        return self.key() < other.key()

    def __str__(self):
        return f"({self.x}, {self.y})"

    def to_json(self) -> dict:
        return {"x": self.x.to_json(), "y": self.y.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "SolutionPair":
        return cls(QuadInt.from_json(data["x"]), QuadInt.from_json(data["y"]))


def orbit_maps(family: str, x, y) -> list[tuple]:
    """Images of ``(x, y)`` under the automorphism group of the family's form.

    Works for anything supporting ``+`` and unary ``-`` (ints or QuadInts).
    """
    if check_family(family) == QUARTIC:
        return [(x, y), (y, -x), (-x, -y), (-y, x)]
    return [(x, y), (-y, x + y), (-x - y, x), (-x, -y), (y, -x - y), (x + y, -x)]


def orbit(family: str, p: SolutionPair) -> list[SolutionPair]:
    images = {SolutionPair(a, b) for a, b in orbit_maps(family, p.x, p.y)}
    return sorted(images)


def dual(family: str, t: int, p: SolutionPair) -> tuple[int, SolutionPair]:
    t2 = dual_t(family, t)
    if t2 in EXCLUDED[family]:
        raise DualParameterReducible(f"dual parameter {t2} of t = {t} is excluded")
    return t2, SolutionPair(p.y, p.x)


def sign_key(p: SolutionPair) -> tuple[int, int, int, int]:
    return (*coords_split(p.y), *coords_split(p.x))


def _positive(key: Iterable[int]) -> bool:
    for c in key:
        if c:
            return c > 0
    return True


def normalize_sign(solutions: Iterable[SolutionPair]) -> list[SolutionPair]:
    """Pick one representative of each ``{p, -p}``; sorted and deduplicated.

    The representative is the one whose tuple ``(c1(y), c2(y), c1(x), c2(x))``
    of split coordinates is positive at its first nonzero entry.
    """
    out = {p if _positive(sign_key(p)) else -p for p in solutions}
    return sorted(out)
