"""Exact arithmetic in the ring of integers of an imaginary quadratic field.

For ``M = Q(i*sqrt(m))`` with ``m`` square-free the ring of integers has the
integral basis ``{1, w}`` where ``w = i*sqrt(m)`` if ``m = 1, 2 (mod 4)`` and
``w = (1 + i*sqrt(m))/2`` if ``m = 3 (mod 4)``.  Elements are stored by their
integer coordinates ``(a1, a2)`` in that basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterator

from relthue.errors import NonPositive, NotSquareFree, RingMismatch

__all__ = [
    "RingSpec",
    "QuadInt",
    "make_ring",
    "norm",
    "mul",
    "coords_split",
    "from_split",
    "enumerate_disc",
    "iter_disc",
    "as_fraction",
    "is_squarefree",
]


def as_fraction(value) -> Fraction:
    """Convert ints, Fractions and decimal strings to an exact Fraction.

    Floats are converted through ``repr`` so that ``0.1924`` means 1924/10000
    and not the binary double closest to it.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(str(value))


def is_squarefree(m: int) -> bool:
    if m < 1:
        return False
    d = 2
    while d * d <= m:
        if m % (d * d) == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class RingSpec:
    """The ring of integers of Q(i*sqrt(m))."""

    m: int

    def __post_init__(self):
        if self.m < 1:
            raise NonPositive(f"m must be a positive integer, got {self.m}")
        if not is_squarefree(self.m):
            raise NotSquareFree(f"m = {self.m} is not square-free")

    @property
    def residue_class(self) -> int:
        return self.m % 4

    @property
    def half_basis(self) -> bool:
        """True when the second basis element is (1 + i*sqrt(m))/2."""
        return self.m % 4 == 3

    @property
    def basis_kind(self) -> tuple[str, str]:
        if self.half_basis:
            return ("1", f"(1+i*sqrt({self.m}))/2")
        return ("1", f"i*sqrt({self.m})")

    @property
    def k(self) -> int:
        # w^2 = w - k for the half basis, w^2 = -m otherwise
        return (1 + self.m) // 4 if self.half_basis else self.m

    # -- coordinate-level arithmetic (hot paths use these directly) --

    def norm_coords(self, a1: int, a2: int) -> int:
        if self.half_basis:
            return a1 * a1 + a1 * a2 + self.k * a2 * a2
        return a1 * a1 + self.m * a2 * a2

    def mul_coords(self, a1, a2, b1, b2):
        if self.half_basis:
            t = a2 * b2
            return a1 * b1 - self.k * t, a1 * b2 + a2 * b1 + t
        return a1 * b1 - self.m * a2 * b2, a1 * b2 + a2 * b1

    def conj_coords(self, a1, a2):
        if self.half_basis:
            return a1 + a2, -a2
        return a1, -a2

    def complex_value(self, a1, a2) -> complex:
        """Floating-point value; for display and independent checks only."""
        if self.half_basis:
            return complex(a1 + a2 / 2, a2 * math.sqrt(self.m) / 2)
        return complex(a1, a2 * math.sqrt(self.m))

    def element(self, a1: int, a2: int = 0) -> "QuadInt":
        return QuadInt(int(a1), int(a2), self)

    @property
    def zero(self) -> "QuadInt":
        return QuadInt(0, 0, self)

    @property
    def one(self) -> "QuadInt":
        return QuadInt(1, 0, self)

    @property
    def w(self) -> "QuadInt":
        return QuadInt(0, 1, self)

    def units(self) -> list["QuadInt"]:
        return [z for z in enumerate_disc(self, 1) if z]

    def to_json(self) -> dict:
        return {"m": self.m, "residue_class": self.residue_class,
                "basis": list(self.basis_kind)}


def make_ring(m: int) -> RingSpec:
    return RingSpec(int(m))


@dataclass(frozen=True, order=True)
class QuadInt:
    """An element ``a1 + a2*w`` of the ring of integers."""

    a1: int
    a2: int
    ring: RingSpec = field(compare=False)

    def _check(self, other: "QuadInt") -> None:
        if self.ring != other.ring:
            raise RingMismatch(f"ring m={self.ring.m} vs m={other.ring.m}")

    def _coerce(self, other):
        if isinstance(other, QuadInt):
            self._check(other)
            return other
        if isinstance(other, int):
            return QuadInt(other, 0, self.ring)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadInt(self.a1 + o.a1, self.a2 + o.a2, self.ring)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadInt(self.a1 - o.a1, self.a2 - o.a2, self.ring)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return QuadInt(-self.a1, -self.a2, self.ring)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadInt(*self.ring.mul_coords(self.a1, self.a2, o.a1, o.a2), self.ring)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __bool__(self):
        return bool(self.a1 or self.a2)

    def conjugate(self) -> "QuadInt":
        return QuadInt(*self.ring.conj_coords(self.a1, self.a2), self.ring)

    def norm(self) -> int:
        return self.ring.norm_coords(self.a1, self.a2)

    def __complex__(self):
        return self.ring.complex_value(self.a1, self.a2)

    def coords(self) -> tuple[int, int]:
        return self.a1, self.a2

    def __str__(self):
        return f"{self.a1} + {self.a2}*w"

    def __repr__(self):
        return f"QuadInt({self.a1}, {self.a2}, m={self.ring.m})"

    def to_json(self) -> dict:
        return {"m": self.ring.m, "a1": self.a1, "a2": self.a2}

    @classmethod
    def from_json(cls, data: dict) -> "QuadInt":
        return cls(int(data["a1"]), int(data["a2"]), make_ring(data["m"]))


def norm(z: QuadInt) -> int:
    return z.norm()


def mul(z: QuadInt, w: QuadInt) -> QuadInt:
    z._check(w)
    return z * w


def coords_split(z: QuadInt) -> tuple[int, int]:
    """Components used by the case rules: ``(2*a1 + a2, a2)`` or ``(a1, a2)``."""
    if z.ring.half_basis:
        return 2 * z.a1 + z.a2, z.a2
    return z.a1, z.a2


def from_split(ring: RingSpec, c1: int, c2: int) -> QuadInt | None:
    """Inverse of :func:`coords_split`; None when the parity condition fails."""
    if ring.half_basis:
        if (c1 - c2) % 2:
            return None
        return QuadInt((c1 - c2) // 2, c2, ring)
    return QuadInt(c1, c2, ring)


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def iter_disc(ring: RingSpec, r_sq, center=(0, 0)) -> Iterator[tuple[int, int]]:
    """Yield coordinates ``(a1, a2)`` with ``norm(a - center) <= r_sq``.

    ``center`` is given in basis coordinates and may be rational.  Every
    comparison is done in integers after clearing denominators.  Order is
    lexicographic in ``(a2, a1)``.
    """
    r_sq = as_fraction(r_sq)
    if r_sq < 0:
        return
    c1, c2 = as_fraction(center[0]), as_fraction(center[1])
    q = math.lcm(c1.denominator, c2.denominator)
    p1, p2 = int(c1 * q), int(c2 * q)
    s = 2 if ring.half_basis else 1
    m = ring.m
    # integer form: (s*e1 + (s-1)*e2)^2 + m*e2^2 <= s^2 * r_sq * q^2, e = q*a - p
    W = (s * s * r_sq * q * q).__floor__()
    h2 = math.isqrt(W // m)
    for a2 in range(_ceil_div(p2 - h2, q), (p2 + h2) // q + 1):
        e2 = q * a2 - p2
        rem = W - m * e2 * e2
        if rem < 0:
            continue
        h1 = math.isqrt(rem)
        base = s * p1 - (s - 1) * e2
        sq = s * q
        for a1 in range(_ceil_div(base - h1, sq), (base + h1) // sq + 1):
            yield a1, a2


def enumerate_disc(ring: RingSpec, r_sq, center=(0, 0)) -> list[QuadInt]:
    """All ring elements within squared distance ``r_sq`` of ``center``.

    Sorted lexicographically on ``(a1, a2)``.
    """
    return [QuadInt(a1, a2, ring) for a1, a2 in sorted(iter_disc(ring, r_sq, center))]
