"""Expected solution lists of ``|F_t(x, y)| <= 1`` over Z_M, up to sign.

Entries are written as in the published tables, with ``i`` (only for m = 1)
and ``w`` standing for omega = (1 + i*sqrt(3))/2 (only for m = 3).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from relthue.forms import QUARTIC, SEXTIC, SolutionPair, check_family, normalize_sign
from relthue.quadring import QuadInt, RingSpec, make_ring

ANY = "any"

# (m-class, t-pattern) -> pairs; m-class is "any", 1 or 3; t-pattern is "any" or an int
_QUARTIC_ROWS = [
    (ANY, ANY, ["(0,0)", "(0,1)", "(1,0)"]),
    (ANY, 1, ["(1,2)", "(2,-1)"]),
    (ANY, -1, ["(2,1)", "(-1,2)"]),
    (ANY, 4, ["(2,3)", "(3,-2)"]),
    (ANY, -4, ["(3,2)", "(-2,3)"]),
    (1, ANY, ["(0,i)", "(i,0)"]),
    (3, ANY, ["(w,0)", "(0,w)", "(1-w,0)", "(0,1-w)"]),
    (1, 1, ["(i,2i)", "(2i,-i)"]),
    (1, -1, ["(2i,i)", "(-i,2i)"]),
    (1, 4, ["(2i,3i)", "(3i,-2i)"]),
    (1, -4, ["(3i,2i)", "(-2i,3i)"]),
    (3, 1, ["(2w-2,-w+1)", "(w-1,2w-2)", "(-2w,w)", "(w,2w)"]),
    (3, -1, ["(-w+1,2w-2)", "(2w-2,w-1)", "(w,-2w)", "(2w,w)"]),
    (3, 4, ["(3w-3,-2w+2)", "(2w-2,3w-3)", "(2w,3w)", "(3w,-2w)"]),
    (3, -4, ["(-2w+2,3w-3)", "(3w-3,2w-2)", "(3w,2w)", "(-2w,3w)"]),
]

_SEXTIC_ROWS = [
    (ANY, ANY, ["(0,0)", "(0,1)", "(1,0)", "(1,-1)"]),
    (1, ANY, ["(0,i)", "(i,0)", "(i,-i)"]),
    (3, ANY, ["(w,0)", "(0,w)", "(w,-w)", "(1-w,0)", "(0,w-1)", "(w-1,-w+1)"]),
]

ROWS = {QUARTIC: _QUARTIC_ROWS, SEXTIC: _SEXTIC_ROWS}

_TERM = re.compile(r"([+-]?)(\d*)([iw]?)")


def parse_element(text: str, ring: RingSpec) -> QuadInt:
    """Parse a linear expression such as ``2w-2``, ``-i`` or ``3`` into ring coordinates."""
    text = text.replace(" ", "")
    a1 = a2 = 0
    pos = 0
    while pos < len(text):
        mt = _TERM.match(text, pos)
        if not mt or mt.end() == pos:
            raise ValueError(f"cannot parse {text!r}")
        sign, digits, sym = mt.groups()
        if not digits and not sym:
            raise ValueError(f"cannot parse {text!r}")
        coef = (-1 if sign == "-" else 1) * (int(digits) if digits else 1)
        if sym == "i":
            if ring.m != 1:
                raise ValueError("'i' is only an integral basis element for m = 1")
            a2 += coef
        elif sym == "w":
            if ring.m != 3:
                raise ValueError("'w' denotes omega and needs m = 3")
            a2 += coef
        else:
            a1 += coef
        pos = mt.end()
    return QuadInt(a1, a2, ring)


def parse_pair(text: str, ring: RingSpec) -> SolutionPair:
    inner = text.strip()[1:-1]
    xs, ys = inner.split(",")
    return SolutionPair(parse_element(xs, ring), parse_element(ys, ring))


def _row_applies(m_class, t_pattern, m: int, t: int) -> bool:
    return (m_class == ANY or m_class == m) and (t_pattern == ANY or t_pattern == t)


@dataclass(frozen=True)
class GoldenTable:
    family: str

    def rows(self):
        return ROWS[self.family]

    def expected(self, m: int, t: int) -> list[SolutionPair]:
        ring = make_ring(m)
        pairs = []
        for m_class, t_pattern, texts in self.rows():
            if _row_applies(m_class, t_pattern, m, t):
                pairs.extend(parse_pair(s, ring) for s in texts)
        return normalize_sign(pairs)


def golden_table(family: str) -> GoldenTable:
    return GoldenTable(check_family(family))


def expected_solutions(family: str, m: int, t: int) -> list[SolutionPair]:
    return golden_table(family).expected(m, t)


@dataclass(frozen=True)
class Comparison:
    missing: tuple[SolutionPair, ...]
    extra: tuple[SolutionPair, ...]

    @property
    def ok(self) -> bool:
        return not self.missing and not self.extra


def compare(expected, found) -> Comparison:
    exp = set(normalize_sign(expected))
    got = set(normalize_sign(found))
    return Comparison(tuple(sorted(exp - got)), tuple(sorted(got - exp)))
