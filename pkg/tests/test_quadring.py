import math
from fractions import Fraction

import pytest

from relthue.errors import NonPositive, NotSquareFree, RingMismatch
from relthue.quadring import (
    QuadInt,
    coords_split,
    enumerate_disc,
    from_split,
    iter_disc,
    make_ring,
    mul,
    norm,
)

RINGS = [1, 2, 3, 5, 7, 11]


def test_make_ring_classes():
    r1 = make_ring(1)
    assert r1.residue_class == 1 and not r1.half_basis
    r3 = make_ring(3)
    assert r3.residue_class == 3 and r3.half_basis
    assert r3.basis_kind == ("1", "(1+i*sqrt(3))/2")
    assert make_ring(2).basis_kind == ("1", "i*sqrt(2)")


@pytest.mark.parametrize("m,err", [(12, NotSquareFree), (4, NotSquareFree), (0, NonPositive), (-5, NonPositive)])
def test_make_ring_rejects(m, err):
    with pytest.raises(err):
        make_ring(m)


def test_norm_examples():
    assert norm(make_ring(3).element(0, 1)) == 1
    assert norm(make_ring(1).element(1, 1)) == 2
    z = make_ring(7).element(1, 2)
    assert norm(z) == 11
    assert math.isclose(abs(complex(z)) ** 2, 11)


def test_mul_examples():
    r3 = make_ring(3)
    w = r3.w
    assert (w * w).coords() == (-1, 1)
    # complex oracle
    c = complex(w) * complex(w)
    assert math.isclose(c.real, complex(w * w).real) and math.isclose(c.imag, complex(w * w).imag)
    i = make_ring(1).w
    assert (i * i).coords() == (-1, 0)
    z = make_ring(5).element(3, -4)
    assert z * 1 == z


def test_mul_ring_mismatch():
    with pytest.raises(RingMismatch):
        mul(make_ring(2).one, make_ring(3).one)


def test_coords_split_examples():
    assert coords_split(make_ring(3).element(1, 1)) == (3, 1)
    assert coords_split(make_ring(2).element(5, -2)) == (5, -2)
    assert coords_split(make_ring(7).element(0, 1)) == (1, 1)
    assert from_split(make_ring(7), 2, 1) is None


def test_enumerate_disc_examples():
    assert len(enumerate_disc(make_ring(1), 2)) == 9
    units3 = enumerate_disc(make_ring(3), 1)
    assert len(units3) == 7
    assert {z.coords() for z in units3} == {(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)}
    for m in RINGS:
        assert [z.coords() for z in enumerate_disc(make_ring(m), 0)] == [(0, 0)]


def test_units():
    assert len(make_ring(1).units()) == 4
    assert len(make_ring(3).units()) == 6
    assert len(make_ring(7).units()) == 2


def test_disc_is_sorted():
    pts = [z.coords() for z in enumerate_disc(make_ring(3), 50)]
    assert pts == sorted(pts)


def test_disc_rational_center():
    ring = make_ring(3)
    center = (Fraction(7, 3), Fraction(-5, 4))
    got = set(iter_disc(ring, Fraction(9, 2), center))
    cx, cy = center
    want = set()
    for a1 in range(-10, 15):
        for a2 in range(-10, 10):
            e1, e2 = a1 - cx, a2 - cy
            if e1 * e1 + e1 * e2 + e2 * e2 <= Fraction(9, 2):
                want.add((a1, a2))
    assert got == want


def test_serialisation():
    z = make_ring(7).element(3, -2)
    assert QuadInt.from_json(z.to_json()) == z
    assert z.to_json() == {"m": 7, "a1": 3, "a2": -2}
    assert str(z) == "3 + -2*w"
