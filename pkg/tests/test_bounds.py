from fractions import Fraction

import pytest

from relthue.bounds import (
    GENERIC_M,
    M1,
    M3_LARGE_T,
    M3_SMALL_T,
    Bound,
    BoundParams,
    case_rules,
    computed_quantity,
    derive_bounds,
    grid_search_epsilon,
    nth_root,
    presets,
    scenario_for,
    sqrt_m_power,
)
from relthue.forms import QUARTIC, SEXTIC


def test_nth_root_encloses():
    b = nth_root(2, 2)
    assert b.lo ** 2 <= 2 <= b.hi ** 2
    assert b.hi - b.lo <= Fraction(1, 2**40)
    assert nth_root(16, 4) == Bound.exact(2)
    assert nth_root(Fraction(16, 81), 4).contains(Fraction(2, 3))
    assert sqrt_m_power(7, 4) == Bound.exact(49)


def test_param_validation():
    with pytest.raises(ValueError):
        BoundParams(K=1, epsilon=1, eta="0.1", n=4, A=1, B=1)
    with pytest.raises(ValueError):
        BoundParams(K=0, epsilon="0.1", eta="0.1", n=4, A=1, B=1)


def test_presets_are_exact_decimals():
    p = presets(QUARTIC, GENERIC_M)
    assert p.epsilon == Fraction(1924, 10000)
    assert p.eta == Fraction(169, 1000)
    assert p.A == Fraction("0.8284")


def test_generic_threshold():
    b = derive_bounds(presets(QUARTIC, GENERIC_M))
    assert abs(float(b.C2.hi) - 6.2741) < 1e-3
    assert b.threshold(7) is b.C1 and b.threshold(2) is b.C2


def test_case_rule_shapes():
    p = presets(SEXTIC, M3_LARGE_T)
    rules = case_rules(3, p, derive_bounds(p))
    assert [r.case_id for r in rules] == ["IA1", "IA2", "IB1", "IB2"]
    assert [r.d_max for r in rules] == [2, 988, 1, 36]
    p = presets(QUARTIC, M1)
    rules = case_rules(1, p, derive_bounds(p))
    assert [r.case_id for r in rules] == ["IIA1", "IIA2", "IIB1", "IIB2"]
    assert all(r.d_max == 1 for r in rules)


def test_quantity_lookup():
    assert abs(float(computed_quantity(QUARTIC, M3_LARGE_T, 3, "IA2.rhs").hi) - 343.753) < 2e-3
    with pytest.raises(KeyError):
        computed_quantity(QUARTIC, M1, 1, "IA9.rhs")


def test_scenario_for():
    assert scenario_for(QUARTIC, 1, 100) == M1
    assert scenario_for(QUARTIC, 3, 57) == M3_SMALL_T
    assert scenario_for(QUARTIC, 3, 58) == M3_LARGE_T
    assert scenario_for(SEXTIC, 3, 89) == M3_LARGE_T
    assert scenario_for(SEXTIC, 6, 89) == GENERIC_M


def test_grid_search_epsilon_no_worse_than_preset():
    p = presets(QUARTIC, GENERIC_M)
    eps, val = grid_search_epsilon(p, 2, step=1e-3)
    assert 0 < eps < 1
    assert val <= float(derive_bounds(p).threshold(2).hi) + 1e-9
