"""Relative Thue inequalities for the simplest quartic and sextic families.

Solves ``|F_t(x, y)| <= 1`` in ``x, y`` from the ring of integers of
``Q(i*sqrt(m))`` with exact arithmetic throughout.
"""

from relthue.absolute import AbsSolutionList, brute_box, expand_scalings, known_abs_solutions
from relthue.bounds import (
    Bound,
    BoundParams,
    BoundSet,
    CaseRule,
    case_rules,
    derive_bounds,
    grid_search_epsilon,
    presets,
)
from relthue.errors import (
    DegenerateRay,
    DualParameterReducible,
    IndistinguishableRoots,
    NonPositive,
    NotSquareFree,
    PrecisionExhausted,
    ReducibleParameter,
    RelThueError,
    RingMismatch,
    UnresolvedCase,
)
from relthue.forms import (
    ParamForm,
    SolutionPair,
    dual,
    evaluate,
    make_form,
    normalize_sign,
    orbit,
)
from relthue.golden import GoldenTable, expected_solutions, golden_table
from relthue.quadring import QuadInt, RingSpec, coords_split, enumerate_disc, make_ring, mul, norm
from relthue.roots import RootGapData, gap_stats, isolate_roots, root_gap_data
from relthue.solver import (
    SolveReport,
    component_constraints,
    ray_solutions,
    solve_relative,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
