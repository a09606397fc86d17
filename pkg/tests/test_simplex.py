"""Exact LP solving and the single-candidate efficiency test.

The simplex implementation is cross-validated against vertex enumeration:
for bounded feasible systems the optimal value must equal the best value
over the double-description vertex list, and efficiency verdicts must agree
with dominance checked directly in image space.
"""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from nashvop.linalg import dot, mat_vec
from nashvop.polyhedra import (
    HPolyhedron,
    box_rows,
    dd_hrep_to_vrep,
    polytope_from_hrep,
    polytope_from_points,
    slice_system,
)
from nashvop.rationals import Q
from nashvop.simplex import (
    LpProblem,
    LpSolution,
    LpStatus,
    efficiency_test,
    hpoly_nonempty,
    solve_lp,
)

from genrand import load_fixture, random_bounded_hpoly, random_objective

seeds = st.integers(0, 10**9)


def test_min_on_unit_interval():
    sol = solve_lp(LpProblem((Q(1),), box_rows([(0, 1)])))
    assert sol.status is LpStatus.OPTIMAL
    assert sol.value == 0 and sol.point == (0,)


def test_infeasible():
    h = HPolyhedron.from_rows([[1], [-1]], [0, -1])
    assert solve_lp(LpProblem((Q(1),), h)).status is LpStatus.INFEASIBLE
    assert not hpoly_nonempty(h)


def test_unbounded():
    h = HPolyhedron.from_rows([[1]], [0])
    assert solve_lp(LpProblem((Q(1),), h)).status is LpStatus.UNBOUNDED


def test_best_response_slice():
    """Best response of the first player with the opponent pinned at (0, 6):
    minimize -(2 x11 + x12) over their feasible region."""
    game = load_fixture("linear_generalized")
    region = game.constraints.regions[0]
    sliced = slice_system(region, [0, 1], {2: Q(0), 3: Q(6)})
    sliced = sliced.with_rows([[1, 0], [-1, 0], [0, 1], [0, -1]],
                              [5, 0, Q(5, 2), 0])
    sol = solve_lp(LpProblem((Q(-2), Q(-1)), sliced))
    assert sol.status is LpStatus.OPTIMAL
    assert sol.point == (0, 2)
    assert sol.value == -2


def test_efficiency_scalar_interval():
    box = box_rows([(0, 1)])
    assert efficiency_test((Q(0),), [[1]], box).efficient
    verdict = efficiency_test((Q(1),), [[1]], box)
    assert not verdict.efficient
    assert verdict.dominator is not None
    assert dot([1], verdict.dominator) < 1


def test_hpoly_nonempty_basic():
    assert hpoly_nonempty(box_rows([(0, 1), (0, 1)]))


# ---------------------------------------------------------------------------
# cross-validation properties


def _vertex_optimum(c, h):
    v = dd_hrep_to_vrep(h)
    if v.is_empty:
        return None
    return min(dot(c, x) for x in v.vertices)


@settings(deadline=None, max_examples=40)
@given(seeds, st.integers(1, 4))
def test_simplex_agrees_with_vertex_enumeration(seed, n):
    rng = random.Random(seed)
    h = random_bounded_hpoly(rng, n)
    c = tuple(Q(rng.randint(-5, 5)) for _ in range(n))
    sol = solve_lp(LpProblem(c, h))
    best = _vertex_optimum(c, h)
    if best is None:
        assert sol.status is LpStatus.INFEASIBLE
    else:
        assert sol.status is LpStatus.OPTIMAL
        assert sol.value == best
        assert h.contains(sol.point)
        assert dot(c, sol.point) == best


def _dominated_in_image(y, objective, h):
    """Dominance checked against the full image polytope: some feasible z
    has G z <= y componentwise with at least one strict coordinate."""
    v = dd_hrep_to_vrep(h)
    image = polytope_from_points([mat_vec(objective, x) for x in v.vertices])
    m = len(objective)
    below = image.hrep.with_rows(
        [[Q(1) if j == k else Q(0) for j in range(m)] for k in range(m)],
        list(y))
    cut = polytope_from_hrep(below)
    if cut is None:
        return False
    return any(u != tuple(y) for u in cut.vertices)


@settings(deadline=None, max_examples=25)
@given(seeds, st.integers(1, 3), st.integers(1, 3))
def test_efficiency_matches_image_dominance(seed, n, k):
    rng = random.Random(seed)
    h = random_bounded_hpoly(rng, n)
    v = dd_hrep_to_vrep(h)
    if v.is_empty:
        return
    objective = random_objective(rng, k, n)
    x = rng.choice(v.vertices)
    verdict = efficiency_test(x, objective, h)
    y = mat_vec(objective, x)
    assert verdict.efficient == (not _dominated_in_image(y, objective, h))
    if not verdict.efficient:
        z = mat_vec(objective, verdict.dominator)
        assert all(zi <= yi for zi, yi in zip(z, y))
        assert z != y
        assert h.contains(verdict.dominator)
