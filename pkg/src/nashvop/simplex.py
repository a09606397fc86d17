"""Exact two-phase primal simplex over rationals, plus the efficiency test.

Free variables are split x = u - w; every inequality row gets a slack,
phase 1 adds artificials where no slack can seed the basis.  Pivoting uses
Bland's rule (lowest eligible column; ties on the ratio test broken by the
lowest basic variable index), so the solver cannot cycle and is fully
deterministic.

Optimal points are post-processed to a vertex of the feasible system: while
the tight rows (plus the objective) leave a nullspace direction, walk along
it to the nearest blocking row.  Each step adds an independent tight row,
so for bounded systems the returned point is always an extreme point of
the feasible region.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .errors import InfeasibleCandidate, UnboundedInput
from .linalg import QVector, dot, kernel_basis, vec_add, vec_neg, vec_scale
from .polyhedra import HPolyhedron
from .rationals import Q, Rational, ZERO


class LpStatus(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LpProblem:
    """Minimize ``c . x`` subject to an H-system over free variables."""

    c: QVector
    constraints: HPolyhedron


@dataclass(frozen=True)
class LpSolution:
    status: LpStatus
    value: Optional[Rational]
    point: Optional[QVector]
    basis: tuple
    """Indices of constraint rows tight at ``point`` (all of them)."""


def _pivot(tab, cost, basic, r, jc):
    pv = tab[r][jc]
    tab[r] = [x / pv for x in tab[r]]
    row = tab[r]
    for i in range(len(tab)):
        if i != r and tab[i][jc] != 0:
            f = tab[i][jc]
            tab[i] = [x - f * y for x, y in zip(tab[i], row)]
    if cost[jc] != 0:
        f = cost[jc]
        cost[:] = [x - f * y for x, y in zip(cost, row)]
    basic[r] = jc


def _bland(tab, cost, basic, ncols):
    """Run the simplex loop to optimality; True on success, False if unbounded."""
    while True:
        enter = next((j for j in range(ncols) if cost[j] < 0), None)
        if enter is None:
            return True
        leave = None
        best = None
        for r in range(len(tab)):
            coef = tab[r][enter]
            if coef > 0:
                ratio = tab[r][-1] / coef
                if best is None or ratio < best or (
                        ratio == best and basic[r] < basic[leave]):
                    best, leave = ratio, r
        if leave is None:
            return False
        _pivot(tab, cost, basic, leave, enter)


def solve_lp(problem: LpProblem) -> LpSolution:
    h = problem.constraints
    n = h.n
    m = h.m
    nonneg = 2 * n
    slack_of = {}
    col = nonneg
    for i in range(m):
        if not h.eq[i]:
            slack_of[i] = col
            col += 1
    nreal = col

    tab = []
    basic = []
    art_cols = []
    for i in range(m):
        row = [ZERO] * nreal
        for j, a in enumerate(h.a[i]):
            row[j] = a
            row[n + j] = -a
        if i in slack_of:
            row[slack_of[i]] = Q(1)
        rhs = h.b[i]
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        row.append(rhs)
        tab.append(row)
        basic.append(None)

    # Seed the basis with slacks where their coefficient survived the sign
    # normalization; all other rows get artificials.
    for i in range(m):
        s = slack_of.get(i)
        if s is not None and tab[i][s] == Q(1):
            basic[i] = s
    for i in range(m):
        if basic[i] is None:
            for row in tab:
                row.insert(-1, ZERO)
            j = len(tab[0]) - 2
            tab[i][j] = Q(1)
            art_cols.append(j)
            basic[i] = j

    ncols = nreal + len(art_cols)

    # Phase 1: minimize the artificial sum.
    if art_cols:
        cost = [ZERO] * (ncols + 1)
        for j in art_cols:
            cost[j] = Q(1)
        for i in range(m):
            if basic[i] in art_cols:
                f = cost[basic[i]]
                cost = [x - f * y for x, y in zip(cost, tab[i])]
        cost = list(cost)
        _bland(tab, cost, basic, ncols)
        if -cost[-1] != 0:  # minimum artificial sum, sign per tableau convention
            return LpSolution(LpStatus.INFEASIBLE, None, None, ())
        # Drive any degenerate artificial out of the basis.
        for r in range(len(tab) - 1, -1, -1):
            if basic[r] in art_cols:
                j = next((j for j in range(nreal) if tab[r][j] != 0), None)
                if j is None:
                    del tab[r]
                    del basic[r]
                else:
                    _pivot(tab, cost, basic, r, j)

    # Phase 2 over the real columns only.
    c_std = [ZERO] * nreal
    for j, cj in enumerate(problem.c):
        c_std[j] = cj
        c_std[n + j] = -cj
    cost = [ZERO] * (ncols + 1)
    for j in range(nreal):
        cost[j] = c_std[j]
    for r in range(len(tab)):
        if cost[basic[r]] != 0:
            f = cost[basic[r]]
            cost = [x - f * y for x, y in zip(cost, tab[r])]
    if not _bland(tab, cost, basic, nreal):
        return LpSolution(LpStatus.UNBOUNDED, None, None, ())

    xs = [ZERO] * nreal
    for r, b in enumerate(basic):
        if b < nreal:
            xs[b] = tab[r][-1]
    point = tuple(xs[j] - xs[n + j] for j in range(n))
    point = _purify_to_vertex(point, h, problem.c)
    value = dot(problem.c, point)
    active = tuple(i for i in range(m)
                   if h.eq[i] or dot(h.a[i], point) == h.b[i])
    return LpSolution(LpStatus.OPTIMAL, value, point, active)


def _purify_to_vertex(x: QVector, h: HPolyhedron, c: QVector) -> QVector:
    """Walk within the optimal face until the tight rows have full rank."""
    for _ in range(h.n + 1):
        act = [a for a, b, is_eq in zip(h.a, h.b, h.eq)
               if is_eq or dot(a, x) == b]
        act.append(c)
        kern = kernel_basis(act, h.n)
        if not kern:
            return x
        moved = False
        for cand in (kern[0], vec_neg(kern[0])):
            best = None
            for a, b, is_eq in zip(h.a, h.b, h.eq):
                if is_eq:
                    continue
                ad = dot(a, cand)
                if ad > 0:
                    slack = b - dot(a, x)
                    if slack > 0 and (best is None or slack / ad < best):
                        best = slack / ad
            if best is not None:
                x = vec_add(x, vec_scale(best, cand))
                moved = True
                break
        if not moved:
            return x  # the optimal face contains a line; no vertex exists
    return x


def hpoly_nonempty(h: HPolyhedron) -> bool:
    """Phase-1 feasibility of an H-system."""
    sol = solve_lp(LpProblem((ZERO,) * h.n, h))
    return sol.status is not LpStatus.INFEASIBLE


@dataclass(frozen=True)
class EfficiencyVerdict:
    efficient: bool
    dominator: Optional[QVector]
    """A feasible point whose objective vector dominates the candidate's
    (componentwise <=, strictly better in sum) when inefficient."""


def efficiency_test(candidate: Sequence, objective: Sequence[Sequence],
                    feasible: HPolyhedron) -> EfficiencyVerdict:
    """Decide Pareto efficiency of ``candidate`` for rows ``objective``.

    Solves min sum(G x) over the feasible system intersected with
    ``G x <= G candidate``: the candidate is efficient iff the optimum
    cannot beat its own objective sum.
    """
    if not feasible.contains(candidate):
        raise InfeasibleCandidate(f"candidate {candidate!r} violates the system")
    gx = [dot(g, candidate) for g in objective]
    sigma = tuple(sum(col, ZERO) for col in zip(*objective))
    narrowed = feasible.with_rows(objective, gx)
    sol = solve_lp(LpProblem(sigma, narrowed))
    if sol.status is LpStatus.UNBOUNDED:
        raise UnboundedInput("efficiency test needs a bounded feasible system")
    if sol.status is not LpStatus.OPTIMAL:  # unreachable: candidate is feasible
        raise AssertionError("efficiency subproblem lost a feasible point")
    if sol.value == dot(sigma, candidate):
        return EfficiencyVerdict(True, None)
    return EfficiencyVerdict(False, sol.point)
