"""Parametric best-response LPs: minimize a player's cost over their own
block while the opponents' block enters the right-hand side as a parameter.

For an RHS-parametric LP, dual feasibility of a basis does not depend on
the parameter, so enumerating every own-block basis ``S`` with
``A_S^T lam = -c_own, lam >= 0`` enumerates every basis that is optimal
anywhere.  Each such basis contributes

* an affine value piece ``l_S(p) = -lam . b_S + (lam^T E_S + c_opp) . p``,
  a *global* lower bound on the slice optimum by weak duality and exact
  wherever the basis is primal feasible; the optimum is the pointwise
  maximum of the pieces;
* a critical region: the parameters where the basic solution stays primal
  feasible, intersected with the queried domain.

Regions are closed, so neighbouring regions share boundaries; on any
overlap the value functions agree (both are optimal there).  Parameters in
the domain whose slice is empty are covered by regions flagged infeasible,
one per violated facet of the own-set projection.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import EmptyDomain, DimensionMismatch, EmptySet
from .games import LinearGame, constraint_system, feasible_set
from .linalg import QVector, dot, solve_square, transpose, vec_neg
from .polyhedra import (
    HPolyhedron,
    Polytope,
    canonical_ineq,
    expand_to_inequalities,
    project,
)
from .rationals import Rational, ZERO
from .simplex import hpoly_nonempty


@dataclass(frozen=True)
class AffineValue:
    gradient: QVector
    offset: Rational

    def at(self, p) -> Rational:
        return dot(self.gradient, p) + self.offset


@dataclass(frozen=True)
class CriticalRegion:
    basis: tuple
    """Active own-block rows (indices into the expanded inequality list of
    the player's constraint system); empty for infeasible regions."""
    region: HPolyhedron
    value: Optional[AffineValue]
    feasible: bool = True


def _scalar_cost(game: LinearGame, i: int) -> QVector:
    player = game.players[i]
    if player.payoff_dim != 1:
        raise ValueError("parametric best response needs a scalar cost")
    return player.cost[0]


def _slice_rows(game: LinearGame, i: int):
    """Expanded inequality rows of player i's system, split into
    (own-block, opponent-block, rhs) triples."""
    rows, infeasible = expand_to_inequalities(constraint_system(game, i))
    if infeasible:
        raise EmptySet(f"player {i + 1}'s constraint system is trivially empty")
    own = game.coords(i)
    opp = game.opponent_coords(i)
    split = [(tuple(a[j] for j in own), tuple(a[j] for j in opp), b)
             for a, b in rows]
    return split, own, opp


def _dual_feasible_bases(game: LinearGame, i: int):
    split, own, opp = _slice_rows(game, i)
    c = _scalar_cost(game, i)
    c_own = tuple(c[j] for j in own)
    c_opp = tuple(c[j] for j in opp)
    cand = [t for t, (ao, _, _) in enumerate(split) if any(x != 0 for x in ao)]
    found = []
    for sel in combinations(cand, len(own)):
        a_s = [split[t][0] for t in sel]
        lam = solve_square(transpose(a_s), vec_neg(c_own))
        if lam is None or any(x < 0 for x in lam):
            continue
        found.append((sel, lam))
    return split, c_own, c_opp, found


def _value_piece(split, c_opp, sel, lam) -> AffineValue:
    grad = list(c_opp)
    offset = ZERO
    for t, weight in zip(sel, lam):
        _, e_row, rhs = split[t]
        offset -= weight * rhs
        grad = [g + weight * e for g, e in zip(grad, e_row)]
    return AffineValue(tuple(grad), offset)


def best_response_pieces(game: LinearGame, i: int) -> tuple:
    """Deduped affine pieces whose pointwise max is the best-response value.

    Every piece is a global lower bound on ``min_{x_i} f_i(x_i, p)`` over
    player i's own constraint set, and at every parameter with a nonempty
    slice some piece attains the optimum.
    """
    split, _, c_opp, bases = _dual_feasible_bases(game, i)
    pieces = set()
    for sel, lam in bases:
        piece = _value_piece(split, c_opp, sel, lam)
        pieces.add((piece.gradient, piece.offset))
    return tuple(AffineValue(g, o) for g, o in sorted(pieces))


def parametric_best_response(game: LinearGame, i: int,
                             domain: Polytope) -> tuple:
    """Critical regions covering ``domain`` for player i's best response."""
    if domain is None:
        raise EmptyDomain("parameter domain is required")
    opp_count = game.n - game.players[i].dim
    if domain.n != opp_count:
        raise DimensionMismatch(
            f"domain has dimension {domain.n}, expected {opp_count}")
    split, c_own, c_opp, bases = _dual_feasible_bases(game, i)
    out = []
    for sel, lam in bases:
        a_s = [split[t][0] for t in sel]
        b_s = [split[t][2] for t in sel]
        x0 = solve_square(a_s, b_s)
        cols = []
        for j in range(opp_count):
            rhs = [-split[t][1][j] for t in sel]
            cols.append(solve_square(a_s, rhs))
        rows_a, rows_b = [], []
        empty = False
        for t, (ao, e_row, rhs) in enumerate(split):
            if t in sel:
                continue
            if any(x != 0 for x in ao):
                coeffs = tuple(dot(ao, col) + e_row[j]
                               for j, col in enumerate(cols))
                shift = rhs - dot(ao, x0)
            else:
                coeffs, shift = e_row, rhs
            if all(x == 0 for x in coeffs):
                if shift < 0:
                    empty = True
                    break
                continue
            a_c, b_c = canonical_ineq(coeffs, shift)
            rows_a.append(a_c)
            rows_b.append(b_c)
        if empty:
            continue
        region = HPolyhedron(opp_count,
                             tuple(rows_a) + domain.hrep.a,
                             tuple(rows_b) + domain.hrep.b,
                             (False,) * len(rows_a) + domain.hrep.eq)
        if not hpoly_nonempty(region):
            continue
        out.append(CriticalRegion(sel, region,
                                  _value_piece(split, c_opp, sel, lam), True))

    # Cover the parameters whose slice is empty: the part of the domain
    # violating some facet of the own-set projection.
    try:
        own_proj = project(feasible_set(game, i), game.opponent_coords(i))
    except EmptySet:
        out.append(CriticalRegion((), domain.hrep, None, False))
        return tuple(out)
    # A row contributes an infeasible region only when the domain strictly
    # exceeds it somewhere; the closed region then overlaps the feasible
    # side in at most the separating hyperplane.
    violated = []
    for a, b, is_eq in zip(own_proj.hrep.a, own_proj.hrep.b, own_proj.hrep.eq):
        violated.append((a, b))
        if is_eq:
            violated.append((tuple(-x for x in a), -b))
    for a, b in violated:
        if max(dot(a, v) for v in domain.vrep.vertices) <= b:
            continue
        region = HPolyhedron(opp_count,
                             (tuple(-x for x in a),) + domain.hrep.a,
                             (-b,) + domain.hrep.b,
                             (False,) + domain.hrep.eq)
        out.append(CriticalRegion((), region, None, False))
    return tuple(out)
