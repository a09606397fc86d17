"""Equilibrium computation: exact Nash sets as finite unions of polytopes.

The route: a profile is an equilibrium iff it lies on every player's
best-response graph, and each graph is the Pareto-optimal set of a
scalarized multi-objective LP over the feasible polytope.  Intersecting
the players' maximal efficient faces therefore yields the complete
equilibrium set of a shared-constraint game.

For games whose constraint sets differ per player, two bounds sandwich the
equilibrium set — the same computation run on the intersection of the
player sets (a superset) and on the convex hull of their union, kept where
feasible (a subset) — and for scalar costs the superset is sharpened to
the exact set by removing the profiles where some player can still improve
inside their *own* constraint set: with the best-response value expressed
as a pointwise maximum of affine pieces ``l_k``, the survivors of a face F
are exactly  union_k (F  intersect  {f_i(x) <= l_k(x_{-i})}).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .cones import scalarized_objective
from .errors import EmptySet, InfeasiblePoint
from .games import INTERSECTION, UNION_HULL, LinearGame, constraint_system, feasible_set
from .linalg import QVector, dot, mat_mul
from .molp import ParetoDecisionSet, pareto_decision_set
from .parametric import best_response_pieces
from .polyhedra import (
    Polytope,
    intersect,
    irredundant_union,
    polytope_from_hrep,
    relative_interior_point,
    slice_system,
)
from .simplex import LpProblem, LpStatus, efficiency_test, solve_lp


class Exactness(Enum):
    EXACT = "exact"
    SUPERSET = "superset"
    SUBSET = "subset"


@dataclass(frozen=True)
class NashSet:
    components: tuple
    exactness: Exactness


@dataclass(frozen=True)
class RemovedPiece:
    polytope: Polytope
    player: int
    """0-based index of the player with a strictly improving own-set move."""
    witness: QVector
    """The improving joint profile: the piece's relative-interior point with
    the player's block replaced by their own-set best response."""


@dataclass(frozen=True)
class FilterReport:
    removed: tuple
    kept: tuple
    """Removed pieces and kept components cover the filtered superset and
    overlap only in boundaries (closed polytopes cannot partition a set);
    every removed piece strictly improves for its player at its witness."""


def best_response_graph(game: LinearGame, i: int, x: Polytope) -> ParetoDecisionSet:
    """Player i's best-response graph over the joint polytope ``x``."""
    return pareto_decision_set(scalarized_objective(game, i), x)


def _ne_components(game: LinearGame, x: Polytope) -> tuple:
    comps = list(best_response_graph(game, 0, x).faces)
    for i in range(1, len(game.players)):
        faces = best_response_graph(game, i, x).faces
        met = []
        for p in comps:
            for q in faces:
                r = intersect(p, q)
                if r is not None:
                    met.append(r)
        comps = list(irredundant_union(met))
        if not comps:
            break
    return irredundant_union(comps)


def shared_constraint_ne(game: LinearGame) -> NashSet:
    """The complete equilibrium set of a shared-constraint game."""
    if not game.is_shared:
        raise ValueError("shared_constraint_ne needs a shared-constraint game")
    x = feasible_set(game, INTERSECTION)
    return NashSet(_ne_components(game, x), Exactness.EXACT)


def intersection_superset(game: LinearGame) -> NashSet:
    """Equilibria of the intersection game: contains every equilibrium.

    When the players already share one constraint set the bound is tight,
    so the result is tagged exact.
    """
    tag = Exactness.EXACT if game.is_shared else Exactness.SUPERSET
    try:
        x = feasible_set(game, INTERSECTION)
    except EmptySet:
        return NashSet((), tag)
    return NashSet(_ne_components(game, x), tag)


def union_subset(game: LinearGame) -> NashSet:
    """Feasible equilibria of the union-hull game: all are equilibria.

    Tagged exact for shared-constraint games, where the hull of the union
    is the common feasible set itself.
    """
    tag = Exactness.EXACT if game.is_shared else Exactness.SUBSET
    try:
        hull = feasible_set(game, UNION_HULL)
        xi = feasible_set(game, INTERSECTION)
    except EmptySet:
        return NashSet((), tag)
    kept = []
    for comp in _ne_components(game, hull):
        r = intersect(comp, xi)
        if r is not None:
            kept.append(r)
    return NashSet(irredundant_union(kept), tag)


def _survivor_rows(game: LinearGame, i: int):
    """Joint-space halfspaces ``f_i(x) - l_k(x_{-i}) <= 0``, one per affine
    piece of player i's own-set best-response value."""
    cost = game.players[i].cost[0]
    opp = game.opponent_coords(i)
    rows = []
    for piece in best_response_pieces(game, i):
        row = list(cost)
        for t, j in enumerate(opp):
            row[j] -= piece.gradient[t]
        rows.append((tuple(row), piece.offset))
    return sorted(set(rows))


def _own_improvement(game: LinearGame, i: int, point: QVector):
    """Exact own-set slice optimum at ``point`` and the optimizing profile."""
    own = game.coords(i)
    opp = game.opponent_coords(i)
    fixed = {j: point[j] for j in opp}
    sliced = slice_system(constraint_system(game, i), own, fixed)
    cost = game.players[i].cost[0]
    c_own = tuple(cost[j] for j in own)
    sol = solve_lp(LpProblem(c_own, sliced))
    if sol.status is not LpStatus.OPTIMAL:
        return None, None
    best = list(point)
    for k, j in enumerate(own):
        best[j] = sol.point[k]
    value = sol.value + sum(cost[j] * point[j] for j in opp)
    return value, tuple(best)


def filter_set_M(game: LinearGame, superset: NashSet):
    """Sharpen an intersection-game superset to the exact equilibrium set.

    Returns ``(NashSet, FilterReport)``.  Scalar costs only: the filter
    compares each player's cost against their own-set best-response value,
    which for a vector order has no single value function.
    """
    if not game.is_scalar:
        raise ValueError("the set filter needs scalar costs")
    cuts = {i: _survivor_rows(game, i) for i in range(len(game.players))}
    removed = []
    kept_parts = []
    for face in superset.components:
        parts = [face]
        for i in range(len(game.players)):
            nxt = []
            for part in parts:
                survivors = []
                whole = False
                for a, b in cuts[i]:
                    vals = [dot(a, v) - b for v in part.vrep.vertices]
                    if all(v <= 0 for v in vals):
                        whole = True
                        break
                    if all(v > 0 for v in vals):
                        continue  # the cut misses this part entirely
                    piece = polytope_from_hrep(part.hrep.with_rows([a], [b]))
                    if piece is not None:
                        survivors.append(piece)
                if whole:
                    nxt.append(part)
                    continue
                nxt.extend(survivors)
                # The candidate removal: the subset of `part` on or above
                # every piece of the best-response value.
                flipped_a = [tuple(-x for x in a) for a, _ in cuts[i]]
                flipped_b = [-b for _, b in cuts[i]]
                gone = polytope_from_hrep(
                    part.hrep.with_rows(flipped_a, flipped_b))
                if gone is not None:
                    centre = relative_interior_point(gone)
                    best, mover = _own_improvement(game, i, centre)
                    here = dot(game.players[i].cost[0], centre)
                    if best is not None and best < here:
                        removed.append(RemovedPiece(gone, i, mover))
            parts = list(irredundant_union(nxt))
        kept_parts.extend(parts)
    kept = irredundant_union(kept_parts)
    removed.sort(key=lambda r: (r.polytope.vrep.vertices, r.player))
    return (NashSet(kept, Exactness.EXACT),
            FilterReport(tuple(removed), kept))


def generalized_ne(game: LinearGame):
    """Exact equilibrium set of a scalar generalized game, with the report."""
    return filter_set_M(game, intersection_superset(game))


def point_check_details(game: LinearGame, x: Sequence):
    """Per-player equilibrium verdicts at ``x`` with improving witnesses.

    Returns one ``(is_best_response, witness)`` pair per player, where the
    witness is a feasible joint profile the player strictly prefers (None
    when the player is already best-responding).  Raises InfeasiblePoint
    when ``x`` violates some player's constraints.
    """
    point = tuple(x)
    systems = []
    for i in range(len(game.players)):
        sys_i = constraint_system(game, i)
        if not sys_i.contains(point):
            raise InfeasiblePoint(
                f"point violates player {i + 1}'s constraints")
        systems.append(sys_i)
    out = []
    for i, sys_i in enumerate(systems):
        own = game.coords(i)
        opp = game.opponent_coords(i)
        fixed = {j: point[j] for j in opp}
        sliced = slice_system(sys_i, own, fixed)
        player = game.players[i]
        scal = mat_mul(player.cone_dual_generators, player.cost)
        own_rows = [tuple(row[j] for j in own) for row in scal]
        verdict = efficiency_test(tuple(point[j] for j in own),
                                  own_rows, sliced)
        if verdict.efficient:
            out.append((True, None))
        else:
            better = list(point)
            for k, j in enumerate(own):
                better[j] = verdict.dominator[k]
            out.append((False, tuple(better)))
    return tuple(out)


def vector_point_check(game: LinearGame, x: Sequence) -> tuple:
    """One boolean per player: is their block a best response at ``x``?"""
    return tuple(ok for ok, _ in point_check_details(game, x))
