"""Brute-force equilibrium search on rational grids.

This is the slow, independent route: enumerate every grid point of the
joint strategy box, and accept a point iff no player can strictly lower
her own cost by a unilateral deviation to another grid value of her own
block.  Costs are arbitrary expression trees (including non-convex ones
such as ``abs``), so the oracle covers games the polyhedral engine cannot
represent — and doubles as a cross-check for the games it can.

Constraints may be absent (boxes only), one shared H-polyhedron, or one
H-polyhedron per player.  A candidate must be feasible for every player;
a deviation by player ``i`` only has to stay inside player ``i``'s own
region, which is exactly the generalized-game rule.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .costexpr import Expr, cost_variables, evaluate_cost
from .errors import EmptyGrid, InfeasiblePoint, UnknownVariable
from .linalg import QVector
from .polyhedra import HPolyhedron
from .rationals import Rational, as_rational, rational_str


@dataclass(frozen=True)
class GridSpec:
    """One positive step per joint coordinate.

    Grid points along coordinate ``k`` are ``lo, lo+step, ..., hi``; the
    step must divide the box width exactly so both endpoints are hit.
    """

    steps: Tuple[Rational, ...]

    @staticmethod
    def uniform(step, n: int) -> "GridSpec":
        s = as_rational(step)
        return GridSpec(tuple(s for _ in range(n)))


def axis_points(lo, hi, step) -> Tuple[Rational, ...]:
    lo, hi, step = as_rational(lo), as_rational(hi), as_rational(step)
    if step <= 0:
        raise EmptyGrid("grid step must be positive, got %s" % rational_str(step))
    if hi < lo:
        raise EmptyGrid("empty box [%s, %s]" % (rational_str(lo), rational_str(hi)))
    count = (hi - lo) / step
    if count != int(count):
        raise EmptyGrid(
            "step %s does not divide the width of box [%s, %s]"
            % (rational_str(step), rational_str(lo), rational_str(hi))
        )
    return tuple(lo + step * t for t in range(int(count) + 1))


Regions = Optional[object]  # None | HPolyhedron | Sequence[HPolyhedron]


def _per_player_regions(constraints, players: int):
    """Normalize the constraint argument to one region (or None) per player."""
    if constraints is None:
        return [None] * players
    if isinstance(constraints, HPolyhedron):
        return [constraints] * players
    regions = list(constraints)
    if len(regions) != players:
        raise ValueError(
            "expected %d per-player regions, got %d" % (players, len(regions))
        )
    return regions


def _check_cost_variables(costs: Sequence[Expr], dims: Sequence[int]) -> None:
    for i, e in enumerate(costs):
        for (p, c) in sorted(cost_variables(e)):
            if not (1 <= p <= len(dims)) or not (1 <= c <= dims[p - 1]):
                raise UnknownVariable(
                    "cost %d uses x[%d][%d] but the game has no such variable"
                    % (i + 1, p, c)
                )


def _assignment(dims, point):
    values = {}
    k = 0
    for i, d in enumerate(dims):
        for j in range(d):
            values[(i + 1, j + 1)] = point[k]
            k += 1
    return values


def grid_nash_oracle(
    costs: Sequence[Expr],
    dims: Sequence[int],
    boxes,
    grid: GridSpec,
    constraints=None,
) -> list:
    """All grid points no player can improve on by a grid deviation.

    Exact rational comparisons throughout; a point is rejected the moment
    some player finds a strictly cheaper feasible grid value for her own
    block while everyone else stays put.
    """
    n = sum(dims)
    if len(boxes) != n or len(grid.steps) != n:
        raise ValueError("need one box and one grid step per joint coordinate")
    _check_cost_variables(costs, dims)
    regions = _per_player_regions(constraints, len(dims))

    axes = [axis_points(lo, hi, s) for (lo, hi), s in zip(boxes, grid.steps)]
    offsets = []
    off = 0
    for d in dims:
        offsets.append(off)
        off += d

    def feasible_for_all(x) -> bool:
        return all(r is None or r.contains(x) for r in regions)

    accepted = []
    for cand in itertools.product(*axes):
        if not feasible_for_all(cand):
            continue
        values = _assignment(dims, cand)
        good = True
        for i, d in enumerate(dims):
            base = evaluate_cost(costs[i], values)
            off = offsets[i]
            for block in itertools.product(*axes[off:off + d]):
                if block == cand[off:off + d]:
                    continue
                dev = cand[:off] + block + cand[off + d:]
                if regions[i] is not None and not regions[i].contains(dev):
                    continue
                if evaluate_cost(costs[i], _assignment(dims, dev)) < base:
                    good = False
                    break
            if not good:
                break
        if good:
            accepted.append(tuple(cand))
    return sorted(accepted)


def check_point_detail(
    costs: Sequence[Expr],
    dims: Sequence[int],
    boxes,
    grid: GridSpec,
    point: QVector,
    constraints=None,
):
    """Deviation check at one (not necessarily grid) point.

    Returns ``(True, None, None)`` if no player improves on any grid value
    of her own block, else ``(False, player_index, deviation_point)`` for
    the first strict improvement found (player index 0-based).

    Raises :class:`InfeasiblePoint` if the point violates a box or any
    player's region.
    """
    n = sum(dims)
    if len(point) != n:
        raise ValueError("point has %d coordinates, expected %d" % (len(point), n))
    _check_cost_variables(costs, dims)
    regions = _per_player_regions(constraints, len(dims))
    point = tuple(as_rational(v) for v in point)

    for k, (lo, hi) in enumerate(boxes):
        if not (as_rational(lo) <= point[k] <= as_rational(hi)):
            raise InfeasiblePoint(
                "coordinate %d = %s is outside its box" % (k + 1, rational_str(point[k]))
            )
    for i, r in enumerate(regions):
        if r is not None and not r.contains(point):
            raise InfeasiblePoint("point violates player %d's constraints" % (i + 1))

    axes = [axis_points(lo, hi, s) for (lo, hi), s in zip(boxes, grid.steps)]
    off = 0
    for i, d in enumerate(dims):
        base = evaluate_cost(costs[i], _assignment(dims, point))
        for block in itertools.product(*axes[off:off + d]):
            dev = point[:off] + block + point[off + d:]
            if dev == point:
                continue
            if regions[i] is not None and not regions[i].contains(dev):
                continue
            if evaluate_cost(costs[i], _assignment(dims, dev)) < base:
                return False, i, dev
        off += d
    return True, None, None


def check_point(costs, dims, boxes, grid, point, constraints=None) -> bool:
    ok, _, _ = check_point_detail(costs, dims, boxes, grid, point, constraints)
    return ok
