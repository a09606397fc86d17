"""Reduction of the best-response ordering to an orthant ordering.

Player i prefers smaller own cost and ignores coordinates they do not
control; on the image of the stacked map ``B x = (x, F_1 x, ..., F_N x)``
that preference is a (non-convex across players, but per-player convex)
cone order.  Player i's cone is polyhedral, and its dual is generated by

* a ``+/-`` pair of unit vectors for every opponent strategy coordinate
  (membership must hold with equality there), in ascending joint order;
* the player's payoff-cone dual generators, embedded in their own cost
  block.

Scalarizing the stacked objective with these generators turns each
best-response condition into an ordinary componentwise-order problem:
``Z_i^T B`` has ``2(n - n_i) + (number of dual generators)`` rows.
"""

from __future__ import annotations

from dataclasses import dataclass

from .games import LinearGame, stacked_objective
from .linalg import QMatrix, mat_mul, transpose
from .rationals import Q, ZERO


@dataclass(frozen=True)
class DualGenerators:
    player: int
    matrix: QMatrix
    """Columns are the generators, over the stacked space (joint strategy
    coordinates first, then every player's cost block)."""


def dual_generators(game: LinearGame, i: int) -> DualGenerators:
    height = game.n + sum(p.payoff_dim for p in game.players)
    cols = []
    for t in game.opponent_coords(i):
        for sign in (Q(1), Q(-1)):
            col = [ZERO] * height
            col[t] = sign
            cols.append(tuple(col))
    base = game.payoff_offset(i)
    for gen in game.players[i].cone_dual_generators:
        col = [ZERO] * height
        for k, w in enumerate(gen):
            col[base + k] = w
        cols.append(tuple(col))
    return DualGenerators(i, transpose(cols))


def scalarized_objective(game: LinearGame, i: int) -> QMatrix:
    """Rows of ``Z_i^T B``: the orthant-order objective for player i."""
    z = dual_generators(game, i).matrix
    return mat_mul(transpose(z), stacked_objective(game))
