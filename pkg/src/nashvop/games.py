"""Game model: players, joint constraints, feasible-set selectors.

A linear game couples N players through a joint strategy vector
``x = (x_1, ..., x_N)``.  Player i controls the block ``x_i`` (``dim``
coordinates), pays the vector cost ``F_i x`` (rows over the joint space,
always minimized — maximization is negated at ingestion), and orders
payoffs by a polyhedral cone given through dual generators (the
nonnegative orthant by default).  Constraints are either one shared
polyhedron or one polyhedron per player; per-coordinate boxes are
mandatory and keep every feasible set bounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Union

from .errors import EmptySet
from .linalg import QMatrix, QVector, identity, mat
from .polyhedra import (
    HPolyhedron,
    Polytope,
    box_rows,
    polytope_from_hrep,
    polytope_from_points,
)
from .rationals import Rational, as_rational


@dataclass(frozen=True)
class Player:
    """One player: block width, cost rows, payoff-order dual generators."""

    dim: int
    cost: QMatrix
    cone_dual_generators: QMatrix
    """Generators of the dual payoff cone, one row per generator (length =
    payoff dimension).  The identity rows encode the componentwise order."""

    @staticmethod
    def make(dim: int, cost: Sequence[Sequence],
             cone_dual_generators: Sequence[Sequence] | None = None) -> "Player":
        rows = mat(cost)
        gens = mat(cone_dual_generators) if cone_dual_generators is not None \
            else identity(len(rows))
        return Player(dim, rows, gens)

    @property
    def payoff_dim(self) -> int:
        return len(self.cost)


@dataclass(frozen=True)
class SharedConstraints:
    region: HPolyhedron


@dataclass(frozen=True)
class PerPlayerConstraints:
    regions: tuple


Constraints = Union[SharedConstraints, PerPlayerConstraints]


class GameKind(Enum):
    SHARED_SCALAR = "shared-scalar"
    GENERALIZED_SCALAR = "generalized-scalar"
    SHARED_VECTOR = "shared-vector"
    GENERALIZED_VECTOR = "generalized-vector"


INTERSECTION = "intersection"
UNION_HULL = "union-hull"


@dataclass(frozen=True)
class LinearGame:
    players: tuple
    constraints: Constraints
    boxes: tuple
    """Per joint coordinate (lo, hi) pairs; part of every feasible system."""

    @property
    def n(self) -> int:
        return sum(p.dim for p in self.players)

    def offset(self, i: int) -> int:
        return sum(p.dim for p in self.players[:i])

    def coords(self, i: int) -> tuple:
        start = self.offset(i)
        return tuple(range(start, start + self.players[i].dim))

    def opponent_coords(self, i: int) -> tuple:
        own = set(self.coords(i))
        return tuple(j for j in range(self.n) if j not in own)

    @property
    def is_shared(self) -> bool:
        return isinstance(self.constraints, SharedConstraints)

    @property
    def is_scalar(self) -> bool:
        return all(p.payoff_dim == 1 for p in self.players)

    @property
    def kind(self) -> GameKind:
        if self.is_shared:
            return GameKind.SHARED_SCALAR if self.is_scalar else GameKind.SHARED_VECTOR
        return (GameKind.GENERALIZED_SCALAR if self.is_scalar
                else GameKind.GENERALIZED_VECTOR)

    def payoff_offset(self, i: int) -> int:
        """Row offset of player i's cost block in the stacked objective."""
        return self.n + sum(p.payoff_dim for p in self.players[:i])


def make_game(players: Sequence[Player], constraints: Constraints,
              boxes: Sequence[tuple]) -> LinearGame:
    bx = tuple((as_rational(lo), as_rational(hi)) for lo, hi in boxes)
    return LinearGame(tuple(players), constraints, bx)


@dataclass(frozen=True)
class Diagnostic:
    code: str
    message: str


def validate(game: LinearGame) -> list:
    """Structural and feasibility diagnostics; empty list means clean."""
    out: list[Diagnostic] = []
    n = game.n
    if len(game.boxes) != n:
        out.append(Diagnostic("missing-box",
                              f"{len(game.boxes)} boxes for {n} joint coordinates"))
    for j, (lo, hi) in enumerate(game.boxes):
        if lo > hi:
            out.append(Diagnostic("missing-box",
                                  f"coordinate {j}: empty box [{lo}, {hi}]"))
    for i, p in enumerate(game.players):
        if p.payoff_dim == 0:
            out.append(Diagnostic("dimension-mismatch",
                                  f"player {i + 1} has no cost rows"))
        for row in p.cost:
            if len(row) != n:
                out.append(Diagnostic(
                    "dimension-mismatch",
                    f"player {i + 1}: cost row of width {len(row)}, expected {n}"))
        for g in p.cone_dual_generators:
            if len(g) != p.payoff_dim:
                out.append(Diagnostic(
                    "dimension-mismatch",
                    f"player {i + 1}: dual generator of width {len(g)}, "
                    f"expected {p.payoff_dim}"))
            elif all(x == 0 for x in g):
                out.append(Diagnostic("zero-dual-generator",
                                      f"player {i + 1} has a zero dual generator"))
        if not p.cone_dual_generators:
            out.append(Diagnostic("zero-dual-generator",
                                  f"player {i + 1} has no dual generators"))
    regions = ([game.constraints.region] if game.is_shared
               else list(game.constraints.regions))
    if not game.is_shared and len(regions) != len(game.players):
        out.append(Diagnostic(
            "dimension-mismatch",
            f"{len(regions)} constraint regions for {len(game.players)} players"))
    for k, region in enumerate(regions):
        if region.n != n:
            out.append(Diagnostic(
                "dimension-mismatch",
                f"constraint region {k}: dimension {region.n}, expected {n}"))
    if any(d.code == "dimension-mismatch" or d.code == "missing-box" for d in out):
        return out  # feasibility checks need a well-formed game

    from .simplex import hpoly_nonempty

    for i in range(len(game.players)):
        if not hpoly_nonempty(constraint_system(game, i)):
            out.append(Diagnostic("empty-feasible",
                                  f"player {i + 1}'s feasible set is empty"))
    if not hpoly_nonempty(intersection_system(game)):
        out.append(Diagnostic("empty-intersection",
                              "the intersection of the feasible sets is empty"))
    return out


def stacked_objective(game: LinearGame) -> QMatrix:
    """Identity block over the joint space stacked over every cost block."""
    rows = list(identity(game.n))
    for p in game.players:
        rows.extend(p.cost)
    return tuple(rows)


def constraint_system(game: LinearGame, i: int) -> HPolyhedron:
    """Player i's constraint rows plus the joint boxes."""
    region = (game.constraints.region if game.is_shared
              else game.constraints.regions[i])
    bx = box_rows(game.boxes)
    return HPolyhedron(game.n, region.a + bx.a, region.b + bx.b,
                       region.eq + bx.eq)


def intersection_system(game: LinearGame) -> HPolyhedron:
    regions = ([game.constraints.region] if game.is_shared
               else list(game.constraints.regions))
    bx = box_rows(game.boxes)
    a = sum((r.a for r in regions), ()) + bx.a
    b = sum((r.b for r in regions), ()) + bx.b
    eq = sum((r.eq for r in regions), ()) + bx.eq
    return HPolyhedron(game.n, a, b, eq)


def feasible_set(game: LinearGame, selector) -> Polytope:
    """The selected feasible polytope.

    ``selector`` is a 0-based player index, ``"intersection"``, or
    ``"union-hull"`` (convex hull of the union of the player sets).
    Raises EmptySet when the selected set has no points.
    """
    if selector == UNION_HULL and not game.is_shared:
        points: list = []
        for i in range(len(game.players)):
            points.extend(feasible_set(game, i).vertices)
        return polytope_from_points(points)
    if isinstance(selector, int):
        system = constraint_system(game, selector)
    elif selector in (INTERSECTION, UNION_HULL):
        system = intersection_system(game)
    else:
        raise ValueError(f"unknown feasible-set selector {selector!r}")
    poly = polytope_from_hrep(system)
    if poly is None:
        raise EmptySet(f"feasible set {selector!r} is empty")
    return poly
